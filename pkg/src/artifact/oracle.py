"""Brute-force reference implementations used by the tests.

Everything here is rebuilt from scratch on each call and favours being
obviously right over being fast.
"""

from collections import defaultdict, deque

from .top_tree import COMPOSITE, EDGE, LABEL, iter_clusters


class SnapshotGraph:
    """A multigraph snapshot: vertices 0..n-1 and a list of (u, v) edges."""

    def __init__(self, n, edges=(), levels=None, tree=None):
        self.n = n
        self.edges = list(edges)
        self.levels = list(levels) if levels is not None else None
        self.tree = list(tree) if tree is not None else None

    def adjacency(self, keep=None):
        adj = defaultdict(list)
        for k, (u, v) in enumerate(self.edges):
            if keep is None or keep(k):
                adj[u].append((v, k))
                adj[v].append((u, k))
        return adj


def components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return [find(x) for x in range(n)]


def bridges(g):
    """Indices of bridge edges, by iterative DFS low points."""
    adj = g.adjacency()
    disc = [-1] * g.n
    low = [0] * g.n
    out = set()
    t = 0
    for s in range(g.n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = t
        t += 1
        stack = [(s, -1, iter(adj[s]))]
        while stack:
            v, via, it = stack[-1]
            for w, k in it:
                if k == via:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, k, iter(adj[w])))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        out.add(via)
    return out


def bridges_by_definition(g):
    out = set()
    for k, (u, v) in enumerate(g.edges):
        rest = [e for j, e in enumerate(g.edges) if j != k]
        comp = components(g.n, rest)
        if comp[u] != comp[v]:
            out.add(k)
    return out


def two_ecc(g):
    """Component id per vertex of the graph without its bridges."""
    br = bridges(g)
    return components(g.n, [e for k, e in enumerate(g.edges) if k not in br])


def is_two_edge_connected(g, v, w):
    comp = two_ecc(g)
    return comp[v] == comp[w]


def check_size_invariant(g):
    """Every 2ecc of the level >= i subgraph has at most n // 2**i vertices."""
    top = max(g.levels) if g.levels else 0
    for i in range(top + 1):
        keep = [e for e, lvl in zip(g.edges, g.levels) if lvl >= i]
        sub = SnapshotGraph(g.n, keep)
        comp = two_ecc(sub)
        sizes = defaultdict(int)
        for c in comp:
            sizes[c] += 1
        if any(s > g.n >> i for s in sizes.values()):
            return False
    return True


class CoverSimulator:
    """Explicit per-edge cover levels on an explicit forest.

    Applies Cover and Uncover edge by edge exactly as defined; used as the
    ground truth for the lazy structures.
    """

    def __init__(self, n):
        self.n = n
        self.lmax = n.bit_length() - 1
        self.adj = defaultdict(dict)   # v -> {w: key}
        self.c = {}                    # key -> level
        self.ends = {}

    def link(self, v, w, key):
        self.adj[v][w] = key
        self.adj[w][v] = key
        self.c[key] = -1
        self.ends[key] = (v, w)

    def cut(self, key):
        v, w = self.ends.pop(key)
        del self.adj[v][w]
        del self.adj[w][v]
        del self.c[key]

    def path(self, v, w):
        """Vertices and edge keys of the tree path v..w, or None."""
        prev = {v: None}
        q = deque([v])
        while q:
            x = q.popleft()
            if x == w:
                break
            for y, k in self.adj[x].items():
                if y not in prev:
                    prev[y] = (x, k)
                    q.append(y)
        if w not in prev:
            return None
        verts, keys = [w], []
        x = w
        while prev[x] is not None:
            x, k = prev[x]
            verts.append(x)
            keys.append(k)
        verts.reverse()
        keys.reverse()
        return verts, keys

    def tree_of(self, v):
        seen = {v}
        q = [v]
        keys = set()
        while q:
            x = q.pop()
            for y, k in self.adj[x].items():
                keys.add(k)
                if y not in seen:
                    seen.add(y)
                    q.append(y)
        return seen, keys

    def connected(self, v, w):
        return self.path(v, w) is not None

    def cover(self, v, w, i):
        for k in self.path(v, w)[1]:
            if self.c[k] < i:
                self.c[k] = i

    def uncover(self, v, w, i):
        for k in self.path(v, w)[1]:
            if self.c[k] <= i:
                self.c[k] = -1

    def cover_level(self, v, w=None):
        if w is None:
            keys = self.tree_of(v)[1]
        else:
            keys = self.path(v, w)[1]
        return min([self.c[k] for k in keys], default=self.lmax)

    def meet(self, u, v, w):
        puv = set(self.path(u, v)[0])
        pvw = set(self.path(v, w)[0])
        puw = set(self.path(u, w)[0])
        (m,) = puv & pvw & puw
        return m

    def find_size(self, v, w, i):
        verts = self.tree_of(v)[0]
        return sum(1 for u in verts if self.cover_level(u, self.meet(u, v, w)) >= i)

    def first_label_distance(self, v, w, i, labelled):
        """Smallest dist(v, meet(u, v, w)) over qualifying labelled vertices u."""
        best = None
        for u in labelled:
            if u not in self.tree_of(v)[0]:
                continue
            m = self.meet(u, v, w)
            if self.cover_level(u, m) >= i:
                d = len(self.path(v, m)[1])
                if best is None or d < best:
                    best = d
        return best


def simulate_cover_levels(n, ops):
    """Replay (op, args...) tuples and return the final edge -> level map."""
    sim = CoverSimulator(n)
    for op, *args in ops:
        getattr(sim, op)(*args)
    return dict(sim.c)


# ----------------------------------------------------------- cluster auditors


def flush(forest):
    """Push all lazy values down to the leaves, then rebuild every cluster.

    Semantically neutral; afterwards every stored payload is exact.
    """
    for root in forest.roots():
        order = []
        stack = [root]
        while stack:
            c = stack.pop()
            if c.kind == COMPOSITE:
                forest._split(c)
                order.append(c)
                stack.append(c.a)
                stack.append(c.b)
        for c in reversed(order):
            forest._merge(c, c.a, c.b, c.bnd)


def cluster_contents(C):
    edges, labels = [], []
    for x in iter_clusters(C):
        if x.kind == EDGE:
            edges.append(x)
        elif x.kind == LABEL:
            labels.append(x)
    return edges, labels


def eval_cluster_from_scratch(C, cover_of, lmax, label_counts=None):
    """Expected size vector and part lists of C by definition.

    cover_of(edge_leaf) gives the true cover level.  label_counts(v) gives a
    {level: count} mapping for the user labels at v.  Returns
    (size, {x: {key: (partsize, partcount)}}) with vectors as lists over
    levels -1..lmax, and sizes paired with label counts.
    """
    edges, labels = cluster_contents(C)
    adj = defaultdict(list)
    for e in edges:
        adj[e.u].append((e.v, e))
        adj[e.v].append((e.u, e))
    has_label = {lf.u for lf in labels}
    bnd = C.bnd
    if len(bnd) == 2:
        pi = _path(adj, bnd[0], bnd[1])
    else:
        pi = [bnd[0]]
    on_pi = set(pi)
    L = lmax + 2

    def cl(a, b):
        if a == b:
            return lmax
        p = _path(adj, a, b, edges_too=True)
        return min(cover_of(e) for e in p)

    def pointvec(u):
        size = [0] * L
        cnt = [0] * L
        seen = {u}
        q = [u]
        while q:
            x = q.pop()
            if x in has_label:
                lvl = cl(x, u)
                lc = label_counts(x) if label_counts else {}
                for j in range(-1, lmax + 1):
                    if lvl >= j:
                        size[j + 1] += 1
                        cnt[j + 1] += lc.get(j, 0)
            for y, _ in adj[x]:
                if y not in seen and y not in on_pi:
                    seen.add(y)
                    q.append(y)
        return size, cnt

    points = {u: pointvec(u) for u in pi}
    total = [sum(points[u][0][k] for u in pi) for k in range(L)]
    totc = [sum(points[u][1][k] for u in pi) for k in range(L)]
    parts = {}
    for x in bnd:
        by_key = {}
        for u in pi:
            key = cl(u, x)
            ps, pc = by_key.get(key, ([0] * L, [0] * L))
            s, c = points[u]
            by_key[key] = ([a + b for a, b in zip(ps, s)], [a + b for a, b in zip(pc, c)])
        parts[x] = by_key
    return (total, totc), parts


def _path(adj, a, b, edges_too=False):
    prev = {a: None}
    q = deque([a])
    while q:
        x = q.popleft()
        if x == b:
            break
        for y, e in adj[x]:
            if y not in prev:
                prev[y] = (x, e)
                q.append(y)
    verts, es = [b], []
    x = b
    while prev[x] is not None:
        x, e = prev[x]
        verts.append(x)
        es.append(e)
    return es if edges_too else verts[::-1]


def lazy_invariant_holds(C):
    if C.cover < C.cp:
        return False
    if C.cover <= C.cm and C.cover != C.cp:
        return False
    return True


def _leaf_key(x):
    if x is None:
        return None
    return (x.kind, x.bnd)


def payload_digest(forest):
    """Shape and every stored field of every cluster, as nested tuples.

    Clusters are named by position, leaves by kind and endpoints, so two
    forests (say a deep copy and the original) can be compared directly.
    """
    out = []
    for root in sorted(forest.roots(), key=lambda r: min(_vertices(r))):
        rows = []
        stack = [(root, ())]
        while stack:
            c, pos = stack.pop()
            row = [pos, c.kind, c.bnd]
            for f in ("cover", "gcover", "cm", "cp", "size", "ta", "tb"):
                row.append(getattr(c, f, None))
            row.append(_leaf_key(getattr(c, "mpe", None)))
            row.append(_leaf_key(getattr(c, "mge", None)))
            rows.append(tuple(row))
            if c.kind == COMPOSITE:
                stack.append((c.a, pos + (0,)))
                stack.append((c.b, pos + (1,)))
        out.append(tuple(sorted(rows)))
    return tuple(out)


def _vertices(root):
    vs = set()
    for c in iter_clusters(root):
        vs.update(c.bnd)
    return vs


def true_cover_levels(g, tree_edges):
    """c(e) by definition for each tree edge index.

    The maximum level of a non-tree edge whose tree path runs through e, or -1.
    """
    adj = defaultdict(list)
    for k in tree_edges:
        u, v = g.edges[k]
        adj[u].append((v, k))
        adj[v].append((u, k))
    c = {k: -1 for k in tree_edges}
    for k, (u, v) in enumerate(g.edges):
        if k in c:
            continue
        for t in _path(adj, u, v, edges_too=True):
            if g.levels[k] > c[t]:
                c[t] = g.levels[k]
    return c
