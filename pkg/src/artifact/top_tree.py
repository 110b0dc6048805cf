"""Self-adjusting binary top trees over a dynamic forest.

The forest is kept as a set of solid paths, link-cut style.  Each path is a
leaf-oriented splay tree (the compress tree) whose leaves are edge clusters and
whose internal nodes are the interior vertices of the path.  Each vertex owns a
second leaf-oriented splay tree (the rake tree) over the point clusters hanging
at it: its vertex-label leaf and one cluster per light path attached there.

Every cluster is built exclusively through the client callbacks:

    create(leaf)       a new edge or label leaf
    destroy(leaf)      a leaf is about to disappear
    split(C)           C is about to be taken apart; push lazy data into C.a, C.b
    merge(C, A, B)     C.a, C.b = A, B and C.bnd is set; compute C's payload

Before any restructuring the engine splits every cluster on the way from the
root down to the place it is going to touch ("opening"), and afterwards it
merges all opened nodes again bottom-up ("closing").  A node is only ever open
if all of its ancestors are open.
"""

EDGE, LABEL, COMPOSITE = 0, 1, 2


class Cluster:
    """A top-tree node.  Clients subclass this to add payload slots."""

    __slots__ = ("kind", "bnd", "a", "b", "parent", "sp", "c", "u", "v", "item", "alive")

    def __init__(self, kind, bnd):
        self.kind = kind
        self.bnd = bnd
        self.a = None
        self.b = None
        self.parent = None
        self.sp = None       # structural parent (leaves only)
        self.c = self        # uniform access to "the cluster of this item"
        self.u = None
        self.v = None
        self.item = None
        self.alive = True

    @property
    def is_path(self):
        return len(self.bnd) == 2

    def __repr__(self):
        kinds = ("edge", "label", "node")
        return f"<{kinds[self.kind]} {self.bnd}>"


class _CNode:
    # interior vertex v of a solid path: M = left + H(v), N = M + right
    __slots__ = ("v", "left", "right", "sp", "rev", "open", "M", "N", "c")

    def __init__(self, v, make):
        self.v = v
        self.left = self.right = self.sp = None
        self.rev = False
        self.open = True
        self.M = make(COMPOSITE, None)
        self.N = make(COMPOSITE, None)
        self.c = self.N


class _RNode:
    __slots__ = ("v", "left", "right", "sp", "open", "c")

    def __init__(self, v, make):
        self.v = v
        self.left = self.right = self.sp = None
        self.open = True
        self.c = make(COMPOSITE, None)


class _Path:
    # light path: hangs at vertex `top`, ct starts with the edge at `top`.
    # root path: runs from `top` to `tail`; ct is None when top == tail.
    __slots__ = ("light", "top", "tail", "ct", "sp", "open", "c", "r0", "root", "alive")

    def __init__(self, light, top, tail, ct, make):
        self.light = light
        self.top = top
        self.tail = tail
        self.ct = ct
        self.sp = None
        self.open = True
        self.alive = True
        if light:
            self.c = make(COMPOSITE, None)
            self.r0 = self.root = None
        else:
            self.r0 = make(COMPOSITE, None)
            self.root = make(COMPOSITE, None)
            self.c = None


class NullCallbacks:
    cluster_class = Cluster

    def create(self, leaf):
        pass

    def destroy(self, leaf):
        pass

    def merge(self, c, a, b):
        pass

    def split(self, c):
        pass


class TopForest:
    """Dynamic forest on vertices 0..n-1 driving cluster callbacks."""

    def __init__(self, n, callbacks=None):
        if n < 1:
            raise ValueError("a forest needs at least one vertex")
        self.n = n
        self.cb = callbacks if callbacks is not None else NullCallbacks()
        self._cls = getattr(self.cb, "cluster_class", Cluster)
        self._leaf = [None] * n
        self._rake = [None] * n
        self._cnode = [None] * n
        self._tailp = [None] * n
        self._topp = [None] * n
        self._dirty = []
        self.stats = {"merge": 0, "split": 0, "create": 0, "destroy": 0,
                      "link": 0, "cut": 0, "expose": 0}

    # ------------------------------------------------------------------ basics

    def _make(self, kind, bnd):
        return self._cls(kind, bnd)

    def _merge(self, C, A, B, bnd):
        C.a = A
        C.b = B
        C.bnd = bnd
        A.parent = C
        B.parent = C
        self.stats["merge"] += 1
        self.cb.merge(C, A, B)

    def _split(self, C):
        self.stats["split"] += 1
        self.cb.split(C)

    def _create(self, leaf):
        self.stats["create"] += 1
        self.cb.create(leaf)

    def _destroy(self, leaf):
        self.stats["destroy"] += 1
        leaf.alive = False
        self.cb.destroy(leaf)

    def _check(self, v):
        if not (0 <= v < self.n):
            raise IndexError(f"vertex {v} out of range")

    def _ensure(self, v, item=None):
        self._check(v)
        leaf = self._leaf[v]
        if leaf is None:
            leaf = self._make(LABEL, (v,))
            leaf.u = v
            leaf.item = item
            self._leaf[v] = leaf
            self._create(leaf)
            self._rake[v] = leaf
            R = _Path(False, v, v, None, self._make)
            self._tailp[v] = R
            self._topp[v] = R
            self._dirty.append(R)
        return leaf

    def _pos(self, v):
        return self._cnode[v] or self._tailp[v] or self._topp[v]

    def _rake_vertex(self, x):
        t = type(x)
        if t is _RNode:
            return x.v
        if t is _Path:
            return x.top
        return x.u

    def _owner(self, v):
        # structural parent of the rake tree of v
        return self._cnode[v] or self._tailp[v] or self._topp[v]

    def _up(self, x):
        sp = x.sp
        if sp is not None:
            return sp
        t = type(x)
        if t is _Path:
            if not x.light:
                return None
            return self._owner(x.top)
        if t is _CNode or (t is not _RNode and x.kind == EDGE):
            raise AssertionError("compress node without parent")
        return self._owner(self._rake_vertex(x))

    # ----------------------------------------------------------- open / close

    def _open_up(self, x):
        chain = []
        while x is not None:
            if getattr(x, "open", False):
                break
            chain.append(x)
            x = self._up(x)
        for y in reversed(chain):
            self._open(y)

    def _open(self, y):
        t = type(y)
        if t is _CNode:
            self._split(y.N)
            self._split(y.M)
            y.open = True
            if y.rev:
                y.rev = False
                y.left, y.right = y.right, y.left
                for ch in (y.left, y.right):
                    if type(ch) is _CNode:
                        ch.rev = not ch.rev
        elif t is _RNode:
            self._split(y.c)
            y.open = True
        elif t is _Path:
            if y.light:
                self._split(y.c)
            elif y.ct is not None:
                self._split(y.root)
                self._split(y.r0)
            y.open = True
            if not y.light:
                self._dirty.append(y)
        # leaves are never opened

    def _flip(self, x):
        # open spines can be deep, so walk them with a stack
        stack = [x]
        while stack:
            x = stack.pop()
            if type(x) is not _CNode:
                continue
            if x.open:
                x.left, x.right = x.right, x.left
                stack.append(x.left)
                stack.append(x.right)
            else:
                x.rev = not x.rev

    def _close(self):
        dirty = self._dirty
        self._dirty = []
        for R in dirty:
            if R.alive and R.open and not R.light:
                self._build(R)

    def _children(self, x):
        t = type(x)
        if t is _CNode:
            return (x.left, x.right, self._rake[x.v])
        if t is _RNode:
            return (x.left, x.right)
        if x.light:
            return (x.ct, self._rake[x.tail])
        if x.ct is None:
            return (self._rake[x.top],)
        return (self._rake[x.top], x.ct, self._rake[x.tail])

    def _build(self, R):
        stack = [(R, False)]
        while stack:
            x, done = stack.pop()
            if not done:
                stack.append((x, True))
                for ch in self._children(x):
                    if getattr(ch, "open", False):
                        stack.append((ch, False))
                continue
            self._remerge(x)
        R.c.parent = None

    def _remerge(self, x):
        t = type(x)
        if t is _CNode:
            v = x.v
            L = x.left.c
            Rc = x.right.c
            H = self._rake[v].c
            lb = L.bnd
            a = lb[1] if lb[0] == v else lb[0]
            rb = Rc.bnd
            b = rb[1] if rb[0] == v else rb[0]
            self._merge(x.M, L, H, (a, v))
            self._merge(x.N, x.M, Rc, (a, b))
        elif t is _RNode:
            self._merge(x.c, x.left.c, x.right.c, (x.v,))
        elif x.light:
            self._merge(x.c, x.ct.c, self._rake[x.tail].c, (x.top,))
        elif x.ct is None:
            x.c = self._rake[x.top].c
        else:
            bnd = (x.top, x.tail)
            self._merge(x.r0, self._rake[x.top].c, x.ct.c, bnd)
            self._merge(x.root, x.r0, self._rake[x.tail].c, bnd)
            x.c = x.root
        x.open = False

    # ------------------------------------------------------------ splay trees

    def _rotate(self, x):
        p = x.sp
        g = p.sp
        if p.left is x:
            b = x.right
            p.left = b
            x.right = p
        else:
            b = x.left
            p.right = b
            x.left = p
        b.sp = p
        p.sp = x
        x.sp = g
        if g is None:
            self._rake[x.v] = x
        elif type(g) is _Path:
            g.ct = x
        elif g.left is p:
            g.left = x
        else:
            g.right = x

    def _splay(self, x):
        t = type(x)
        while True:
            p = x.sp
            if type(p) is not t:
                return
            g = p.sp
            if type(g) is t:
                if (g.left is p) == (p.left is x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    # ------------------------------------------------------------- rake trees

    def _rake_insert(self, v, X):
        old = self._rake[v]
        r = _RNode(v, self._make)
        r.left = old
        r.right = X
        old.sp = r
        X.sp = r
        self._rake[v] = r

    def _rake_replace(self, X, Y):
        p = X.sp
        Y.sp = p
        if p is None:
            self._rake[self._rake_vertex(X)] = Y
        elif p.left is X:
            p.left = Y
        else:
            p.right = Y
        X.sp = None

    def _rake_remove(self, X):
        r = X.sp
        if r is None:
            raise AssertionError("rake tree lost its label leaf")
        s = r.right if r.left is X else r.left
        g = r.sp
        s.sp = g
        if g is None:
            self._rake[r.v] = s
        elif g.left is r:
            g.left = s
        else:
            g.right = s
        X.sp = None

    # ------------------------------------------------------------ path moves

    def _new_light(self, attach, ct, tail):
        Q = _Path(True, attach, tail, ct, self._make)
        ct.sp = Q
        self._tailp[tail] = Q
        return Q

    def _access(self, w):
        """Make w the tail of the root path of its tree.  Opens what it needs."""
        self._open_up(self._pos(w))
        z = self._cnode[w]
        if z is not None:
            self._splay(z)
            P = z.sp
            Q = self._new_light(w, z.right, P.tail)
            P.ct = z.left
            z.left.sp = P
            P.tail = w
            self._tailp[w] = P
            self._cnode[w] = None
            self._rake_insert(w, Q)
        elif self._tailp[w] is None:
            # w is the top of a root path with edges: turning the path around
            # is O(1) and keeps it whole for the next access at either end
            self._evert(self._topp[w])
        P = self._tailp[w]
        while P.light:
            p = P.top
            if type(P.sp) is _RNode:
                self._splay(P.sp)
            zp = self._cnode[p]
            lower = None
            if zp is not None:
                self._splay(zp)
                Pp = zp.sp
                lower = self._new_light(p, zp.right, Pp.tail)
                zp.right = P.ct
                P.ct.sp = zp
            else:
                Pp = self._tailp[p]
                if Pp is not None:
                    if Pp.ct is None:
                        Pp.ct = P.ct
                        P.ct.sp = Pp
                        self._tailp[p] = None
                    else:
                        zp = _CNode(p, self._make)
                        zp.left = Pp.ct
                        zp.right = P.ct
                        Pp.ct.sp = zp
                        P.ct.sp = zp
                        zp.sp = Pp
                        Pp.ct = zp
                        self._cnode[p] = zp
                        self._tailp[p] = None
                else:
                    Pp = self._topp[p]
                    lower = self._new_light(p, Pp.ct, Pp.tail)
                    Pp.ct = P.ct
                    P.ct.sp = Pp
            if lower is not None:
                self._rake_replace(P, lower)
            else:
                self._rake_remove(P)
            Pp.tail = P.tail
            self._tailp[P.tail] = Pp
            P.alive = False
            P = Pp
        return P

    def _evert(self, R):
        # reverse the root path R; R must be open
        if R.ct is not None:
            self._flip(R.ct)
            top, tail = R.top, R.tail
            self._topp[top] = None
            self._tailp[tail] = None
            R.top, R.tail = tail, top
            self._topp[tail] = R
            self._tailp[top] = R

    def _expose1(self, v):
        R = self._topp[v]
        if R is not None and R.tail == v and not R.open:
            return R
        R = self._access(v)
        if R.ct is not None:
            self._evert(R)
            Q = self._new_light(v, R.ct, R.tail)
            self._topp[v] = R
            R.ct = None
            R.tail = v
            self._tailp[v] = R
            self._rake_insert(v, Q)
        return R

    def _expose2(self, v, w):
        R = self._topp[v]
        if R is not None and not R.open:
            if R.tail == w:
                return R
        R = self._topp[w]
        if R is not None and R.tail == v and not R.open:
            self._open(R)
            self._evert(R)
            return R
        R = self._access(v)
        self._evert(R)
        R2 = self._access(w)
        if R2 is not R:
            return None
        return R

    # ------------------------------------------------------------ public API

    def connected(self, v, w):
        self._check(v)
        self._check(w)
        if v == w:
            return True
        if self._leaf[v] is None or self._leaf[w] is None:
            return False
        return self._root_of(v) is self._root_of(w)

    def _root_of(self, v):
        x = self._pos(v)
        while True:
            y = self._up(x)
            if y is None:
                return x
            x = y

    def expose(self, v, w=None):
        """Return the root cluster with v (and w) external, or None.

        None means the vertex was never touched (an empty tree) or, in the
        two-vertex form, that v and w lie in different trees.
        """
        self._check(v)
        self.stats["expose"] += 1
        if w is None or w == v:
            if self._leaf[v] is None:
                return None
            R = self._expose1(v)
        else:
            self._check(w)
            if self._leaf[v] is None or self._leaf[w] is None:
                return None
            R = self._expose2(v, w)
        self._close()
        return None if R is None else R.c

    def link(self, v, w, item=None):
        if v == w:
            raise ValueError("self-loop")
        self._ensure(v)
        self._ensure(w)
        if self.connected(v, w):
            raise ValueError(f"{v} and {w} are already connected")
        self.stats["link"] += 1
        Rv = self._expose1(v)
        Rw = self._expose1(w)
        if not Rv.open:
            self._open(Rv)
        e = self._make(EDGE, (v, w))
        e.u = v
        e.v = w
        e.item = item
        self._create(e)
        Rw.alive = False
        self._topp[w] = None
        Q = self._new_light(v, e, w)
        self._rake_insert(v, Q)
        self._close()
        return e

    def cut(self, e):
        if type(e) is not self._cls or e.kind != EDGE or not e.alive:
            raise ValueError("stale or foreign edge handle")
        self.stats["cut"] += 1
        v, w = e.u, e.v
        R = self._expose2(v, w)
        if R is None or R.ct is not e:
            raise AssertionError("edge handle does not match the forest")
        if not R.open:
            self._open(R)
        R.ct = None
        e.sp = None
        R.tail = v
        self._tailp[v] = R
        R2 = _Path(False, w, w, None, self._make)
        self._topp[w] = R2
        self._tailp[w] = R2
        self._dirty.append(R2)
        self._destroy(e)
        self._close()

    def label_leaf(self, v, item=None):
        return self._ensure(v, item)

    def attach_label(self, v, item):
        leaf = self._ensure(v)
        self._refresh(leaf, item)
        return leaf

    def detach_label(self, leaf):
        if type(leaf) is not self._cls or leaf.kind != LABEL or leaf.item is None:
            raise ValueError("stale label handle")
        self._refresh(leaf, None)

    def refresh_label(self, v):
        """Recompute the payload of v's label leaf after its item changed."""
        leaf = self._ensure(v)
        self._refresh(leaf, leaf.item)

    def _refresh(self, leaf, item):
        v = leaf.u
        self._access(v)
        self._open_up(leaf.sp)
        if type(leaf.sp) is _RNode:
            self._splay(leaf.sp)
        if self._rake[v] is leaf:
            # the leaf is the whole rake tree: its owner must be reopened
            self._open_up(self._owner(v))
        self._destroy(leaf)
        leaf.alive = True
        leaf.item = item
        self._create(leaf)
        self._close()

    # ---------------------------------------------------------------- audits

    def root_cluster(self, v):
        if self._leaf[v] is None:
            return None
        return self._root_of(v).c

    def roots(self):
        seen = []
        ids = set()
        for v in range(self.n):
            if self._leaf[v] is not None:
                R = self._root_of(v)
                if id(R) not in ids:
                    ids.add(id(R))
                    seen.append(R.c)
        return seen


def iter_clusters(root):
    stack = [root]
    while stack:
        c = stack.pop()
        yield c
        if c.kind == COMPOSITE:
            stack.append(c.a)
            stack.append(c.b)


def height(root):
    best = 0
    stack = [(root, 1)]
    while stack:
        c, d = stack.pop()
        best = max(best, d)
        if c.kind == COMPOSITE:
            stack.append((c.a, d + 1))
            stack.append((c.b, d + 1))
    return best
