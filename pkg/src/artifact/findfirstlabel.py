"""User labels on vertices and the FindFirstLabel search.

Each vertex label leaf carries a VertexLabels store: per level, an insertion
ordered bucket of user labels.  The leaf's packed vector holds the number of
labels per level in its count section, so every cluster knows, per level, how
many labels sit in the point sets along its path.  A bit of the incident vector
is simply "count > 0".

The search exposes v..w and then walks down from the root, splitting each
cluster it enters and choosing a child that still holds a qualifying label,
nearest to v first.  A split only moves lazy cover values down, so each one is
undone by writing back the cover fields it touched; afterwards every payload
is exactly as it was before the search.
"""

from .findsize import FindSizeTree, clean_tree, diag_total
from .top_tree import COMPOSITE, LABEL


class UserLabel:
    __slots__ = ("vertex", "level", "payload", "alive")

    def __init__(self, vertex, level, payload):
        self.vertex = vertex
        self.level = level
        self.payload = payload
        self.alive = False

    def __repr__(self):
        return f"UserLabel(v={self.vertex}, level={self.level}, {self.payload!r})"


class VertexLabels:
    """Labels of one vertex bucketed by level; only nonempty buckets are kept."""

    __slots__ = ("buckets", "packed", "lanes")

    def __init__(self, lanes):
        self.buckets = {}
        self.packed = 0
        self.lanes = lanes

    def add(self, label):
        self.buckets.setdefault(label.level, {})[label] = None
        self.packed += self.lanes.counts_vector({label.level: 1})

    def remove(self, label):
        bucket = self.buckets[label.level]
        del bucket[label]
        if not bucket:
            del self.buckets[label.level]
        self.packed -= self.lanes.counts_vector({label.level: 1})

    def first(self, level):
        bucket = self.buckets.get(level)
        if not bucket:
            return None
        return next(iter(bucket))

    def __len__(self):
        return sum(len(b) for b in self.buckets.values())


class FindFirstLabelTree(FindSizeTree):
    """Cover levels, FindSize and user labels over one top tree."""

    def _vertex_item(self, v):
        return VertexLabels(self.lanes)

    def labels_at(self, v):
        return self.forest.label_leaf(v).item

    def add_label(self, v, label, i):
        """Attach `label` (a UserLabel or any payload) to v at level i."""
        if not isinstance(label, UserLabel):
            label = UserLabel(v, i, label)
        if label.alive:
            raise ValueError("label is already attached")
        if not (0 <= i <= self.lmax):
            raise ValueError(f"level {i} out of range")
        label.vertex = v
        label.level = i
        label.alive = True
        self.labels_at(v).add(label)
        self.forest.refresh_label(v)
        return label

    def remove_label(self, label):
        if not isinstance(label, UserLabel) or not label.alive:
            raise ValueError("stale label handle")
        label.alive = False
        self.labels_at(label.vertex).remove(label)
        self.forest.refresh_label(label.vertex)

    def label_count(self):
        return sum(len(self.labels_at(v)) for v in range(self.n))

    def find_first_label(self, v, w, i):
        C = self.forest.expose(v, w)
        if C is None:
            raise ValueError(f"{v} and {w} are not connected")
        if not (0 <= i <= self.lmax):
            return None
        return self._search(C, v, w, i)

    def _search(self, root, v, w, i):
        forest = self.forest
        lmax = self.lmax
        mask = self.lanes.mask
        count = self.lanes.count_at
        on_path = len(root.bnd) == 2
        anchor = v
        if count(root.size, i) == 0:
            return None
        opened = []
        cur = root
        try:
            while cur.kind == COMPOSITE:
                A, B = cur.a, cur.b
                opened.append((cur, cur.cm, cur.cp, A, A.cover, A.cm, A.cp, B, B.cover, B.cm, B.cp))
                forest._split(cur)
                ab = A.bnd
                c = ab[0] if ab[0] in B.bnd else ab[1]
                nxt = None
                if on_path:
                    # anchor is the end of cur nearest to v
                    if anchor in ab and anchor in B.bnd:
                        order = (A, B) if len(ab) == 1 else (B, A)
                    else:
                        order = (A, B) if anchor in ab else (B, A)
                    for X in order:
                        if count(X.size, i):
                            if len(X.bnd) == 2:
                                nxt = (X, True, anchor if anchor in X.bnd else c)
                            else:
                                nxt = (X, False, X.bnd[0])
                            break
                else:
                    r = anchor
                    for X, Z in ((A, B), (B, A)):
                        near = r if r in X.bnd else c
                        if near != r and Z.cover < i:
                            continue
                        t = clean_tree(X, near, lmax, mask)
                        if count(diag_total(t), i):
                            nxt = (X, False, near)
                            break
                if nxt is None:
                    raise AssertionError("label counts disagree with children")
                cur, on_path, anchor = nxt
            if cur.kind != LABEL:
                raise AssertionError("search ended on an edge cluster")
            return cur.item.first(i)
        finally:
            for C, cm, cp, A, acov, acm, acp, B, bcov, bcm, bcp in reversed(opened):
                A.cover, A.cm, A.cp = acov, acm, acp
                B.cover, B.cm, B.cp = bcov, bcm, bcp
                C.cm, C.cp = cm, cp
