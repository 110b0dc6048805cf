"""Cover levels of tree edges with lazy Cover/Uncover on exposed paths.

Every cluster C keeps

    cover        min cover level on the cluster path (lmax for point clusters)
    gcover       min cover level off the cluster path
    mpe, mge     witness edges for the two minima (None if empty)
    cm, cp       pending Uncover / Cover levels, -1 when nothing is pending

The lazy pair reads "first uncover every path edge at level <= cm, then raise
every path edge below cp to cp".  cover is always kept up to date at the
cluster itself; only the path children lag behind until C is split.
"""

from .top_tree import COMPOSITE, EDGE, Cluster, TopForest


def max_level(n):
    return n.bit_length() - 1


class CoverCluster(Cluster):
    __slots__ = ("cover", "gcover", "mpe", "mge", "cm", "cp")


def cl_create(leaf, lmax):
    if leaf.kind == EDGE:
        leaf.cover = -1
        leaf.mpe = leaf
    else:
        leaf.cover = lmax
        leaf.mpe = None
    # an edge leaf is a path cluster here, so nothing lies off its path
    leaf.gcover = lmax
    leaf.mge = None
    leaf.cm = -1
    leaf.cp = -1


def cl_merge(C, A, B, lmax):
    # ties at the initial lmax still take a witness, so a path covered at lmax
    # reports one of its edges
    cover = g = lmax
    mpe = mge = None
    if len(C.bnd) == 2:
        for X in (A, B):
            if X.cover < cover or (X.cover == cover and mpe is None):
                cover, mpe = X.cover, X.mpe
    else:
        for X in (A, B):
            if len(X.bnd) == 2 and (X.cover < g or (X.cover == g and mge is None)):
                g, mge = X.cover, X.mpe
    for X in (A, B):
        if X.gcover < g or (X.gcover == g and mge is None):
            g, mge = X.gcover, X.mge
    C.cover = cover
    C.mpe = mpe
    C.gcover = g
    C.mge = mge
    C.cm = -1
    C.cp = -1


def cl_split(C):
    cm, cp = C.cm, C.cp
    if len(C.bnd) != 2 or (cm < 0 and cp < 0):
        return
    hi = cm if cm > cp else cp
    for D in (C.a, C.b):
        if len(D.bnd) != 2:
            continue
        if max(D.cover, D.cm) <= cm:
            D.cm = cm
        if D.cover <= hi:
            D.cover = cp
            D.cp = cp
    C.cm = C.cp = -1


def cl_cover(C, i):
    if C.cover < i:
        C.cover = i
    if C.cp < i:
        C.cp = i


def cl_uncover(C, i):
    if C.cover <= i:
        C.cover = -1
        C.cp = -1
        if C.cm < i:
            C.cm = i


class CoverLevelCallbacks:
    cluster_class = CoverCluster

    def __init__(self, lmax):
        self.lmax = lmax

    def create(self, leaf):
        cl_create(leaf, self.lmax)

    def destroy(self, leaf):
        pass

    def merge(self, C, A, B):
        cl_merge(C, A, B, self.lmax)

    def split(self, C):
        cl_split(C)


class CoverLevelTree:
    """A dynamic forest whose tree edges carry implicit cover levels."""

    def __init__(self, n, callbacks=None):
        self.n = n
        self.lmax = max_level(n)
        self.forest = TopForest(n, callbacks or CoverLevelCallbacks(self.lmax))

    def link(self, v, w, item=None):
        return self.forest.link(v, w, item)

    def cut(self, e):
        self.forest.cut(e)

    def connected(self, v, w):
        return self.forest.connected(v, w)

    def _path(self, v, w):
        C = self.forest.expose(v, w)
        if C is None:
            raise ValueError(f"{v} and {w} are not connected")
        return C

    def cover(self, v, w, i):
        if v != w:
            cl_cover(self._path(v, w), i)

    def uncover(self, v, w, i):
        if v != w:
            cl_uncover(self._path(v, w), i)

    def cover_level(self, v, w=None):
        return self._query(v, w)[0]

    def min_covered_edge(self, v, w=None):
        return self._query(v, w)[1]

    def _query(self, v, w):
        lmax = self.lmax
        if w is None:
            C = self.forest.expose(v)
            if C is None:
                return lmax, None
            if C.cover < C.gcover:
                return C.cover, C.mpe
            return C.gcover, C.mge
        if v == w:
            self.forest._check(v)
            return lmax, None
        C = self._path(v, w)
        return C.cover, C.mpe
