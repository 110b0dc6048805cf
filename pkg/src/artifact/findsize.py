"""Per-level vertex counts on top of cover levels.

Vectors are indexed by level j in -1..lmax and packed into one Python int,
``width`` bits per entry.  Two sections share the int: the low section counts
vertices, the high section counts user labels (read by findfirstlabel).  Both
sections are combined by the same additions and masks, so one set of part lists
serves both.

For a cluster C and boundary vertex x the part list tree(C, x) holds, per key i,
the vertices u on the cluster path with CoverLevel(u, x) = i (partsize) together
with their M(i)-masked copy (diagsize).  Stored lists ignore the lazy values of
C; ``clean`` folds them in on demand.  Point clusters keep the single part
(lmax, size, size) implicitly.  Part lists are immutable, so a merge never
changes its children and a split has nothing to undo.
"""

from .coverlevel import CoverCluster, CoverLevelCallbacks, CoverLevelTree, cl_merge, cl_split
from .part_tree import part_concat, part_get, part_range_sum, part_single, part_split
from .top_tree import EDGE


class Lanes:
    """Packing of (size, count) vectors over levels -1..lmax into an int."""

    def __init__(self, lmax, width=32):
        self.lmax = lmax
        self.L = lmax + 2
        self.width = width
        self.fmask = (1 << width) - 1
        self.ones = sum(1 << (k * width) for k in range(self.L))
        # mask[i + 1] keeps entries j <= i in both sections (M(i))
        self.mask = []
        for i in range(-1, lmax + 1):
            low = (1 << ((i + 2) * width)) - 1
            self.mask.append(low | (low << (self.L * width)))

    def size_at(self, x, j):
        return (x >> ((j + 1) * self.width)) & self.fmask

    def count_at(self, x, j):
        return (x >> ((self.L + j + 1) * self.width)) & self.fmask

    def sizes(self, x):
        return [self.size_at(x, j) for j in range(-1, self.lmax + 1)]

    def counts(self, x):
        return [self.count_at(x, j) for j in range(-1, self.lmax + 1)]

    def counts_vector(self, per_level):
        """Pack a {level: label count} mapping into the count section."""
        x = 0
        for j, c in per_level.items():
            x |= c << ((self.L + j + 1) * self.width)
        return x


class SizeCluster(CoverCluster):
    __slots__ = ("size", "ta", "tb")


def clean(tree, cm, cp, mask):
    """The part list with the pending lazy values folded in.

    Every part with key <= max(cm, cp) ends up at key cp.
    """
    hi = cm if cm > cp else cp
    if hi < 0 or not tree:
        return tree
    low, rest = part_split(tree, hi)
    if not low:
        return tree
    s = part_range_sum(low, -1, hi)[0]
    return part_concat(part_single(cp, s, s & mask[cp + 1]), rest)


def tree_of(X, x, lmax):
    if len(X.bnd) == 1:
        return ((lmax, X.size, X.size),)
    return X.ta if X.bnd[0] == x else X.tb


def clean_tree(X, x, lmax, mask):
    if len(X.bnd) == 1:
        return ((lmax, X.size, X.size),)
    t = X.ta if X.bnd[0] == x else X.tb
    if X.cm < 0 and X.cp < 0:
        return t
    return clean(t, X.cm, X.cp, mask)


def diag_total(t):
    d = 0
    for node in t:
        d += node[2]
    return d


def _along(X, x, Y, c, lmax, mask):
    """Part list from x of the path X + Y; X holds x and c joins X to Y.

    Keys above cover_X come from X alone, keys below it from Y alone, and the
    part at cover_X gathers X's own part there plus everything of Y at or
    above cover_X.
    """
    tx = clean_tree(X, x, lmax, mask)
    ty = clean_tree(Y, c, lmax, mask)
    k = X.cover
    low_x, hi = part_split(tx, k)
    px, dx = part_get(low_x, k)
    lo, rest = part_split(ty, k - 1)
    s = part_range_sum(rest, k, lmax)[0]
    mid = part_single(k, px + s, dx + (s & mask[k + 1]))
    return part_concat(part_concat(lo, mid), hi)


def fs_create(leaf, lanes):
    if leaf.kind == EDGE:
        leaf.size = 0
        leaf.ta = leaf.tb = ()
    else:
        leaf.size = lanes.ones + getattr(leaf.item, "packed", 0)
        leaf.ta = leaf.tb = None


def fs_merge(C, A, B, lmax, mask):
    ab, bb, cb = A.bnd, B.bnd, C.bnd
    if len(cb) == 1:
        if len(ab) == 1 and len(bb) == 1:
            C.size = A.size + B.size
        else:
            if len(ab) == 1:
                A, B = B, A
            # A is the path cluster, B hangs at its far end
            a = cb[0]
            t = clean_tree(A, a, lmax, mask)
            C.size = diag_total(t) + (B.size & mask[A.cover + 1])
        C.ta = C.tb = None
        return
    C.size = A.size + B.size
    c = ab[0] if ab[0] in bb else ab[1]
    trees = []
    for x in cb:
        if x != c:
            X, Y = (A, B) if x in ab else (B, A)
        else:
            y = cb[1] if cb[0] == x else cb[0]
            X, Y = (B, A) if y in ab else (A, B)
        trees.append(_along(X, x, Y, c, lmax, mask))
    C.ta, C.tb = trees


class FindSizeCallbacks(CoverLevelCallbacks):
    cluster_class = SizeCluster

    def __init__(self, lmax, lanes=None):
        super().__init__(lmax)
        self.lanes = lanes or Lanes(lmax)
        self.mask = self.lanes.mask

    def create(self, leaf):
        super().create(leaf)
        fs_create(leaf, self.lanes)

    def merge(self, C, A, B):
        cl_merge(C, A, B, self.lmax)
        fs_merge(C, A, B, self.lmax, self.mask)

    def split(self, C):
        # children keep their own part lists; only the lazy levels move down
        cl_split(C)


class FindSizeTree(CoverLevelTree):
    """Cover levels plus FindSize.  Every vertex carries a label leaf."""

    def __init__(self, n, callbacks=None, width=32):
        lmax = n.bit_length() - 1
        cb = callbacks or FindSizeCallbacks(lmax, Lanes(lmax, max(width, n.bit_length() + 1)))
        super().__init__(n, cb)
        self.lanes = cb.lanes
        for v in range(n):
            self.forest.label_leaf(v, self._vertex_item(v))
        self.forest._close()

    def _vertex_item(self, v):
        return None

    def find_size(self, v, w, i):
        if not (-1 <= i <= self.lmax):
            raise ValueError(f"level {i} out of range")
        C = self.forest.expose(v, w)
        if C is None:
            raise ValueError(f"{v} and {w} are not connected")
        return self.lanes.size_at(C.size, i)
