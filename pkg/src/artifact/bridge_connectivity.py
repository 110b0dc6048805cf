"""Fully dynamic bridges and 2-edge-connectivity.

Every edge has a level in 0..lmax.  Tree edges sit at lmax and form a spanning
forest; each non-tree edge carries one user label at each endpoint at its own
level and covers its tree path at that level.  A tree edge is a bridge exactly
when its cover level is -1.  On deletion, replacement and cover edges are found
level by level, promoting edges from the smaller side so that a level-i
2-edge-connected component never exceeds n // 2**i vertices.
"""

from .combined_forest import CombinedForest, InstrumentedForest
from .oracle import SnapshotGraph


class GraphEdge:
    __slots__ = ("id", "u", "v", "level", "leaf", "label1", "label2", "alive")

    def __init__(self, eid, u, v):
        self.id = eid
        self.u = u
        self.v = v
        self.level = 0
        self.leaf = None
        self.label1 = None
        self.label2 = None
        self.alive = True

    @property
    def is_tree(self):
        return self.leaf is not None

    def __repr__(self):
        return f"GraphEdge({self.id}: {self.u}-{self.v}, level={self.level})"


class BridgeConnectivity:
    def __init__(self, n, instrument=False):
        if n < 1:
            raise ValueError("need at least one vertex")
        self.n = n
        self.T = InstrumentedForest(n) if instrument else CombinedForest(n)
        self.lmax = self.T.lmax
        self.edges = {}
        self._next = 0

    # ------------------------------------------------------------ updates

    def insert(self, v, w):
        if v == w:
            raise ValueError("self-loops are not supported")
        for x in (v, w):
            if not (0 <= x < self.n):
                raise IndexError(f"vertex {x} out of range")
        T = self.T
        e = GraphEdge(self._next, v, w)
        self._next += 1
        self.edges[e.id] = e
        if not T.connected(v, w):
            e.leaf = T.link(v, w, e)
            e.level = self.lmax
        else:
            e.label1 = T.add_label(v, e, 0)
            e.label2 = T.add_label(w, e, 0)
            e.level = 0
            T.cover(v, w, 0)
        return e

    def delete(self, e):
        if not isinstance(e, GraphEdge) or not e.alive or self.edges.get(e.id) is not e:
            raise ValueError("stale edge handle")
        T = self.T
        v, w = e.u, e.v
        e.alive = False
        del self.edges[e.id]
        alpha = e.level
        if e.is_tree:
            alpha = T.cover_level(v, w)
            if alpha == -1:
                T.cut(e.leaf)
                e.leaf = None
                return
            self._swap(e)
        T.remove_label(e.label1)
        T.remove_label(e.label2)
        e.label1 = e.label2 = None
        T.uncover(v, w, alpha)
        for i in range(alpha, -1, -1):
            self._recover(w, v, i)

    def _swap(self, e):
        T = self.T
        v, w = e.u, e.v
        alpha = T.cover_level(v, w)
        T.cut(e.leaf)
        e.leaf = None
        f = self._find_replacement(v, w, alpha)
        if f is None:
            raise AssertionError("covered tree edge without a replacement")
        T.remove_label(f.label1)
        T.remove_label(f.label2)
        f.label1 = f.label2 = None
        f.leaf = T.link(f.u, f.v, f)
        f.level = self.lmax
        e.label1 = T.add_label(v, e, alpha)
        e.label2 = T.add_label(w, e, alpha)
        e.level = alpha
        T.cover(v, w, alpha)

    def _find_replacement(self, v, w, i):
        T = self.T
        sv = T.find_size(v, v, i)
        sw = T.find_size(w, w, i)
        if sv <= sw:
            return self._recover_phase(v, v, i, sv)
        return self._recover_phase(w, w, i, sw)

    def _recover(self, v, w, i):
        s = self.T.find_size(v, w, i) // 2
        self._recover_phase(v, w, i, s)
        self._recover_phase(w, v, i, s)

    def _recover_phase(self, v, w, i, s):
        T = self.T
        label = T.find_first_label(v, w, i)
        while label is not None:
            e = label.payload
            q, r = e.u, e.v
            if not T.connected(q, r):
                return e
            if T.find_size(q, r, i + 1) <= s:
                T.remove_label(e.label1)
                T.remove_label(e.label2)
                e.label1 = T.add_label(q, e, i + 1)
                e.label2 = T.add_label(r, e, i + 1)
                e.level = i + 1
                T.cover(q, r, i + 1)
            else:
                T.cover(q, r, i)
                return None
            label = T.find_first_label(v, w, i)
        return None

    # ------------------------------------------------------------ queries

    def connected(self, v, w):
        return self.T.connected(v, w)

    def two_edge_connected(self, v, w):
        if v == w:
            return True
        return self.T.connected(v, w) and self.T.cover_level(v, w) >= 0

    def find_bridge(self, v, w=None):
        T = self.T
        if w is None:
            if T.cover_level(v) == -1:
                return T.min_covered_edge(v).item
            return None
        if not T.connected(v, w):
            raise ValueError(f"{v} and {w} are not connected")
        if T.cover_level(v, w) == -1:
            return T.min_covered_edge(v, w).item
        return None

    def size(self, v):
        return self.T.find_size(v, v, -1)

    def two_size(self, v):
        return self.T.find_size(v, v, 0)

    # ------------------------------------------------------------ helpers

    def find_edge(self, v, w):
        for e in self.edges.values():
            if (e.u, e.v) in ((v, w), (w, v)):
                return e
        return None

    def snapshot(self):
        es = list(self.edges.values())
        return SnapshotGraph(
            self.n,
            [(e.u, e.v) for e in es],
            levels=[e.level for e in es],
            tree=[e.is_tree for e in es],
        ), es
