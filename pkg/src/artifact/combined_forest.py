"""All fourteen tree operations over a single top tree.

Cover levels, sizes and label counts live in one composite cluster payload, so
every client sees the same exposes and shares one copy of the cover fields.
InstrumentedForest additionally counts every public operation in ``calls``;
the plain facade carries no counting overhead.
"""

from collections import Counter

from .findfirstlabel import FindFirstLabelTree


class CombinedForest(FindFirstLabelTree):
    """Ops 1-14: link, cut, connected, cover, uncover, cover_level (two forms),
    min_covered_edge (two forms), add_label, remove_label, find_first_label,
    find_size, plus expose-level statistics in ``stats``."""

    calls = None

    @property
    def stats(self):
        return self.forest.stats


class InstrumentedForest(CombinedForest):
    def __init__(self, n):
        super().__init__(n)
        self.calls = Counter()

    def link(self, v, w, item=None):
        self.calls["link"] += 1
        return super().link(v, w, item)

    def cut(self, e):
        self.calls["cut"] += 1
        super().cut(e)

    def connected(self, v, w):
        self.calls["connected"] += 1
        return super().connected(v, w)

    def cover(self, v, w, i):
        self.calls["cover"] += 1
        super().cover(v, w, i)

    def uncover(self, v, w, i):
        self.calls["uncover"] += 1
        super().uncover(v, w, i)

    def cover_level(self, v, w=None):
        self.calls["cover_level"] += 1
        return super().cover_level(v, w)

    def min_covered_edge(self, v, w=None):
        self.calls["min_covered_edge"] += 1
        return super().min_covered_edge(v, w)

    def add_label(self, v, label, i):
        self.calls["add_label"] += 1
        return super().add_label(v, label, i)

    def remove_label(self, label):
        self.calls["remove_label"] += 1
        super().remove_label(label)

    def find_first_label(self, v, w, i):
        self.calls["find_first_label"] += 1
        return super().find_first_label(v, w, i)

    def find_size(self, v, w, i):
        self.calls["find_size"] += 1
        return super().find_size(v, w, i)
