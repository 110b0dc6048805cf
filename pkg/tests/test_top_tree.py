import random

import pytest
from hypothesis import given, settings, strategies as st

from artifact.top_tree import COMPOSITE, EDGE, LABEL, Cluster, TopForest, height, iter_clusters


class Audit(Cluster):
    __slots__ = ("vs", "es", "opened")


class AuditCallbacks:
    """Tracks vertex and leaf sets and checks the merge/split discipline."""

    cluster_class = Audit

    def create(self, leaf):
        leaf.vs = frozenset(leaf.bnd)
        leaf.es = frozenset([id(leaf)])
        leaf.opened = False

    def destroy(self, leaf):
        pass

    def merge(self, c, a, b):
        assert not a.opened and not b.opened
        assert not (a.es & b.es)
        assert set(a.bnd) & set(b.bnd)
        c.vs = a.vs | b.vs
        c.es = a.es | b.es
        c.opened = False

    def split(self, c):
        assert not c.opened
        c.opened = True


def check_boundaries(F):
    """A vertex is a boundary of C iff it is external or touches a leaf outside C."""
    for R in F.roots():
        path = F._root_of(next(iter(R.bnd)))
        external = {path.top, path.tail}
        leaves_at = {}
        for c in iter_clusters(R):
            if c.kind != COMPOSITE:
                for x in c.bnd:
                    leaves_at.setdefault(x, set()).add(id(c))
        for c in iter_clusters(R):
            assert not c.opened
            want = {x for x in c.vs if x in external or leaves_at[x] - c.es}
            assert set(c.bnd) == want


ops = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 11), st.integers(0, 11)), max_size=120)


@given(ops)
@settings(max_examples=150, deadline=None)
def test_random_forest_matches_union_find(script):
    n = 12
    F = TopForest(n, AuditCallbacks())
    for v in range(n):
        F.label_leaf(v)
    edges = []

    def comp():
        p = list(range(n))

        def f(x):
            while p[x] != x:
                x = p[x]
            return x

        for e in edges:
            p[f(e.u)] = f(e.v)
        return f

    for kind, a, b in script:
        f = comp()
        if kind == 0 and a != b and f(a) != f(b):
            edges.append(F.link(a, b))
        elif kind == 1 and edges:
            e = edges.pop(a % len(edges))
            F.cut(e)
        elif kind == 2:
            F.refresh_label(a)
        else:
            r = F.expose(a, b)
            if f(a) != f(b):
                assert r is None
            else:
                assert set(r.bnd) == {a, b}
        f = comp()
        for x in range(n):
            for y in range(n):
                assert F.connected(x, y) == (f(x) == f(y))
        check_boundaries(F)


def test_every_leaf_in_exactly_one_root():
    rng = random.Random(3)
    n = 30
    F = TopForest(n, AuditCallbacks())
    edges = []
    for v in range(1, n):
        edges.append(F.link(v, rng.randrange(v)))
    for _ in range(50):
        F.expose(rng.randrange(n), rng.randrange(n))
    roots = F.roots()
    assert len(roots) == 1
    kinds = [c.kind for c in iter_clusters(roots[0])]
    assert kinds.count(EDGE) == n - 1
    assert kinds.count(LABEL) == n           # every touched vertex has one
    edge_ids = {id(c) for c in iter_clusters(roots[0]) if c.kind == EDGE}
    assert edge_ids == {id(e) for e in edges}


def test_expose_root_boundary():
    F = TopForest(5, AuditCallbacks())
    for v in range(4):
        F.link(v, v + 1)
    assert F.expose(0, 4).bnd in ((0, 4), (4, 0))
    assert F.expose(2).bnd == (2,)
    assert F.expose(1, 3).vs == frozenset(range(5))


def test_untouched_and_disconnected_expose():
    F = TopForest(4, AuditCallbacks())
    assert F.expose(0) is None
    F.link(0, 1)
    assert F.expose(0, 2) is None
    assert F.expose(2) is None
    assert not F.connected(0, 3)
    assert F.connected(3, 3)


def test_errors():
    F = TopForest(3, AuditCallbacks())
    e = F.link(0, 1)
    with pytest.raises(ValueError):
        F.link(0, 0)
    with pytest.raises(ValueError):
        F.link(1, 0)
    F.cut(e)
    with pytest.raises(ValueError):
        F.cut(e)
    with pytest.raises((IndexError, ValueError)):
        F.expose(7)


def test_height_stays_logarithmic_on_a_long_path():
    n = 2048
    F = TopForest(n, AuditCallbacks())
    for v in range(n - 1):
        F.link(v, v + 1)
    rng = random.Random(0)
    for _ in range(400):
        F.expose(rng.randrange(n), rng.randrange(n))
    # splay trees give amortized, not worst-case, depth; this is a sanity bound
    assert height(F.roots()[0]) < 200
