import pytest
from hypothesis import given, settings, strategies as st

from artifact.coverlevel import CoverLevelTree, max_level
from artifact.oracle import CoverSimulator, lazy_invariant_holds
from artifact.top_tree import iter_clusters


def path_tree(n, k):
    T = CoverLevelTree(n)
    es = [T.link(v, v + 1, (v, v + 1)) for v in range(k - 1)]
    return T, es


def test_max_level():
    assert [max_level(n) for n in (1, 2, 3, 4, 10, 1024, 1025)] == [0, 1, 1, 2, 3, 10, 10]


def test_single_edge_cover():
    T, (e,) = path_tree(16, 2)
    T.cover(0, 1, 3)
    assert T.cover_level(0, 1) == 3


def test_nested_covers():
    T, _ = path_tree(8, 3)
    T.cover(0, 1, 2)
    T.cover(0, 2, 1)
    assert T.cover_level(0, 2) == 1
    assert T.cover_level(0, 1) == 2


def test_cover_is_idempotent():
    from artifact.oracle import flush, payload_digest

    T, _ = path_tree(8, 5)
    T.cover(0, 4, 2)
    flush(T.forest)
    before = payload_digest(T.forest)
    T.cover(0, 4, 2)
    flush(T.forest)
    assert payload_digest(T.forest) == before


def test_uncover_guard():
    T, _ = path_tree(64, 2)
    T.cover(0, 1, 3)
    T.uncover(0, 1, 5)
    assert T.cover_level(0, 1) == -1
    T.cover(0, 1, 2)
    T.uncover(0, 1, 1)
    assert T.cover_level(0, 1) == 2


def test_uncover_mixed_path():
    T, es = path_tree(8, 4)
    T.cover(0, 1, 0)
    T.cover(1, 2, 2)
    T.cover(2, 3, 1)
    T.uncover(0, 3, 1)
    assert [T.cover_level(v, v + 1) for v in range(3)] == [-1, 2, -1]
    assert T.min_covered_edge(0, 3).item in ((0, 1), (2, 3))


def test_fresh_link_and_isolated():
    T = CoverLevelTree(8)
    assert T.cover_level(5) == 3 and T.min_covered_edge(5) is None
    e = T.link(0, 1, "e")
    assert T.cover_level(0) == -1
    assert T.min_covered_edge(0) is e
    assert T.cover_level(2, 2) == 3 and T.min_covered_edge(2, 2) is None


def test_star_and_triangle_tree():
    T = CoverLevelTree(8)
    spokes = [T.link(0, k, k) for k in (1, 2, 3)]
    assert T.cover_level(0) == -1
    assert T.min_covered_edge(2) in spokes
    # the tree of a triangle with both tree edges covered at 0
    T2 = CoverLevelTree(8)
    T2.link(0, 1)
    T2.link(1, 2)
    T2.cover(0, 2, 0)
    assert T2.cover_level(1) == 0


def test_disconnected_path_query_is_an_error():
    T = CoverLevelTree(4)
    T.link(0, 1)
    with pytest.raises(ValueError):
        T.cover_level(0, 3)


ops = st.lists(
    st.tuples(st.integers(0, 4), st.integers(0, 9), st.integers(0, 9), st.integers(-1, 3)), max_size=80
)


@given(ops)
@settings(max_examples=120, deadline=None)
def test_matches_simulator(script):
    n = 10
    T = CoverLevelTree(n)
    S = CoverSimulator(n)
    edges = []
    for kind, a, b, i in script:
        if kind == 0 and a != b and not S.connected(a, b):
            e = T.link(a, b)
            S.link(a, b, e)
            edges.append(e)
        elif kind == 1 and edges:
            e = edges.pop(a % len(edges))
            T.cut(e)
            S.cut(e)
        elif kind == 2 and a != b and S.connected(a, b) and i >= 0:
            T.cover(a, b, i)
            S.cover(a, b, i)
        elif kind == 3 and a != b and S.connected(a, b):
            T.uncover(a, b, i)
            S.uncover(a, b, i)
        for R in T.forest.roots():
            assert all(lazy_invariant_holds(c) for c in iter_clusters(R))
        for v in range(n):
            assert T.cover_level(v) == S.cover_level(v)
            for w in range(n):
                if v != w and S.connected(v, w):
                    lvl = T.cover_level(v, w)
                    assert lvl == S.cover_level(v, w)
                    e = T.min_covered_edge(v, w)
                    assert S.c[e] == lvl and e in S.path(v, w)[1]
