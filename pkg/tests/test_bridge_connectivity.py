import pytest
from hypothesis import given, settings, strategies as st

from artifact.bridge_connectivity import BridgeConnectivity
from helpers import Truth, check_queries, check_structure, logged_graph


def build(n, edges):
    G = BridgeConnectivity(n)
    return G, [G.insert(u, v) for u, v in edges]


def test_single_edge():
    G, (e,) = build(4, [(0, 1)])
    assert e.is_tree and e.level == G.lmax
    assert G.find_bridge(0) is e
    G.delete(e)
    assert not G.connected(0, 1)
    assert G.find_bridge(0) is None


def test_triangle():
    G, es = build(4, [(0, 1), (1, 2), (2, 0)])
    assert not es[2].is_tree and es[2].level == 0
    assert all(G.find_bridge(v) is None for v in range(3))
    assert G.two_size(0) == G.size(0) == 3
    assert all(G.two_edge_connected(v, w) for v in range(3) for w in range(3))
    G.delete(es[0])
    rest = {es[1].id, es[2].id}
    assert G.find_bridge(0).id in rest and G.find_bridge(0, 2).id in rest
    assert G.two_size(1) == 1


def test_parallel_edge_removes_bridge():
    G, (a,) = build(3, [(0, 1)])
    assert G.find_bridge(0) is a
    b = G.insert(1, 0)
    assert not b.is_tree
    assert G.find_bridge(0) is None and G.two_edge_connected(0, 1)
    G.delete(a)                      # the parallel copy takes over
    assert b.is_tree and G.find_bridge(1) is b


def test_path_bridges():
    G, es = build(3, [(0, 1), (1, 2)])
    assert G.find_bridge(0, 2) in es
    assert not G.two_edge_connected(0, 2)
    assert [G.two_size(v) for v in range(3)] == [1, 1, 1]


def test_barbell():
    G, es = build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    bridge = es[6]
    assert G.find_bridge(0) is bridge
    assert G.find_bridge(0, 5) is bridge
    assert G.find_bridge(0, 1) is None
    assert G.size(4) == 6 and G.two_size(4) == 3


def test_swap_keeps_connector_as_only_bridge():
    G, es = build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    tree_in_triangle = next(e for e in es[:3] if e.is_tree and {e.u, e.v} != {2, 0})
    G.delete(tree_in_triangle)
    assert es[2].is_tree           # the triangle's non-tree edge was promoted
    assert G.find_bridge(3) is not None
    truth = Truth(G)
    assert truth.bridge_ids >= {es[6].id}
    assert G.find_bridge(4, 5) is None and G.find_bridge(3, 5) is None


def test_covered_tree_edge_in_four_cycle():
    G, es = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    G.delete(es[1])
    assert es[3].is_tree
    assert G.size(0) == 4
    assert all(G.find_bridge(v) is not None for v in range(4))  # now a path
    assert len(Truth(G).bridge_ids) == 3


def test_isolated_vertex():
    G = BridgeConnectivity(5)
    assert G.size(3) == 1 and G.two_size(3) == 1
    assert G.find_bridge(3) is None and G.two_edge_connected(3, 3)


def test_errors():
    G, (e,) = build(4, [(0, 1)])
    with pytest.raises(ValueError):
        G.insert(2, 2)
    with pytest.raises(IndexError):
        G.insert(0, 9)
    with pytest.raises(ValueError):
        G.find_bridge(0, 3)
    G.delete(e)
    with pytest.raises(ValueError):
        G.delete(e)


def test_instrumented_counts():
    G = BridgeConnectivity(8, instrument=True)
    for u, v in [(0, 1), (1, 2), (2, 0)]:
        G.insert(u, v)
    assert G.T.calls["link"] == 2 and G.T.calls["add_label"] == 2 and G.T.calls["cover"] == 1


updates = st.lists(st.tuples(st.booleans(), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6)), max_size=70)


@given(st.integers(2, 12), updates)
@settings(max_examples=60, deadline=None)
def test_oracle_equivalence_and_invariants(n, script):
    G = logged_graph(n)
    pairs = [(v, w) for v in range(n) for w in range(n)]
    for delete, a, b in script:
        if delete and G.edges:
            live = sorted(G.edges)
            G.delete(G.edges[live[a % len(live)]])
        else:
            u, v = a % n, b % n
            if u == v:
                v = (v + 1) % n
            G.insert(u, v)
        truth = check_structure(G)
        check_queries(G, truth, pairs)
