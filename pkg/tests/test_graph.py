import pytest
from hypothesis import given
from hypothesis import strategies as st

from brookscolor import (
    EndpointDeleted,
    SelfLoop,
    UnknownVertex,
    build_graph,
    connected_components,
    is_complete,
    max_degree,
    surgery,
)

from reference import bfs_reachable, complete_graph, cycle_graph, path_graph
from strategies import graphs


def test_build_path():
    g = build_graph({1, 2, 3}, [(1, 2), (2, 3)])
    assert g.degree(2) == 2
    assert g.vertices == (1, 2, 3)
    assert list(g.edges()) == [(1, 2), (2, 3)]


def test_build_single_isolated_vertex():
    g = build_graph({1}, [])
    assert g.vertices == (1,)
    assert g.m == 0


def test_build_collapses_duplicate_edges():
    g = build_graph({1, 2}, [(1, 2), (2, 1)])
    assert g.m == 1


def test_build_from_count_uses_one_based_ids():
    g = build_graph(3, [(1, 3)])
    assert g.vertices == (1, 2, 3)


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoop):
        build_graph(2, [(1, 1)])


def test_build_rejects_unknown_endpoint():
    with pytest.raises(UnknownVertex):
        build_graph(2, [(1, 5)])


def test_build_rejects_negative_id():
    with pytest.raises(UnknownVertex):
        build_graph({-1, 0}, [])


def test_max_degree_examples():
    assert max_degree(complete_graph(4)) == 3
    assert max_degree(path_graph(3)) == 2
    assert max_degree(build_graph(5, [])) == 0


def test_connected_components_two_triangles():
    g = build_graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    assert connected_components(g).components == ((1, 2, 3), (4, 5, 6))


def test_connected_components_cycle_and_empty():
    assert connected_components(cycle_graph(5)).components == ((1, 2, 3, 4, 5),)
    assert connected_components(build_graph(0, [])).components == ()


def test_is_complete_examples():
    k4 = complete_graph(4)
    assert is_complete(k4, k4.vertices)
    assert not is_complete(cycle_graph(4), (1, 2, 3, 4))
    assert is_complete(cycle_graph(4), (2,))
    with pytest.raises(UnknownVertex):
        is_complete(k4, (1, 9))


def test_surgery_examples():
    c4 = cycle_graph(4)
    f = surgery(c4, delete={4}, add_edges=[(1, 3)])
    assert f.vertices == (1, 2, 3) and is_complete(f, (1, 2, 3))
    h = surgery(c4, delete={1}, add_edges=[(2, 4)])
    assert h.vertices == (2, 3, 4) and is_complete(h, (2, 3, 4))
    assert surgery(c4) == c4


def test_surgery_errors():
    c4 = cycle_graph(4)
    with pytest.raises(UnknownVertex):
        surgery(c4, delete={9})
    with pytest.raises(SelfLoop):
        surgery(c4, add_edges=[(2, 2)])
    with pytest.raises(EndpointDeleted):
        surgery(c4, delete={1}, add_edges=[(1, 3)])
    with pytest.raises(UnknownVertex):
        surgery(c4, add_edges=[(1, 12)])


def test_surgery_keeps_ids_stable():
    g = build_graph({3, 7, 20}, [(3, 7), (7, 20)])
    h = surgery(g, delete={3})
    assert h.vertices == (7, 20)
    assert h.adjacent(7, 20)


@given(graphs())
def test_adjacency_is_symmetric_and_loop_free(g):
    for v in g.vertices:
        assert v not in g.neighbor_set(v)
        for u in g.neighbor_set(v):
            assert v in g.neighbor_set(u)
            assert g.has_vertex(u)


@given(graphs())
def test_components_partition_and_reachability(g):
    parts = connected_components(g).components
    seen = [v for comp in parts for v in comp]
    assert sorted(seen) == list(g.vertices)
    assert len(set(seen)) == len(seen)
    for comp in parts:
        for v in comp:
            assert bfs_reachable(g, v) == set(comp)


@given(graphs(min_n=1), st.data())
def test_surgery_edge_equation(g, data):
    doomed = data.draw(st.sets(st.sampled_from(g.vertices)))
    survivors = [v for v in g.vertices if v not in doomed]
    if len(survivors) >= 2:
        import itertools

        candidates = list(itertools.combinations(survivors, 2))
        added = data.draw(st.lists(st.sampled_from(candidates), unique=True, max_size=4))
    else:
        added = []
    h = surgery(g, delete=doomed, add_edges=added)
    assert h.vertices == tuple(survivors)
    expected = {e for e in g.edges() if e[0] not in doomed and e[1] not in doomed}
    expected |= {(min(u, v), max(u, v)) for u, v in added}
    assert set(h.edges()) == expected
    # degree never grows under pure deletion
    assert max_degree(surgery(g, delete=doomed)) <= max_degree(g)


@given(graphs())
def test_graph_equality_and_repr(g):
    clone = build_graph(g.vertices, list(g.edges()))
    assert clone == g
    assert repr(g) == f"Graph(n={g.n}, m={g.m})"
