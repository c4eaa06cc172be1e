"""
图结构工具测试
"""

import pytest

from tools.exceptions import (
    DomainError,
    InvalidEdgeError,
    InvalidIntervalError,
    InvalidSizeError,
    InvalidVertexError,
    NoNeighborError,
)
from tools.graph import (
    Graph,
    add_edge_non_nested,
    decompose,
    degree_sequence,
    graph_statistics,
    induced_interval,
    is_hvg,
    is_non_crossing,
    max_neighbor,
    neighbors,
    nesting_degree,
    nesting_profile,
    non_nested,
    one_sum,
    one_sum_chain,
    path,
    remove_edge,
    remove_vertex,
)


def test_edges_are_normalized():
    g = Graph(3, [(2, 1), (1, 2), (3, 2)])
    assert g.edges == ((1, 2), (2, 3))
    assert g == path(3)


@pytest.mark.parametrize("n, edges, error", [
    (0, [], InvalidSizeError),
    (3, [(2, 2)], InvalidEdgeError),
    (3, [(1, 4)], InvalidEdgeError),
    (3, [(0, 2)], InvalidEdgeError),
    (3, [(1.9, 3)], InvalidEdgeError),
    (3, [(1, 2.0)], InvalidEdgeError),
    (3, [(True, 2)], InvalidEdgeError),
    (3, [(1, 2, 3)], InvalidEdgeError),
    (3, [1], InvalidEdgeError),
    (True, [], InvalidSizeError),
    (2.0, [], InvalidSizeError),
])
def test_invalid_graphs(n, edges, error):
    with pytest.raises(error):
        Graph(n, edges)


def test_path():
    assert path(1).edges == ()
    assert path(4).edges == ((1, 2), (2, 3), (3, 4))
    with pytest.raises(InvalidSizeError):
        path(0)


def test_neighbors(nested_graph):
    assert neighbors(nested_graph, 2) == (1, 3, 4, 5)
    assert neighbors(nested_graph, 7) == (5, 6)
    with pytest.raises(InvalidVertexError):
        neighbors(nested_graph, 8)


def test_nesting_profile_matches_nesting_degree(nested_graph):
    profile = nesting_profile(nested_graph)
    assert tuple(profile) == (0, 1, 3, 2, 0, 1, 0)
    assert all(profile[v] == nesting_degree(nested_graph, v) for v in range(1, 8))


def test_non_nested(nested_graph):
    assert non_nested(nested_graph) == [1, 5, 7]
    assert non_nested(path(1)) == [1]


def test_max_neighbor(nested_graph):
    assert max_neighbor(nested_graph, 1) == 5
    assert max_neighbor(nested_graph, 5) == 7
    with pytest.raises(NoNeighborError):
        max_neighbor(path(1), 1)
    with pytest.raises(InvalidVertexError):
        max_neighbor(nested_graph, 0)


def test_non_crossing(nested_graph):
    assert is_non_crossing(nested_graph)
    assert not is_non_crossing(Graph(4, [(1, 3), (2, 4)]))


def test_induced_interval(nested_graph, make_graph):
    assert induced_interval(nested_graph, 1, 5) == make_graph(5, 15, 24, 25)
    assert induced_interval(nested_graph, 5, 7) == make_graph(3, 13)
    with pytest.raises(InvalidIntervalError):
        induced_interval(nested_graph, 3, 3)
    with pytest.raises(InvalidIntervalError):
        induced_interval(nested_graph, 2, 9)


def test_one_sum(make_graph):
    g = make_graph(3, 13)
    assert one_sum(path(1), g) == g
    assert one_sum(g, path(1)) == g
    assert one_sum(g, g) == make_graph(5, 13, 35)


def test_decompose_reassembles(nested_graph):
    pieces = decompose(nested_graph)
    assert [p.n for p in pieces] == [5, 3]
    assert one_sum_chain(pieces) == nested_graph
    assert decompose(path(1)) == []


def test_remove_edge(nested_graph, make_graph):
    smaller = remove_edge(nested_graph, (5, 1))
    assert smaller == make_graph(7, 24, 25, 57)
    assert is_hvg(smaller)
    with pytest.raises(InvalidEdgeError):
        remove_edge(nested_graph, (2, 3))
    with pytest.raises(InvalidEdgeError):
        remove_edge(nested_graph, (1, 3))


def test_add_edge_non_nested(make_graph):
    assert add_edge_non_nested(path(4), 1, 4) == make_graph(4, 14)
    assert add_edge_non_nested(path(4), 3, 1) == make_graph(4, 13)
    with pytest.raises(InvalidEdgeError):
        add_edge_non_nested(make_graph(4, 14), 2, 4)
    with pytest.raises(InvalidEdgeError):
        add_edge_non_nested(path(4), 1, 2)


def test_remove_vertex(reduction_graph, make_graph):
    assert remove_vertex(path(3), 2) == Graph(2, [])
    assert remove_vertex(reduction_graph, 3) == make_graph(5, 13, 35)
    with pytest.raises(InvalidSizeError):
        remove_vertex(path(1), 1)


def test_degree_sequence(reduction_graph):
    assert degree_sequence(reduction_graph) == (2, 3, 2, 5, 2, 2)
    assert degree_sequence(path(1)) == (0,)


def test_is_hvg(tied_graph, nested_graph):
    assert is_hvg(tied_graph)
    assert is_hvg(nested_graph)
    assert is_hvg(path(1))
    assert not is_hvg(Graph(3, [(1, 2)]))
    assert not is_hvg(Graph(4, [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4)]))


def test_removing_long_edges_keeps_hvg():
    g = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 3), (1, 4)])
    assert is_hvg(remove_edge(g, (1, 3)))
    assert is_hvg(remove_edge(g, (1, 4)))


def test_closure_violation_is_domain_error(monkeypatch, nested_graph):
    import tools.graph as graph_module

    calls = iter([True, False])
    monkeypatch.setattr(graph_module, "is_hvg", lambda g: next(calls))
    with pytest.raises(DomainError):
        remove_edge(nested_graph, (1, 5))


def test_graph_statistics(nested_graph):
    stats = graph_statistics(nested_graph)
    assert stats.node_count == 7
    assert stats.edge_count == 10
    assert stats.degree_histogram == {2: 4, 3: 1, 4: 1, 5: 1}
    assert stats.average_degree == pytest.approx(20 / 7)
    assert stats.non_nested_count == 3
    assert stats.max_nesting_degree == 3
    assert stats.has_top_edge is False
    assert graph_statistics(path(1)).graph_density == 0.0
    assert stats.graph_density == pytest.approx(10 / 21)


def test_to_networkx_keeps_every_vertex(nested_graph):
    graph = Graph(4, [(1, 2)]).to_networkx()
    assert sorted(graph.nodes) == [1, 2, 3, 4]
    assert graph.number_of_edges() == 1
    assert sorted(tuple(sorted(e)) for e in nested_graph.to_networkx().edges) == list(nested_graph.edges)


# ===================== 普查上的结构性质 =====================

def test_operations_stay_inside_the_census(all_censuses):
    for n, census in all_censuses.items():
        keys = census.keys()
        for g in census:
            for i, j in g.edges:
                if j > i + 1:
                    assert remove_edge(g, (i, j)).edges in keys
            free = non_nested(g)
            for k, a in enumerate(free):
                for b in free[k + 1:]:
                    if not g.has_edge(a, b):
                        assert add_edge_non_nested(g, a, b).edges in keys
            for i in range(1, n):
                for j in range(i + 1, n + 1):
                    assert is_hvg(induced_interval(g, i, j))


def test_edge_count_bound(all_censuses):
    for n, census in all_censuses.items():
        if n >= 2:
            assert max(len(g.edges) for g in census) == 2 * n - 3
