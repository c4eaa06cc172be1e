"""
HVG实现测试
"""

import pytest

from tools.construct import build_fast, build_naive
from tools.exceptions import NotRealizableError
from tools.graph import Graph, non_nested, path
from tools.realize import is_distinct_realizable, nesting_realization, standard_sequence


def test_standard_sequence_of_worked_example(nested_graph):
    assert standard_sequence(nested_graph) == (7, 4, 1, 2, 6, 3, 5)


@pytest.mark.parametrize("values", [
    (7, 4, 1, 2, 6, 3, 5),
    (7, 4, 2, 3, 6, 1, 5),
    (4, 3, 1, 2, 7, 5, 6),
])
def test_alternative_realizations(nested_graph, values):
    assert build_fast(values) == nested_graph


def test_nesting_realization_of_non_distinct_graph(tied_graph):
    assert nesting_realization(tied_graph) == (4, 3, 3, 4)
    assert build_naive((4, 3, 3, 4)) == tied_graph
    assert not is_distinct_realizable(tied_graph)


def test_path_realizations():
    assert standard_sequence(path(4)) == (4, 3, 2, 1)
    assert nesting_realization(path(4)) == (4, 4, 4, 4)
    assert standard_sequence(path(1)) == (1,)


def test_non_hvg_is_rejected():
    crossing = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4)])
    with pytest.raises(NotRealizableError):
        standard_sequence(crossing)
    with pytest.raises(NotRealizableError):
        is_distinct_realizable(crossing)


def test_standard_sequence_realizes_distinct_census(distinct_censuses):
    for n, census in distinct_censuses.items():
        for g in census:
            values = standard_sequence(g)
            assert sorted(values) == list(range(1, n + 1))
            assert values[0] == n
            assert build_fast(values) == g


def test_nesting_realization_realizes_full_census(all_censuses):
    for n, census in all_censuses.items():
        for g in census:
            values = nesting_realization(g)
            assert values[0] == n
            assert build_naive(values) == g


def test_distinct_membership_matches_censuses(distinct_censuses, all_censuses):
    for n, census in all_censuses.items():
        distinct = distinct_censuses[n].keys()
        for g in census:
            assert is_distinct_realizable(g) == (g.edges in distinct)


def test_last_entry_of_standard_sequence(distinct_censuses):
    for n, census in distinct_censuses.items():
        for g in census:
            assert standard_sequence(g)[-1] == n - len(non_nested(g)) + 1


@pytest.mark.slow
def test_realizations_at_eight_vertices(distinct_census_eight, all_census_eight):
    assert len(distinct_census_eight) == 429
    for g in distinct_census_eight:
        values = standard_sequence(g)
        assert sorted(values) == list(range(1, 9))
        assert values[0] == 8
        assert build_naive(values) == g
    assert len(all_census_eight) == 1806
    for g in all_census_eight:
        assert build_naive(nesting_realization(g)) == g
