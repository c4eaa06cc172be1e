"""
文件格式测试
"""

from fractions import Fraction

import pytest

from cli.formats import (
    parse_edge_lists,
    parse_graph,
    parse_graphs,
    parse_integers,
    parse_series,
    render_dot,
    render_edges,
    render_graphs,
    render_json,
)
from cli.models import ErrorDetail, GraphDocument, OutputFormat
from tools.construct import build_fast
from tools.exceptions import ParseError, SizeError
from tools.graph import path


def test_parse_series_separators_and_comments():
    text = "# header\n4 3 1 2 5\n1,2\n  0.5, 2.25 1\n"
    assert parse_series(text) == [(4, 3, 1, 2, 5), (1, 2), (Fraction(1, 2), Fraction(9, 4), 1)]


@pytest.mark.parametrize("text, line, column", [
    ("1 2\n\n3 4\n", 2, 1),
    ("1 2\n3 -4\n", 2, 3),
    ("1 x\n", 1, 3),
    ("# only a comment\n", 1, 1),
])
def test_parse_series_errors(text, line, column):
    with pytest.raises(ParseError) as excinfo:
        parse_series(text)
    assert excinfo.value.line == line
    assert excinfo.value.column == column


def test_parse_integers():
    assert parse_integers("2 3 2\n5,2 2") == (2, 3, 2, 5, 2, 2)
    with pytest.raises(ParseError):
        parse_integers("2 2.5")


def test_render_edges(make_graph):
    assert render_edges(make_graph(5, 15, 24, 25)) == "n 5\n1 2\n1 5\n2 3\n2 4\n2 5\n3 4\n4 5"
    assert render_edges(path(1)) == "n 1"


def test_edge_list_round_trip(nested_graph, xi_example_graph):
    text = render_graphs([nested_graph, xi_example_graph, path(1)], OutputFormat.EDGES)
    assert parse_edge_lists(text) == [nested_graph, xi_example_graph, path(1)]


def test_json_round_trip(nested_graph):
    text = render_graphs([nested_graph, path(2)], OutputFormat.JSON)
    assert parse_graphs(text) == [nested_graph, path(2)]
    assert render_json(path(2)) == '{"n":2,"edges":[[1,2]]}'


@pytest.mark.parametrize("text", [
    "1 2\n",
    "n 3\n2 3\n1 2\n",
    "n 3\n1 4\n",
    "n 3\n1 2\n1 2\n",
    "n 3\n2 1\n",
    "n 0\n",
    "n 3\n1 2 3\n",
])
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        parse_edge_lists(text)


@pytest.mark.parametrize("text", [
    '{"n": 0, "edges": []}',
    '{"n": 3, "edges": [[2, 1]]}',
    '{"n": 3, "edges": [[1, 5]]}',
    '{"n": 3',
])
def test_json_errors(text):
    with pytest.raises(ParseError):
        parse_graphs(text)


def test_parse_graph_needs_exactly_one(nested_graph):
    assert parse_graph(render_edges(nested_graph)) == nested_graph
    with pytest.raises(ParseError):
        parse_graph("n 1\n\nn 2\n1 2\n")


def test_render_dot_places_vertices_on_one_rank():
    dot = render_dot(build_fast((3, 1, 1, 4)))
    assert dot.startswith("graph hvg {")
    assert "{ rank=same; 1 2 3 4 }" in dot
    assert "  1 -- 2;" in dot
    assert "  1 -- 4 [constraint=false];" in dot


def test_graph_document_model(reduction_graph):
    document = GraphDocument.from_graph(reduction_graph)
    assert document.n == 6
    assert document.to_graph() == reduction_graph


def test_error_detail_from_parse_error():
    detail = ErrorDetail.from_error(ParseError("unmatched ']'", position=2))
    assert detail.error_code == "parse_error"
    assert detail.error_type == "parse"
    assert detail.details == {"position": 2}
    size = ErrorDetail.from_error(SizeError("too large"))
    assert size.error_type == "size"
    assert size.details is None


def test_error_detail_fields_are_all_filled():
    detail = ErrorDetail.from_error(ParseError("bad token", line=3, column=7))
    assert detail.model_dump() == {
        "error_code": "parse_error",
        "error_type": "parse",
        "error_message": detail.error_message,
        "details": {"line": 3, "column": 7},
    }
