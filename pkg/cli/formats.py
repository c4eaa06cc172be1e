"""
文件格式模块

序列文件（每行一个序列，数字以逗号或空白分隔，'#' 开头的行是注释）与图文档
（边列表文本、JSON、DOT）的解析和渲染。边列表是规范的交换格式：首行 "n <N>"，
其后每行一条边 "i j"，i < j，按字典序严格递增。
"""

import json
import logging
import re
from fractions import Fraction
from numbers import Real
from typing import Iterator, List, Optional, Tuple

from pydantic import ValidationError

from tools.exceptions import HVGError, ParseError
from tools.graph import Graph
from .models import GraphDocument, OutputFormat

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"[^,\s]+")
_DECIMAL = re.compile(r"\d+(?:\.\d+)?")
_INTEGER = re.compile(r"\d+")


def _tokens(line: str) -> Iterator[Tuple[int, str]]:
    """行内的 (1起始列号, 记号)"""
    for match in _TOKEN.finditer(line):
        yield match.start() + 1, match.group()


def _is_comment(line: str) -> bool:
    return line.lstrip().startswith("#")


def parse_number(token: str, line: Optional[int] = None, column: Optional[int] = None) -> Real:
    """非负十进制数：整数返回 int，带小数点的返回精确的 Fraction"""
    if not _DECIMAL.fullmatch(token):
        raise ParseError(f"{token!r} is not a non-negative decimal number", line=line, column=column)
    return int(token) if _INTEGER.fullmatch(token) else Fraction(token)


def parse_series(text: str) -> List[Tuple[Real, ...]]:
    """
    解析序列文件

    Args:
        text: 文件内容

    Returns:
        每个数据行对应一个序列

    Raises:
        ParseError: 空行、非法数字或没有任何序列，带行号和列号
    """
    sequences = []
    for number, line in enumerate(text.splitlines(), start=1):
        if _is_comment(line):
            continue
        if not line.strip():
            raise ParseError("empty line", line=number, column=1)
        sequences.append(tuple(parse_number(token, number, column) for column, token in _tokens(line)))
    if not sequences:
        raise ParseError("input contains no sequence", line=1, column=1)
    return sequences


def parse_integers(text: str) -> Tuple[int, ...]:
    """以逗号或空白分隔的非负整数，用于度序列"""
    values = []
    for number, line in enumerate(text.splitlines(), start=1):
        if _is_comment(line):
            continue
        for column, token in _tokens(line):
            if not _INTEGER.fullmatch(token):
                raise ParseError(f"{token!r} is not a non-negative integer", line=number, column=column)
            values.append(int(token))
    if not values:
        raise ParseError("input contains no integer", line=1, column=1)
    return tuple(values)


def _parse_edge_block(header: Tuple[int, str], rows: List[Tuple[int, str]]) -> Graph:
    number, line = header
    parts = list(_tokens(line))
    if len(parts) != 2 or parts[0][1] != "n" or not _INTEGER.fullmatch(parts[1][1]):
        raise ParseError("expected header 'n <N>'", line=number, column=1)
    n = int(parts[1][1])
    if n < 1:
        raise ParseError("graph needs at least one vertex", line=number, column=parts[1][0])

    edges = []
    for number, line in rows:
        parts = list(_tokens(line))
        if len(parts) != 2:
            raise ParseError("expected an edge 'i j'", line=number, column=1)
        for column, token in parts:
            if not _INTEGER.fullmatch(token):
                raise ParseError(f"{token!r} is not a vertex label", line=number, column=column)
        i, j = int(parts[0][1]), int(parts[1][1])
        if not 1 <= i < j <= n:
            raise ParseError(f"edge {i} {j} violates 1 <= i < j <= {n}", line=number, column=parts[0][0])
        if edges and (i, j) <= edges[-1]:
            raise ParseError(f"edge {i} {j} is out of lexicographic order", line=number, column=parts[0][0])
        edges.append((i, j))
    return Graph(n, edges)


def parse_edge_lists(text: str) -> List[Graph]:
    """解析一个或多个边列表，每个图以 "n <N>" 开头；空行和注释行被忽略"""
    blocks: List[Tuple[Tuple[int, str], List[Tuple[int, str]]]] = []
    for number, line in enumerate(text.splitlines(), start=1):
        if _is_comment(line) or not line.strip():
            continue
        if line.split()[0] == "n":
            blocks.append(((number, line), []))
        elif not blocks:
            raise ParseError("edge list must start with 'n <N>'", line=number, column=1)
        else:
            blocks[-1][1].append((number, line))
    if not blocks:
        raise ParseError("input contains no graph", line=1, column=1)
    return [_parse_edge_block(header, rows) for header, rows in blocks]


def parse_json_documents(text: str) -> List[Graph]:
    """每个非空行一个 {"n": N, "edges": [[i, j], ...]} 文档"""
    graphs = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(GraphDocument.model_validate_json(line).to_graph())
        except ValidationError as e:
            raise ParseError(f"invalid graph document: {e.errors()[0]['msg']}", line=number, column=1)
        except HVGError as e:
            raise ParseError(e.message, line=number, column=1)
    if not graphs:
        raise ParseError("input contains no graph", line=1, column=1)
    return graphs


def parse_graphs(text: str) -> List[Graph]:
    """按首个非空字符自动识别 JSON 文档或边列表"""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json_documents(text)
    return parse_edge_lists(text)


def parse_graph(text: str) -> Graph:
    """恰好包含一个图的图文档"""
    graphs = parse_graphs(text)
    if len(graphs) != 1:
        raise ParseError(f"expected one graph, found {len(graphs)}", line=1, column=1)
    return graphs[0]


# ===================== 渲染 =====================

def render_edges(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines)


def render_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}, separators=(",", ":"))


def render_dot(g: Graph, name: str = "hvg") -> str:
    """
    DOT 输出

    所有顶点放在同一水平层上按编号排列，路径边画成直线，其余的边从上方绕过。
    """
    vertices = " ".join(str(v) for v in range(1, g.n + 1))
    lines = [
        f"graph {name} {{",
        "  node [shape=circle];",
        f"  {{ rank=same; {vertices} }}",
    ]
    for i, j in g.edges:
        style = "" if j == i + 1 else " [constraint=false]"
        lines.append(f"  {i} -- {j}{style};")
    lines.append("}")
    return "\n".join(lines)


def render_graph(g: Graph, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return render_json(g)
    if fmt == OutputFormat.DOT:
        return render_dot(g)
    return render_edges(g)


def render_graphs(graphs: List[Graph], fmt: OutputFormat) -> str:
    """多个图：JSON 每行一个文档，其余格式以空行分隔"""
    separator = "\n" if fmt == OutputFormat.JSON else "\n\n"
    return separator.join(render_graph(g, fmt) for g in graphs)


def render_sequence(values) -> str:
    return " ".join(str(v) for v in values)
