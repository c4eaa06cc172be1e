"""
图结构工具模块

提供顶点为 1..N 的带标号图的值类型，以及HVG的结构谓词和统计量：
嵌套度、非嵌套顶点集、最大邻居、非交叉性、区间诱导子图、1-和、
加边/删边操作和有序度序列。
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from numbers import Integral
from typing import Dict, Iterable, List, Tuple

import networkx as nx

from .exceptions import (
    DomainError,
    InvalidEdgeError,
    InvalidIntervalError,
    InvalidSizeError,
    InvalidVertexError,
    NoNeighborError,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _is_integer(value) -> bool:
    return isinstance(value, Integral) and not isinstance(value, bool)


@dataclass(frozen=True, order=True)
class Graph:
    """
    顶点集为 1..n 的带标号无向图

    边集在构造时规范化：端点按 (小, 大) 排列、去重，并按字典序排序。
    两个图相等当且仅当顶点数和边集都相等（按带标号图比较，不做同构判定）。
    """

    n: int
    edges: Tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if not _is_integer(self.n) or self.n < 1:
            raise InvalidSizeError(f"graph needs at least one vertex, got n={self.n!r}")
        object.__setattr__(self, "n", int(self.n))

        normalized = set()
        for edge in self.edges:
            try:
                i, j = edge
            except (TypeError, ValueError):
                raise InvalidEdgeError(f"edge {edge!r} is not a pair of vertices") from None
            if not (_is_integer(i) and _is_integer(j)):
                raise InvalidEdgeError(f"edge {edge!r} must join integer vertices")
            i, j = int(i), int(j)
            if i == j:
                raise InvalidEdgeError(f"self-loop at vertex {i}")
            if i > j:
                i, j = j, i
            if i < 1 or j > self.n:
                raise InvalidEdgeError(f"edge {i}{j} has an endpoint outside 1..{self.n}")
            normalized.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def _trusted(cls, n: int, edges: Iterable[Edge], presorted: bool = False) -> "Graph":
        """
        跳过校验的内部构造器；调用方保证 i < j 且无重复

        presorted 为真时调用方还保证边已按字典序排列，不再排序。
        """
        graph = cls.__new__(cls)
        object.__setattr__(graph, "n", n)
        object.__setattr__(graph, "edges", tuple(edges) if presorted else tuple(sorted(edges)))
        return graph

    def to_networkx(self) -> nx.Graph:
        """转换为 networkx 图，顶点 1..n 全部保留（包括孤立点）"""
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """按顶点索引的有序邻接表，下标0占位"""
        buckets: List[List[int]] = [[] for _ in range(self.n + 1)]
        for i, j in self.edges:
            buckets[i].append(j)
            buckets[j].append(i)
        return tuple(tuple(sorted(b)) for b in buckets)

    @property
    def key(self) -> Tuple[int, Tuple[Edge, ...]]:
        """规范键，用于普查去重和排序"""
        return (self.n, self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self.edge_set

    def __repr__(self) -> str:
        body = ",".join(f"{i}{j}" if self.n < 10 else f"{i}-{j}" for i, j in self.edges)
        return f"Graph(n={self.n}, edges={{{body}}})"


@dataclass(frozen=True)
class NestingProfile:
    """每个顶点的嵌套度 d_nest(1..n)，按1起始下标访问"""

    degrees: Tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.degrees[v - 1]

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)


@dataclass(frozen=True)
class GraphStatistics:
    """图统计信息"""

    node_count: int
    edge_count: int
    degree_histogram: Dict[int, int]
    average_degree: float
    graph_density: float
    non_nested_count: int
    max_nesting_degree: int
    has_top_edge: bool


def _check_vertex(g: Graph, v: int) -> None:
    if not isinstance(v, int) or v < 1 or v > g.n:
        raise InvalidVertexError(f"vertex {v!r} is outside 1..{g.n}")


def path(n: int) -> Graph:
    """
    构造路径图 P_n

    Args:
        n: 顶点数，至少为1

    Returns:
        边集为 {i, i+1} (1 ≤ i ≤ n-1) 的图
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidSizeError(f"path needs n >= 1, got {n!r}")
    return Graph._trusted(n, ((i, i + 1) for i in range(1, n)))


def neighbors(g: Graph, v: int) -> Tuple[int, ...]:
    _check_vertex(g, v)
    return g.adjacency[v]


def nesting_degree(g: Graph, v: int) -> int:
    """顶点 v 的嵌套度：满足 i < v < j 的边 {i,j} 的数目"""
    _check_vertex(g, v)
    return sum(1 for i, j in g.edges if i < v < j)


def nesting_profile(g: Graph) -> NestingProfile:
    """
    一次差分扫描计算全部嵌套度，复杂度 O(N + |E|)

    Args:
        g: 任意图

    Returns:
        NestingProfile
    """
    diff = [0] * (g.n + 2)
    for i, j in g.edges:
        if j > i + 1:
            diff[i + 1] += 1
            diff[j] -= 1
    degrees = []
    running = 0
    for v in range(1, g.n + 1):
        running += diff[v]
        degrees.append(running)
    return NestingProfile(tuple(degrees))


def non_nested(g: Graph) -> List[int]:
    """嵌套度为0的顶点，递增排列；总是包含1和n"""
    profile = nesting_profile(g)
    return [v for v in range(1, g.n + 1) if profile[v] == 0]


def max_neighbor(g: Graph, i: int) -> int:
    """顶点 i 的最大邻居 m_G(i)"""
    _check_vertex(g, i)
    adjacent = g.adjacency[i]
    if not adjacent:
        raise NoNeighborError(f"vertex {i} has no neighbor")
    return adjacent[-1]


def is_non_crossing(g: Graph) -> bool:
    """
    判断图是否非交叉：不存在 i<j<k<l 使 {i,k} 与 {j,l} 同为边

    按 (左端点升序, 右端点降序) 扫描，栈中保存尚未结束的右端点。
    """
    stack: List[int] = []
    for a, b in sorted(g.edges, key=lambda e: (e[0], -e[1])):
        while stack and stack[-1] <= a:
            stack.pop()
        if stack and stack[-1] < b:
            return False
        stack.append(b)
    return True


def _slice(g: Graph, i: int, j: int) -> Graph:
    """顶点 i..j 上的诱导子图（允许 i == j），重新标号为 1..j-i+1"""
    shift = i - 1
    return Graph._trusted(
        j - i + 1,
        ((a - shift, b - shift) for a, b in g.edges if i <= a and b <= j),
    )


def induced_interval(g: Graph, i: int, j: int) -> Graph:
    """
    区间 [i, j] 上的诱导子图 G_[i,j]

    Args:
        g: 图
        i: 左端点
        j: 右端点，要求 1 ≤ i < j ≤ n

    Returns:
        重新标号为 1..(j-i+1) 的子图
    """
    if not (isinstance(i, int) and isinstance(j, int)) or not (1 <= i < j <= g.n):
        raise InvalidIntervalError(f"interval [{i}, {j}] is not a valid interval of 1..{g.n}")
    return _slice(g, i, j)


def one_sum(g: Graph, h: Graph) -> Graph:
    """
    1-和 G+H：把 g 的顶点 n(g) 与 h 的顶点1粘合

    h 的顶点 k (k ≥ 2) 编号为 n(g)+k-1。与单顶点图的1-和返回另一个加数本身。
    """
    shift = g.n - 1
    return Graph._trusted(
        g.n + h.n - 1,
        list(g.edges) + [(a + shift, b + shift) for a, b in h.edges],
    )


def one_sum_chain(pieces: Iterable[Graph]) -> Graph:
    result = None
    for piece in pieces:
        result = piece if result is None else one_sum(result, piece)
    if result is None:
        raise InvalidSizeError("one-sum chain needs at least one graph")
    return result


def decompose(g: Graph) -> List[Graph]:
    """按相邻非嵌套顶点切分出的1-和分量 G_[i_j, i_{j+1}]"""
    cut = non_nested(g)
    return [_slice(g, a, b) for a, b in zip(cut, cut[1:])]


def _with_edges(g: Graph, extra: Iterable[Edge]) -> Graph:
    return Graph._trusted(g.n, g.edge_set.union(extra))


def _without_edge(g: Graph, edge: Edge) -> Graph:
    return Graph._trusted(g.n, g.edge_set.difference({edge}))


def remove_edge(g: Graph, e: Edge) -> Graph:
    """
    删除一条非路径边

    Args:
        g: 图
        e: 待删除的边，不能是路径边 {i, i+1}

    Returns:
        删除后的图；若 g 是HVG则结果仍是HVG
    """
    i, j = sorted((int(e[0]), int(e[1])))
    if not g.has_edge(i, j):
        raise InvalidEdgeError(f"edge {i}{j} is not in the graph")
    if j == i + 1:
        raise InvalidEdgeError(f"edge {i}{j} is a path edge and cannot be removed")
    result = _without_edge(g, (i, j))
    _check_closure(g, result, f"removing {i}{j}")
    return result


def add_edge_non_nested(g: Graph, j: int, l: int) -> Graph:
    """
    在两个非交叉且非嵌套的顶点之间加边

    Args:
        g: 图
        j: 非嵌套顶点
        l: 非嵌套顶点，{j, l} 不能已是边

    Returns:
        加边后的图；若 g 是HVG则结果仍是HVG
    """
    a, b = sorted((int(j), int(l)))
    free = set(non_nested(g))
    if a == b or a not in free or b not in free:
        raise InvalidEdgeError(f"vertices {j} and {l} must be two distinct non-nested vertices")
    if g.has_edge(a, b):
        raise InvalidEdgeError(f"edge {a}{b} is already present")
    result = _with_edges(g, [(a, b)])
    _check_closure(g, result, f"adding {a}{b}")
    return result


def _check_closure(before: Graph, after: Graph, action: str) -> None:
    if is_hvg(before) and not is_hvg(after):
        logger.error(f"HVG closure violated when {action} on {before!r}")
        raise DomainError(f"{action} left the class of HVGs")


def remove_vertex(g: Graph, v: int) -> Graph:
    """删除顶点 v 及其关联边，其后的顶点编号减一"""
    _check_vertex(g, v)
    if g.n == 1:
        raise InvalidSizeError("cannot remove the only vertex")

    def relabel(u: int) -> int:
        return u - 1 if u > v else u

    return Graph._trusted(
        g.n - 1,
        ((relabel(a), relabel(b)) for a, b in g.edges if v not in (a, b)),
    )


def degree_sequence(g: Graph) -> Tuple[int, ...]:
    """有序度序列 (δ_1, ..., δ_n)"""
    return tuple(len(g.adjacency[v]) for v in range(1, g.n + 1))


def is_hvg(g: Graph) -> bool:
    """
    判断图是否为某个数据序列的HVG

    用嵌套度实现 d_i = N - d_nest(i) 构造数据序列再按定义重建；
    对HVG重建必然相等，对非HVG则没有任何序列能实现它。
    """
    from .construct import build_naive
    from .realize import nesting_realization

    return build_naive(nesting_realization(g)) == g


def graph_statistics(g: Graph) -> GraphStatistics:
    """
    获取图统计信息

    Returns:
        GraphStatistics
    """
    graph = g.to_networkx()
    histogram = nx.degree_histogram(graph)
    profile = nesting_profile(g)
    edge_count = graph.number_of_edges()
    return GraphStatistics(
        node_count=graph.number_of_nodes(),
        edge_count=edge_count,
        degree_histogram={d: count for d, count in enumerate(histogram) if count},
        average_degree=2 * edge_count / g.n,
        graph_density=nx.density(graph),
        non_nested_count=sum(1 for d in profile if d == 0),
        max_nesting_degree=max(profile),
        has_top_edge=g.n >= 3 and g.has_edge(1, g.n),
    )
