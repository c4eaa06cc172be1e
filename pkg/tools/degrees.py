"""
有序度序列重建模块

G_{N,≠} 中的HVG由其有序度序列唯一确定。重建算法反复删除最小的可删除内部2，
记录删除时对应的两条边，直到剩下 (1,2,...,2,1)，再把幸存顶点连成路径。
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .exceptions import (
    DomainError,
    InvalidDegreeSequenceError,
    InvalidSizeError,
    InvalidVertexError,
    NotRealizableError,
)
from .graph import Edge, Graph, degree_sequence, remove_vertex
from .realize import is_distinct_realizable

logger = logging.getLogger(__name__)

DegreeSequence = Tuple[int, ...]


@dataclass(frozen=True)
class ReductionStep:
    """一次删除：被删除顶点的原始编号和由此记录的两条边"""

    removed: int
    edges: Tuple[Edge, Edge]


@dataclass(frozen=True)
class ReductionTrace:
    """完整的删除过程和最终链上的内部顶点 j_1 < ... < j_k（原始编号）"""

    n: int
    steps: Tuple[ReductionStep, ...]
    chain: Tuple[int, ...]

    @property
    def chain_edges(self) -> List[Edge]:
        if self.n == 1:
            return []
        stops = [1, *self.chain, self.n]
        return list(zip(stops, stops[1:]))

    @property
    def edges(self) -> List[Edge]:
        collected = [edge for step in self.steps for edge in step.edges]
        return collected + self.chain_edges


def ensure_degree_sequence(deltas: Iterable[int]) -> DegreeSequence:
    """校验度序列的基本形状：N=1 时为 (0)，否则两端至少为1且总和为偶数"""
    sequence = tuple(deltas)
    if not sequence:
        raise InvalidSizeError("degree sequence must not be empty")
    for position, value in enumerate(sequence, start=1):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise InvalidDegreeSequenceError(f"entry {position} is not a non-negative integer: {value!r}")
    if len(sequence) == 1:
        if sequence != (0,):
            raise InvalidDegreeSequenceError("a single vertex has degree 0")
        return sequence
    if sequence[0] < 1 or sequence[-1] < 1:
        raise InvalidDegreeSequenceError("end vertices must have degree at least 1")
    if sum(sequence) % 2:
        raise InvalidDegreeSequenceError(f"degree sum {sum(sequence)} is odd")
    return sequence


def _is_base(deltas: Sequence[int]) -> bool:
    if len(deltas) == 1:
        return deltas[0] == 0
    return deltas[0] == 1 and deltas[-1] == 1 and all(d == 2 for d in deltas[1:-1])


def select_removable_two(deltas: Sequence[int]) -> int:
    """
    选出下一个可删除的内部2（1起始位置）

    δ_2 = 2 且 δ_1 ≠ 1 时取位置2（此时 13 是边）；否则取最小的 3 ≤ i ≤ N-1，
    使 δ_i = 2 且 δ_{i-1} ≥ 3（此时 (i-1)(i+1) 是边）。

    Args:
        deltas: 不等于 (1,2,...,2,1) 且长度至少为3的度序列

    Returns:
        位置 i
    """
    if len(deltas) < 3 or _is_base(deltas):
        raise DomainError("selection needs a sequence of length >= 3 other than (1,2,...,2,1)")
    if deltas[1] == 2 and deltas[0] != 1:
        return 2
    for i in range(3, len(deltas)):
        if deltas[i - 1] == 2 and deltas[i - 2] >= 3:
            return i
    raise InvalidDegreeSequenceError(
        f"no removable inner vertex of degree 2 in {tuple(deltas)}"
    )


def trace_reduction(deltas: Iterable[int]) -> ReductionTrace:
    """
    执行删除过程并记录每一步

    Returns:
        ReductionTrace，边全部使用原始编号
    """
    sequence = ensure_degree_sequence(deltas)
    current = list(sequence)
    labels = list(range(1, len(sequence) + 1))
    steps: List[ReductionStep] = []

    while not _is_base(current):
        if len(current) < 3:
            raise InvalidDegreeSequenceError(
                f"{sequence} reduces to {tuple(current)}, which is not a path"
            )
        position = select_removable_two(current)
        index = position - 1
        left, middle, right = labels[index - 1], labels[index], labels[index + 1]
        steps.append(ReductionStep(removed=middle, edges=((left, middle), (middle, right))))
        logger.debug(f"removing original vertex {middle} (current position {position})")

        current[index - 1] -= 1
        current[index + 1] -= 1
        if current[index - 1] < 1 or current[index + 1] < 1:
            raise InvalidDegreeSequenceError(
                f"removing vertex {middle} drives a neighbor degree below 1"
            )
        del current[index]
        del labels[index]

    return ReductionTrace(n=len(sequence), steps=tuple(steps), chain=tuple(labels[1:-1]))


def from_degree_sequence(deltas: Iterable[int]) -> Graph:
    """
    由有序度序列重建 G_{N,≠} 中唯一的HVG

    删除过程走不通或最终校验失败（度序列不符、不是HVG、不能由互异取值实现）时
    抛出 InvalidDegreeSequenceError。

    Args:
        deltas: 有序度序列

    Returns:
        Graph
    """
    trace = trace_reduction(deltas)
    sequence = ensure_degree_sequence(deltas)
    graph = Graph(trace.n, trace.edges)

    if degree_sequence(graph) != sequence:
        raise InvalidDegreeSequenceError(f"{sequence} is not the degree sequence of the reconstructed graph")
    try:
        realizable = is_distinct_realizable(graph)
    except NotRealizableError:
        realizable = False
    if not realizable:
        raise InvalidDegreeSequenceError(
            f"{sequence} is not the ordered degree sequence of any HVG with distinct data"
        )
    return graph


def remove_degree_two_vertex(g: Graph, i: int) -> Graph:
    """
    删除一个度为2且两个邻居相邻的内部顶点

    Args:
        g: 图
        i: 满足 δ_i = 2 且 {i-1, i+1} 是边的内部顶点

    Returns:
        删除并重新标号后的图
    """
    if not isinstance(i, int) or not 2 <= i <= g.n - 1:
        raise InvalidVertexError(f"vertex {i!r} is not an inner vertex of 1..{g.n}")
    if g.adjacency[i] != (i - 1, i + 1) or not g.has_edge(i - 1, i + 1):
        raise InvalidVertexError(f"vertex {i} does not have degree 2 with adjacent neighbors")
    return remove_vertex(g, i)
