"""
HVG实现工具模块

由图反求数据序列：按嵌套度排序得到的标准序列（用于互异取值的实现），
以及对任意HVG成立的嵌套度实现 d_i = N - d_nest(i)。
"""

import logging
from typing import List, Tuple

from .construct import build_fast
from .exceptions import NotRealizableError
from .graph import Graph, is_hvg, nesting_profile

logger = logging.getLogger(__name__)


def _standard_order(g: Graph) -> List[int]:
    """按嵌套度降序排列顶点，嵌套度相同时编号大的在前"""
    profile = nesting_profile(g)
    return sorted(range(1, g.n + 1), key=lambda v: (-profile[v], -v))


def _standard_values(g: Graph) -> Tuple[int, ...]:
    values = [0] * g.n
    for rank, vertex in enumerate(_standard_order(g), start=1):
        values[vertex - 1] = rank
    return tuple(values)


def _require_hvg(g: Graph) -> None:
    if not is_hvg(g):
        logger.warning(f"rejecting non-HVG input {g!r}")
        raise NotRealizableError(f"graph on {g.n} vertices is not a horizontal visibility graph")


def standard_sequence(g: Graph) -> Tuple[int, ...]:
    """
    计算HVG的标准序列

    排在第 r 位的顶点取值 r，因此嵌套度最大的顶点取值最小，顶点1总取值 N。
    对 G_{N,≠} 中的图，该序列实现 g；对其他HVG它仍有定义，但重建结果不同。

    Args:
        g: HVG

    Returns:
        1..N 的排列 (d_1, ..., d_N)
    """
    _require_hvg(g)
    return _standard_values(g)


def nesting_realization(g: Graph) -> Tuple[int, ...]:
    """
    嵌套度实现：d_i = N - d_nest(i)

    对任意图都有定义；当 g 是HVG时它实现 g，且 d_1 = N。
    """
    return tuple(g.n - depth for depth in nesting_profile(g))


def is_distinct_realizable(g: Graph) -> bool:
    """判断HVG能否由互异取值的序列实现（是否属于 G_{N,≠}）"""
    _require_hvg(g)
    return build_fast(_standard_values(g)) == g
