"""
HVG构造工具模块

从数据序列构造水平可见图（HVG）：按定义的 O(N²) 构造、基于单调栈的 O(N)
构造、秩归一化，以及带时间戳序列的可见图（VG）构造。
"""

import logging
import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Iterable, List, Sequence, Tuple

from .exceptions import DomainError, InvalidSizeError, InvalidTimeError
from .graph import Edge, Graph

logger = logging.getLogger(__name__)

DataSequence = Tuple[Real, ...]


@dataclass(frozen=True)
class TimedSequence:
    """带时间戳的数据序列 (t_i, d_i)，时间严格递增"""

    times: Tuple[Real, ...]
    values: Tuple[Real, ...]

    def __post_init__(self):
        if len(self.times) != len(self.values):
            raise InvalidSizeError(
                f"got {len(self.times)} time stamps for {len(self.values)} values"
            )
        if not self.values:
            raise InvalidSizeError("timed sequence must not be empty")
        for k in range(1, len(self.times)):
            if not self.times[k - 1] < self.times[k]:
                raise InvalidTimeError(
                    f"time stamps must increase strictly, t_{k}={self.times[k - 1]} "
                    f"and t_{k + 1}={self.times[k]}"
                )

    @classmethod
    def from_values(cls, values: Iterable[Real]) -> "TimedSequence":
        """时间取 t_i = i"""
        values = tuple(values)
        return cls(tuple(range(1, len(values) + 1)), values)

    @classmethod
    def from_points(cls, points: Iterable[Tuple[Real, Real]]) -> "TimedSequence":
        points = list(points)
        return cls(tuple(p[0] for p in points), tuple(p[1] for p in points))

    def __len__(self) -> int:
        return len(self.values)


_PLAIN_TYPES = (int, float)


def _plainly_valid(sequence: Tuple) -> bool:
    """全部为 int/float 且有限非负时直接通过；否则交给逐项检查给出具体错误"""
    if not all(type(value) in _PLAIN_TYPES for value in sequence):
        return False
    try:
        total = math.fsum(sequence)
    except (OverflowError, ValueError):
        return False
    return math.isfinite(total) and min(sequence) >= 0


def ensure_sequence(values: Iterable[Real]) -> DataSequence:
    """
    校验数据序列

    Args:
        values: 非负实数序列

    Returns:
        元组形式的序列
    """
    sequence = tuple(values)
    if not sequence:
        raise InvalidSizeError("data sequence must contain at least one value")
    if _plainly_valid(sequence):
        return sequence
    for position, value in enumerate(sequence, start=1):
        if isinstance(value, bool) or not isinstance(value, Real):
            raise DomainError(f"entry {position} is not a number: {value!r}")
        if not math.isfinite(value):
            raise DomainError(f"entry {position} is not finite: {value!r}")
        if value < 0:
            raise DomainError(f"entry {position} is negative: {value!r}")
    return sequence


def rank_normalize(d: Sequence[Real]) -> Tuple[int, ...]:
    """
    秩归一化 Φ_N：第 i 项替换为不超过它的项数

    结果与原序列的HVG相同；当且仅当原序列各项互不相同时结果是 1..N 的排列。
    """
    sequence = ensure_sequence(d)
    ordered = sorted(sequence)
    return tuple(bisect_right(ordered, value) for value in sequence)


def build_naive(d: Sequence[Real]) -> Graph:
    """
    按定义构造HVG，最坏 O(N²)

    {i, j} 是边当且仅当所有 i < k < j 都满足 d_k < d_i 且 d_k < d_j。

    Args:
        d: 数据序列，先做秩归一化

    Returns:
        HVG
    """
    values = rank_normalize(d)
    n = len(values)
    edges: List[Edge] = []
    for i in range(n - 1):
        edges.append((i + 1, i + 2))
        left = values[i]
        between = values[i + 1]
        for j in range(i + 2, n):
            if between >= left:
                break
            if between < values[j]:
                edges.append((i + 1, j + 1))
            if values[j] > between:
                between = values[j]
    return Graph._trusted(n, edges, presorted=True)


def build_fast(d: Sequence[Real]) -> Graph:
    """
    单调栈构造HVG，均摊 O(N)

    从左到右扫描，栈中下标对应的值严格递减。新下标 j 弹出所有值小于 d_j 的
    下标并连边；若栈非空再与栈顶连边，栈顶值与 d_j 相等时它被 j 挡住，一并弹出。
    边按左端点分桶收集，桶内右端点随扫描递增，拼接后即为字典序。
    """
    values = ensure_sequence(d)
    n = len(values)
    later: List[List[int]] = [[] for _ in range(n + 1)]
    stack: List[int] = []
    for j, current in enumerate(values, start=1):
        while stack and values[stack[-1] - 1] < current:
            later[stack.pop()].append(j)
        if stack:
            top = stack[-1]
            later[top].append(j)
            if values[top - 1] == current:
                stack.pop()
        stack.append(j)
    edges = [(i, j) for i in range(1, n + 1) for j in later[i]]
    return Graph._trusted(n, edges, presorted=True)


def _exact(value: Real):
    return value if isinstance(value, int) else Fraction(value)


def build_vg(s: TimedSequence) -> Graph:
    """
    构造可见图（VG）

    {i, j} 是边当且仅当所有 t_i < t_k < t_j 的点严格位于 (t_i,d_i) 与 (t_j,d_j)
    连线下方。固定 i 向右扫描时，这等价于 i→j 的斜率严格大于之前所有 i→k 的斜率；
    斜率比较用交叉相乘的精确整数/有理数运算完成。

    Args:
        s: 时间严格递增的数据序列，保留原始取值

    Returns:
        VG，总是包含同一 d 序列的HVG
    """
    times = [_exact(t) for t in s.times]
    values = [_exact(v) for v in ensure_sequence(s.values)]
    n = len(values)
    edges: List[Edge] = []
    for i in range(n - 1):
        ti, di = times[i], values[i]
        # 当前最大斜率用 (rise, run) 表示，run > 0
        best_rise, best_run = None, None
        for j in range(i + 1, n):
            rise = values[j] - di
            run = times[j] - ti
            if best_rise is None or rise * best_run > best_rise * run:
                edges.append((i + 1, j + 1))
                best_rise, best_run = rise, run
    return Graph._trusted(n, edges)
