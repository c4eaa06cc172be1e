"""
HVG普查模块

穷举（暴力）与双射两种方式枚举 G_N 和 G_{N,≠}，以及度序列普查、最大邻居普查
和可见图（VG）的随机普查。暴力枚举可以按输入空间分片交给多个进程，合并结果
总是去重并排序，与进程数无关。
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, NamedTuple, Optional, Sequence, Set, Tuple

import numpy as np

from config import config
from .bijections import balanced_words, bracketings, psi_inv, toggle_top_edge, xi
from .construct import TimedSequence, build_fast, build_vg
from .exceptions import DomainError, SizeError
from .graph import Edge, Graph, degree_sequence, max_neighbor

logger = logging.getLogger(__name__)

BRUTE_FORCE = "brute-force"
BIJECTIVE = "bijective"

# 暴力枚举的硬上限：9! 个排列，8 个顶点上的全部序序型
DISTINCT_HARD_LIMIT = 9
ALL_HARD_LIMIT = 8
VG_HARD_LIMIT = 8

EdgeKey = Tuple[Edge, ...]


@dataclass(frozen=True)
class Census:
    """一次普查的结果：按规范边集顺序排列、两两不同的图"""

    n: int
    graphs: Tuple[Graph, ...]
    provenance: str

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def keys(self) -> FrozenSet[EdgeKey]:
        return frozenset(g.edges for g in self.graphs)

    def same_graphs(self, other: "Census") -> bool:
        return self.n == other.n and self.graphs == other.graphs


class DegreeCensus(NamedTuple):
    graphs: int
    sequences: int


@dataclass(frozen=True)
class VGCensusReport:
    """VG随机普查报告；搜索不是穷举的，结果只是下界"""

    n: int
    distinct: int
    trials: int
    last_new_trial: int
    seed: int
    low: int
    high: int
    exhaustive: bool = False


def _census(n: int, keys: Iterable[EdgeKey], provenance: str) -> Census:
    graphs = tuple(Graph._trusted(n, edges) for edges in sorted(set(keys)))
    return Census(n=n, graphs=graphs, provenance=provenance)


def _check_range(n: int, upper: int, label: str) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= upper:
        raise SizeError(f"{label} enumeration supports 1 <= n <= {upper}, got {n!r}")


def _run_shards(task: Callable, shards: Sequence[tuple], workers: Optional[int]) -> Set[EdgeKey]:
    """顺序或多进程执行分片任务，合并得到的边集键"""
    workers = config.HVG_WORKERS if workers is None else max(1, workers)
    merged: Set[EdgeKey] = set()
    if workers == 1 or len(shards) == 1:
        for args in shards:
            merged.update(task(*args))
        return merged
    with ProcessPoolExecutor(max_workers=workers) as executor:
        for keys in executor.map(task, *zip(*shards)):
            merged.update(keys)
    return merged


# ===================== 暴力枚举 =====================

def _distinct_shard(n: int, first: int) -> Set[EdgeKey]:
    """所有以 first 开头的 1..n 的排列"""
    others = [v for v in range(1, n + 1) if v != first]
    return {build_fast((first,) + rest).edges for rest in permutations(others)}


def _set_partitions(n: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """限制增长串形式的集合划分，以及划分的块数"""
    def extend(prefix: Tuple[int, ...], blocks: int):
        if len(prefix) == n:
            yield prefix, blocks
            return
        for block in range(blocks + 1):
            yield from extend(prefix + (block,), max(blocks, block + 1))

    yield from extend((), 0)


def dense_rank_sequences(n: int) -> Iterator[Tuple[int, ...]]:
    """
    [n]^n 中每种序型恰好一个代表：取值恰为 1..k 的序列（弱序）

    HVG只依赖各项之间的大小关系（含相等），因此这些代表给出的图集合
    与整个 [n]^n 相同。
    """
    for rgs, blocks in _set_partitions(n):
        for order in permutations(range(1, blocks + 1)):
            yield tuple(order[b] for b in rgs)


def _all_shard(n: int, shard: int, shards: int) -> Set[EdgeKey]:
    keys: Set[EdgeKey] = set()
    for index, (rgs, blocks) in enumerate(_set_partitions(n)):
        if index % shards != shard:
            continue
        for order in permutations(range(1, blocks + 1)):
            keys.add(build_fast([order[b] for b in rgs]).edges)
    return keys


def enumerate_distinct_bruteforce(n: int, workers: Optional[int] = None) -> Census:
    """
    遍历 1..n 的全部排列得到 G_{n,≠}

    Args:
        n: 顶点数，1 ≤ n ≤ 9
        workers: 进程数，默认取 config.HVG_WORKERS
    """
    _check_range(n, min(DISTINCT_HARD_LIMIT, config.HVG_MAX_DISTINCT_N), "distinct")
    started = time.perf_counter()
    keys = _run_shards(_distinct_shard, [(n, first) for first in range(1, n + 1)], workers)
    census = _census(n, keys, BRUTE_FORCE)
    logger.info(f"distinct brute-force census n={n}: {len(census)} graphs in {time.perf_counter() - started:.2f}s")
    return census


def enumerate_all_bruteforce(n: int, workers: Optional[int] = None) -> Census:
    """
    遍历 [n]^n 的全部序型得到 G_n

    Args:
        n: 顶点数，1 ≤ n ≤ 8
        workers: 进程数，默认取 config.HVG_WORKERS
    """
    _check_range(n, min(ALL_HARD_LIMIT, config.HVG_MAX_ALL_N), "all")
    started = time.perf_counter()
    workers = config.HVG_WORKERS if workers is None else max(1, workers)
    shards = [(n, shard, workers) for shard in range(workers)]
    keys = _run_shards(_all_shard, shards, workers)
    census = _census(n, keys, BRUTE_FORCE)
    logger.info(f"all brute-force census n={n}: {len(census)} graphs in {time.perf_counter() - started:.2f}s")
    return census


# ===================== 双射枚举 =====================

def enumerate_distinct_bijective(n: int) -> Census:
    """把 n-1 对括号的全部平衡括号串经 ψ⁻¹ 映射得到 G_{n,≠}"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SizeError(f"distinct bijective enumeration needs n >= 1, got {n!r}")
    census = _census(n, (psi_inv(word).edges for word in balanced_words(n - 1)), BIJECTIVE)
    logger.info(f"distinct bijective census n={n}: {len(census)} graphs")
    return census


def enumerate_all_bijective(n: int) -> Census:
    """
    长度 n-1 的全部括号化经 ξ 映射得到不含边 {1,n} 的HVG，再并上它们翻转
    边 {1,n} 后的像，得到 G_n。n = 2 时只有 ξ(x) = P_2。
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise SizeError(f"all bijective enumeration needs n >= 2, got {n!r}")
    without_top = [xi(b) for b in bracketings(n - 1)]
    keys = [g.edges for g in without_top]
    if n >= 3:
        keys.extend(toggle_top_edge(g).edges for g in without_top)
    census = _census(n, keys, BIJECTIVE)
    logger.info(f"all bijective census n={n}: {len(census)} graphs")
    return census


# ===================== 统计普查 =====================

def degree_census(n: int, workers: Optional[int] = None) -> DegreeCensus:
    """G_n 中图的个数与不同有序度序列的个数"""
    census = enumerate_all_bruteforce(n, workers)
    sequences = {degree_sequence(g) for g in census}
    return DegreeCensus(graphs=len(census), sequences=len(sequences))


def max_neighbor_census(n: int) -> Dict[int, int]:
    """G_{n,≠} 中按顶点1的最大邻居 s 分组的图数"""
    counts: Dict[int, int] = {}
    if n < 2:
        return counts
    for g in enumerate_distinct_bijective(n):
        s = max_neighbor(g, 1)
        counts[s] = counts.get(s, 0) + 1
    return dict(sorted(counts.items()))


def sample_vg_census(n: int, trials: int, seed: Optional[int] = None,
                     low: Optional[int] = None, high: Optional[int] = None,
                     patience: Optional[int] = None, chunk_size: int = 4096) -> VGCensusReport:
    """
    随机搜索 n 个顶点上的可见图

    取值在 [low, high] 上均匀抽取的整数序列，时间 t_i = i。重复的序列只构造一次。

    Args:
        n: 顶点数，1 ≤ n ≤ 8
        trials: 随机序列数上限
        seed: 随机种子，默认取 config.HVG_DEFAULT_SEED
        low: 取值下限，默认取 config.HVG_VG_MIN_VALUE
        high: 取值上限，默认取 config.HVG_VG_MAX_VALUE
        patience: 连续这么多次没有新图时提前停止
        chunk_size: 每批抽取的序列数

    Returns:
        VGCensusReport
    """
    _check_range(n, VG_HARD_LIMIT, "VG")
    if trials < 0:
        raise DomainError(f"trial budget must be non-negative, got {trials}")
    seed = config.HVG_DEFAULT_SEED if seed is None else seed
    low = config.HVG_VG_MIN_VALUE if low is None else low
    high = config.HVG_VG_MAX_VALUE if high is None else high
    if low < 0 or high < low:
        raise DomainError(f"invalid value range [{low}, {high}]")

    rng = np.random.default_rng(seed)
    seen_sequences: Set[Tuple[int, ...]] = set()
    graphs: Set[EdgeKey] = set()
    last_new = 0
    done = 0
    while done < trials:
        batch = rng.integers(low, high + 1, size=(min(chunk_size, trials - done), n))
        for row in batch.tolist():
            done += 1
            sequence = tuple(row)
            if sequence in seen_sequences:
                continue
            seen_sequences.add(sequence)
            key = build_vg(TimedSequence.from_values(sequence)).edges
            if key not in graphs:
                graphs.add(key)
                last_new = done
        if patience is not None and done - last_new >= patience:
            logger.info(f"VG census n={n}: no new graph for {done - last_new} trials, stopping")
            break

    logger.info(f"VG census n={n}: {len(graphs)} graphs after {done} trials (last new at {last_new})")
    return VGCensusReport(n=n, distinct=len(graphs), trials=done, last_new_trial=last_new,
                          seed=seed, low=low, high=high)
