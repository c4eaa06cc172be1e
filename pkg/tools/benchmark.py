"""
构造算法性能测试模块

在随机游走输入和"先递减后尖峰"的最坏输入上比较按定义构造与单调栈构造的耗时，
每次测量都检查两种算法输出相同。
"""

import logging
import os
import time
from typing import Callable, List, Optional, Sequence

import numpy as np
import pandas as pd

from config import config
from .construct import build_fast, build_naive
from .exceptions import DomainError, InvalidSizeError
from .graph import Graph

logger = logging.getLogger(__name__)

ALGORITHMS = {
    "naive": build_naive,
    "fast": build_fast,
}


def random_walk(n: int, rng: np.random.Generator) -> List[float]:
    """标准正态步长的随机游走，平移到非负"""
    walk = np.cumsum(rng.standard_normal(n))
    return (walk - walk.min()).tolist()


def adversarial_sequence(n: int) -> List[int]:
    """
    严格递减序列末尾接一个最大值

    每个顶点都能看到末尾的尖峰，按定义构造的内层扫描都要走到序列末尾。
    """
    if n < 2:
        raise InvalidSizeError(f"adversarial input needs n >= 2, got {n}")
    return list(range(n - 1, 0, -1)) + [n]


def doubling_sizes(min_n: int, max_n: int) -> List[int]:
    """min_n, 2·min_n, 4·min_n, ... 直到 max_n"""
    if min_n < 1 or max_n < min_n:
        raise InvalidSizeError(f"invalid size range [{min_n}, {max_n}]")
    sizes = []
    n = min_n
    while n <= max_n:
        sizes.append(n)
        n *= 2
    return sizes


def _best_time(build: Callable[[Sequence], Graph], data: Sequence, repetitions: int):
    best, graph = None, None
    for _ in range(repetitions):
        started = time.perf_counter()
        graph = build(data)
        elapsed = time.perf_counter() - started
        best = elapsed if best is None else min(best, elapsed)
    return best, graph


def _measure(workload: str, data: Sequence, algorithms: Sequence[str], repetitions: int) -> List[dict]:
    rows = []
    reference: Optional[Graph] = None
    for name in algorithms:
        seconds, graph = _best_time(ALGORITHMS[name], data, repetitions)
        if reference is None:
            reference = graph
        elif graph != reference:
            logger.error(f"{name} disagrees with {algorithms[0]} on a {workload} input of length {len(data)}")
            raise DomainError(f"construction algorithms disagree on {workload} input, n={len(data)}")
        rows.append({"workload": workload, "algorithm": name, "n": len(data), "seconds": seconds})
    return rows


def run_benchmark(max_n: int, repetitions: int = 3, seed: Optional[int] = None,
                  min_n: Optional[int] = None, naive_max_n: Optional[int] = None,
                  adversarial_max_n: Optional[int] = None) -> pd.DataFrame:
    """
    运行性能测试

    Args:
        max_n: 随机游走输入的最大长度
        repetitions: 每个测量重复次数，取最短耗时
        seed: 随机种子，默认取 config.HVG_DEFAULT_SEED
        min_n: 最小长度，默认取 BENCH_CONFIG["min_n"]
        naive_max_n: 随机游走输入上按定义构造的长度上限
        adversarial_max_n: 最坏输入的长度上限

    Returns:
        列为 workload, algorithm, n, seconds, ratio 的 DataFrame；
        ratio 是同一算法、同一输入类型下相对上一个规模的耗时比
    """
    if repetitions < 1:
        raise DomainError(f"repetitions must be positive, got {repetitions}")
    settings = config.BENCH_CONFIG
    seed = config.HVG_DEFAULT_SEED if seed is None else seed
    min_n = min(settings["min_n"] if min_n is None else min_n, max_n)
    naive_max_n = settings["naive_max_n"] if naive_max_n is None else naive_max_n
    adversarial_max_n = settings["adversarial_max_n"] if adversarial_max_n is None else adversarial_max_n

    rng = np.random.default_rng(seed)
    rows: List[dict] = []
    for n in doubling_sizes(min_n, max_n):
        algorithms = ["naive", "fast"] if n <= naive_max_n else ["fast"]
        rows.extend(_measure("random-walk", random_walk(n, rng), algorithms, repetitions))
        if 2 <= n <= adversarial_max_n:
            rows.extend(_measure("adversarial", adversarial_sequence(n), ["naive", "fast"], repetitions))
        logger.info(f"bench n={n} done")

    table = pd.DataFrame(rows, columns=["workload", "algorithm", "n", "seconds"])
    table = table.sort_values(["workload", "algorithm", "n"], kind="stable").reset_index(drop=True)
    table["ratio"] = table.groupby(["workload", "algorithm"])["seconds"].transform(lambda s: s / s.shift(1))
    return table


def save_benchmark(table: pd.DataFrame, filename: str = "bench.csv", output_dir: Optional[str] = None) -> str:
    """把计时表写成CSV，返回文件路径"""
    output_dir = config.OUTPUT_DIR if output_dir is None else output_dir
    os.makedirs(output_dir, exist_ok=True)
    target = os.path.join(output_dir, filename)
    table.to_csv(target, index=False)
    logger.info(f"bench table written to {target}")
    return target
