"""
性能测试模块的测试
"""

import os

import numpy as np
import pandas as pd
import pytest

from tools.benchmark import adversarial_sequence, doubling_sizes, random_walk, run_benchmark, save_benchmark
from tools.construct import build_fast
from tools.exceptions import InvalidSizeError


def test_random_walk_is_non_negative():
    walk = random_walk(500, np.random.default_rng(0))
    assert len(walk) == 500
    assert min(walk) == 0.0


def test_adversarial_sequence_sees_the_spike():
    data = adversarial_sequence(6)
    assert data == [5, 4, 3, 2, 1, 6]
    g = build_fast(data)
    assert all(g.has_edge(i, 6) for i in range(1, 6))
    with pytest.raises(InvalidSizeError):
        adversarial_sequence(1)


def test_doubling_sizes():
    assert doubling_sizes(1000, 8000) == [1000, 2000, 4000, 8000]
    assert doubling_sizes(100, 150) == [100]
    with pytest.raises(InvalidSizeError):
        doubling_sizes(10, 5)


def test_run_benchmark_table():
    table = run_benchmark(400, repetitions=1, seed=1, min_n=100, naive_max_n=200, adversarial_max_n=200)
    assert list(table.columns) == ["workload", "algorithm", "n", "seconds", "ratio"]
    walk = table[table["workload"] == "random-walk"]
    assert sorted(walk[walk["algorithm"] == "fast"]["n"]) == [100, 200, 400]
    assert sorted(walk[walk["algorithm"] == "naive"]["n"]) == [100, 200]
    adversarial = table[table["workload"] == "adversarial"]
    assert len(adversarial) == 4
    assert (table["seconds"] >= 0).all()
    for _, group in table.groupby(["workload", "algorithm"]):
        assert pd.isna(group["ratio"].iloc[0])


def test_save_benchmark(tmp_path):
    table = run_benchmark(50, repetitions=1, seed=0, min_n=50)
    target = save_benchmark(table, output_dir=str(tmp_path))
    assert os.path.exists(target)
    assert target.endswith("bench.csv")
