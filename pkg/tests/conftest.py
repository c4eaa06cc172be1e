"""
测试共享夹具

普查结果在整个测试会话中只计算一次。
"""

import pytest

from tools.construct import build_fast
from tools.enumeration import enumerate_all_bruteforce, enumerate_distinct_bruteforce
from tools.graph import Graph, path

CENSUS_MAX_N = 7


def graph_from(n, *pairs):
    """path(n) 加上额外的边，边写成两位数字或 (i, j)"""
    extra = [divmod(p, 10) if isinstance(p, int) else p for p in pairs]
    return Graph(n, list(path(n).edges) + extra)


@pytest.fixture
def make_graph():
    return graph_from


@pytest.fixture(scope="session")
def distinct_censuses():
    return {n: enumerate_distinct_bruteforce(n, workers=1) for n in range(1, CENSUS_MAX_N + 1)}


@pytest.fixture(scope="session")
def all_censuses():
    return {n: enumerate_all_bruteforce(n, workers=1) for n in range(1, CENSUS_MAX_N + 1)}


# 只被 slow 测试使用
@pytest.fixture(scope="session")
def distinct_census_eight():
    return enumerate_distinct_bruteforce(8)


@pytest.fixture(scope="session")
def all_census_eight():
    return enumerate_all_bruteforce(8)


@pytest.fixture
def tied_graph():
    """HVG(3,1,1,4)：最小的不能由互异取值实现的HVG"""
    return build_fast((3, 1, 1, 4))


@pytest.fixture
def nested_graph():
    return graph_from(7, 15, 24, 25, 57)


@pytest.fixture
def psi_example_graph():
    return graph_from(10, 16, 17, 24, 25, 26, 79, (7, 10))


@pytest.fixture
def reduction_graph():
    return graph_from(6, 14, 24, 46)


@pytest.fixture
def xi_example_graph():
    return graph_from(9, 13, 36, 39, 79)
