"""
精确组合数模块

Catalan 数（Segner 递推）、大/小 Schröder 数以及 Catalan 数的一个求和恒等式，
全部使用 Python 的无界整数。
"""

import logging
from math import comb
from typing import List

from .exceptions import ArithmeticIntegrityError, DomainError

logger = logging.getLogger(__name__)

_catalan_table: List[int] = [1]
_large_schroder_table: List[int] = [1]


def _check_index(m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise DomainError(f"index must be a non-negative integer, got {m!r}")


def catalan(m: int) -> int:
    """
    第 m 个 Catalan 数

    Segner 递推：C_{k+1} = Σ_{i=0}^{k} C_i C_{k-i}
    """
    _check_index(m)
    table = _catalan_table
    while len(table) <= m:
        k = len(table) - 1
        table.append(sum(table[i] * table[k - i] for i in range(k + 1)))
    return table[m]


def schroder_large(m: int) -> int:
    """
    第 m 个大 Schröder 数

    r_0 = 1，r_{k+1} = r_k + Σ_{i=0}^{k} r_i r_{k-i}
    """
    _check_index(m)
    table = _large_schroder_table
    while len(table) <= m:
        k = len(table) - 1
        table.append(table[k] + sum(table[i] * table[k - i] for i in range(k + 1)))
    return table[m]


def schroder_little(m: int) -> int:
    """第 m 个小 Schröder 数：s_0 = 1，m ≥ 1 时 s_m = r_m / 2"""
    _check_index(m)
    if m == 0:
        return 1
    large = schroder_large(m)
    if large % 2:
        raise ArithmeticIntegrityError(f"large Schroeder number r_{m}={large} is odd")
    return large // 2


def catalan_identity_terms(m: int) -> List[int]:
    """
    恒等式右侧的各个求和项 3/(2k-3)·binom(2k-3, k)，k = 3..m+1

    每一项都必须是整数，否则抛出 ArithmeticIntegrityError。
    """
    _check_index(m)
    terms = []
    for k in range(3, m + 2):
        numerator = 3 * comb(2 * k - 3, k)
        quotient, remainder = divmod(numerator, 2 * k - 3)
        if remainder:
            raise ArithmeticIntegrityError(
                f"3*binom({2 * k - 3},{k}) = {numerator} is not divisible by {2 * k - 3}"
            )
        terms.append(quotient)
    return terms


def catalan_identity_check(m: int) -> bool:
    """验证 C_m = 1 + Σ_{k=3}^{m+1} 3/(2k-3)·binom(2k-3, k)"""
    right = 1 + sum(catalan_identity_terms(m))
    left = catalan(m)
    if left != right:
        logger.warning(f"Catalan identity fails at m={m}: {left} != {right}")
    return left == right
