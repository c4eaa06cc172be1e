"""
精确组合数测试
"""

from math import comb

import pytest

from tools.combinatorics import (
    catalan,
    catalan_identity_check,
    catalan_identity_terms,
    schroder_large,
    schroder_little,
)
from tools.exceptions import DomainError


def test_catalan_values():
    assert [catalan(m) for m in range(10)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def test_catalan_closed_form():
    for m in range(40):
        assert catalan(m) == comb(2 * m, m) // (m + 1)


def test_large_schroder_values():
    assert [schroder_large(m) for m in range(7)] == [1, 2, 6, 22, 90, 394, 1806]


def test_little_schroder_values():
    assert [schroder_little(m) for m in range(7)] == [1, 1, 3, 11, 45, 197, 903]
    for m in range(1, 30):
        assert schroder_large(m) == 2 * schroder_little(m)


def test_catalan_identity():
    for m in range(21):
        assert catalan_identity_check(m)


def test_catalan_identity_terms():
    assert catalan_identity_terms(2) == [1]
    assert catalan_identity_terms(3) == [1, 3]
    assert catalan_identity_terms(1) == []


@pytest.mark.parametrize("func", [catalan, schroder_large, schroder_little, catalan_identity_check])
def test_negative_index(func):
    with pytest.raises(DomainError):
        func(-1)
