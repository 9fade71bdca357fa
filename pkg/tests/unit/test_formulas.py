"""Unit tests for the necklace counting formulas."""
import pytest
from sympy import divisors

from src.core.counting.formulas import (
    appendix_counts,
    brute_force_t_minus,
    brute_force_xi,
    gamma,
    lemma_alternating_holds,
    mobius,
    primitive_necklace_count,
    primitive_string_count,
    reflexive_primitive_count,
    t_minus_formula,
)
from src.utils.exceptions import DomainException

GAMMA = [1, 1, 1, 2, 3, 5, 9, 16, 28, 51]


def test_mobius():
    """Test the Moebius function on small values."""
    assert [mobius(m) for m in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    with pytest.raises(DomainException):
        mobius(0)


def _mobius_sum(n):
    return sum(mobius(d) for d in divisors(n))


def test_mobius_summation_small():
    """Test that mu summed over the divisors of n vanishes except at n = 1."""
    assert [_mobius_sum(n) for n in range(1, 501)] == [1] + [0] * 499


@pytest.mark.slow
def test_mobius_summation_to_ten_thousand():
    """Test the divisor sum of mu for every n up to 10^4."""
    assert all(_mobius_sum(n) == (1 if n == 1 else 0) for n in range(1, 10_001))


@pytest.mark.parametrize("n,expected", list(enumerate(GAMMA, start=1)))
def test_gamma(n, expected):
    """Test gamma_1..gamma_10."""
    assert gamma(n) == expected


def test_primitive_counts():
    """Test p_n and c_n."""
    assert [primitive_string_count(n) for n in range(1, 7)] == [2, 2, 6, 12, 30, 54]
    assert [primitive_necklace_count(n) for n in range(1, 7)] == [2, 1, 2, 3, 6, 9]


def test_reflexive_primitive_count():
    """Test xi_n against direct enumeration."""
    assert reflexive_primitive_count(4) == 4
    assert reflexive_primitive_count(5) == 0
    assert reflexive_primitive_count(2) == 2
    for n in range(1, 11):
        assert reflexive_primitive_count(n) == brute_force_xi(n)


def test_t_minus():
    """Test necklaces with an odd number of 1s."""
    assert t_minus_formula(3) == t_minus_formula(4) == 2
    assert t_minus_formula(6) == 6
    for n in range(1, 11):
        assert t_minus_formula(n) == brute_force_t_minus(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_alternating_lemma(n):
    """Test the characterization of non-primitive s' i(s')."""
    assert lemma_alternating_holds(n)


def test_appendix_counts_n4():
    """Test the report for n = 4."""
    report = appendix_counts(4)
    assert (report.p, report.c, report.xi) == (12, 3, 4)
    assert (report.epsilon, report.delta, report.gamma) == (1, 1, 2)
    assert report.consistent
    assert "half_c_equals_gamma" not in report.verdicts


def test_appendix_counts_odd_n():
    """Test that odd n relates gamma to half the primitive necklaces."""
    report = appendix_counts(7, brute_force=False)
    assert report.xi == 0
    assert report.verdicts["half_c_equals_gamma"]
    assert "xi_matches_brute_force" not in report.verdicts
    assert report.consistent
