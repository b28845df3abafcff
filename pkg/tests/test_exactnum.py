from fractions import Fraction
from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from eisenstein2.exactnum import bernoulli, format_rational, parse_rational, pochhammer
from eisenstein2.forms import eisenstein_level1

from conftest import small_rationals


@pytest.mark.parametrize("k, expected", [(0, 1), (2, Fraction(1, 6)), (4, Fraction(-1, 30)),
                                         (12, Fraction(-691, 2730))])
def test_bernoulli_values(k, expected):
    assert bernoulli(k) == expected


@pytest.mark.parametrize("k", [-2, 1, 3, 7])
def test_bernoulli_domain(k):
    with pytest.raises(ValueError):
        bernoulli(k)


def test_bernoulli_convention_gives_240_and_504():
    assert eisenstein_level1(4, 2)[1] == 240
    assert eisenstein_level1(6, 2)[1] == -504


def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


@pytest.mark.parametrize("k", [2, 10, 30, 64, 66, 70, 90])
def test_bernoulli_von_staudt_clausen(k):
    # B_k + sum of 1/p over primes with (p-1) | k is an integer, inside and beyond the cache
    primes = [p for p in range(2, k + 2) if _is_prime(p) and k % (p - 1) == 0]
    assert (bernoulli(k) + sum(Fraction(1, p) for p in primes)).denominator == 1
    assert bernoulli(k).denominator == prod(primes)


@pytest.mark.parametrize("k", range(1, 41))
def test_bernoulli_recurrence(k):
    # odd-index values: B_1 = -1/2, others zero
    def b(j):
        if j == 1:
            return Fraction(-1, 2)
        return Fraction(0) if j % 2 else bernoulli(j)

    assert sum(comb(k + 1, j) * b(j) for j in range(k + 1)) == 0


@pytest.mark.parametrize("a, n, expected", [(Fraction(5, 2), 0, 1), (-1, 2, 0), (Fraction(1, 2), 2, Fraction(3, 4))])
def test_pochhammer_values(a, n, expected):
    assert pochhammer(a, n) == expected


@given(small_rationals, st.integers(0, 10), st.integers(0, 10))
def test_pochhammer_split(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


@given(small_rationals)
def test_rational_field_laws(a):
    assert a + (-a) == 0
    if a:
        assert a * (1 / a) == 1
    assert a.denominator > 0


def test_division_by_zero_is_error():
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / 0


@given(small_rationals)
def test_format_parse_roundtrip(a):
    assert parse_rational(format_rational(a)) == a


def test_parse_unicode_minus_and_rejects_decimals():
    assert parse_rational("−2048") == -2048
    with pytest.raises(ValueError):
        parse_rational("0.5")
