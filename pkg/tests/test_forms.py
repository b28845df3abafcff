from fractions import Fraction

import pytest

from eisenstein2 import forms
from eisenstein2.forms import (
    DivisorTable,
    eisenstein_level1,
    eisenstein_level2,
    series_D,
    series_e,
    series_e_odd,
    series_j2,
    series_P,
    series_psi_product,
    series_psi_theta,
    series_Q,
    series_R,
    series_scriptP,
    series_scriptQ,
    sigma,
    wt,
)
from eisenstein2.series import lambert, psi_double_sum


def coeffs(f, n):
    return f.coefficients(0, n)


@pytest.mark.parametrize("s, n, expected", [(1, 1, 1), (1, 6, 12), (3, 2, 9), (1, 0, 0), (1, -3, 0),
                                            (1, Fraction(3, 2), 0)])
def test_sigma(s, n, expected):
    assert sigma(s, n) == expected


@pytest.mark.parametrize("s, n, expected", [(1, 1, 1), (1, 4, -5), (3, 2, -7), (2, 0, 0)])
def test_wt(s, n, expected):
    assert wt(s, n) == expected


@pytest.mark.parametrize("s", range(0, 6))
def test_wt_from_sigma(s):
    # wt_s(n) = sigma_s(n) - 2^(s+1) sigma_s(n/2), with sigma of a non-integer = 0
    table_w = DivisorTable.build(s, 10**4, alternating=True)
    table_s = DivisorTable.build(s, 10**4)
    for n in range(1, 10**4 + 1):
        half = table_s[n // 2] if n % 2 == 0 else 0
        assert table_w[n] == table_s[n] - 2 ** (s + 1) * half


def test_sieve_matches_trial_division():
    t = DivisorTable.build(3, 300, alternating=True)
    assert all(t[n] == wt(3, n) for n in range(1, 301))
    assert t[0] == 0


def test_level1_examples():
    assert coeffs(series_P(3), 3) == [1, -24, -72]
    assert coeffs(series_Q(3), 3) == [1, 240, 2160]
    assert coeffs(series_R(2), 2) == [1, -504]
    assert eisenstein_level1(4, 30) == series_Q(30)
    assert eisenstein_level1(6, 30) == series_R(30)
    assert coeffs(eisenstein_level1(2, 2), 2) == [1, -24]
    with pytest.raises(ValueError):
        eisenstein_level1(5, 4)


def test_level2_examples():
    assert coeffs(series_scriptP(5), 5) == [1, 8, -8, 32, -40]
    assert coeffs(series_e(5), 5) == [1, 24, 24, 96, 24]
    assert coeffs(series_scriptQ(5), 5) == [1, -16, 112, -448, 1136]
    assert eisenstein_level2(4, 40) == series_scriptQ(40)
    assert eisenstein_level2(2, 40) == series_scriptP(40)
    assert coeffs(eisenstein_level2(6, 2), 2) == [1, 8]
    with pytest.raises(ValueError):
        eisenstein_level2(7, 4)


def test_scriptP_is_8_wt():
    p = series_scriptP(201)
    assert all(p[n] == 8 * wt(1, n) for n in range(1, 201))


def test_psi_examples_and_forms():
    assert coeffs(series_psi_theta(7), 7) == [1, 1, 0, 1, 0, 0, 1]
    assert coeffs(series_psi_theta(2), 2) == [1, 1]
    assert series_psi_theta(11)[10] == 1
    assert series_psi_theta(200) == series_psi_product(200)


def test_D_expansion():
    d = series_D(6)
    assert d.valuation == 1
    assert d.coefficients(0, 5) == [0, 1, 8, 28, 64]
    # oracle: coefficient of q^n in D is sum of d^3 over d | n with n/d odd
    oracle = sum(d3**3 for d3 in range(1, 6) if 5 % d3 == 0 and (5 // d3) % 2)
    assert d[5] == oracle == 126
    assert series_D(40) == (series_e(40) ** 2 - series_scriptQ(40)) / 64


def test_j2_expansion():
    j = series_j2(3)
    assert j.valuation == -1
    assert j.coefficients(-1, 3) == [1, 40, 276, -2048]
    assert (j - 40)[0] == 0


def test_alt_e_form():
    assert series_e(100) == series_e_odd(100)


def test_P_from_level2():
    assert series_P(200) == 3 * series_scriptP(200) - 2 * series_e(200)


@pytest.mark.parametrize("s", range(0, 7))
def test_psi1s_quotient_form(s):
    order = 60
    total = psi_double_sum(1, s, order) * 0
    from eisenstein2.series import LaurentSeries

    for n in range(1, order):
        den = LaurentSeries.from_dict({0: 1, n: -1}, order) ** 2
        term = LaurentSeries.monomial((-1) ** (n - 1) * n**s, n, order) * den.invert(order)
        total = total + term.truncate(order)
    assert total == psi_double_sum(1, s, order)


@pytest.mark.parametrize("r", range(0, 6))
def test_theta_of_psi_sums(r):
    assert psi_double_sum(0, r, 60).theta() == psi_double_sum(1, r + 1, 60)
    assert psi_double_sum(r, 0, 60).theta() == psi_double_sum(r + 1, 1, 60)


def test_registry():
    assert forms.lookup("D")(5) == series_D(5)
    assert forms.lookup("E2:8")(10) == eisenstein_level2(8, 10)
    assert forms.lookup("Psi:0:3")(10) == psi_double_sum(0, 3, 10)
    assert forms.lookup("Phi:0:1")(10) == lambert(1, False, 10)
    for bad in ("nope", "E2:x", "Psi:1"):
        with pytest.raises((KeyError, ValueError)):
            forms.lookup(bad)
