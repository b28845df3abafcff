import pytest

from eisenstein2.diffring import E_, P_, Q_
from eisenstein2.forms import series_psi_theta, series_scriptP, series_scriptQ
from eisenstein2.series import LaurentSeries
from eisenstein2.triangular import g2k_poly, t2k_series, verify_theorem4


def test_t2k_examples():
    assert t2k_series(1, 7).series.coefficients(0, 7) == [1, 9, 0, 25, 0, 0, 49]
    assert t2k_series(2, 4).series.coefficients(0, 4) == [1, 81, 0, 625]
    assert all(t2k_series(k, 10).series[2] == 0 for k in range(1, 6))


def test_g_examples():
    assert g2k_poly(1) == P_
    assert g2k_poly(2) == 3 * P_**2 - 2 * Q_
    assert g2k_poly(3) == 15 * P_**3 - 30 * P_ * Q_ + 16 * E_ * Q_


@pytest.mark.parametrize("k", range(1, 9))
def test_theorem4(k):
    v = verify_theorem4(k, 100)
    assert v.passed, v.line()
    assert g2k_poly(k).is_homogeneous(2 * k)


def test_theorem4_negative_control():
    psi = series_psi_theta(100) + LaurentSeries.monomial(1, 1, 100)
    v = verify_theorem4(1, 100, psi=psi)
    assert not v.passed and v.first_mismatch == 1


def test_low_rows_order_200():
    psi = series_psi_theta(200)
    p, qq = series_scriptP(200), series_scriptQ(200)
    assert t2k_series(1, 200).series == p * psi
    assert t2k_series(2, 200).series == (3 * p * p - 2 * qq) * psi
    assert 8 * psi.theta() == t2k_series(1, 200).series - psi


@pytest.mark.parametrize("k", range(1, 7))
def test_recurrence_in_k(k):
    a, b = t2k_series(k, 100).series, t2k_series(k + 1, 100).series
    assert 8 * a.theta() == b - a
