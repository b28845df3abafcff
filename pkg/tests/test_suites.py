from fractions import Fraction

import pytest

from eisenstein2.diffring import eval_poly, rankin_cohen, serre_theta
from eisenstein2.forms import series_e, series_scriptQ
from eisenstein2.solutions import modular_solution_F
from eisenstein2.suites import SUITES, check_bracket1, check_bracket2, check_psi21_quotients, run_suite


@pytest.mark.parametrize("k", range(4, 22, 2))
def test_bracket_identities(k):
    assert check_bracket1(k, 60).passed
    assert check_bracket2(k, 60).passed


def test_bracket2_without_scriptQ_factor_fails():
    # weight k+6 on the right cannot match weight k+8 on the left
    k, order = 6, 40
    f = eval_poly(modular_solution_F(k), order)
    e, q = series_e(order), series_scriptQ(order)
    lhs = serre_theta((k - 2) * rankin_cohen(f, k, q, 4), k + 6) + 4 * serre_theta(rankin_cohen(f, k, e * e, 4), k + 6)
    rhs = Fraction((k - 4) * (k + 2), 2) * rankin_cohen(f, k, e, 2)
    assert lhs.first_difference(rhs, 0, order) is not None


def test_psi21_quotient_form():
    assert check_psi21_quotients(60).passed


@pytest.mark.parametrize("suite", [s for s in SUITES if s != "combinatorial"])
def test_suites_pass_and_mutations_fail(suite):
    good = run_suite(suite, 40)
    bad = run_suite(suite, 40, mutate=True)
    assert all(v.passed for v in good)
    assert not any(v.passed for v in bad)
    assert all(v.first_mismatch is not None for v in bad)


def test_combinatorial_suite_small():
    assert all(v.passed for v in run_suite("combinatorial", 40, max_n=300))
    assert not any(v.passed for v in run_suite("combinatorial", 40, mutate=True, max_n=300))
