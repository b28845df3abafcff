"""Identity suites driven by the ``verify`` command and the acceptance tests.

Every check is a module-level function ``check(order, mutate=False, **params)``
returning a :class:`Verdict`.  With ``mutate=True`` one coefficient on the
right-hand side is bumped (at ``mutation_exponent(order)``) so the check must
fail there; this is the negative control.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Callable

from .checks import Verdict
from .combinatorics import enumerate_AB, parity_exception, theorem5_lhs, theorem5_rhs
from .diffring import (
    E_,
    P_,
    Q_,
    WeightedPoly,
    eval_poly,
    rankin_cohen,
    serre_theta,
)
from .discovery import TABLE1, first_mismatch, solve_relation
from .forms import (
    DivisorTable,
    series_D,
    series_e,
    series_e_odd,
    series_P,
    series_psi_theta,
    series_Q,
    series_R,
    series_scriptP,
    series_scriptQ,
)
from .series import LaurentSeries, product_expand, psi_double_sum
from .solutions import (
    hypergeometric_solution,
    modular_solution_F,
    ode_residual,
    ode_residual_raw,
    solution_lambda,
)
from .triangular import g2k_poly, t2k_series

SUITES = ("diffeq", "table1", "ode", "triangular", "combinatorial")


def mutation_exponent(order: int) -> int:
    return order // 2


def _verdict(name: str, lhs: LaurentSeries, rhs: LaurentSeries, order: int, mutate: bool,
             start: int = 0, detail: str = "") -> Verdict:
    if mutate:
        rhs = rhs + LaurentSeries.monomial(1, mutation_exponent(order), order)
    bad = lhs.first_difference(rhs, start, order)
    return Verdict(name, bad is None, bad, detail)


def _zero(order: int) -> LaurentSeries:
    return LaurentSeries.zero(order)


# -- diffeq ----------------------------------------------------------------------

def check_level1(which: str, order: int, mutate: bool = False) -> Verdict:
    P, Q, R = series_P(order), series_Q(order), series_R(order)
    lhs, rhs = {
        "P": (P.theta(), (P * P - Q) / 12),
        "Q": (Q.theta(), (P * Q - R) / 3),
        "R": (R.theta(), (P * R - Q * Q) / 2),
    }[which]
    return _verdict(f"diffeq:theta {which}", lhs, rhs, order, mutate)


def check_level2(which: str, order: int, mutate: bool = False) -> Verdict:
    p, e, q = series_scriptP(order), series_e(order), series_scriptQ(order)
    lhs, rhs = {
        "scriptP": (p.theta(), (p * p - q) / 4),
        "e": (e.theta(), (e * p - q) / 2),
        "scriptQ": (q.theta(), p * q - e * q),
    }[which]
    return _verdict(f"diffeq:theta {which}", lhs, rhs, order, mutate)


def check_P_from_level2(order: int, mutate: bool = False) -> Verdict:
    rhs = 3 * series_scriptP(order) - 2 * series_e(order)
    return _verdict("diffeq:P = 3 scriptP - 2e", series_P(order), rhs, order, mutate)


def check_e_odd(order: int, mutate: bool = False) -> Verdict:
    return _verdict("diffeq:e odd-index form", series_e(order), series_e_odd(order), order, mutate)


def check_scriptP_squared(order: int, mutate: bool = False) -> Verdict:
    p = series_scriptP(order)
    rhs = 1 + 32 * psi_double_sum(1, 2, order) - 16 * psi_double_sum(0, 3, order)
    return _verdict("diffeq:scriptP^2 = 1 + 32 Psi12 - 16 Psi03", p * p, rhs, order, mutate)


def check_psi14(order: int, mutate: bool = False) -> Verdict:
    lhs = series_scriptP(order) * series_scriptQ(order) / 16
    rhs = Fraction(1, 16) - psi_double_sum(1, 4, order) + psi_double_sum(0, 5, order) / 2
    return _verdict("diffeq:scriptP scriptQ/16 = 1/16 - Psi14 + Psi05/2", lhs, rhs, order, mutate)


def check_psi21(order: int, mutate: bool = False) -> Verdict:
    rhs = (series_e(order) * series_scriptP(order) - series_scriptQ(order)) / 48
    return _verdict("diffeq:Psi21 = (e scriptP - scriptQ)/48", psi_double_sum(2, 1, order), rhs, order, mutate)


def psi21_by_quotients(order: int) -> LaurentSeries:
    """sum (-1)^(n-1) n q^n (1+q^n) / (1-q^n)^3, each term expanded by series division."""
    total = _zero(order)
    for n in range(1, order):
        num = LaurentSeries.from_dict({n: 1, 2 * n: 1}, order)
        den = product_expand([(n, order, -1)] * 3, order)
        total = total + (n if n % 2 else -n) * (num * den)
    return total


def check_psi21_quotients(order: int, mutate: bool = False) -> Verdict:
    return _verdict("diffeq:Psi21 quotient form", psi_double_sum(2, 1, order), psi21_by_quotients(order), order, mutate)


# -- table1 ----------------------------------------------------------------------

def check_table_row(k: int, order: int, mutate: bool = False) -> Verdict:
    rel = TABLE1[k]
    lhs = rel.lhs_series(order)
    rhs = eval_poly(rel.rhs, order)
    return _verdict(f"table1:row Psi_0,{k - 1}", lhs, rhs, order, mutate, detail=str(rel))


def check_rediscovery(k: int, order: int, mutate: bool = False) -> Verdict:
    found = solve_relation(k, verify_order=order)
    expected = TABLE1[k]
    if mutate:
        mono = next(iter(expected.rhs.terms))
        expected = type(expected)(expected.k, expected.lhs_constant, expected.lhs_psi_coeff,
                                  expected.rhs + WeightedPoly({mono: 1}))
    ok = found == expected
    detail = str(found) if ok else f"found {found}; expected {expected}"
    return Verdict(f"table1:rediscover k={k}", ok, None if ok else first_mismatch(expected, order), detail)


# -- ode -------------------------------------------------------------------------

def check_theta_example(which: int, order: int, mutate: bool = False) -> Verdict:
    e, q, d = series_e(order), series_scriptQ(order), series_D(order)
    lhs, rhs, name = {
        1: (serre_theta(e, 2), -q / 2, "theta_2(e) = -scriptQ/2"),
        2: (serre_theta(q, 4), -(e * q), "theta_4(scriptQ) = -e scriptQ"),
        3: (serre_theta(d, 4), _zero(order), "theta_4(D) = 0"),
    }[which]
    return _verdict(f"ode:{name}", lhs, rhs, order, mutate)


def check_F_residual(k: int, order: int, mutate: bool = False) -> Verdict:
    f = eval_poly(modular_solution_F(k), order)
    return _verdict(f"ode:F_{k} residual", ode_residual(f, k, order), _zero(order), order, mutate)


def check_hyper_residual(k: int, order: int, mutate: bool = False) -> Verdict:
    f = eval_poly(hypergeometric_solution(k), order)
    return _verdict(f"ode:hypergeometric k={k} residual", ode_residual(f, k, order), _zero(order), order, mutate)


def check_residual_forms(k: int, order: int, mutate: bool = False) -> Verdict:
    """Both residual formulations agree on a non-solution."""
    f = series_e(order) ** (k // 2) + LaurentSeries.monomial(1, 1, order)
    return _verdict(f"ode:residual forms agree k={k}", ode_residual(f, k, order),
                    ode_residual_raw(f, k, order), order, mutate)


def check_recurrence(k: int, order: int, mutate: bool = False) -> Verdict:
    """F_{k+2} = e F_k + lambda D F_{k-2} as a polynomial identity, D = (e^2 - scriptQ)/64."""
    n = (k - 2) // 2
    D = (E_ * E_ - Q_) / 64
    lhs = modular_solution_F(k + 2)
    rhs = E_ * modular_solution_F(k) + solution_lambda(n) * D * modular_solution_F(k - 2)
    if mutate:
        rhs = rhs + WeightedPoly({next(iter(rhs.terms)): 1})
    ok = lhs == rhs
    diff = lhs - rhs
    return Verdict(f"ode:recurrence F_{k + 2}", ok, None if ok else eval_poly(diff, order).valuation,
                   "" if ok else f"difference {diff}")


def check_final(k: int, order: int, mutate: bool = False) -> Verdict:
    n = (k - 2) // 2
    f = eval_poly(modular_solution_F(k), order)
    fm = eval_poly(modular_solution_F(k - 2), order)
    lhs = Fraction(k, 4) * (series_e(order) * f) + serre_theta(f, k)
    rhs = -Fraction(k + 1, 2) * solution_lambda(n) * (series_D(order) * fm)
    return _verdict(f"ode:(k/4) e F_k + theta(F_k) k={k}", lhs, rhs, order, mutate)


def check_bracket1(k: int, order: int, mutate: bool = False) -> Verdict:
    f = eval_poly(modular_solution_F(k), order)
    e, q = series_e(order), series_scriptQ(order)
    lhs = serre_theta(rankin_cohen(f, k, e, 2), k + 4)
    rhs = Fraction(k - 2, 8) * rankin_cohen(f, k, q, 4)
    return _verdict(f"ode:theta[F_k, e] k={k}", lhs, rhs, order, mutate)


def check_bracket2(k: int, order: int, mutate: bool = False) -> Verdict:
    """theta((k-2)[F,Q]) + 4 theta([F,e^2]) = (k-4)(k+2)/2 * scriptQ [F,e] (weight k+8 both sides)."""
    f = eval_poly(modular_solution_F(k), order)
    e, q = series_e(order), series_scriptQ(order)
    lhs = serre_theta((k - 2) * rankin_cohen(f, k, q, 4), k + 6) + 4 * serre_theta(rankin_cohen(f, k, e * e, 4), k + 6)
    rhs = Fraction((k - 4) * (k + 2), 2) * (q * rankin_cohen(f, k, e, 2))
    return _verdict(f"ode:bracket identity k={k}", lhs, rhs, order, mutate)


# -- triangular --------------------------------------------------------------------

KNOWN_G = {
    1: P_,
    2: 3 * P_**2 - 2 * Q_,
    3: 15 * P_**3 - 30 * P_ * Q_ + 16 * E_ * Q_,
    4: 105 * P_**4 - 420 * P_**2 * Q_ + 448 * E_ * P_ * Q_ - 128 * E_**2 * Q_ - 4 * Q_**2,
}


def check_theorem4(k: int, order: int, mutate: bool = False) -> Verdict:
    lhs = t2k_series(k, order).series
    rhs = eval_poly(g2k_poly(k), order) * series_psi_theta(order)
    return _verdict(f"triangular:T_{2 * k} = g_{2 * k} psi", lhs, rhs, order, mutate)


def check_g_known(k: int, order: int, mutate: bool = False) -> Verdict:
    expected = KNOWN_G[k]
    if mutate:
        expected = expected + WeightedPoly({next(iter(expected.terms)): 1})
    got = g2k_poly(k)
    ok = got == expected
    bad = None if ok else eval_poly(got - expected, order).valuation
    return Verdict(f"triangular:g_{2 * k} known form", ok, bad, str(got))


def check_recur_t2k(k: int, order: int, mutate: bool = False) -> Verdict:
    a = t2k_series(k, order).series
    b = t2k_series(k + 1, order).series
    return _verdict(f"triangular:8 theta T_{2 * k} = T_{2 * k + 2} - T_{2 * k}", 8 * a.theta(), b - a, order, mutate)


def check_t2_psi(order: int, mutate: bool = False) -> Verdict:
    psi = series_psi_theta(order)
    return _verdict("triangular:8 theta psi = T_2 - psi", 8 * psi.theta(), t2k_series(1, order).series - psi, order, mutate)


def check_psi_forms(order: int, mutate: bool = False) -> Verdict:
    prod = product_expand([(2, 2, 1), (1, 2, -1)], order)
    return _verdict("triangular:psi sum = psi product", series_psi_theta(order), prod, order, mutate)


# -- combinatorial -------------------------------------------------------------------

def check_theorem5_sum(max_n: int, mutate: bool = False) -> Verdict:
    order = max_n + 1
    table = DivisorTable.build(1, max_n, alternating=True)
    lhs = LaurentSeries([1] + [theorem5_lhs(n, table) for n in range(1, order)], 0, order)
    rhs = LaurentSeries([theorem5_rhs(n) if n else 1 for n in range(order)], 0, order)
    return _verdict(f"combinatorial:theorem5 divisor sums n<={max_n}", lhs, rhs, order, mutate, start=1)


def check_theorem5_series(max_n: int, mutate: bool = False) -> Verdict:
    order = max_n + 1
    lhs = series_scriptP(order) * series_psi_theta(order)
    rhs = LaurentSeries([theorem5_rhs(n) if n else 1 for n in range(order)], 0, order)
    return _verdict(f"combinatorial:theorem5 scriptP*psi n<={max_n}", lhs, rhs, order, mutate, start=1)


def check_routes_agree(max_n: int, mutate: bool = False) -> Verdict:
    order = max_n + 1
    table = DivisorTable.build(1, max_n, alternating=True)
    lhs = LaurentSeries([1] + [theorem5_lhs(n, table) for n in range(1, order)], 0, order)
    rhs = series_scriptP(order) * series_psi_theta(order)
    return _verdict(f"combinatorial:theorem5 routes agree n<={max_n}", lhs, rhs, order, mutate, start=1)


def check_parity(max_n: int, mutate: bool = False) -> Verdict:
    order = max_n + 1
    differ = [0] * order
    for n in range(1, order):
        c = enumerate_AB(n)
        differ[n] = (c.countA - c.countB) % 2
    expected = [int(parity_exception(n)) if n else 0 for n in range(order)]
    return _verdict(f"combinatorial:parity corollary n<={max_n}", LaurentSeries(differ, 0, order),
                    LaurentSeries(expected, 0, order), order, mutate, start=1)


# -- registry --------------------------------------------------------------------------

Check = Callable[..., Verdict]


def suite_checks(suite: str, order: int, max_n: int | None = None,
                 parity_max_n: int | None = None) -> list[Check]:
    """Zero-argument-but-``mutate`` callables for one suite, in a fixed order."""
    if suite == "diffeq":
        return (
            [partial(check_level1, w, order) for w in ("P", "Q", "R")]
            + [partial(check_level2, w, order) for w in ("scriptP", "e", "scriptQ")]
            + [partial(f, order) for f in (check_P_from_level2, check_e_odd, check_scriptP_squared,
                                          check_psi14, check_psi21)]
            + [partial(check_psi21_quotients, min(order, 60))]
        )
    if suite == "table1":
        return ([partial(check_table_row, k, order) for k in sorted(TABLE1)]
                + [partial(check_rediscovery, k, order) for k in sorted(TABLE1)])
    if suite == "ode":
        ks = range(2, 42, 2)
        return (
            [partial(check_theta_example, i, order) for i in (1, 2, 3)]
            + [partial(check_F_residual, k, order) for k in ks]
            + [partial(check_hyper_residual, k, order) for k in ks if k >= 4]
            + [partial(check_residual_forms, k, order) for k in (2, 4, 10)]
            + [partial(check_recurrence, k, order) for k in range(4, 40, 2)]
            + [partial(check_final, k, order) for k in range(4, 42, 2)]
            + [partial(check_bracket1, k, order) for k in range(4, 22, 2)]
            + [partial(check_bracket2, k, order) for k in range(4, 22, 2)]
        )
    if suite == "triangular":
        return (
            [partial(check_theorem4, k, order) for k in range(1, 9)]
            + [partial(check_g_known, k, order) for k in range(1, 5)]
            + [partial(check_recur_t2k, k, order) for k in range(1, 7)]
            + [partial(check_t2_psi, order), partial(check_psi_forms, order)]
        )
    if suite == "combinatorial":
        n = 10**4 if max_n is None else max_n
        pn = (5 * 10**3 if max_n is None else max_n) if parity_max_n is None else parity_max_n
        return [partial(check_theorem5_sum, n), partial(check_theorem5_series, n),
                partial(check_routes_agree, n), partial(check_parity, pn)]
    raise KeyError(suite)


def _call(check: Check, mutate: bool) -> Verdict:
    return check(mutate=mutate)


def run_checks(checks: list[Check], mutate: bool = False, jobs: int = 1) -> list[Verdict]:
    """Run checks, in parallel when ``jobs != 1``; results keep the input order."""
    if jobs == 1 or len(checks) < 2:
        return [_call(c, mutate) for c in checks]
    with ProcessPoolExecutor(max_workers=None if jobs == 0 else jobs) as pool:
        return list(pool.map(partial(_call, mutate=mutate), checks))


def run_suite(suite: str, order: int, mutate: bool = False, jobs: int = 1,
              max_n: int | None = None) -> list[Verdict]:
    names = SUITES if suite == "all" else (suite,)
    out: list[Verdict] = []
    for name in names:
        out.extend(run_checks(suite_checks(name, order, max_n), mutate, jobs))
    return out

