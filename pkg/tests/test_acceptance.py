"""Acceptance criteria 1-11, each an exact check printing one PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import io
import random
import sys
from fractions import Fraction

import pytest

from eisenstein2.checks import Verdict, compare
from eisenstein2.cli import main
from eisenstein2.diffring import serre_theta
from eisenstein2.forms import series_D, series_j2
from eisenstein2.series import LaurentSeries
from eisenstein2.suites import (
    SUITES,
    check_e_odd,
    check_level1,
    check_level2,
    check_P_from_level2,
    run_checks,
    suite_checks,
)


def _rand_series(rng: random.Random, order: int) -> LaurentSeries:
    return LaurentSeries([Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(order)], 0, order)


def crit1() -> list[Verdict]:
    return [check_level1(w, 200) for w in ("P", "Q", "R")]


def crit2() -> list[Verdict]:
    return [check_level2(w, 200) for w in ("scriptP", "e", "scriptQ")]


def crit3() -> list[Verdict]:
    return [check_P_from_level2(200), check_e_odd(200)]


def crit4() -> list[Verdict]:
    return run_checks(suite_checks("table1", 100))


def crit5() -> list[Verdict]:
    d, j = series_D(5), series_j2(3)
    return [
        Verdict("D leading coefficients", d.valuation == 1 and d.coefficients(1, 5) == [1, 8, 28, 64]),
        Verdict("j2 leading coefficients", j.valuation == -1 and j.coefficients(-1, 3) == [1, 40, 276, -2048]),
    ]


def crit6() -> list[Verdict]:
    out = run_checks([c for c in suite_checks("ode", 100) if c.func.__name__ == "check_theta_example"])
    rng = random.Random(20240601)
    bad = None
    for i in range(50):
        f, g = _rand_series(rng, 30), _rand_series(rng, 30)
        k, l = rng.choice([0, 2, 4, 6, 8]), rng.choice([0, 2, 4, 6, 8])
        v = compare("leibniz", serre_theta(f * g, k + l), serre_theta(f, k) * g + f * serre_theta(g, l), 30)
        if not v.passed:
            bad = i
            break
    out.append(Verdict("serre operator Leibniz rule, 50 random pairs", bad is None, bad))
    return out


def crit7() -> list[Verdict]:
    keep = {"check_F_residual", "check_hyper_residual", "check_residual_forms", "check_recurrence", "check_final"}
    return run_checks([c for c in suite_checks("ode", 100) if c.func.__name__ in keep])


def crit8() -> list[Verdict]:
    return run_checks(suite_checks("triangular", 100))


def crit9() -> list[Verdict]:
    checks = suite_checks("combinatorial", 100, max_n=10**4)
    return run_checks([c for c in checks if c.func.__name__ != "check_parity"])


def crit10() -> list[Verdict]:
    checks = suite_checks("combinatorial", 100, max_n=10**4, parity_max_n=5 * 10**3)
    return run_checks([c for c in checks if c.func.__name__ == "check_parity"])


def crit11() -> list[Verdict]:
    out = []
    for suite in SUITES:
        buf = io.StringIO()
        code = main(["verify", suite, "--order", "60", "--mutate", "--max-n", "2000"], out=buf)
        lines = [ln for ln in buf.getvalue().splitlines() if ln.startswith(("PASS", "FAIL"))]
        all_fail = bool(lines) and all(ln.startswith("FAIL") and "first mismatch at" in ln for ln in lines)
        out.append(Verdict(f"mutated {suite} suite exits 1, every check reports a mismatch",
                           code == 1 and all_fail, None, f"exit {code}, {len(lines)} checks"))
    return out


CRITERIA = {
    1: ("level-1 differential system to order 200", crit1),
    2: ("level-2 differential system to order 200", crit2),
    3: ("P = 3 scriptP - 2e and odd-index e form to order 200", crit3),
    4: ("tabulated relations verify and are rediscovered for k = 4..16", crit4),
    5: ("leading coefficients of D and j2", crit5),
    6: ("serre operator examples and Leibniz rule", crit6),
    7: ("both solution families solve the equation for k up to 40", crit7),
    8: ("triangular series identities and g_2k polynomials", crit8),
    9: ("divisor-sum identity for n <= 10^4 by two routes", crit9),
    10: ("parity corollary for n <= 5000", crit10),
    11: ("negative controls: mutated suites fail", crit11),
}


def run_criterion(n: int) -> tuple[bool, str]:
    title, fn = CRITERIA[n]
    verdicts = fn()
    failed = [v for v in verdicts if not v.passed]
    ok = bool(verdicts) and not failed
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title} ({len(verdicts) - len(failed)}/{len(verdicts)} checks)"
    if failed:
        line += "; " + "; ".join(v.line() for v in failed[:3])
    return ok, line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, line = run_criterion(n)
    with capsys.disabled():
        print("\n" + line, end="  ")
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
