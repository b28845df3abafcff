"""Triangular-number convolution of the alternating divisor sum, and the lattice-count parity rule."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import isqrt

from .checks import Verdict
from .forms import DivisorTable, series_psi_theta, series_scriptP, wt

WT_AT_ZERO = Fraction(1, 8)


def triangular_root(n: int) -> int | None:
    """r with r(r+1)/2 = n, or None."""
    r = (isqrt(8 * n + 1) - 1) // 2
    return r if r * (r + 1) // 2 == n else None


def theorem5_lhs(n: int, table: DivisorTable | None = None, wt_zero: Fraction = WT_AT_ZERO) -> Fraction:
    """8 * sum over j + k(k+1)/2 = n of wt(j), with wt(0) = wt_zero."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = Fraction(0)
    k = 0
    while k * (k + 1) // 2 <= n:
        j = n - k * (k + 1) // 2
        if j == 0:
            total += wt_zero
        else:
            total += table[j] if table is not None else wt(1, j)
        k += 1
    return 8 * total


def theorem5_rhs(n: int) -> int:
    r = triangular_root(n)
    return 0 if r is None else (2 * r + 1) ** 2


def verify_theorem5(max_n: int, wt_zero: Fraction = WT_AT_ZERO) -> list[Verdict]:
    """Divisor-sum route and series route (scriptP * psi), each against the closed form."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    table = DivisorTable.build(1, max_n, alternating=True)
    bad_sum = next(
        (n for n in range(1, max_n + 1) if theorem5_lhs(n, table, wt_zero) != theorem5_rhs(n)),
        None,
    )
    order = max_n + 1
    # scriptP = 8 sum_{j>=0} wt(j) q^j with wt(0) = 1/8; a changed wt(0) moves the constant term
    p = series_scriptP(order) + 8 * (wt_zero - WT_AT_ZERO)
    product = p * series_psi_theta(order)
    bad_series = next(
        (n for n in range(1, order) if product[n] != theorem5_rhs(n)),
        None,
    )
    agree = next(
        (n for n in range(1, order) if product[n] != theorem5_lhs(n, table, wt_zero)),
        None,
    )
    return [
        Verdict("theorem5:divisor-sum", bad_sum is None, bad_sum),
        Verdict("theorem5:series-product", bad_series is None, bad_series),
        Verdict("theorem5:routes-agree", agree is None, agree),
    ]


@dataclass(frozen=True)
class LatticeCount:
    n: int
    countA: int
    countB: int

    def to_json(self) -> dict:
        return asdict(self)


def enumerate_AB(n: int) -> LatticeCount:
    """Positive (x, y), y odd: 2x^2 + y^2 = 8n+1 with 2 | x, and x^2 + y^2 = 8n+1 with 4 | x."""
    if n < 1:
        raise ValueError("n must be >= 1")
    target = 8 * n + 1
    count_a = 0
    x = 1
    while 2 * x * x < target:
        y2 = target - 2 * x * x
        y = isqrt(y2)
        if x % 2 == 0 and y * y == y2 and y % 2 == 1:
            count_a += 1
        x += 1
    count_b = 0
    x = 1
    while x * x < target:
        y2 = target - x * x
        y = isqrt(y2)
        if x % 4 == 0 and y * y == y2 and y % 2 == 1:
            count_b += 1
        x += 1
    return LatticeCount(n, count_a, count_b)


def parity_exception(n: int) -> bool:
    """n = r(r+1)/2 with r = 1, 2 mod 4."""
    r = triangular_root(n)
    return r is not None and r % 4 in (1, 2)


def verify_parity_corollary(max_n: int) -> tuple[Verdict, list[int]]:
    """Counts of A and B share parity exactly off the exceptional triangular n.

    Returns the verdict and the list of n where the parities differ.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    differ = []
    bad = None
    for n in range(1, max_n + 1):
        c = enumerate_AB(n)
        d = (c.countA - c.countB) % 2 == 1
        if d:
            differ.append(n)
        if d != parity_exception(n) and bad is None:
            bad = n
    return Verdict("corollary:parity", bad is None, bad), differ
