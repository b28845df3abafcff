"""Named q-series: level-1 and level-2 Eisenstein series, psi, D, j2 and divisor sums."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .exactnum import bernoulli
from .series import (
    LaurentSeries,
    lambert,
    lambert_plus,
    phi_double_sum,
    product_expand,
    psi_double_sum,
)


# -- divisor functions ---------------------------------------------------------

def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _as_positive_int(n) -> int | None:
    if isinstance(n, Fraction):
        if n.denominator != 1:
            return None
        n = n.numerator
    if not isinstance(n, int) or n < 1:
        return None
    return n


def sigma(s: int, n) -> Fraction:
    """sum_{d | n} d^s; zero unless n is a positive integer."""
    m = _as_positive_int(n)
    if m is None:
        return Fraction(0)
    return Fraction(sum(d**s for d in divisors(m)))


def wt(s: int, n) -> Fraction:
    """Alternating divisor sum sum_{d | n} (-1)^(d-1) d^s; zero unless n is a positive integer."""
    m = _as_positive_int(n)
    if m is None:
        return Fraction(0)
    return Fraction(sum(d**s if d % 2 else -(d**s) for d in divisors(m)))


@dataclass(frozen=True)
class DivisorTable:
    """Sieved values of sigma_s or wt_s for n = 1..N.

    ``values[n - 1]`` holds the value at n; there is no entry for n = 0.
    """

    s: int
    alternating: bool
    values: tuple[int, ...]

    @classmethod
    def build(cls, s: int, size: int, alternating: bool = False) -> "DivisorTable":
        vals = [0] * (size + 1)
        for d in range(1, size + 1):
            w = d**s
            if alternating and d % 2 == 0:
                w = -w
            for m in range(d, size + 1, d):
                vals[m] += w
        return cls(s, alternating, tuple(vals[1:]))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if n < 1:
            return 0
        return self.values[n - 1]


# -- level one -----------------------------------------------------------------

def series_P(order: int) -> LaurentSeries:
    return 1 - 24 * lambert(1, False, order)


def series_Q(order: int) -> LaurentSeries:
    return 1 + 240 * lambert(3, False, order)


def series_R(order: int) -> LaurentSeries:
    return 1 - 504 * lambert(5, False, order)


def _check_even_weight(k: int) -> None:
    if not isinstance(k, int) or k < 2 or k % 2:
        raise ValueError(f"weight must be an even integer >= 2, got {k!r}")


def eisenstein_level1(k: int, order: int) -> LaurentSeries:
    """E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n."""
    _check_even_weight(k)
    return 1 - Fraction(2 * k) / bernoulli(k) * lambert(k - 1, False, order)


# -- level two -----------------------------------------------------------------

def series_scriptP(order: int) -> LaurentSeries:
    return 1 + 8 * lambert(1, True, order)


def series_e(order: int) -> LaurentSeries:
    return 1 + 24 * lambert_plus(1, order)


def series_scriptQ(order: int) -> LaurentSeries:
    return 1 - 16 * lambert(3, True, order)


def level2_prefactor(k: int) -> Fraction:
    """2k / ((1 - 2^k) B_k)."""
    _check_even_weight(k)
    return Fraction(2 * k) / ((1 - 2**k) * bernoulli(k))


def eisenstein_level2(k: int, order: int) -> LaurentSeries:
    """1 - 2k/((1-2^k) B_k) sum (-1)^(n-1) n^(k-1) q^n/(1-q^n).

    Also accepted at k = 2, where it reproduces the scriptP series.
    """
    return 1 - level2_prefactor(k) * lambert(k - 1, True, order)


def series_e_odd(order: int) -> LaurentSeries:
    """e built from odd n only: 1 + 24 sum (2n-1) q^(2n-1) / (1 - q^(2n-1))."""
    out = [0] * order
    out[0] = 1
    for n in range(1, order, 2):
        for j in range(n, order, n):
            out[j] += 24 * n
    return LaurentSeries(out, 0, order)


def series_psi_theta(order: int) -> LaurentSeries:
    """psi(q) = sum_{n>=0} q^(n(n+1)/2)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    out = [0] * order
    n = 0
    while n * (n + 1) // 2 < order:
        out[n * (n + 1) // 2] = 1
        n += 1
    return LaurentSeries(out, 0, order)


def series_psi_product(order: int) -> LaurentSeries:
    """psi(q) as (q^2; q^2)_inf / (q; q^2)_inf."""
    return product_expand([(2, 2, 1), (1, 2, -1)], order)


def series_D(order: int) -> LaurentSeries:
    """(e^2 - scriptQ) / 64 = q + 8q^2 + ..."""
    if order < 2:
        raise ValueError("series_D needs order >= 2")
    e = series_e(order)
    return (e * e - series_scriptQ(order)) / 64


def series_j2(order: int) -> LaurentSeries:
    """e^2 / D, valuation -1; known below q^order."""
    if order < 0:
        raise ValueError("series_j2 needs order >= 0")
    n = order + 2
    e = series_e(n)
    return (e * e * series_D(n).invert()).truncate(order)


def series_Psi(r: int, s: int, order: int) -> LaurentSeries:
    return psi_double_sum(r, s, order)


def series_Phi(r: int, s: int, order: int) -> LaurentSeries:
    return phi_double_sum(r, s, order)


# -- name registry ---------------------------------------------------------------

_FIXED: dict[str, Callable[[int], LaurentSeries]] = {
    "P": series_P,
    "Q": series_Q,
    "R": series_R,
    "scriptP": series_scriptP,
    "e": series_e,
    "scriptQ": series_scriptQ,
    "psi": series_psi_theta,
    "D": series_D,
    "j2": series_j2,
}

REGISTRY_NAMES = tuple(_FIXED) + ("E1:k", "E2:k", "Psi:r:s", "Phi:r:s")


def lookup(name: str) -> Callable[[int], LaurentSeries]:
    """Map a registry key such as ``"E2:8"`` or ``"Psi:1:2"`` to ``order -> series``."""
    if name in _FIXED:
        return _FIXED[name]
    head, *args = name.split(":")
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise KeyError(name) from None
    if head in ("E1", "E2") and len(nums) == 1:
        k = nums[0]
        _check_even_weight(k)
        fn = eisenstein_level1 if head == "E1" else eisenstein_level2
        return lambda order: fn(k, order)
    if head in ("Psi", "Phi") and len(nums) == 2 and min(nums) >= 0:
        r, s = nums
        fn = psi_double_sum if head == "Psi" else phi_double_sum
        return lambda order: fn(r, s, order)
    raise KeyError(name)


@lru_cache(maxsize=None)
def cached(name: str, order: int) -> LaurentSeries:
    """Memoized registry lookup; series are immutable so sharing is safe."""
    return lookup(name)(order)
