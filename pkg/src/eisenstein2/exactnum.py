"""Exact scalars: rationals, Bernoulli numbers and rising factorials.

``Rational`` is :class:`fractions.Fraction`; it already keeps values in
lowest terms with a positive denominator and raises on division by zero.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

Rational = Fraction

BERNOULLI_CACHE_LIMIT = 64

_bernoulli_lock = threading.Lock()
# all B_j for j < len(_bernoulli_cache), B_1 = -1/2 convention for the odd slot
_bernoulli_cache: list[Fraction] = [Fraction(1)]


def _extend(table: list[Fraction], upto: int) -> None:
    for m in range(len(table), upto + 1):
        acc = sum((comb(m + 1, j) * table[j] for j in range(m)), Fraction(0))
        table.append(-acc / (m + 1))


def _bernoulli_any(k: int) -> Fraction:
    if k < len(_bernoulli_cache):
        return _bernoulli_cache[k]
    if k <= BERNOULLI_CACHE_LIMIT:
        with _bernoulli_lock:
            if k >= len(_bernoulli_cache):
                staged = list(_bernoulli_cache)
                _extend(staged, BERNOULLI_CACHE_LIMIT)
                _bernoulli_cache[len(_bernoulli_cache):] = staged[len(_bernoulli_cache):]
        return _bernoulli_cache[k]
    table = list(_bernoulli_cache)
    _extend(table, k)
    return table[k]


def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k for even ``k >= 0`` (B_2 = 1/6).

    Odd and negative indices are rejected.
    """
    if not isinstance(k, int) or k < 0 or k % 2:
        raise ValueError(f"bernoulli() needs a nonnegative even index, got {k!r}")
    return _bernoulli_any(k)


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1)."""
    if n < 0:
        raise ValueError("pochhammer() needs n >= 0")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def format_rational(x) -> str:
    """'p' when the denominator is 1, else 'p/q'; the sign sits on p."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    text = text.strip().replace("−", "-")
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(text)
