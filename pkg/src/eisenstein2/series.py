"""Truncated formal Laurent series in q with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .exactnum import format_rational, parse_rational

Scalar = (int, Fraction)


class TruncationError(ValueError):
    """A coefficient beyond a series' known range was requested."""


def _to_ints(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class LaurentSeries:
    """sum_{valuation <= j < order} c_j q^j, plus an unknown tail O(q^order).

    The stored block is dense: ``len(coeffs) == order - valuation``.  For a
    nonzero series ``coeffs[0] != 0``; the zero series has no coefficients and
    ``valuation == order``.  Instances are immutable.
    """

    __slots__ = ("valuation", "order", "coeffs", "_ints")

    def __init__(self, coeffs: Iterable = (), valuation: int = 0, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = valuation + len(cs)
        if order - valuation < len(cs):
            cs = cs[: max(order - valuation, 0)]
        else:
            cs.extend([Fraction(0)] * (order - valuation - len(cs)))
        self._set(valuation, order, cs)

    def _set(self, valuation: int, order: int, cs: list[Fraction]) -> None:
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        if i == len(cs):
            valuation, cs = order, []
        else:
            valuation, cs = valuation + i, cs[i:]
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_ints", None)

    @classmethod
    def _raw(cls, valuation: int, order: int, cs: list[Fraction]) -> "LaurentSeries":
        self = cls.__new__(cls)
        self._set(valuation, order, cs)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "LaurentSeries":
        return cls._raw(order, order, [])

    @classmethod
    def constant(cls, c, order: int) -> "LaurentSeries":
        return cls.monomial(c, 0, order)

    @classmethod
    def monomial(cls, c, exponent: int, order: int) -> "LaurentSeries":
        if exponent >= order:
            return cls.zero(order)
        cs = [Fraction(0)] * (order - exponent)
        cs[0] = Fraction(c)
        return cls._raw(exponent, order, cs)

    @classmethod
    def from_dict(cls, terms: dict, order: int) -> "LaurentSeries":
        """Build from ``{exponent: coefficient}``; exponents >= order are dropped."""
        if not terms:
            return cls.zero(order)
        lo = min(min(terms), order)
        cs = [Fraction(0)] * (order - lo)
        for j, c in terms.items():
            if j < order:
                cs[j - lo] += Fraction(c)
        return cls._raw(lo, order, cs)

    # -- access -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> Fraction:
        if j >= self.order:
            raise TruncationError(f"coefficient of q^{j} unknown (series known below q^{self.order})")
        if j < self.valuation:
            return Fraction(0)
        return self.coeffs[j - self.valuation]

    __getitem__ = coeff

    def coefficients(self, start: int, stop: int) -> list[Fraction]:
        """Coefficients for exponents start..stop-1."""
        if stop > self.order:
            raise TruncationError(f"range up to q^{stop - 1} exceeds known order {self.order}")
        return [self.coeff(j) for j in range(start, stop)]

    def _dense(self, lo: int, hi: int) -> list[Fraction]:
        zero = Fraction(0)
        out = [zero] * (hi - lo)
        v = self.valuation
        for i, c in enumerate(self.coeffs):
            j = v + i
            if lo <= j < hi:
                out[j - lo] = c
        return out

    def int_form(self) -> tuple[list[int], int]:
        """(numerators, common denominator) of the stored block."""
        if self._ints is None:
            object.__setattr__(self, "_ints", _to_ints(self.coeffs))
        return self._ints

    # -- comparison ---------------------------------------------------------
    def first_difference(self, other: "LaurentSeries", start: int, stop: int) -> int | None:
        """Lowest exponent in [start, stop) where the two series differ, or None.

        Both series must be known on the whole range.
        """
        known = min(self.order, other.order)
        if stop > known:
            raise TruncationError(f"cannot compare up to q^{stop - 1}: known only below q^{known}")
        for j in range(start, stop):
            if self.coeff(j) != other.coeff(j):
                return j
        return None

    def agrees_with(self, other: "LaurentSeries", start: int, stop: int) -> bool:
        return self.first_difference(other, start, stop) is None

    def vanishes_below(self, stop: int) -> bool:
        """True when every coefficient below q^stop is zero."""
        if stop > self.order:
            raise TruncationError(f"cannot inspect q^{stop - 1}: known only below q^{self.order}")
        return self.valuation >= stop

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.valuation, self.order, self.coeffs) == (other.valuation, other.order, other.coeffs)

    def __hash__(self):
        return hash((self.valuation, self.order, self.coeffs))

    # -- arithmetic ---------------------------------------------------------
    def truncate(self, order: int) -> "LaurentSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend a series known below q^{self.order} to q^{order}")
        if order < self.valuation:
            return LaurentSeries.zero(order)
        return LaurentSeries._raw(self.valuation, order, list(self.coeffs[: order - self.valuation]))

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by q^k."""
        return LaurentSeries._raw(self.valuation + k, self.order + k, list(self.coeffs))

    def __neg__(self):
        return LaurentSeries._raw(self.valuation, self.order, [-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, Scalar):
            if other == 0 or self.order <= 0:
                return self
            return self + LaurentSeries.constant(other, self.order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.order, other.order)
        lo = min(self.valuation, other.valuation, order)
        a = self._dense(lo, order)
        b = other._dense(lo, order)
        return LaurentSeries._raw(lo, order, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return self + (-other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar):
            c = Fraction(other)
            if c == 0:
                return LaurentSeries.zero(self.order)
            return LaurentSeries._raw(self.valuation, self.order, [c * x for x in self.coeffs])
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.valuation + other.order, other.valuation + self.order)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(order)
        val = self.valuation + other.valuation
        n = order - val
        a, da = self.int_form()
        b, db = other.int_form()
        a, b = a[:n], b[:n]
        # iterate over the sparser factor
        if sum(1 for x in a if x) > sum(1 for x in b if x):
            a, b = b, a
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j in range(n - i):
                    y = b[j] if j < len(b) else 0
                    if y:
                        out[i + j] += x * y
        den = da * db
        return LaurentSeries._raw(val, order, [Fraction(v, den) for v in out])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return self * (1 / Fraction(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        if isinstance(other, Scalar):
            return self.invert() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        if result is None:
            # f^0 = 1 exactly; keep the relative precision of f
            return LaurentSeries.constant(1, self.order - self.valuation)
        return result

    def invert(self, order: int | None = None) -> "LaurentSeries":
        """Multiplicative inverse, known up to ``order`` (capped by precision)."""
        if self.is_zero():
            raise ZeroDivisionError("cannot invert the zero series")
        v = self.valuation
        known = -v + (self.order - v)
        if order is None or order > known:
            order = known
        n = order + v
        if n <= 0:
            return LaurentSeries.zero(order)
        c = self.coeffs
        c0 = c[0]
        d = [Fraction(0)] * n
        d[0] = 1 / c0
        for k in range(1, n):
            acc = Fraction(0)
            for j in range(max(0, k - len(c) + 1), k):
                cj = c[k - j]
                if cj:
                    acc += cj * d[j]
            d[k] = -acc / c0
        return LaurentSeries._raw(-v, order, d)

    def theta(self) -> "LaurentSeries":
        """q d/dq: c_j -> j c_j."""
        v = self.valuation
        return LaurentSeries._raw(v, self.order, [(v + i) * c for i, c in enumerate(self.coeffs)])

    # -- I/O ----------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "valuation": self.valuation,
            "order": self.order,
            "coeffs": [format_rational(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LaurentSeries":
        return cls([parse_rational(s) for s in data["coeffs"]], data["valuation"], data["order"])

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs[:8]):
            if c:
                j = self.valuation + i
                mono = "" if j == 0 else ("q" if j == 1 else f"q^{j}")
                parts.append(f"{c}{'*' + mono if mono else ''}")
        body = " + ".join(parts) if parts else "0"
        more = " + ..." if len(self.coeffs) > 8 else ""
        return f"LaurentSeries({body}{more} + O(q^{self.order}))"


def invert(f: LaurentSeries, order: int | None = None) -> LaurentSeries:
    return f.invert(order)


def theta(f: LaurentSeries) -> LaurentSeries:
    return f.theta()


# -- expanders ---------------------------------------------------------------

def _check_order(order: int) -> None:
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")


def lambert(s: int, alternating: bool, order: int) -> LaurentSeries:
    """sum_{n>=1} eps(n) n^s q^n / (1 - q^n), eps(n) = (-1)^(n-1) if alternating."""
    _check_order(order)
    out = [0] * order
    for n in range(1, order):
        w = n**s
        if alternating and n % 2 == 0:
            w = -w
        for e in range(n, order, n):
            out[e] += w
    return LaurentSeries(out, 0, order)


def lambert_plus(s: int, order: int) -> LaurentSeries:
    """sum_{n>=1} n^s q^n / (1 + q^n)."""
    _check_order(order)
    out = [0] * order
    for n in range(1, order):
        w = n**s
        for m, e in enumerate(range(n, order, n), start=1):
            out[e] += w if m % 2 else -w
    return LaurentSeries(out, 0, order)


def psi_double_sum(r: int, s: int, order: int) -> LaurentSeries:
    """sum_{m,n>=1} (-1)^(n-1) m^r n^s q^(mn), by the direct double sum."""
    _check_order(order)
    out = [0] * order
    for m in range(1, order):
        mr = m**r
        for n in range(1, (order - 1) // m + 1):
            t = mr * n**s
            out[m * n] += t if n % 2 else -t
    return LaurentSeries(out, 0, order)


def phi_double_sum(r: int, s: int, order: int) -> LaurentSeries:
    """sum_{m,n>=1} m^r n^s q^(mn)."""
    _check_order(order)
    out = [0] * order
    for m in range(1, order):
        mr = m**r
        for n in range(1, (order - 1) // m + 1):
            out[m * n] += mr * n**s
    return LaurentSeries(out, 0, order)


def product_expand(factors: Sequence[tuple[int, int, int]], order: int) -> LaurentSeries:
    """prod over factors (start, step, sign) of prod_{j>=0} (1 - q^(start + j*step))^sign.

    ``(1, 1, 1)`` is (q;q)_inf and ``(1, 2, -1)`` is 1/(q;q^2)_inf.
    """
    _check_order(order)
    out = [0] * order
    out[0] = 1
    for start, step, sign in factors:
        if start < 1 or step < 1:
            raise ValueError(f"factor progression must be positive, got start={start}, step={step}")
        if sign not in (1, -1):
            raise ValueError(f"factor sign must be +1 or -1, got {sign}")
        for e in range(start, order, step):
            if sign == 1:
                for i in range(order - 1, e - 1, -1):
                    out[i] -= out[i - e]
            else:
                for i in range(e, order):
                    out[i] += out[i - e]
    return LaurentSeries(out, 0, order)
