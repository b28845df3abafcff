"""The ring Q[scriptP, e, scriptQ] with its theta-derivation, and Serre/Rankin-Cohen operators on series."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .exactnum import format_rational, parse_rational
from .forms import series_D, series_e, series_scriptP, series_scriptQ
from .series import LaurentSeries

Monomial = tuple[int, int, int]

# generator names per slot; the third slot is scriptQ in "PeQ" and D in "eD"
BASES = {"PeQ": ("P", "e", "Q"), "eD": ("P", "e", "D")}
GENERATOR_WEIGHTS = (2, 2, 4)


class WeightedPoly:
    """Polynomial in three weighted generators with exact coefficients.

    Monomial ``(l, m, n)`` stands for P^l e^m Q^n in the default ``"PeQ"``
    basis, or e^m D^n in the ``"eD"`` basis (where ``l`` must be 0).
    Weight of ``(l, m, n)`` is ``2l + 2m + 4n``.
    """

    __slots__ = ("terms", "basis")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, basis: str = "PeQ"):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(x) for x in mono)
            if len(mono) != 3 or min(mono) < 0:
                raise ValueError(f"bad monomial {mono!r}")
            if basis == "eD" and mono[0]:
                raise ValueError("the eD basis has no scriptP generator")
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        object.__setattr__(self, "terms", {m: c for m, c in sorted(clean.items()) if c})
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedPoly is immutable")

    @classmethod
    def gen(cls, name: str) -> "WeightedPoly":
        if name == "D":
            return cls({(0, 0, 1): 1}, basis="eD")
        slot = {"P": 0, "e": 1, "Q": 2}[name]
        mono = [0, 0, 0]
        mono[slot] = 1
        return cls({tuple(mono): 1})

    @classmethod
    def const(cls, c, basis: str = "PeQ") -> "WeightedPoly":
        return cls({(0, 0, 0): c}, basis)

    # -- structure ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    @staticmethod
    def monomial_weight(mono: Monomial) -> int:
        return sum(w * x for w, x in zip(GENERATOR_WEIGHTS, mono))

    def weight_of(self) -> dict[Monomial, int]:
        return {m: self.monomial_weight(m) for m in self.terms}

    def weights(self) -> set[int]:
        return set(self.weight_of().values())

    def is_homogeneous(self, weight: int | None = None) -> bool:
        ws = self.weights()
        if weight is None:
            return len(ws) <= 1
        return ws <= {weight}

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "WeightedPoly":
        if isinstance(other, WeightedPoly):
            if other.basis != self.basis:
                raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
            return other
        if isinstance(other, (int, Fraction)):
            return WeightedPoly.const(other, self.basis)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return WeightedPoly(out, self.basis)

    __radd__ = __add__

    def __neg__(self):
        return WeightedPoly({m: -c for m, c in self.terms.items()}, self.basis)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return WeightedPoly(out, self.basis)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(c))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = WeightedPoly.const(1, self.basis)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeightedPoly.const(other, self.basis)
        if not isinstance(other, WeightedPoly):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, tuple(self.terms.items())))

    def substitute(self, images: Mapping[int, "WeightedPoly"], basis: str) -> "WeightedPoly":
        """Replace generator slot i by ``images[i]`` (slots missing from images map to themselves)."""
        gens = [images.get(i) for i in range(3)]
        out = WeightedPoly({}, basis)
        for (l, m, n), c in self.terms.items():
            term = WeightedPoly.const(c, basis)
            for slot, exp in enumerate((l, m, n)):
                if exp:
                    g = gens[slot]
                    if g is None:
                        mono = [0, 0, 0]
                        mono[slot] = 1
                        g = WeightedPoly({tuple(mono): 1}, basis)
                    term = term * g**exp
            out = out + term
        return out

    # -- I/O ------------------------------------------------------------------
    def to_json(self) -> list[dict]:
        names = BASES[self.basis]
        rows = []
        for mono, c in self.terms.items():
            row = {}
            for name, exp in zip(names, mono):
                if self.basis == "eD" and name == "P":
                    continue
                row[name] = exp
            row["c"] = format_rational(c)
            rows.append(row)
        return rows

    @classmethod
    def from_json(cls, rows: Iterable[dict]) -> "WeightedPoly":
        rows = list(rows)
        basis = "eD" if any("D" in r for r in rows) else "PeQ"
        terms: dict[Monomial, Fraction] = {}
        for r in rows:
            mono = (r.get("P", 0), r.get("e", 0), r.get("D", 0) if basis == "eD" else r.get("Q", 0))
            terms[mono] = terms.get(mono, Fraction(0)) + parse_rational(r["c"])
        return cls(terms, basis)

    def __str__(self):
        if not self.terms:
            return "0"
        names = BASES[self.basis]
        parts = []
        for mono, c in self.terms.items():
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"WeightedPoly({self}, basis={self.basis!r})"


@dataclass(frozen=True)
class GradedForm:
    """A WeightedPoly that is homogeneous of the stated weight."""

    poly: WeightedPoly
    weight: int

    def __post_init__(self):
        if self.weight % 2:
            raise ValueError(f"weight must be even, got {self.weight}")
        if not self.poly.is_homogeneous(self.weight):
            raise ValueError(f"terms of weights {sorted(self.poly.weights())} in a weight-{self.weight} form")

    def series(self, order: int) -> LaurentSeries:
        return eval_poly(self.poly, order)


P_ = WeightedPoly.gen("P")
E_ = WeightedPoly.gen("e")
Q_ = WeightedPoly.gen("Q")
D_ = WeightedPoly.gen("D")

# theta-images of the generators
THETA_IMAGES = {
    0: (P_ * P_ - Q_) / 4,
    1: (E_ * P_ - Q_) / 2,
    2: P_ * Q_ - E_ * Q_,
}


def ring_theta(p: WeightedPoly) -> WeightedPoly:
    """The derivation q d/dq transported to Q[scriptP, e, scriptQ]."""
    if p.basis != "PeQ":
        raise ValueError("ring_theta works in the PeQ basis; convert first")
    out = WeightedPoly()
    for mono, c in p.terms.items():
        for slot in range(3):
            exp = mono[slot]
            if not exp:
                continue
            lowered = list(mono)
            lowered[slot] -= 1
            out = out + WeightedPoly({tuple(lowered): c * exp}) * THETA_IMAGES[slot]
    return out


def eval_poly(p: WeightedPoly, order: int) -> LaurentSeries:
    """Substitute the q-series of the generators and expand to ``order``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if p.basis == "PeQ":
        builders = (series_scriptP, series_e, series_scriptQ)
    else:
        builders = (series_scriptP, series_e, series_D)
    base = [None, None, None]
    powers: list[dict[int, LaurentSeries]] = [{}, {}, {}]

    def power(slot: int, exp: int) -> LaurentSeries:
        cache = powers[slot]
        if exp not in cache:
            if base[slot] is None:
                base[slot] = builders[slot](order)
            if exp == 1:
                cache[1] = base[slot]
            else:
                cache[exp] = power(slot, exp - 1) * base[slot]
        return cache[exp]

    total = LaurentSeries.zero(order)
    for mono, c in p.terms.items():
        term = LaurentSeries.constant(c, order)
        for slot, exp in enumerate(mono):
            if exp:
                term = term * power(slot, exp)
        total = total + term
    return total


def serre_theta(f: LaurentSeries, k: int, order: int | None = None) -> LaurentSeries:
    """theta_k(f) = q f' - (k/4) scriptP f."""
    n = max(f.order - min(f.valuation, 0), 1)
    out = f.theta() - Fraction(k, 4) * (series_scriptP(n) * f)
    return out if order is None else out.truncate(order)


def rankin_cohen(f: LaurentSeries, k: int, g: LaurentSeries, l: int) -> LaurentSeries:
    """Degree-1 bracket [f, g] = k f g' - l f' g."""
    return k * (f * g.theta()) - l * (f.theta() * g)
