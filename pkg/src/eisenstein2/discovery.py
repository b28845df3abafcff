"""Find the level-2 Eisenstein series as polynomials in e and scriptQ by exact linear algebra."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .checks import Verdict
from .diffring import WeightedPoly, eval_poly
from .forms import eisenstein_level2, level2_prefactor
from .series import LaurentSeries, psi_double_sum


class DiscoveryError(ArithmeticError):
    pass


class BasisDeficiency(DiscoveryError):
    """The coefficient system does not determine the constants uniquely."""


class VerificationFailure(DiscoveryError):
    def __init__(self, message: str, exponent: int | None = None):
        super().__init__(message)
        self.exponent = exponent


@dataclass(frozen=True)
class Relation:
    """c0 + c1 * Psi_{0,k-1} = rhs, with integer constants and an integral rhs in e, scriptQ."""

    k: int
    lhs_constant: int
    lhs_psi_coeff: int
    rhs: WeightedPoly
    verified_to: int = field(default=0, compare=False)

    def lhs_series(self, order: int) -> LaurentSeries:
        return self.lhs_constant + self.lhs_psi_coeff * psi_double_sum(0, self.k - 1, order)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "lhs": {"c0": self.lhs_constant, "c1": self.lhs_psi_coeff, "s": self.k - 1},
            "rhs": self.rhs.to_json(),
            "verified_to": self.verified_to,
        }

    def __str__(self):
        sign = "+" if self.lhs_psi_coeff >= 0 else "-"
        return f"{self.lhs_constant} {sign} {abs(self.lhs_psi_coeff)}*Psi_0,{self.k - 1} = {self.rhs}"


def monomial_basis(k: int) -> list[tuple[int, int]]:
    """Pairs (m, n) with 2m + 4n = k, m >= 0, n >= 1, by decreasing m."""
    if not isinstance(k, int) or k < 4 or k % 2:
        raise ValueError(f"weight must be an even integer >= 4, got {k!r}")
    return [((k - 4 * n) // 2, n) for n in range(1, k // 4 + 1)]


def solve_exact(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Unique solution of an overdetermined rational system, by Gauss-Jordan elimination.

    Raises BasisDeficiency when the rank is short or the system is inconsistent.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, len(aug)):
            if aug[i][c] != 0 and (best is None or abs(aug[i][c].numerator) > abs(aug[best][c].numerator)):
                best = i
        if best is None:
            raise BasisDeficiency(f"column {c} has no pivot; constants are not determined")
        aug[r], aug[best] = aug[best], aug[r]
        piv = aug[r][c]
        aug[r] = [x / piv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    for i in range(r, len(aug)):
        if aug[i][-1] != 0:
            raise BasisDeficiency(f"inconsistent equation at row {i}")
    return [aug[i][-1] for i in range(ncols)]


def solve_normalized(k: int, solve_order: int | None = None) -> WeightedPoly:
    """Constants alpha with scriptE_k = sum alpha e^m scriptQ^n, from q^0..q^(solve_order-1)."""
    basis = monomial_basis(k)
    if solve_order is None:
        solve_order = len(basis) + 8
    if solve_order <= len(basis) + 1:
        raise ValueError("solve_order must exceed the basis size + 1")
    target = eisenstein_level2(k, solve_order)
    cols = [eval_poly(WeightedPoly({(0, m, n): 1}), solve_order) for m, n in basis]
    rows = [[col[j] for col in cols] for j in range(solve_order)]
    alpha = solve_exact(rows, [target[j] for j in range(solve_order)])
    return WeightedPoly({(0, m, n): a for (m, n), a in zip(basis, alpha)})


def clear_denominators(k: int, normalized: WeightedPoly) -> tuple[int, int, WeightedPoly]:
    """Smallest positive L making L, -L * prefactor and L * alpha all integers."""
    pref = level2_prefactor(k)
    values = [pref] + list(normalized.terms.values())
    scale = lcm(*(Fraction(v).denominator for v in values))
    return scale, int(-scale * pref), normalized * scale


def first_mismatch(rel: Relation, order: int) -> int | None:
    lhs = rel.lhs_series(order)
    rhs = eval_poly(rel.rhs, order)
    return lhs.first_difference(rhs, 0, order)


def solve_relation(k: int, solve_order: int | None = None, verify_order: int = 100) -> Relation:
    basis = monomial_basis(k)
    if solve_order is None:
        solve_order = len(basis) + 8
    if verify_order <= solve_order:
        raise ValueError("verify_order must exceed solve_order")
    normalized = solve_normalized(k, solve_order)
    c0, c1, rhs = clear_denominators(k, normalized)
    rel = Relation(k, c0, c1, rhs, verified_to=verify_order)
    bad = first_mismatch(rel, verify_order)
    if bad is not None:
        raise VerificationFailure(f"weight {k} relation fails at q^{bad}", bad)
    return rel


def _row(k: int, c0: int, c1: int, coeffs: dict[tuple[int, int], int]) -> Relation:
    return Relation(k, c0, c1, WeightedPoly({(0, m, n): c for (m, n), c in coeffs.items()}))


# the seven known relations, keyed by weight
TABLE1: dict[int, Relation] = {
    4: _row(4, 1, -16, {(0, 1): 1}),
    6: _row(6, 1, 8, {(1, 1): 1}),
    8: _row(8, 17, -32, {(2, 1): 8, (0, 2): 9}),
    10: _row(10, 31, 8, {(3, 1): 4, (1, 2): 27}),
    12: _row(12, 691, -16, {(4, 1): 16, (2, 2): 486, (0, 3): 189}),
    14: _row(14, 5461, 8, {(5, 1): 16, (3, 2): 2016, (1, 3): 3429}),
    16: _row(16, 929569, -64, {(6, 1): 256, (4, 2): 130464, (2, 3): 667872, (0, 4): 130977}),
}


def verify_table1(order: int = 100, rows: dict[int, Relation] | None = None) -> list[Verdict]:
    rows = TABLE1 if rows is None else rows
    out = []
    for k, rel in sorted(rows.items()):
        bad = first_mismatch(rel, order)
        out.append(Verdict(f"table1:Psi_0,{k - 1}", bad is None, bad, str(rel)))
    return out
