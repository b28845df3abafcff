"""Series over triangular exponents and their expressions through psi(q)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .checks import Verdict
from .diffring import P_, WeightedPoly, eval_poly, ring_theta
from .forms import series_psi_theta
from .series import LaurentSeries


@dataclass(frozen=True)
class TriangularSeries:
    """1 + sum_{n>=1} (2n+1)^(2k) q^(n(n+1)/2)."""

    k: int
    series: LaurentSeries


def t2k_series(k: int, order: int) -> TriangularSeries:
    if k < 1:
        raise ValueError("k must be >= 1")
    if order < 1:
        raise ValueError("order must be >= 1")
    out = [0] * order
    n = 0
    while n * (n + 1) // 2 < order:
        out[n * (n + 1) // 2] = (2 * n + 1) ** (2 * k)
        n += 1
    return TriangularSeries(k, LaurentSeries(out, 0, order))


@lru_cache(maxsize=None)
def g2k_poly(k: int) -> WeightedPoly:
    """g_2 = scriptP, g_{2k+2} = 8 theta(g_2k) + scriptP g_2k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return P_
    g = g2k_poly(k - 1)
    return 8 * ring_theta(g) + P_ * g


def verify_theorem4(k: int, order: int = 100, psi: LaurentSeries | None = None) -> Verdict:
    """Check T_2k = g_2k(scriptP, e, scriptQ) * psi(q) coefficientwise below q^order."""
    psi = series_psi_theta(order) if psi is None else psi
    lhs = t2k_series(k, order).series
    rhs = eval_poly(g2k_poly(k), order) * psi
    bad = lhs.first_difference(rhs, 0, order)
    return Verdict(f"triangular:T_{2 * k}", bad is None, bad, str(g2k_poly(k)))
