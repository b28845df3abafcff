"""Exact q-series toolkit for level-2 Eisenstein series, their differential ring and related identities."""
from .diffring import WeightedPoly, eval_poly, rankin_cohen, ring_theta, serre_theta
from .discovery import TABLE1, Relation, solve_relation
from .exactnum import Rational, bernoulli, pochhammer
from .forms import lookup
from .series import LaurentSeries, TruncationError
from .solutions import hypergeometric_solution, modular_solution_F, ode_residual

__all__ = [
    "LaurentSeries", "TruncationError", "Rational", "bernoulli", "pochhammer", "lookup",
    "WeightedPoly", "eval_poly", "ring_theta", "serre_theta", "rankin_cohen",
    "Relation", "TABLE1", "solve_relation",
    "modular_solution_F", "hypergeometric_solution", "ode_residual",
]
