"""Which recurrence coefficient makes F_{k+2} = e F_k + lambda D F_{k-2} a solution?

The residual of the weight-(k+2) equation is affine in lambda, so each step
has exactly one admissible value.  Prints it next to the closed form
-64(n+1)^2/((2n+1)(2n+3)) and compares the two solution families.

    python scripts/check_solutions.py --max-weight 30
"""
import argparse
from fractions import Fraction

from eisenstein2.diffring import E_, Q_, eval_poly
from eisenstein2.solutions import (
    hypergeometric_solution,
    lambda_n,
    modular_solution_F,
    ode_residual,
    to_eQ,
)


def forced_lambda(k: int, order: int) -> Fraction:
    """lambda for the step to weight k+2, given the (correct) F_k and F_{k-2}."""
    d = (E_**2 - Q_) / 64
    base = eval_poly(E_ * modular_solution_F(k), order)
    slope = eval_poly(d * modular_solution_F(k - 2), order)
    r0, r1 = ode_residual(base, k + 2, order), ode_residual(slope, k + 2, order)
    j = r1.valuation
    return -r0[j] / r1[j]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-weight", type=int, default=30)
    ap.add_argument("--order", type=int, default=40)
    args = ap.parse_args()
    print(" n  forced lambda      closed form        agree")
    for k in range(4, args.max_weight, 2):
        n = (k - 2) // 2
        lam = forced_lambda(k, args.order)
        print(f"{n:2d}  {str(lam):17s}  {str(lambda_n(n)):17s}  {lam == lambda_n(n)}")
    print()
    for k in range(4, args.max_weight + 1, 2):
        same = modular_solution_F(k) == to_eQ(hypergeometric_solution(k))
        f6 = modular_solution_F(k, closed_form=True)
        zero = ode_residual(eval_poly(cf, args.order), k, args.order).vanishes_below(args.order)
        print(f"k={k:2d}  F_k == hypergeometric: {same}   closed-form-lambda F_k solves: {zero}")


if __name__ == "__main__":
    main()
