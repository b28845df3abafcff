"""Command-line entry point: ``eisenstein2 <subcommand> ...``.

Exit codes: 0 success, 1 a checked identity failed, 2 usage or configuration error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import forms
from .combinatorics import enumerate_AB, verify_parity_corollary, verify_theorem5
from .diffring import eval_poly
from .discovery import DiscoveryError, solve_relation
from .solutions import hypergeometric_solution, modular_solution_F, ode_residual, to_eD, to_eQ
from .suites import SUITES, run_suite
from .triangular import g2k_poly, verify_theorem4

ORDER_ENV = "EISENSTEIN2_ORDER"
MIN_ORDER = 8


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    default_order: int = 100
    output: str = "human"
    parallelism: int = 1
    order_from_env: bool = False

    def __post_init__(self):
        if self.default_order < MIN_ORDER:
            raise ConfigError(f"order must be >= {MIN_ORDER}, got {self.default_order}")
        if self.output not in ("human", "json"):
            raise ConfigError(f"unknown output mode {self.output!r}")
        if self.parallelism < 0:
            raise ConfigError("--jobs must be >= 0")

    def meta(self) -> dict:
        return {"order": self.default_order, "order_from_env": self.order_from_env, "jobs": self.parallelism}


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _global_flags(parser: argparse.ArgumentParser) -> None:
    # SUPPRESS keeps a flag given before the subcommand from being reset by the subparser
    parser.add_argument("--order", type=int, default=argparse.SUPPRESS, help="series truncation order")
    parser.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    parser.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes (0 = auto)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eisenstein2", description="Exact q-series for Gamma_0(2) Eisenstein series.")
    _global_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print a named series as JSON")
    _global_flags(p)
    p.add_argument("name", help="one of: " + ", ".join(forms.REGISTRY_NAMES))

    p = sub.add_parser("verify", help="run an identity suite")
    _global_flags(p)
    p.add_argument("suite", nargs="?", default="all", choices=SUITES + ("all",))
    p.add_argument("--suite", dest="suite_flag", choices=SUITES + ("all",))
    p.add_argument("--max-n", type=int, default=None, help="range for the combinatorial suite")
    p.add_argument("--mutate", action="store_true", help="inject one coefficient change per check (negative control)")

    p = sub.add_parser("solve", help="modular solution of the weight-k equation")
    _global_flags(p)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--method", choices=("orthogonal", "hypergeometric"), default="orthogonal")
    p.add_argument("--basis", choices=("eQ", "eD"), default=None)
    p.add_argument("--closed-form-lambda", action="store_true", help="use the closed-form lambda_1 (not a solution from k=6)")

    p = sub.add_parser("discover", help="express scriptE_k in e and scriptQ")
    _global_flags(p)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--max-weight", type=int, default=None)

    p = sub.add_parser("triangular", help="g_2k polynomial and its check")
    _global_flags(p)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("combinatorial", help="divisor-sum identity and parity corollary")
    _global_flags(p)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--emit-counts", action="store_true")
    return parser


def resolve_order(args: argparse.Namespace, environ=os.environ) -> tuple[int | None, bool]:
    """Order from --order, else from the environment; the flag wins."""
    order = getattr(args, "order", None)
    if order is None and environ.get(ORDER_ENV):
        try:
            return int(environ[ORDER_ENV]), True
        except ValueError:
            raise ConfigError(f"{ORDER_ENV} must be an integer") from None
    return order, False


def make_config(args: argparse.Namespace, environ=os.environ) -> RunConfig:
    order, from_env = resolve_order(args, environ)
    return RunConfig(
        default_order=100 if order is None else order,
        output="json" if getattr(args, "json", False) else "human",
        parallelism=getattr(args, "jobs", 1),
        order_from_env=from_env,
    )


# -- subcommands -------------------------------------------------------------------

def cmd_expand(args, cfg: RunConfig, out) -> int:
    try:
        build = forms.lookup(args.name)
    except (KeyError, ValueError):
        raise ConfigError(f"unknown series name {args.name!r}") from None
    # expand takes any positive order; the global minimum guards identity checks only
    order, _ = resolve_order(args)
    order = cfg.default_order if order is None else order
    if order < 1:
        raise ConfigError("order must be >= 1")
    print(_dump(build(order).to_json()), file=out)
    return 0


def cmd_verify(args, cfg: RunConfig, out) -> int:
    suite = args.suite_flag or args.suite
    verdicts = run_suite(suite, cfg.default_order, mutate=args.mutate, jobs=cfg.parallelism, max_n=args.max_n)
    ok = all(v.passed for v in verdicts)
    if cfg.output == "json":
        print(_dump({"meta": cfg.meta(), "suite": suite, "passed": ok,
                     "results": [v.to_json() for v in verdicts]}), file=out)
    else:
        if cfg.order_from_env:
            print(f"# order {cfg.default_order} from {ORDER_ENV}", file=out)
        for v in verdicts:
            print(v.line(), file=out)
        print(f"{sum(v.passed for v in verdicts)}/{len(verdicts)} passed", file=out)
    return 0 if ok else 1


def cmd_solve(args, cfg: RunConfig, out) -> int:
    k = args.weight
    if k % 2 or k < (2 if args.method == "orthogonal" else 4):
        raise ConfigError(f"weight {k} not supported by method {args.method}")
    if args.method == "orthogonal":
        poly = modular_solution_F(k, closed_form=args.closed_form_lambda)
        basis = args.basis or "eQ"
    else:
        poly = hypergeometric_solution(k)
        basis = args.basis or "eD"
    poly = to_eQ(poly) if basis == "eQ" else to_eD(poly)
    order = cfg.default_order
    res = ode_residual(eval_poly(poly, order), k, order)
    zero = res.vanishes_below(order)
    payload = {
        "k": k,
        "method": args.method,
        "basis": basis,
        "poly": poly.to_json(),
        "residual": {"order": order, "zero": zero, "first_nonzero": None if zero else res.valuation},
    }
    if cfg.output == "json":
        payload["meta"] = cfg.meta()
        print(_dump(payload), file=out)
    else:
        print(f"F = {poly}", file=out)
        print(f"residual below q^{order}: {'zero' if zero else f'nonzero at q^{res.valuation}'}", file=out)
    return 0 if zero else 1


def cmd_discover(args, cfg: RunConfig, out) -> int:
    top = args.max_weight or args.weight
    if args.weight < 4 or args.weight % 2 or top % 2:
        raise ConfigError("weights must be even and >= 4")
    status = 0
    for k in range(args.weight, top + 1, 2):
        try:
            rel = solve_relation(k, verify_order=cfg.default_order)
        except DiscoveryError as exc:
            print(_dump({"k": k, "error": str(exc)}) if cfg.output == "json" else f"k={k}: {exc}", file=out)
            status = 1
            continue
        print(_dump(rel.to_json()) if cfg.output == "json" else str(rel), file=out)
    return status


def cmd_triangular(args, cfg: RunConfig, out) -> int:
    if args.k < 1:
        raise ConfigError("--k must be >= 1")
    v = verify_theorem4(args.k, cfg.default_order)
    if cfg.output == "json":
        print(_dump({"k": args.k, "g": g2k_poly(args.k).to_json(), "verdict": v.to_json(), "meta": cfg.meta()}), file=out)
    else:
        print(f"g_{2 * args.k} = {g2k_poly(args.k)}", file=out)
        print(v.line(), file=out)
    return 0 if v.passed else 1


def cmd_combinatorial(args, cfg: RunConfig, out) -> int:
    if args.max_n < 1:
        raise ConfigError("--max-n must be >= 1")
    verdicts = verify_theorem5(args.max_n)
    parity, _ = verify_parity_corollary(args.max_n)
    verdicts.append(parity)
    for v in verdicts:
        print(_dump(v.to_json()) if cfg.output == "json" else v.line(), file=out)
    if args.emit_counts:
        for n in range(1, args.max_n + 1):
            print(_dump(enumerate_AB(n).to_json()), file=out)
    return 0 if all(v.passed for v in verdicts) else 1


COMMANDS = {
    "expand": cmd_expand,
    "verify": cmd_verify,
    "solve": cmd_solve,
    "discover": cmd_discover,
    "triangular": cmd_triangular,
    "combinatorial": cmd_combinatorial,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "expand":
            cfg = RunConfig()
        else:
            cfg = make_config(args)
        return COMMANDS[args.command](args, cfg, out)
    except ConfigError as exc:
        print(f"eisenstein2: error: {exc}", file=sys.stderr)
        return 2


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
