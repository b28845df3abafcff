"""Run every identity suite, optionally with the mutation control, and print a summary table.

    python scripts/verify_all.py --order 100 --jobs 0
"""
import argparse
import time

from eisenstein2.suites import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=100)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=None)
    ap.add_argument("--with-mutation", action="store_true", help="also confirm every check fails when mutated")
    args = ap.parse_args()
    ok = True
    print(f"{'suite':14s} {'checks':>6s} {'passed':>6s} {'mutant-caught':>13s} {'secs':>6s}")
    for suite in SUITES:
        t = time.perf_counter()
        verdicts = run_suite(suite, args.order, jobs=args.jobs, max_n=args.max_n)
        caught = "-"
        if args.with_mutation:
            bad = run_suite(suite, args.order, mutate=True, jobs=args.jobs, max_n=args.max_n)
            caught = str(sum(not v.passed for v in bad))
            ok &= all(not v.passed for v in bad)
        passed = sum(v.passed for v in verdicts)
        ok &= passed == len(verdicts)
        print(f"{suite:14s} {len(verdicts):6d} {passed:6d} {caught:>13s} {time.perf_counter() - t:6.1f}")
        for v in verdicts:
            if not v.passed:
                print("   ", v.line())
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
