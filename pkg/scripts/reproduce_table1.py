"""Rediscover the level-2 Eisenstein relations by exact linear algebra and compare with the stored table.

    python scripts/reproduce_table1.py --max-weight 24 --order 100
"""
import argparse
import json

from eisenstein2.discovery import TABLE1, solve_relation


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-weight", type=int, default=24)
    ap.add_argument("--order", type=int, default=100)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    ok = True
    for k in range(4, args.max_weight + 1, 2):
        rel = solve_relation(k, verify_order=args.order)
        known = TABLE1.get(k)
        tag = "new" if known is None else ("matches table" if known == rel else "DIFFERS from table")
        ok &= known is None or known == rel
        if args.json:
            print(json.dumps({**rel.to_json(), "status": tag}, separators=(",", ":")))
        else:
            print(f"k={k:2d}  {rel}   [{tag}]")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
