#!/usr/bin/env python3
"""Write reconciliation reports for every desk-scale pair to reports/.

Usage: python scripts/jumping_report.py [--seed S] [--out DIR]
"""

import argparse
import json
import pathlib
import sys
import time

from verlinde.jumping import reconcile

PAIRS = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 5)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--out", default="reports")
    args = ap.parse_args()

    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for n, d in PAIRS:
        t0 = time.time()
        rep = reconcile(n, d, trials=args.trials, seed=args.seed)
        path = out_dir / f"jumping_n{n}_d{d}.json"
        path.write_text(json.dumps(rep.to_json(), indent=2) + "\n")
        print(f"({n},{d}): dim {rep.dim_z_stated}/{rep.dim_z_oracle} "
              f"flags={','.join(rep.flags) or '-'} -> {path} "
              f"({time.time() - t0:.1f}s)", file=sys.stderr)


if __name__ == "__main__":
    main()
