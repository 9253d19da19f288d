"""Run the identity suite over several seeds and tabulate pass counts per identity.

    python scripts/identity_sweep.py --seeds 0 1 2 --trials 200
"""
import argparse
import time
from collections import defaultdict

from scator.verify import run_identity_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--module", default="all")
    args = ap.parse_args()

    tally = defaultdict(lambda: defaultdict(int))
    start = time.perf_counter()
    for seed in args.seeds:
        for rec in run_identity_suite(seed, args.trials, args.module):
            key = (rec["module"], rec["backend"], rec["identity"])
            tally[key][rec["status"]] += 1
    elapsed = time.perf_counter() - start

    width = max(len(k[2]) for k in tally)
    for (module, backend, name), counts in sorted(tally.items()):
        summary = " ".join(f"{s}={n}" for s, n in sorted(counts.items()))
        print(f"{module:7s} {backend:6s} {name:{width}s} {summary}")
    print(f"\n{len(args.seeds)} seed(s) x {args.trials} trials in {elapsed:.1f} s")


if __name__ == "__main__":
    main()
