"""Causal regions of the fixed-time cross-section: counts and an ASCII map.

    python scripts/cross_section_regions.py --a0 1 --min -2 --max 2 --step 0.1
"""
import argparse
from collections import Counter

from scator.grid import GridSpec, parse_number, sample_regions

SYMBOL = {"T": "#", "S": ".", "L": "+"}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--a0", default="1")
    ap.add_argument("--min", default="-2")
    ap.add_argument("--max", default="2")
    ap.add_argument("--step", default="0.1")
    args = ap.parse_args()
    spec = GridSpec(*(parse_number(v) for v in (args.a0, args.min, args.max, args.step)))

    samples = list(sample_regions(spec, exact=True))
    n = len(spec.axis())
    rows = [samples[i * n:(i + 1) * n] for i in range(n)]
    # a2 runs upward, a1 to the right
    for j in reversed(range(n)):
        print("".join(SYMBOL[rows[i][j].causality.code] for i in range(n)))
    counts = Counter(s.causality.code for s in samples)
    print(f"\n# time-like, . space-like, + light-like   T={counts['T']} S={counts['S']} L={counts['L']}")
    inner = sum(1 for s in samples if s.causality.code == "T" and abs(s.a1) < abs(spec.a0))
    print(f"time-like inside the bipyramid: {inner}, in the wings: {counts['T'] - inner}")


if __name__ == "__main__":
    main()
