"""Search the small-integer grid for counterexamples and store them as JSON.

    python scripts/find_witnesses.py [--out tests/data/nonbilinearity_witness.json]
"""
import argparse
import json
from pathlib import Path

from scator import core, metric
from scator.dualities import PROPER_KINDS, dual
from scator.numeric import format_number
from scator.verify import non_homomorphism_witness

DEFAULT_OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "nonbilinearity_witness.json"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = ap.parse_args()

    a, b, c = metric.nonbilinearity_witness()
    lam, p, q = metric.homogeneity_witness()
    record = {
        "additivity": {
            "a": str(a), "b": str(b), "c": str(c),
            "lhs": format_number(metric.dot(a + b, c)),
            "rhs": format_number(metric.dot(a, c) + metric.dot(b, c)),
        },
        "homogeneity": {
            "lambda": format_number(lam), "a": str(p), "b": str(q),
            "lhs": format_number(lam * metric.dot(p, q)),
            "rhs": format_number(metric.dot(core.scale(lam, p), q)),
        },
    }
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(record, indent=2) + "\n")
    print(json.dumps(record, indent=2))

    for kind in PROPER_KINDS:
        x, y = non_homomorphism_witness(kind)
        print(f"{kind.name:8s} dual({x} {y}) = {dual(core.product(x, y), kind)}"
              f"  vs  {core.product(dual(x, kind), dual(y, kind))}")


if __name__ == "__main__":
    main()
