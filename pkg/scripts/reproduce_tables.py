"""Print growth, skew growth, observed height and the inversion verdict for every preset.

    python3 scripts/reproduce_tables.py
    python3 scripts/reproduce_tables.py --json > tables.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from skewgrowth import growth_series, observed_height, parse_preset_spec, skew_growth, verify_inversion


@dataclass(frozen=True)
class Row:
    preset: str
    max_degree: int
    growth: list
    skew: list
    observed_height: int
    inversion: str
    seconds: float


BOUNDS = {
    "bii": 10, "gn:3": 7, "gn:4": 8, "hn:1": 9, "hn:2": 11, "abel:2": 8, "abel:3": 9,
    "free:2": 8, "free:3": 8, "appendix2": 8, "appendix3": 8,
}


def compute(spec: str, d: int) -> Row:
    p = parse_preset_spec(spec)
    start = time.perf_counter()
    P = growth_series(p, d)
    N = skew_growth(p, d)
    h = observed_height(p, d)
    verdict = verify_inversion(p, d).verdict
    return Row(spec, d, list(P.coefficients), list(N.coefficients), h, verdict, round(time.perf_counter() - start, 3))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = [compute(spec, d) for spec, d in BOUNDS.items()]
    if args.json:
        print(json.dumps([asdict(r) for r in rows], indent=1))
        return
    for r in rows:
        print(f"{r.preset:10s} d={r.max_degree:<3d} height>={r.observed_height}  inversion {r.inversion}  ({r.seconds}s)")
        print(f"  P: {r.growth}")
        print(f"  N: {r.skew}")


if __name__ == "__main__":
    main()
