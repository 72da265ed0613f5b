#!/usr/bin/env python3
"""Batch experiment: generate a seed range, run the full check suite on
every scene, and print a per-check summary table with timing.

Example:
    python scripts/batch_verify.py --seeds 1:200 --numerator-cap 50
"""

import argparse
import time
from collections import Counter

from brocard.checks import THEOREM_CHECK_IDS, run_suite
from brocard.scene import SceneParams, generate_scene


def parse_seed_range(text: str):
    lo, _, hi = text.partition(":")
    return range(int(lo), int(hi) + 1) if hi else range(0, int(lo))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", default="1:100", help="seed range lo:hi inclusive (default 1:100)")
    parser.add_argument("--numerator-cap", type=int, default=50)
    parser.add_argument("--denominator-cap", type=int, default=50)
    args = parser.parse_args()

    seeds = parse_seed_range(args.seeds)
    per_check = {cid: Counter() for cid in THEOREM_CHECK_IDS}
    start = time.perf_counter()
    worst = (0.0, None)
    for seed in seeds:
        t0 = time.perf_counter()
        scene = generate_scene(
            SceneParams(seed=seed, numerator_cap=args.numerator_cap, denominator_cap=args.denominator_cap)
        )
        report = run_suite(scene)
        dt = time.perf_counter() - t0
        if dt > worst[0]:
            worst = (dt, seed)
        for result in report.results:
            if result.check_id in per_check:
                per_check[result.check_id][result.status] += 1
    total = time.perf_counter() - start

    width = max(len(cid) for cid in THEOREM_CHECK_IDS)
    print(f"{'check':<{width}}  pass  fail  degenerate")
    for cid in THEOREM_CHECK_IDS:
        c = per_check[cid]
        print(f"{cid:<{width}}  {c['PASS']:>4}  {c['FAIL']:>4}  {c['DEGENERATE']:>10}")
    n = len(seeds)
    print(f"\n{n} scenes in {total:.1f}s ({total / max(n, 1):.3f}s/scene, worst seed {worst[1]}: {worst[0]:.3f}s)")
    any_fail = any(c["FAIL"] for c in per_check.values())
    return 1 if any_fail else 0


if __name__ == "__main__":
    raise SystemExit(main())
