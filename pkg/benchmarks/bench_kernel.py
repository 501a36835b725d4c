#!/usr/bin/env python3
"""Throughput comparison: compiled scan kernel vs the pure-Python fallback.

Runs the same scan with both kernels (toggled via ULTRACHAIN_PURE_KERNEL),
checks that the two reports serialize identically, and prints pairs/second
for each along with the speedup.

Examples:

    python benchmarks/bench_kernel.py
    python benchmarks/bench_kernel.py --field padic:2 --dim 3 --samples 200000
    python benchmarks/bench_kernel.py --field rationals --norm l1 --dim 2 \
        --unit-bound 4 --exhaustive
"""

import argparse
import os
import time

from ultrachain import GenConfig, dumps, parse_field, parse_norm, scan
from ultrachain._kernel import have_fast


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--field", default="padic:3", help="backend selector")
    parser.add_argument(
        "--norm", default="sup", help="norm selector (default sup)"
    )
    parser.add_argument("--dim", type=int, default=2)
    parser.add_argument("--v-max", type=int, default=2, dest="v_max")
    parser.add_argument("--unit-bound", type=int, default=2, dest="unit_bound")
    parser.add_argument("--samples", type=int, default=100_000)
    parser.add_argument(
        "--exhaustive", action="store_true",
        help="scan the whole grid instead of sampling",
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--checks", default="na1,na2,steps",
        help="comma-separated checks (default na1,na2,steps)",
    )
    parser.add_argument(
        "--repeat", type=int, default=3,
        help="timed repetitions per kernel; best time wins (default 3)",
    )
    return parser.parse_args(argv)


def timed_scan(cfg, checks, repeat, force_pure):
    previous = os.environ.pop("ULTRACHAIN_PURE_KERNEL", None)
    if force_pure:
        os.environ["ULTRACHAIN_PURE_KERNEL"] = "1"
    try:
        best = float("inf")
        report = None
        for _ in range(repeat):
            start = time.perf_counter()
            report = scan(cfg, checks)
            best = min(best, time.perf_counter() - start)
        return report, best
    finally:
        os.environ.pop("ULTRACHAIN_PURE_KERNEL", None)
        if previous is not None:
            os.environ["ULTRACHAIN_PURE_KERNEL"] = previous


def main(argv=None):
    args = parse_args(argv)
    cfg = GenConfig(
        field=parse_field(args.field),
        spec=parse_norm(args.norm),
        dim=args.dim,
        v_max=args.v_max,
        unit_bound=args.unit_bound,
        samples=args.samples,
        exhaustive=args.exhaustive,
        seed=args.seed,
    )
    checks = {c.strip() for c in args.checks.split(",") if c.strip()}

    pure_report, pure_time = timed_scan(cfg, checks, args.repeat, True)
    rows = [("pure", pure_report, pure_time)]
    if have_fast():
        fast_report, fast_time = timed_scan(cfg, checks, args.repeat, False)
        rows.insert(0, ("fast", fast_report, fast_time))
        if dumps(fast_report.to_json_dict()) != dumps(pure_report.to_json_dict()):
            raise SystemExit("kernel mismatch: reports differ")
    else:
        print("compiled kernel unavailable; timing the fallback only")

    pairs = pure_report.pairs_evaluated
    mode = "exhaustive" if args.exhaustive else f"random({args.samples})"
    print(
        f"field={args.field} norm={args.norm} dim={args.dim} "
        f"v_max={args.v_max} unit_bound={args.unit_bound} mode={mode} "
        f"checks={','.join(sorted(checks))}"
    )
    print(f"{'kernel':<8} {'pairs':>10} {'seconds':>10} {'pairs/s':>12}")
    for name, report, seconds in rows:
        rate = report.pairs_evaluated / seconds if seconds else float("inf")
        print(
            f"{name:<8} {report.pairs_evaluated:>10} "
            f"{seconds:>10.3f} {rate:>12.0f}"
        )
    if len(rows) == 2:
        print(f"speedup: {pure_time / rows[0][2]:.1f}x")
    print(f"reports identical: {'yes' if len(rows) == 2 else 'n/a'}; "
          f"violations: {pure_report.violation_count}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
