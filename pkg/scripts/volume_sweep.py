#!/usr/bin/env python3
"""Monte Carlo convergence sweep: estimate the dominant-cone fraction at
increasing sample counts and report the drift against the exact value."""

from __future__ import annotations

import argparse

from rootvol import montecarlo_nu


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--type", default="B3", help="type or product, e.g. B3 or A1xC3")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=2)
    parser.add_argument(
        "--samples",
        type=int,
        nargs="+",
        default=(10_000, 40_000, 160_000, 640_000, 2_560_000),
    )
    args = parser.parse_args()

    print(f"type={args.type} seed={args.seed} workers={args.workers}")
    print(f"{'samples':>9}  {'estimate':>10}  {'stderr':>9}  {'z':>6}")
    for count in args.samples:
        est = montecarlo_nu(args.type, count, args.seed, workers=args.workers)
        print(
            f"{est.samples:>9}  {est.estimate:>10.6f}  {est.stderr:>9.6f}"
            f"  {est.z_score:>+6.2f}"
        )
        exact = est.exact
    print(f"exact: {exact} = {float(exact):.6f}")


if __name__ == "__main__":
    main()
