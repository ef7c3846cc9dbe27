#!/usr/bin/env python3
"""Print the exact cone-fraction tables: closed forms for the four infinite
families, the five exceptional values, and the per-node deletion breakdown
for each exceptional type."""

from __future__ import annotations

import argparse

from rootvol import TypeLabel, nu_of, report_as_text, verify_identity

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")


def family_table(max_rank: int) -> str:
    lines = ["rank  " + "  ".join(f"{f}n".rjust(12) for f in "ABCD")]
    for n in range(1, max_rank + 1):
        row = [f"{n:>4}"]
        for family in "ABCD":
            low = {"A": 1, "B": 2, "C": 2, "D": 4}[family]
            if n < low:
                row.append("-".rjust(12))
            else:
                row.append(str(nu_of(TypeLabel(family, n))).rjust(12))
        lines.append("  ".join(row))
    return "\n".join(lines)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=8)
    args = parser.parse_args()

    print("cone fractions by family")
    print(family_table(args.max_rank))
    print()
    print("exceptional types")
    for name in EXCEPTIONAL:
        print(f"  {name:<3} {nu_of(name)}")
    print()
    for name in EXCEPTIONAL:
        print(report_as_text(verify_identity(name)))
        print()


if __name__ == "__main__":
    main()
