"""Invariant degrees, exponents, Weyl group orders, and the degree ratio."""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Sequence

from .diagram import DecompositionLabel, TypeLabel, parse_decomposition
from .rootsys import RootSystem

_EXCEPTIONAL_DEGREES = {
    ("G", 2): (2, 6),
    ("F", 4): (2, 6, 8, 12),
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
}


def degrees_of_type(label: TypeLabel) -> tuple[int, ...]:
    """Invariant degrees of one irreducible type, ascending."""
    fam, n = label.family, label.rank
    if fam == "A":
        return tuple(range(2, n + 2))
    if fam in ("B", "C"):
        return tuple(range(2, 2 * n + 1, 2))
    if fam == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    return _EXCEPTIONAL_DEGREES[(fam, n)]


def degrees_of(decomposition: DecompositionLabel) -> tuple[int, ...]:
    """Concatenated factor degrees, ascending; empty for the trivial system."""
    out: list[int] = []
    for f in decomposition.factors:
        out.extend(degrees_of_type(f))
    return tuple(sorted(out))


def nu(degrees: Sequence[int]) -> Fraction:
    """Product of (d - 1)/d over the degrees; 1 for the trivial system."""
    value = Fraction(1)
    for d in degrees:
        value *= Fraction(d - 1, d)
    return value


def weyl_order(degrees: Sequence[int]) -> int:
    """Product of the degrees."""
    return math.prod(degrees)


def nu_of(spec: DecompositionLabel | TypeLabel | str) -> Fraction:
    """Degree ratio of a decomposition, a single type, or a parsed label."""
    if isinstance(spec, str):
        spec = parse_decomposition(spec)
    if isinstance(spec, TypeLabel):
        spec = DecompositionLabel((spec,))
    return nu(degrees_of(spec))


def exponents_from_heights(rs: RootSystem) -> tuple[int, ...]:
    """Exponents computed from the height distribution of positive roots.

    Per irreducible component, the number of positive roots of height k
    equals the number of exponents that are >= k, so the exponent multiset
    is the conjugate partition of the height counts.  This route never
    consults the degree catalogue.
    """
    exponents: list[int] = []
    for comp in rs.cartan.components():
        members = set(comp)
        counts: Counter[int] = Counter()
        for r in rs.positive:
            support = {i for i, c in enumerate(r.coords) if c}
            if support & members:
                counts[r.height] += 1
        for j in range(1, counts[1] + 1):
            exponents.append(sum(1 for c in counts.values() if c >= j))
    return tuple(sorted(exponents))
