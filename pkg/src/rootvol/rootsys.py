"""Root systems generated from Cartan matrices by reflection closure.

Roots are integer coordinate vectors over the simple basis.  Reflection
matrices follow the row convention: row i holds the image of basis vector i,
so a coordinate row vector v maps to v @ M.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagram import (
    CartanMatrix,
    MarkedDiagram,
    NotFiniteTypeError,
    TypeLabel,
    cartan_of_type,
    delete_node,
)
from .exact import as_int

# Ten times the largest root count in the finite catalogue (E8 has 240).
CLOSURE_BOUND = 2400


@dataclass(frozen=True)
class Root:
    coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coords))


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanMatrix
    roots: tuple[Root, ...]
    positive: tuple[Root, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    theta: Root | None
    coord_set: frozenset[tuple[int, ...]]

    @property
    def rank(self) -> int:
        return self.cartan.size

    def __contains__(self, root: Root) -> bool:
        return root.coords in self.coord_set


def generate_roots(cartan: CartanMatrix, closure_bound: int = CLOSURE_BOUND) -> RootSystem:
    """Close the simple roots under the simple reflections.

    The closure of a finite-type matrix is the full root set.  Inputs that
    are not finite type make the orbit grow without bound and are rejected
    once it exceeds ``closure_bound``.
    """
    n = cartan.size
    a = cartan.entries
    seen: set[tuple[int, ...]] = set()
    frontier: list[tuple[int, ...]] = []
    for i in range(n):
        unit = tuple(1 if k == i else 0 for k in range(n))
        seen.add(unit)
        frontier.append(unit)
    while frontier:
        fresh = []
        for c in frontier:
            for j in range(n):
                pairing = sum(c[i] * a[i][j] for i in range(n))
                image = c[:j] + (c[j] - pairing,) + c[j + 1 :]
                if image not in seen:
                    seen.add(image)
                    fresh.append(image)
        if len(seen) > closure_bound:
            raise NotFiniteTypeError(
                f"reflection closure exceeded {closure_bound} vectors; "
                "input is not finite type"
            )
        frontier = fresh
    for c in seen:
        if any(x > 0 for x in c) and any(x < 0 for x in c):
            raise NotFiniteTypeError("closure produced a mixed-sign vector")
    ordered = sorted(seen, key=lambda c: (sum(c), c))
    roots = tuple(Root(c) for c in ordered)
    positive = tuple(r for r in roots if r.height > 0)
    theta = None
    if n >= 1 and len(cartan.components()) == 1:
        top = max(r.height for r in positive)
        peaks = [r for r in positive if r.height == top]
        if len(peaks) != 1:
            raise NotFiniteTypeError("highest root is not unique")
        theta = peaks[0]
    return RootSystem(
        cartan=cartan,
        roots=roots,
        positive=positive,
        gram=cartan.gram() if n else (),
        theta=theta,
        coord_set=frozenset(seen),
    )


@lru_cache(maxsize=None)
def system_of_type(label: TypeLabel) -> RootSystem:
    return generate_roots(cartan_of_type(label))


def highest_root(rs: RootSystem) -> Root:
    """Unique root dominating every positive root componentwise."""
    if rs.theta is None:
        raise ValueError("highest root requires an irreducible system")
    tc = rs.theta.coords
    for r in rs.positive:
        if any(rc > tc[i] for i, rc in enumerate(r.coords)):
            raise RuntimeError("maximal-height root fails componentwise dominance")
    return rs.theta


def reflection_matrix(rs: RootSystem, alpha: Root) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of the reflection through alpha, rows as images."""
    if alpha not in rs:
        raise ValueError(f"{alpha.coords} is not a root of this system")
    n = rs.rank
    g = rs.gram
    c = alpha.coords
    norm = sum(c[i] * c[j] * g[i][j] for i in range(n) for j in range(n))
    rows = []
    for i in range(n):
        coeff = as_int(2 * sum(g[i][j] * c[j] for j in range(n)) / norm)
        rows.append(tuple((1 if i == k else 0) - coeff * c[k] for k in range(n)))
    return tuple(rows)


@dataclass(frozen=True)
class Subsystem:
    """Node-deletion subsystem computed two independent ways: by filtering
    the ambient roots that are integral over the deleted basis, and by
    regenerating from the deleted Cartan matrix."""

    node: int
    filtered: tuple[Root, ...]
    system: RootSystem


def subsystem(rs: RootSystem, diagram: MarkedDiagram, node: int) -> Subsystem:
    if diagram.rank != rs.rank:
        raise ValueError("diagram and root system ranks differ")
    if not 0 <= node <= diagram.rank:
        raise IndexError(f"node {node} out of range 0..{diagram.rank}")
    if node == 0:
        filtered = rs.roots
    else:
        m = diagram.marks[node - 1]
        filtered = tuple(r for r in rs.roots if r.coords[node - 1] % m == 0)
    regenerated = generate_roots(delete_node(diagram, node))
    if len(filtered) != len(regenerated.roots):
        raise RuntimeError(
            f"subsystem cross-check failed at node {node}: "
            f"{len(filtered)} filtered vs {len(regenerated.roots)} regenerated"
        )
    return Subsystem(node, filtered, regenerated)
