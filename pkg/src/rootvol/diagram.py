"""Cartan matrices and Dynkin diagrams: construction, classification, extension.

Canonical node numbering (frozen; ``classify`` is insensitive to node order):

    A_n : 1 - 2 - ... - n
    B_n : 1 - 2 - ... - (n-1) = n     double bond, node n short
    C_n : 1 - 2 - ... - (n-1) = n     double bond, node n long
    D_n : 1 - 2 - ... - (n-2), with n-1 and n both attached to n-2
    E_n : chain 1 - 3 - 4 - 5 - ... - n, node 2 attached to node 4
    F_4 : 1 - 2 = 3 - 4               double bond, node 3 short
    G_2 : 1 = 2                       triple bond, node 1 short

Pairing convention: ``entries[i][j] = 2 (a_i, a_j) / (a_j, a_j)``, so the
simple reflection through node j sends a_i to ``a_i - entries[i][j] a_j``.
Extended diagrams carry the added node at index 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .exact import as_int, det

if TYPE_CHECKING:
    from .rootsys import RootSystem

__all__ = [
    "CartanMatrix",
    "DecompositionLabel",
    "InadmissibleLabelError",
    "MarkedDiagram",
    "NotFiniteTypeError",
    "TypeLabel",
    "cartan_of_decomposition",
    "cartan_of_type",
    "classify",
    "delete_node",
    "extend",
    "parse_decomposition",
    "parse_label",
]


class InadmissibleLabelError(ValueError):
    """Family/rank pair outside the finite catalogue."""


class NotFiniteTypeError(ValueError):
    """Matrix is not the Cartan matrix of a finite root system."""


_ADMISSIBLE = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True, order=True)
class TypeLabel:
    """An irreducible type, e.g. TypeLabel('B', 3); sorts family-first."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        rule = _ADMISSIBLE.get(self.family)
        if rule is None or not rule(self.rank):
            raise InadmissibleLabelError(
                f"{self.family}{self.rank}: admissible are A(n>=1), B(n>=2), "
                f"C(n>=2), D(n>=4), E6..E8, F4, G2"
            )

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class DecompositionLabel:
    """A multiset of irreducible factors in canonical sorted order."""

    factors: tuple[TypeLabel, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.factors))
        if ordered != self.factors:
            object.__setattr__(self, "factors", ordered)

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors) if self.factors else "-"


_LABEL_RE = re.compile(r"([A-G])([0-9]+)")


def parse_label(text: str) -> TypeLabel:
    """Parse a single irreducible label such as 'F4'."""
    m = _LABEL_RE.fullmatch(text.strip())
    if m is None:
        raise InadmissibleLabelError(f"cannot parse type label {text!r}")
    return TypeLabel(m.group(1), int(m.group(2)))


def parse_decomposition(text: str) -> DecompositionLabel:
    """Parse a product label such as 'A1xC3'; '-' is the trivial system."""
    body = text.strip()
    if body in ("-", ""):
        return DecompositionLabel(())
    return DecompositionLabel(tuple(parse_label(p) for p in body.split("x")))


@dataclass(frozen=True)
class CartanMatrix:
    """Integer matrix with diagonal 2, nonpositive off-diagonal entries, and
    a symmetric zero pattern.  Finite-type constraints (bond products at most
    3, positive definite symmetrization) are checked by ``is_finite_type``,
    not by the constructor, because extended diagrams violate them."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("Cartan matrix must be square")
            for j, a in enumerate(row):
                if not isinstance(a, int):
                    raise ValueError("Cartan entries must be integers")
                if i == j and a != 2:
                    raise ValueError("diagonal entries must equal 2")
                if i != j and a > 0:
                    raise ValueError("off-diagonal entries must be <= 0")
                if i != j and (a == 0) != (self.entries[j][i] == 0):
                    raise ValueError("zero pattern must be symmetric")

    @property
    def size(self) -> int:
        return len(self.entries)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.size) if j != i and self.entries[i][j] != 0)

    def submatrix(self, keep: Sequence[int]) -> CartanMatrix:
        return CartanMatrix(
            tuple(tuple(self.entries[i][j] for j in keep) for i in keep)
        )

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted index tuples, ordered by least node."""
        seen: set[int] = set()
        out = []
        for v in range(self.size):
            if v in seen:
                continue
            comp = []
            stack = [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for u in self.neighbors(x):
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            out.append(tuple(sorted(comp)))
        return tuple(out)

    def symmetrizer(self) -> tuple[Fraction, ...] | None:
        """Positive rationals d with d_i * a_ij = d_j * a_ji, normalized to
        minimum 1 on each component; None if the matrix is not symmetrizable."""
        d: list[Fraction | None] = [None] * self.size
        for comp in self.components():
            d[comp[0]] = Fraction(1)
            stack = [comp[0]]
            while stack:
                i = stack.pop()
                for j in self.neighbors(i):
                    value = d[i] * self.entries[j][i] / self.entries[i][j]
                    if d[j] is None:
                        d[j] = value
                        stack.append(j)
            low = min(d[k] for k in comp)
            for k in comp:
                d[k] /= low
        for i in range(self.size):
            for j in range(self.size):
                if self.entries[i][j] * d[j] != self.entries[j][i] * d[i]:
                    return None
        return tuple(d)

    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Exact pairing matrix (a_i, a_j) with short roots of squared length 2."""
        d = self.symmetrizer()
        if d is None:
            raise NotFiniteTypeError("matrix is not symmetrizable")
        return tuple(
            tuple(self.entries[i][j] * d[j] for j in range(self.size))
            for i in range(self.size)
        )

    def is_finite_type(self) -> bool:
        """Exact test: symmetrizable with positive definite pairing matrix."""
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if self.entries[i][j] * self.entries[j][i] > 3:
                    return False
        d = self.symmetrizer()
        if d is None:
            return False
        g = self.gram()
        for k in range(1, self.size + 1):
            minor = det([row[:k] for row in g[:k]])
            if minor <= 0:
                return False
        return True


def cartan_of_type(label: TypeLabel) -> CartanMatrix:
    """Cartan matrix of an irreducible type in the canonical numbering."""
    fam, n = label.family, label.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if fam == "A":
        for i in range(1, n):
            bond(i, i + 1)
    elif fam in ("B", "C"):
        for i in range(1, n - 1):
            bond(i, i + 1)
        if fam == "B":
            bond(n - 1, n, -2, -1)
        else:
            bond(n - 1, n, -1, -2)
    elif fam == "D":
        for i in range(1, n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1)
        bond(n - 2, n)
    elif fam == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(2, 4)
    elif fam == "F":
        bond(1, 2)
        bond(2, 3, -2, -1)
        bond(3, 4)
    else:
        bond(1, 2, -1, -3)
    return CartanMatrix(tuple(tuple(row) for row in a))


def cartan_of_decomposition(decomposition: DecompositionLabel) -> CartanMatrix:
    """Block diagonal Cartan matrix of a product, factors in canonical order."""
    blocks = [cartan_of_type(f) for f in decomposition.factors]
    n = sum(b.size for b in blocks)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    offset = 0
    for b in blocks:
        for i in range(b.size):
            for j in range(b.size):
                a[offset + i][offset + j] = b.entries[i][j]
        offset += b.size
    return CartanMatrix(tuple(tuple(row) for row in a))


def _permuted_equal(cartan: CartanMatrix, order: Sequence[int], target: CartanMatrix) -> bool:
    k = len(order)
    return all(
        cartan.entries[order[p]][order[q]] == target.entries[p][q]
        for p in range(k)
        for q in range(k)
    )


def _classify_path(cartan: CartanMatrix, adj: dict[int, list[int]], nodes: Sequence[int]):
    ends = [v for v in nodes if len(adj[v]) == 1]
    if len(ends) != 2:
        return None
    order = [min(ends)]
    while len(order) < len(nodes):
        prev = order[-2] if len(order) > 1 else None
        step = [u for u in adj[order[-1]] if u != prev]
        if len(step) != 1:
            return None
        order.append(step[0])
    k = len(order)
    mults = [
        cartan.entries[a][b] * cartan.entries[b][a]
        for a, b in zip(order, order[1:])
    ]
    candidates: list[TypeLabel] = []
    if all(m == 1 for m in mults):
        candidates.append(TypeLabel("A", k))
    elif mults == [3] and k == 2:
        candidates.append(TypeLabel("G", 2))
    elif mults.count(2) == 1 and all(m in (1, 2) for m in mults):
        candidates.append(TypeLabel("B", k))
        if k >= 3:
            candidates.append(TypeLabel("C", k))
        if k == 4:
            candidates.append(TypeLabel("F", 4))
    for cand in candidates:
        target = cartan_of_type(cand)
        for o in (order, order[::-1]):
            if _permuted_equal(cartan, o, target):
                return cand
    return None


def _classify_branch(cartan: CartanMatrix, adj: dict[int, list[int]], branch: int):
    arms: list[list[int]] = []
    for first in sorted(adj[branch]):
        arm = [first]
        prev = branch
        while True:
            step = [u for u in adj[arm[-1]] if u != prev]
            if not step:
                break
            if len(step) != 1:
                return None
            prev = arm[-1]
            arm.append(step[0])
        arms.append(arm)
    if len(arms) != 3:
        return None
    arms.sort(key=len)
    la, lb, lc = (len(arm) for arm in arms)
    size = la + lb + lc + 1
    mapping: dict[int, int] = {}
    if la == 1 and lb == 1:
        cand = TypeLabel("D", size)
        mapping[branch] = size - 2
        mapping[arms[0][0]] = size - 1
        mapping[arms[1][0]] = size
        for depth, v in enumerate(arms[2]):
            mapping[v] = size - 3 - depth
    elif (la, lb) == (1, 2) and lc in (2, 3, 4):
        cand = TypeLabel("E", size)
        mapping[branch] = 4
        mapping[arms[0][0]] = 2
        mapping[arms[1][0]] = 3
        mapping[arms[1][1]] = 1
        for depth, v in enumerate(arms[2]):
            mapping[v] = 5 + depth
    else:
        return None
    order = [v for v, _ in sorted(mapping.items(), key=lambda kv: kv[1])]
    return cand if _permuted_equal(cartan, order, cartan_of_type(cand)) else None


def _classify_component(cartan: CartanMatrix, nodes: Sequence[int]):
    if len(nodes) == 1:
        return TypeLabel("A", 1)
    adj = {v: [u for u in nodes if u != v and cartan.entries[v][u] != 0] for v in nodes}
    branch = [v for v in nodes if len(adj[v]) >= 3]
    if any(len(adj[v]) >= 4 for v in nodes) or len(branch) >= 2:
        return None
    if branch:
        return _classify_branch(cartan, adj, branch[0])
    return _classify_path(cartan, adj, nodes)


def classify(cartan: CartanMatrix) -> DecompositionLabel:
    """Decompose into irreducible factors, canonically labeled.

    Rank-2 double-bond components are reported as B2.  The empty matrix
    classifies as the trivial decomposition.
    """
    factors = []
    for comp in cartan.components():
        label = _classify_component(cartan, comp)
        if label is None:
            raise NotFiniteTypeError(f"component {comp} matches no finite-type diagram")
        factors.append(label)
    return DecompositionLabel(tuple(factors))


@dataclass(frozen=True)
class MarkedDiagram:
    """Extended diagram: Cartan matrix of size rank+1 with the added node at
    index 0, plus the coordinates of the added root in the original basis
    (the marks, all strictly negative)."""

    cartan: CartanMatrix
    marks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.cartan.size != len(self.marks) + 1:
            raise ValueError("marks length must be rank of the base diagram")
        if any(m >= 0 for m in self.marks):
            raise ValueError("marks must be strictly negative")

    @property
    def rank(self) -> int:
        return self.cartan.size - 1


def extend(label: TypeLabel, rootsystem: RootSystem) -> MarkedDiagram:
    """Adjoin the negative of the highest root as node 0."""
    base = cartan_of_type(label)
    if rootsystem.cartan != base:
        raise ValueError("root system was not generated from cartan_of_type(label)")
    theta = rootsystem.theta
    if theta is None:
        raise ValueError("extension is defined for irreducible systems only")
    g = rootsystem.gram
    n = base.size
    tc = theta.coords
    pair = [sum(tc[i] * g[i][j] for i in range(n)) for j in range(n)]
    theta_norm = sum(tc[j] * pair[j] for j in range(n))
    row0 = [2] + [as_int(Fraction(-2) * pair[j] / g[j][j]) for j in range(n)]
    col0 = [as_int(Fraction(-2) * pair[j] / theta_norm) for j in range(n)]
    entries = [tuple(row0)]
    for i in range(n):
        entries.append((col0[i],) + base.entries[i])
    marks = tuple(-c for c in tc)
    return MarkedDiagram(CartanMatrix(tuple(entries)), marks)


def delete_node(diagram: MarkedDiagram, node: int) -> CartanMatrix:
    """Remove one node (0 removes the added node and restores the original)."""
    if not 0 <= node <= diagram.rank:
        raise IndexError(f"node {node} out of range 0..{diagram.rank}")
    keep = [k for k in range(diagram.rank + 1) if k != node]
    return diagram.cartan.submatrix(keep)
