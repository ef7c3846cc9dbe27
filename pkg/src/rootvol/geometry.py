"""Euclidean realization, cone location, cone-partition checks, Monte Carlo.

Conventions: coordinate vectors are rows; the embedding factor L has the
simple roots as rows, so a coordinate row b maps to the Cartesian point
b @ L and back via the inverse.  Cone 0 is the cone over the simple roots;
cone i (1 <= i <= l) replaces the i-th simple root with the lowest root,
whose coordinates are the (all negative) marks.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .diagram import (
    DecompositionLabel,
    TypeLabel,
    cartan_of_decomposition,
    parse_decomposition,
    parse_label,
)
from .identity import extended_diagram, node_terms
from .invariants import nu_of

DEFAULT_TOL = 1e-9

# Rows per batch when sampling; bounds peak memory, not the sample count.
_BATCH_ROWS = 200_000

# Planar angle of the cone between two simple roots, as a fraction of the
# full circle, keyed by the squared cosine of the angle between the roots.
_PLANAR_FRACTIONS = {
    Fraction(0): Fraction(1, 4),
    Fraction(1, 4): Fraction(1, 3),
    Fraction(1, 2): Fraction(3, 8),
    Fraction(3, 4): Fraction(5, 12),
}


def as_decomposition(spec: str | TypeLabel | DecompositionLabel) -> DecompositionLabel:
    if isinstance(spec, DecompositionLabel):
        return spec
    if isinstance(spec, TypeLabel):
        return DecompositionLabel((spec,))
    return parse_decomposition(spec)


@dataclass(frozen=True, eq=False)
class Embedding:
    """Floating realization of a root system from its exact Gram matrix."""

    decomposition: DecompositionLabel
    gram: tuple[tuple[Fraction, ...], ...]
    factor: np.ndarray
    inverse: np.ndarray

    @property
    def dimension(self) -> int:
        return self.factor.shape[0]

    def cartesian_from_coords(self, coords: np.ndarray) -> np.ndarray:
        return np.asarray(coords, dtype=float) @ self.factor

    def coords_from_cartesian(self, point: np.ndarray) -> np.ndarray:
        return np.asarray(point, dtype=float) @ self.inverse


@lru_cache(maxsize=None)
def _embedding_cached(decomposition: DecompositionLabel) -> Embedding:
    gram = cartan_of_decomposition(decomposition).gram()
    dense = np.array([[float(x) for x in row] for row in gram])
    factor = np.linalg.cholesky(dense)
    scale = np.max(np.abs(dense))
    if np.max(np.abs(factor @ factor.T - dense)) > 1e-12 * scale:
        raise RuntimeError("factorization does not reproduce the Gram matrix")
    return Embedding(decomposition, gram, factor, np.linalg.inv(factor))


def embedding_for(spec: str | TypeLabel | DecompositionLabel) -> Embedding:
    return _embedding_cached(as_decomposition(spec))


@dataclass(frozen=True)
class ConeLocation:
    """Cone index 0..l and the coefficients in that cone's basis.

    For cone 0 the coefficients follow the simple-root order.  For cone
    i >= 1 the first coefficient belongs to the lowest root and the rest to
    the remaining simple roots in ascending node order.
    """

    cone: int
    coefficients: tuple


def locate_cone(coords: Sequence, marks: Sequence[int]) -> ConeLocation:
    """Constructive cone location: if some coordinate is negative, pick the
    index maximizing b_i/n_i (smallest index on ties) and rewrite in that
    cone's basis.  Exact on exact inputs, float on float inputs."""
    b = list(coords)
    n = list(marks)
    if len(b) != len(n):
        raise ValueError("coordinate and mark vectors differ in length")
    if all(x >= 0 for x in b):
        return ConeLocation(0, tuple(b))
    best = 0
    best_ratio = b[0] / n[0]
    for i in range(1, len(b)):
        ratio = b[i] / n[i]
        if ratio > best_ratio:
            best = i
            best_ratio = ratio
    rewritten = [best_ratio]
    rewritten.extend(b[h] - n[h] * best_ratio for h in range(len(b)) if h != best)
    return ConeLocation(best + 1, tuple(rewritten))


@dataclass(frozen=True)
class VolumeEstimate:
    decomposition: DecompositionLabel
    samples: int
    seed: int
    workers: int
    hits: int
    exact: Fraction

    @property
    def estimate(self) -> float:
        return self.hits / self.samples

    @property
    def stderr(self) -> float:
        p = self.estimate
        return math.sqrt(p * (1 - p) / self.samples)

    @property
    def z_score(self) -> float:
        gap = self.estimate - float(self.exact)
        if self.stderr == 0:
            return 0.0 if gap == 0 else math.inf
        return gap / self.stderr

    def within(self, sigmas: float) -> bool:
        return abs(self.estimate - float(self.exact)) <= sigmas * self.stderr

    def as_dict(self) -> dict:
        return {
            "type": str(self.decomposition),
            "samples": self.samples,
            "seed": self.seed,
            "workers": self.workers,
            "estimate": self.estimate,
            "stderr": self.stderr,
            "exact": str(self.exact),
            "z_score": self.z_score,
        }


def _count_cone0(
    embedding: Embedding, count: int, seed: int, worker: int, tol: float
) -> int:
    rng = np.random.default_rng([seed, worker])
    inverse = embedding.inverse
    dim = embedding.dimension
    hits = 0
    remaining = count
    while remaining > 0:
        batch = min(remaining, _BATCH_ROWS)
        coords = rng.standard_normal((batch, dim)) @ inverse
        hits += int(np.count_nonzero(np.all(coords >= -tol, axis=1)))
        remaining -= batch
    return hits


def montecarlo_nu(
    spec: str | TypeLabel | DecompositionLabel,
    n_samples: int,
    seed: int,
    workers: int = 1,
    tol: float = DEFAULT_TOL,
) -> VolumeEstimate:
    """Fraction of uniform sphere directions lying in the simple-root cone.

    Directions are isotropic Gaussian points in Cartesian coordinates with
    the magnitude ignored.  Each worker consumes its own (seed, worker)
    substream, so totals depend only on (seed, workers)."""
    decomposition = as_decomposition(spec)
    if n_samples < 1000:
        raise ValueError("n_samples must be at least 1000")
    if workers < 1:
        raise ValueError("workers must be positive")
    embedding = embedding_for(decomposition)
    base, extra = divmod(n_samples, workers)
    counts = [base + (1 if w < extra else 0) for w in range(workers)]
    if workers == 1:
        hits = _count_cone0(embedding, counts[0], seed, 0, tol)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_count_cone0, embedding, counts[w], seed, w, tol)
                for w in range(workers)
            ]
            hits = sum(f.result() for f in futures)
    return VolumeEstimate(
        decomposition, n_samples, seed, workers, hits, nu_of(decomposition)
    )


@dataclass(frozen=True)
class PartitionReport:
    """Brute-force cone membership versus constructive location.

    `counts` follow the constructive assignment; `expected` holds the exact
    cone fractions.  Samples within tolerance of a wall are flagged as
    boundary and excluded from the agreement count, not failed."""

    label: TypeLabel
    samples: int
    seed: int
    tol: float
    counts: tuple[int, ...]
    expected: tuple[Fraction, ...]
    boundary_count: int
    failure_count: int
    mismatch_count: int

    @property
    def frequencies(self) -> tuple[float, ...]:
        return tuple(c / self.samples for c in self.counts)

    @property
    def z_scores(self) -> tuple[float, ...]:
        out = []
        for count, exact in zip(self.counts, self.expected):
            p = float(exact)
            stderr = math.sqrt(p * (1 - p) / self.samples)
            out.append((count / self.samples - p) / stderr)
        return tuple(out)

    @property
    def passed(self) -> bool:
        return (
            self.failure_count == 0
            and self.mismatch_count == 0
            and all(abs(z) <= 4 for z in self.z_scores)
        )

    def as_dict(self) -> dict:
        return {
            "type": str(self.label),
            "check": "partition",
            "samples": self.samples,
            "seed": self.seed,
            "counts": list(self.counts),
            "frequencies": list(self.frequencies),
            "expected": [str(x) for x in self.expected],
            "z_scores": list(self.z_scores),
            "boundary": self.boundary_count,
            "failures": self.failure_count,
            "mismatches": self.mismatch_count,
            "pass": self.passed,
        }


def partition_check(
    label: TypeLabel | str,
    n_samples: int = 10_000,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> PartitionReport:
    """Scan every cone for membership of each sampled direction: exactly one
    cone may contain it in its interior, and the constructive location must
    name that cone for every non-boundary sample."""
    if isinstance(label, str):
        label = parse_label(label)
    marked = extended_diagram(label)
    marks = np.array(marked.marks, dtype=float)
    terms = node_terms(label)
    embedding = embedding_for(label)
    dim = embedding.dimension

    rng = np.random.default_rng(seed)
    coords = rng.standard_normal((n_samples, dim)) @ embedding.inverse

    # Coefficients of each sample in every cone basis.  Cone 0 keeps the
    # simple basis; cone i swaps row i for the mark vector.
    inside = np.zeros((dim + 1, n_samples), dtype=bool)
    interior = np.zeros((dim + 1, n_samples), dtype=bool)
    inside[0] = np.all(coords >= -tol, axis=1)
    interior[0] = np.all(coords > tol, axis=1)
    for i in range(dim):
        basis = np.eye(dim)
        basis[i] = marks
        cone_coords = coords @ np.linalg.inv(basis)
        inside[i + 1] = np.all(cone_coords >= -tol, axis=1)
        interior[i + 1] = np.all(cone_coords > tol, axis=1)

    inside_counts = inside.sum(axis=0)
    interior_counts = interior.sum(axis=0)
    failures = (interior_counts >= 2) | (inside_counts == 0)
    boundary = ~failures & ((inside_counts >= 2) | (interior_counts == 0))
    clean = ~failures & ~boundary

    # Constructive assignment, vectorized to mirror locate_cone: smallest
    # index wins ties of b_i / n_i.
    nonneg = np.all(coords >= 0, axis=1)
    ratios = coords / marks
    assigned = np.where(nonneg, 0, np.argmax(ratios, axis=1) + 1)

    scanned = np.argmax(interior, axis=0)
    mismatches = int(np.count_nonzero(clean & (assigned != scanned)))

    counts = np.bincount(assigned, minlength=dim + 1)
    return PartitionReport(
        label=label,
        samples=n_samples,
        seed=seed,
        tol=tol,
        counts=tuple(int(c) for c in counts),
        expected=tuple(term.nu_value for term in terms),
        boundary_count=int(np.count_nonzero(boundary)),
        failure_count=int(np.count_nonzero(failures)),
        mismatch_count=mismatches,
    )


def planar_cone_fraction(spec: str | TypeLabel | DecompositionLabel) -> Fraction:
    """Exact fraction of the circle covered by a rank-2 simple-root cone,
    from the angle between the two simple roots."""
    decomposition = as_decomposition(spec)
    gram = cartan_of_decomposition(decomposition).gram()
    if len(gram) != 2:
        raise ValueError("planar cone fraction requires rank 2")
    if gram[0][1] > 0:
        raise ValueError("simple roots must meet at a non-acute angle")
    cos_sq = gram[0][1] ** 2 / (gram[0][0] * gram[1][1])
    try:
        return _PLANAR_FRACTIONS[cos_sq]
    except KeyError:
        raise ValueError(f"unrecognized rank-2 angle, cos^2 = {cos_sq}") from None
