"""Node deletion decompositions of extended diagrams and the exact sum check.

For an irreducible system, deleting node i of the extended diagram leaves a
rank-preserving subsystem; the degree ratios of the resulting decompositions
sum to exactly 1 over all nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagram import (
    DecompositionLabel,
    MarkedDiagram,
    TypeLabel,
    cartan_of_type,
    classify,
    delete_node,
    extend,
    parse_label,
)
from .invariants import degrees_of, nu, weyl_order
from .rootsys import system_of_type


@dataclass(frozen=True)
class NodeTerm:
    node: int
    decomposition: DecompositionLabel
    nu_value: Fraction
    scaled: Fraction


@dataclass(frozen=True)
class IdentityReport:
    label: TypeLabel
    terms: tuple[NodeTerm, ...]
    total: Fraction
    gamma: frozenset[int]

    @property
    def passed(self) -> bool:
        return self.total == 1


@lru_cache(maxsize=None)
def extended_diagram(label: TypeLabel) -> MarkedDiagram:
    return extend(label, system_of_type(label))


@lru_cache(maxsize=None)
def node_terms(label: TypeLabel) -> tuple[NodeTerm, ...]:
    """One term per node of the extended diagram, with |W|-scaled values."""
    marked = extended_diagram(label)
    order = weyl_order(degrees_of(classify(cartan_of_type(label))))
    terms = []
    for i in range(marked.rank + 1):
        decomposition = classify(delete_node(marked, i))
        value = nu(degrees_of(decomposition))
        terms.append(NodeTerm(i, decomposition, value, order * value))
    return tuple(terms)


def gamma_set(label: TypeLabel) -> frozenset[int]:
    """Nodes whose deletion reproduces the original type; always contains 0."""
    target = classify(cartan_of_type(label))
    return frozenset(t.node for t in node_terms(label) if t.decomposition == target)


def verify_identity(label: TypeLabel | str) -> IdentityReport:
    if isinstance(label, str):
        label = parse_label(label)
    terms = node_terms(label)
    total = sum((t.nu_value for t in terms), Fraction(0))
    return IdentityReport(label, terms, total, gamma_set(label))


def _scaled_json(value: Fraction) -> int | str:
    return value.numerator if value.denominator == 1 else str(value)


def report_as_dict(report: IdentityReport) -> dict:
    return {
        "type": str(report.label),
        "terms": [
            {
                "node": t.node,
                "decomposition": str(t.decomposition),
                "nu": str(t.nu_value),
                "scaled": _scaled_json(t.scaled),
            }
            for t in report.terms
        ],
        "total": str(report.total),
        "gamma": sorted(report.gamma),
    }


def report_as_text(report: IdentityReport) -> str:
    rows = [("node", "decomposition", "nu", "scaled")]
    for t in report.terms:
        rows.append((str(t.node), str(t.decomposition), str(t.nu_value), str(_scaled_json(t.scaled))))
    widths = [max(len(r[c]) for r in rows) for c in range(4)]
    lines = [f"type {report.label}"]
    for r in rows:
        lines.append("  ".join(val.ljust(w) for val, w in zip(r, widths)).rstrip())
    gamma = ",".join(str(i) for i in sorted(report.gamma))
    verdict = "PASS" if report.passed else "FAIL"
    lines.append(f"total = {report.total}  gamma = {{{gamma}}}  {verdict}")
    return "\n".join(lines)
