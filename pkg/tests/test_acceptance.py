"""Acceptance battery: every criterion runs at its stated tolerance and
budget, printing one pass/fail line each.  Run with -s to see the lines."""

from __future__ import annotations

from rootvol import acceptance


def _report(result) -> None:
    budget = f" / budget {result.budget:.0f}s" if result.budget is not None else ""
    print(f"[criterion {result.number}] {'PASS' if result.passed else 'FAIL'} "
          f"{result.name} ({result.seconds:.2f}s{budget})")
    assert result.passed, result.details


def test_criterion_1_node_deletion_identity():
    _report(acceptance.criterion_1())


def test_criterion_2_printed_tables():
    _report(acceptance.criterion_2())


def test_criterion_3_binomial_identities():
    _report(acceptance.criterion_3())


def test_criterion_4_degree_oracle_agreement():
    _report(acceptance.criterion_4())


def test_criterion_5_solomon_factorization():
    _report(acceptance.criterion_5())


def test_criterion_6_coset_character_identities():
    _report(acceptance.criterion_6())


def test_criterion_7_restricted_expansion():
    _report(acceptance.criterion_7())


def test_criterion_8_monte_carlo_volumes():
    _report(acceptance.criterion_8())


def test_criterion_9_cone_partition():
    _report(acceptance.criterion_9())
