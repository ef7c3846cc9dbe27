"""Labels, Cartan matrices, classification, and extended diagrams."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootvol.diagram import (
    CartanMatrix,
    DecompositionLabel,
    InadmissibleLabelError,
    MarkedDiagram,
    NotFiniteTypeError,
    TypeLabel,
    cartan_of_decomposition,
    cartan_of_type,
    classify,
    delete_node,
    extend,
    parse_decomposition,
    parse_label,
)
from rootvol.rootsys import system_of_type

ALL_LABELS = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


def test_parse_label_roundtrip():
    for name in ALL_LABELS:
        assert str(parse_label(name)) == name


@pytest.mark.parametrize("bad", ["Q9", "B1", "C1", "D3", "D2", "A0", "E9", "F5", "G3", "x", "B", "3"])
def test_inadmissible_labels_rejected(bad):
    with pytest.raises(InadmissibleLabelError):
        parse_label(bad)


def test_decomposition_sorts_factors():
    d = parse_decomposition("C3xA1")
    assert str(d) == "A1xC3"
    assert d == parse_decomposition("A1xC3")
    assert d.rank == 4


def test_trivial_decomposition():
    d = parse_decomposition("-")
    assert d.is_trivial
    assert d.rank == 0
    assert str(d) == "-"


def test_labels_sort_family_first():
    assert TypeLabel("A", 7) < TypeLabel("B", 2) < TypeLabel("B", 3) < TypeLabel("G", 2)


def test_cartan_a2_entries():
    assert cartan_of_type(parse_label("A2")).entries == ((2, -1), (-1, 2))


def test_cartan_b2_c2_are_transposes():
    b2 = cartan_of_type(parse_label("B2")).entries
    c2 = cartan_of_type(parse_label("C2")).entries
    assert b2 == tuple(zip(*c2))
    assert b2 != c2


def test_cartan_asymmetric_bonds():
    # the second node of each bond below is the one hit twice
    b3 = cartan_of_type(parse_label("B3")).entries
    assert (b3[1][2], b3[2][1]) == (-2, -1)
    c3 = cartan_of_type(parse_label("C3")).entries
    assert (c3[1][2], c3[2][1]) == (-1, -2)
    g2 = cartan_of_type(parse_label("G2")).entries
    assert (g2[0][1], g2[1][0]) == (-1, -3)
    f4 = cartan_of_type(parse_label("F4")).entries
    assert (f4[1][2], f4[2][1]) == (-2, -1)


def test_cartan_shapes():
    d4 = cartan_of_type(parse_label("D4"))
    # fork node: three neighbors
    assert d4.neighbors(1) == (0, 2, 3)
    e6 = cartan_of_type(parse_label("E6"))
    assert e6.neighbors(3) == (1, 2, 4)


@pytest.mark.parametrize(
    "entries",
    [
        ((2, -1),),  # not square
        ((1, -1), (-1, 2)),  # bad diagonal
        ((2, 1), (1, 2)),  # positive off-diagonal
        ((2, -1), (0, 2)),  # zero pattern not symmetric
        ((2, -1.0), (-1, 2)),  # non-integer
    ],
)
def test_cartan_matrix_rejects_invalid(entries):
    with pytest.raises((ValueError, TypeError)):
        CartanMatrix(entries)


def test_cartan_matrix_allows_bond_product_four():
    # the rank-1 extension carries a double bond in both directions; the
    # constructor accepts it, finite-type detection rejects it
    m = CartanMatrix(((2, -2), (-2, 2)))
    assert not m.is_finite_type()


def test_components_of_block_matrix():
    d = parse_decomposition("A2xB2")
    m = cartan_of_decomposition(d)
    assert m.components() == ((0, 1), (2, 3))


def test_symmetrizer_b3():
    d = cartan_of_type(parse_label("B3")).symmetrizer()
    assert d == (Fraction(2), Fraction(2), Fraction(1))


def test_symmetrizer_g2_and_gram():
    g2 = cartan_of_type(parse_label("G2"))
    assert g2.symmetrizer() == (Fraction(1), Fraction(3))
    gram = g2.gram()
    assert gram == ((Fraction(2), Fraction(-3)), (Fraction(-3), Fraction(6)))


def test_unsymmetrizable_matrix():
    # an odd cycle of asymmetric bonds cannot carry consistent lengths
    m = CartanMatrix(((2, -1, -2), (-2, 2, -1), (-1, -2, 2)))
    assert m.symmetrizer() is None
    assert not m.is_finite_type()
    with pytest.raises(NotFiniteTypeError):
        m.gram()


def test_finite_type_catalogue():
    for name in ALL_LABELS:
        assert cartan_of_type(parse_label(name)).is_finite_type(), name


def test_affine_extension_is_not_finite_type():
    marked = extend(parse_label("A2"), system_of_type(parse_label("A2")))
    assert not marked.cartan.is_finite_type()


@pytest.mark.parametrize("name", ALL_LABELS)
def test_classify_roundtrip(name):
    label = parse_label(name)
    got = classify(cartan_of_type(label))
    if name == "C2":
        # rank-2 B and C coincide; B2 is the canonical name
        assert str(got) == "B2"
    else:
        assert got == DecompositionLabel((label,))


def test_classify_products():
    d = parse_decomposition("A1xA2xG2")
    assert classify(cartan_of_decomposition(d)) == d


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL_LABELS), st.randoms(use_true_random=False))
def test_classify_invariant_under_relabeling(name, rng):
    label = parse_label(name)
    cartan = cartan_of_type(label)
    order = list(range(cartan.size))
    rng.shuffle(order)
    shuffled = CartanMatrix(
        tuple(tuple(cartan.entries[order[i]][order[j]] for j in range(cartan.size)) for i in range(cartan.size))
    )
    assert classify(shuffled) == classify(cartan)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ALL_LABELS), st.sampled_from(ALL_LABELS))
def test_classify_block_sums(first, second):
    d = DecompositionLabel((parse_label(first), parse_label(second)))
    want = DecompositionLabel(
        classify(cartan_of_type(parse_label(first))).factors
        + classify(cartan_of_type(parse_label(second))).factors
    )
    assert classify(cartan_of_decomposition(d)) == want


def test_extend_a2():
    marked = extend(parse_label("A2"), system_of_type(parse_label("A2")))
    assert marked.marks == (-1, -1)
    assert marked.cartan.entries[0] == (2, -1, -1)


def test_extend_a1_double_bond():
    marked = extend(parse_label("A1"), system_of_type(parse_label("A1")))
    assert marked.cartan.entries == ((2, -2), (-2, 2))
    assert marked.marks == (-1,)


def test_extend_g2_marks():
    marked = extend(parse_label("G2"), system_of_type(parse_label("G2")))
    assert marked.marks == (-3, -2)


def test_extend_e8_attachment():
    marked = extend(parse_label("E8"), system_of_type(parse_label("E8")))
    assert marked.cartan.neighbors(0) == (8,)
    assert min(marked.marks) == -6


def test_extend_rejects_mismatched_system():
    with pytest.raises(ValueError):
        extend(parse_label("A2"), system_of_type(parse_label("B2")))


def test_delete_node_restores_base():
    label = parse_label("F4")
    marked = extend(label, system_of_type(label))
    assert delete_node(marked, 0) == cartan_of_type(label)
    assert delete_node(marked, 2).size == 4
    with pytest.raises(IndexError):
        delete_node(marked, 5)


def test_marked_diagram_validation():
    good = cartan_of_type(parse_label("A2"))
    with pytest.raises(ValueError):
        MarkedDiagram(good, (-1, -1))  # size mismatch
    ext = extend(parse_label("A2"), system_of_type(parse_label("A2")))
    with pytest.raises(ValueError):
        MarkedDiagram(ext.cartan, (1, -1))  # marks must be negative
