"""Root generation by reflection closure, highest roots, subsystems."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootvol.diagram import (
    CartanMatrix,
    NotFiniteTypeError,
    cartan_of_decomposition,
    extend,
    parse_decomposition,
    parse_label,
)
from rootvol.rootsys import (
    Root,
    generate_roots,
    highest_root,
    reflection_matrix,
    subsystem,
    system_of_type,
)

ROOT_COUNTS = {
    "A1": 2,
    "A2": 6,
    "A3": 12,
    "B2": 8,
    "B3": 18,
    "C3": 18,
    "D4": 24,
    "G2": 12,
    "F4": 48,
    "E6": 72,
    "E7": 126,
    "E8": 240,
}


@pytest.mark.parametrize("name,count", sorted(ROOT_COUNTS.items()))
def test_root_counts(name, count):
    rs = system_of_type(parse_label(name))
    assert len(rs.roots) == count
    assert len(rs.positive) == count // 2


@pytest.mark.parametrize("name", sorted(ROOT_COUNTS))
def test_roots_have_uniform_sign_and_negations(name):
    rs = system_of_type(parse_label(name))
    for r in rs.roots:
        assert all(c >= 0 for c in r.coords) or all(c <= 0 for c in r.coords)
        assert -r in rs
    assert len({r.coords for r in rs.roots}) == len(rs.roots)


def test_positive_roots_positive_height():
    rs = system_of_type(parse_label("B3"))
    assert all(r.height > 0 for r in rs.positive)


def test_highest_root_values():
    assert highest_root(system_of_type(parse_label("A3"))).coords == (1, 1, 1)
    assert highest_root(system_of_type(parse_label("G2"))).coords == (3, 2)
    assert highest_root(system_of_type(parse_label("E8"))).coords == (2, 3, 4, 6, 5, 4, 3, 2)


def test_highest_root_dominates_componentwise():
    for name in ("B3", "C4", "D5", "F4", "E6"):
        rs = system_of_type(parse_label(name))
        theta = highest_root(rs)
        for r in rs.roots:
            assert all(rc <= tc for rc, tc in zip(r.coords, theta.coords))


def test_highest_root_requires_irreducible():
    rs = generate_roots(cartan_of_decomposition(parse_decomposition("A1xA1")))
    assert rs.theta is None
    with pytest.raises(ValueError):
        highest_root(rs)


def test_generate_rejects_affine_matrix():
    with pytest.raises(NotFiniteTypeError):
        generate_roots(CartanMatrix(((2, -2), (-2, 2))))


def test_reflection_matrix_rank_two_example():
    rs = system_of_type(parse_label("A2"))
    assert reflection_matrix(rs, Root((1, 0))) == ((-1, 0), (1, 1))
    assert reflection_matrix(rs, Root((0, 1))) == ((1, 1), (0, -1))


def test_reflection_is_involution():
    rs = system_of_type(parse_label("F4"))
    for alpha in rs.positive[:8]:
        m = reflection_matrix(rs, alpha)
        n = len(m)
        prod = tuple(
            tuple(sum(m[i][k] * m[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        assert prod == tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(sorted(ROOT_COUNTS)), st.data())
def test_reflections_permute_the_root_set(name, data):
    rs = system_of_type(parse_label(name))
    alpha = data.draw(st.sampled_from(rs.roots))
    m = reflection_matrix(rs, alpha)
    images = set()
    for r in rs.roots:
        image = tuple(
            sum(r.coords[i] * m[i][j] for i in range(rs.rank)) for j in range(rs.rank)
        )
        assert image in rs.coord_set
        images.add(image)
    assert len(images) == len(rs.roots)


def test_reflection_fixes_nothing_but_wall():
    rs = system_of_type(parse_label("B2"))
    alpha = Root((1, 0))
    m = reflection_matrix(rs, alpha)
    image = tuple(sum(alpha.coords[i] * m[i][j] for i in range(2)) for j in range(2))
    assert image == (-1, 0)


def test_subsystem_counts_both_routes():
    label = parse_label("F4")
    rs = system_of_type(label)
    marked = extend(label, rs)
    # deleting the added node keeps everything
    assert len(subsystem(rs, marked, 0).filtered) == 48
    sizes = {node: len(subsystem(rs, marked, node).filtered) for node in range(1, 5)}
    # 20 = A1 x C3, 12 = A2 x A2, 14 = A1 x A3, 32 = B4
    assert sizes == {1: 20, 2: 12, 3: 14, 4: 32}


def test_subsystem_rejects_bad_node():
    label = parse_label("A2")
    rs = system_of_type(label)
    marked = extend(label, rs)
    with pytest.raises(IndexError):
        subsystem(rs, marked, 3)
