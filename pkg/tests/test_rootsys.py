from fractions import Fraction

import numpy as np
import pytest

from weightmult import (AlgebraType, ValidationError, Weight, build_root_system, dynkin_to_root,
                        inner_product, root_to_dynkin, weyl_dimension)
from weightmult.rootsys import Basis, cartan_matrix

import oracles

# reference positive-root tables
TABLE_A2 = [(1, 0), (0, 1), (1, 1)]
TABLE_B2 = [(1, 0), (0, 1), (1, 1), (1, 2)]
TABLE_G2 = [(1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)]
# this G2 table uses the other labeling; swap coordinates before use
TABLE_G2_SWAPPED = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
TABLE_A4 = [
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 0, 0),
    (0, 1, 1, 0), (0, 0, 1, 1), (1, 1, 1, 0), (0, 1, 1, 1), (1, 1, 1, 1),
]
TABLE_F4 = [
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 0, 0), (0, 1, 1, 0),
    (0, 0, 1, 1), (1, 1, 1, 0), (0, 1, 1, 1), (1, 1, 1, 1), (0, 2, 1, 0), (0, 2, 1, 1),
    (1, 2, 1, 0), (0, 2, 2, 1), (1, 2, 1, 1), (2, 2, 1, 0), (1, 2, 2, 1), (2, 2, 1, 1),
    (1, 3, 2, 1), (2, 2, 2, 1), (2, 3, 2, 1), (2, 4, 2, 1), (2, 4, 3, 1), (2, 4, 3, 2),
]

ALGEBRAS = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6"]


@pytest.mark.parametrize("name, table", [("A2", TABLE_A2), ("B2", TABLE_B2), ("G2", TABLE_G2),
                                         ("A4", TABLE_A4)])
def test_roots_match_table_order(name, table):
    assert build_root_system(name).positive_roots == tuple(table)


def test_g2_swapped_program_data():
    swapped = [(b, a) for a, b in TABLE_G2_SWAPPED]
    assert set(swapped) == set(build_root_system("G2").positive_roots)


@pytest.mark.parametrize("name, table", [("A4", TABLE_A4), ("F4", TABLE_F4)])
def test_roots_match_table_as_sets(name, table):
    rs = build_root_system(name)
    assert set(rs.positive_roots) == set(table)
    assert rs.positive_roots[:rs.rank] == tuple(table[:rs.rank])


def test_f4_highest_root():
    roots = build_root_system("F4").positive_roots
    assert roots[-1] == (2, 4, 3, 2)
    assert sum(roots[-1]) == 11


@pytest.mark.parametrize("name, t", [("A1", 1), ("A2", 3), ("B2", 4), ("G2", 6), ("A4", 10),
                                     ("F4", 24), ("D4", 12), ("E6", 36), ("E8", 120)])
def test_root_counts(name, t):
    assert build_root_system(name).t == t


@pytest.mark.parametrize("name", ALGEBRAS)
def test_root_ordering(name):
    roots = build_root_system(name).positive_roots
    n = len(roots[0])
    assert all(sum(r) == 1 for r in roots[:n])
    heights = [sum(r) for r in roots]
    assert heights == sorted(heights)
    assert len(set(roots)) == len(roots)


@pytest.mark.parametrize("text", ["A0", "B1", "C2", "D3", "E5", "F3", "G3", "X2", "A", ""])
def test_invalid_algebra(text):
    with pytest.raises(ValidationError):
        build_root_system(text)


def test_algebra_type_parse():
    assert AlgebraType.parse("b2") == AlgebraType("B", 2)
    assert str(AlgebraType.parse("F4")) == "F4"


def test_cartan_convention():
    # cartan[i][j] = <alpha_i, alpha_j^vee>; alpha_1 long in B2 and G2
    assert cartan_matrix(AlgebraType("B", 2)).tolist() == [[2, -2], [-1, 2]]
    assert cartan_matrix(AlgebraType("G", 2)).tolist() == [[2, -3], [-1, 2]]


def test_dynkin_to_root_examples():
    a1, a2 = build_root_system("A1"), build_root_system("A2")
    assert dynkin_to_root(a2, Weight.dynkin(0, 0)).coords == (0, 0)
    assert dynkin_to_root(a2, Weight.dynkin(1, 1)).coords == (1, 1)
    half = dynkin_to_root(a1, Weight.dynkin(1))
    assert half.coords == (Fraction(1, 2),)
    assert half.basis is Basis.ROOT


def test_root_to_dynkin_examples():
    a2 = build_root_system("A2")
    assert root_to_dynkin(a2, Weight.roots(1, 1)).coords == (1, 1)
    assert root_to_dynkin(a2, Weight.roots(1, 0)).coords == (2, -1)
    for name in ALGEBRAS:
        rs = build_root_system(name)
        zero = Weight.roots([0] * rs.rank)
        assert root_to_dynkin(rs, zero).coords == (0,) * rs.rank


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A4", "F4", "C3", "D4"])
def test_dynkin_to_root_solves_cartan_system(name):
    # coords x solve x @ cartan = labels
    rs = build_root_system(name)
    cartan = [[int(v) for v in row] for row in cartan_matrix(rs.algebra)]
    rng = np.random.default_rng(3)
    for _ in range(20):
        labels = [int(v) for v in rng.integers(-5, 6, rs.rank)]
        columns = [[cartan[i][j] for i in range(rs.rank)] for j in range(rs.rank)]
        expected = oracles.rational_solve(columns, labels)
        assert dynkin_to_root(rs, Weight.dynkin(labels)).coords == expected


@pytest.mark.parametrize("name", ALGEBRAS)
def test_conversion_round_trip(name):
    rs = build_root_system(name)
    rng = np.random.default_rng(11)
    for vec in rng.integers(-20, 21, size=(1000, rs.rank)):
        w = Weight.dynkin([int(v) for v in vec])
        assert root_to_dynkin(rs, dynkin_to_root(rs, w)) == w
        r = Weight.roots([int(v) for v in vec])
        assert dynkin_to_root(rs, root_to_dynkin(rs, r)) == r


def test_inner_product_examples():
    a2 = build_root_system("A2")
    al1, al2 = Weight.roots(1, 0), Weight.roots(0, 1)
    assert inner_product(a2, al1, al1) == 2
    assert inner_product(a2, al1, al2) == -1
    assert inner_product(a2, Weight.roots(0, 0), Weight.dynkin(3, 7)) == 0


@pytest.mark.parametrize("name, norms", [("B2", (4, 2)), ("G2", (6, 2)), ("F4", (2, 2, 4, 4)),
                                         ("C3", (2, 2, 4))])
def test_short_roots_have_norm_two(name, norms):
    rs = build_root_system(name)
    got = []
    for i in range(rs.rank):
        e = Weight.roots([int(i == k) for k in range(rs.rank)])
        got.append(inner_product(rs, e, e))
    assert tuple(got) == norms


def test_inner_product_rank_mismatch():
    with pytest.raises(ValidationError):
        inner_product(build_root_system("A2"), Weight.roots(1, 0), Weight.roots(1, 0, 0))


@pytest.mark.parametrize("name", ALGEBRAS)
def test_rho_is_half_sum(name):
    rs = build_root_system(name)
    total = [sum(r[i] for r in rs.positive_roots) for i in range(rs.rank)]
    rho = dynkin_to_root(rs, Weight.dynkin([1] * rs.rank))
    assert rho.coords == tuple(Fraction(x, 2) for x in total)


@pytest.mark.parametrize("p, q", [(5, 3), (0, 0), (1, 1), (7, 2), (0, 9)])
def test_weyl_dimension_a2(p, q):
    assert weyl_dimension(build_root_system("A2"), Weight.dynkin(p, q)) == oracles.dim_a2(p, q)


@pytest.mark.parametrize("p, q", [(10, 12), (1, 0), (0, 1), (5, 2), (3, 3)])
def test_weyl_dimension_b2(p, q):
    assert weyl_dimension(build_root_system("B2"), Weight.dynkin(p, q)) == oracles.dim_b2(p, q)


@pytest.mark.parametrize("p, q", [(9, 9), (0, 2), (1, 0), (0, 1), (3, 0), (2, 5)])
def test_weyl_dimension_g2(p, q):
    assert weyl_dimension(build_root_system("G2"), Weight.dynkin(p, q)) == oracles.dim_g2(p, q)


def test_weyl_dimension_reference_values():
    assert weyl_dimension(build_root_system("A2"), Weight.dynkin(5, 3)) == 120
    assert weyl_dimension(build_root_system("G2"), Weight.dynkin(9, 9)) == 1_000_000
    assert weyl_dimension(build_root_system("B2"), Weight.dynkin(10, 12)) == 20020


@pytest.mark.parametrize("n", range(5))
def test_weyl_dimension_a4_equal(n):
    assert weyl_dimension(build_root_system("A4"), Weight.dynkin(n, n, n, n)) == (n + 1) ** 10


@pytest.mark.parametrize("name", ALGEBRAS)
def test_weyl_dimension_trivial(name):
    rs = build_root_system(name)
    assert weyl_dimension(rs, Weight.dynkin([0] * rs.rank)) == 1


def test_weyl_dimension_small_known():
    # fundamental representations
    assert weyl_dimension(build_root_system("F4"), Weight.dynkin(1, 0, 0, 0)) == 26
    assert weyl_dimension(build_root_system("E6"), Weight.dynkin(1, 0, 0, 0, 0, 0)) == 27
    assert weyl_dimension(build_root_system("D4"), Weight.dynkin(0, 1, 0, 0)) == 28


@pytest.mark.parametrize("labels", [(-1, 0), (Fraction(1, 2), 0)])
def test_weyl_dimension_rejects_non_dominant(labels):
    with pytest.raises(ValidationError):
        weyl_dimension(build_root_system("A2"), Weight.dynkin(labels))


def test_weyl_dimension_accepts_root_basis():
    a2 = build_root_system("A2")
    # alpha1 + alpha2 is the adjoint highest weight; alpha1 alone is not dominant
    assert weyl_dimension(a2, Weight.roots(1, 1)) == 8
    with pytest.raises(ValidationError):
        weyl_dimension(a2, Weight.roots(1, 0))
