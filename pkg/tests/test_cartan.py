import math

import pytest

from prenichols.braiding import BraidMatrix
from prenichols.cartan import (
    CATALOG,
    affine_matrix,
    cartan_type_of,
    classify,
    det,
    finite_matrix,
    isomorphic,
    symmetrizer,
)
from prenichols.presets import cartan_braiding
from prenichols.scalar import root

FINITE = [("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)] + [("C", n) for n in range(3, 9)]
FINITE += [("D", n) for n in range(4, 9)] + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


@pytest.mark.parametrize("kind,n", FINITE)
def test_finite_catalog_classifies_finite(kind, n):
    a = finite_matrix(kind, n)
    c = classify(a)
    assert c.tag == "finite"
    assert det(a) > 0
    assert symmetrizer(a) is not None


def test_known_determinants():
    assert det(finite_matrix("A", 4)) == 5
    assert det(finite_matrix("E", 6)) == 3
    assert det(finite_matrix("E", 7)) == 2
    assert det(finite_matrix("E", 8)) == 1
    assert det(finite_matrix("D", 5)) == 4


@pytest.mark.parametrize("kind,n", [("A", 1), ("A", 2), ("A", 5), ("B", 3), ("C", 2), ("D", 5), ("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)])
def test_affine_matrices(kind, n):
    a = affine_matrix(kind, n)
    c = classify(a)
    assert c.tag == "affine"
    assert det(a) == 0


def test_indefinite():
    assert classify([[2, -3], [-3, 2]]).tag == "indefinite"
    assert classify([[2, -2], [-4, 2]]).tag == "indefinite"
    assert classify([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]).name == "A_2^(1)"


def test_decomposable():
    c = classify([[2, 0], [0, 2]])
    assert c.tag == "finite" and c.name == "A_1 x A_1"
    c = classify([[2, 0, 0], [0, 2, -2], [0, -2, 2]])
    assert c.tag == "decomposable"


def test_isomorphic_up_to_relabeling():
    a = finite_matrix("A", 3)
    b = ((2, 0, -1), (0, 2, -1), (-1, -1, 2))
    assert isomorphic(a, b)
    assert not isomorphic(a, finite_matrix("B", 3))


def test_names_unique_in_catalog():
    names = [name for _, name, _ in CATALOG]
    assert len(names) == len(set(names))


def test_cartan_type_of_window():
    w = root(3)
    q = BraidMatrix.from_rows([[w, 1], [w**2, w]])
    assert cartan_type_of(q) == ((2, -1), (-1, 2))
    # q~ = 1 gives a_ij = 0
    assert cartan_type_of(BraidMatrix.from_rows([[w, 1], [1, -1]])) == ((2, 0), (0, 2))


def test_cartan_type_of_rejects_unit_diagonal():
    with pytest.raises(ValueError):
        cartan_type_of(BraidMatrix.from_rows([[1, 1], [1, -1]]))


@pytest.mark.parametrize("kind,theta", FINITE)
def test_cartan_braiding_roundtrip(kind, theta):
    hits = 0
    for n in range(2, 10):
        for k in range(1, n):
            if math.gcd(n, k) != 1:
                continue
            try:
                q = cartan_braiding(kind, theta, root(n, k))
            except ValueError:
                continue
            assert cartan_type_of(q) == finite_matrix(kind, theta)
            hits += 1
    assert hits > 0
