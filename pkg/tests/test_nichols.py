import pytest
from hypothesis import given
import hypothesis.strategies as st

from conftest import roots
from prenichols.braiding import BraidMatrix
from prenichols.freealg import NCPoly, ad_word
from prenichols.nichols import (
    SizeCapExceeded,
    Symmetrizer,
    contains_in_Jq,
    nichols_hilbert,
    symmetrizer,
    symmetrizer_report,
)
from prenichols.presets import cartan_braiding
from prenichols.scalar import order_of_root, root

w = root(3)


def test_two_orders_agree():
    q = BraidMatrix.from_rows([[w, root(4)], [root(12), -1]])
    back = symmetrizer(q, 3, "back")
    front = symmetrizer(q, 3, "front")
    assert back == front


@given(st.lists(roots(), min_size=1, max_size=3))
def test_qls_dimensions_are_truncated_pbw(diag):
    q = BraidMatrix.from_rows(
        [[diag[i] if i == j else 1 for j in range(len(diag))] for i in range(len(diag))]
    )
    upto = 5
    want = [1] + [0] * upto
    for d in diag:
        n = order_of_root(d)
        if n == 1:  # q_ii = 1: polynomial ring in x_i
            n = upto + 1
        new = [0] * (upto + 1)
        for a, c in enumerate(want):
            for k in range(min(n, upto + 1 - a)):
                new[a + k] += c
        want = new
    assert list(nichols_hilbert(q, upto).coeffs) == want


def test_a2_at_cube_root_total():
    h = nichols_hilbert(cartan_braiding("A", 2, w), 10)
    assert list(h.coeffs) == [1, 2, 4, 4, 5, 4, 4, 2, 1, 0, 0]
    assert h.total() == 27


def test_kernel_of_degree_two_is_xij_for_qls():
    q = BraidMatrix.from_rows([[w, 1], [1, -1]])
    rep = symmetrizer_report(q, 2)
    assert rep.rank == 2
    assert len(rep.kernel) == 2


def test_serre_elements_in_jq():
    q = cartan_braiding("B", 2, root(5))
    assert contains_in_Jq(q, [ad_word(q, [1, 1, 2]), ad_word(q, [2, 2, 2, 1])])
    assert not contains_in_Jq(q, [ad_word(q, [1, 2])])


def test_size_cap():
    q = cartan_braiding("A", 3, w)
    with pytest.raises(SizeCapExceeded):
        nichols_hilbert(q, 6, size_cap=100)
    with pytest.raises(ValueError):
        Symmetrizer(q, order="middle")


def test_non_root_entries_rejected():
    with pytest.raises(ValueError):
        Symmetrizer(BraidMatrix.from_rows([[w, 2], [1, w]]))


def test_apply_matches_symmetrizer_rows():
    q = BraidMatrix.from_rows([[w, root(4)], [1, -1]])
    s = Symmetrizer(q)
    u = NCPoly(2, {(1, 2): 1, (2, 1): -1})
    rows = symmetrizer(q, 2)
    direct = NCPoly(2, rows[(1, 2)]) - NCPoly(2, rows[(2, 1)])
    assert s.apply(u) == direct
