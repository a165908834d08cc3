import pytest
from hypothesis import given
import hypothesis.strategies as st

from prenichols.braiding import BraidMatrix
from prenichols.freealg import NCPoly, TensorPoly, ad_word
from prenichols.ideal import (
    BoundError,
    InhomogeneousGenerator,
    groebner,
    growth,
    hilbert,
    hopf_ideal,
    left_module_member,
    member,
    normal_form,
    normal_words,
    oracle_counts,
    quotient_coproduct_defect,
)
from prenichols.presets import relation_set
from prenichols.scalar import root

w = root(3)
Q2 = BraidMatrix.from_rows([[w, 1], [w**2, w]])
QLS = BraidMatrix.from_rows([[-1, 1], [1, -1]])


def x(i, theta=2):
    return NCPoly.gen(i, theta)


def test_commutative_polynomials():
    gb = groebner(QLS, [x(2) * x(1) - x(1) * x(2)], 10)
    assert gb.complete
    assert list(hilbert(gb, 6).coeffs) == [1, 2, 3, 4, 5, 6, 7]
    g = growth(gb)
    assert (g.verdict, g.degree, g.method) == ("Polynomial", 2, "UfnarovskiExact")
    assert member(x(2) * x(1) * x(1) - x(1) * x(1) * x(2), gb)
    assert normal_words(gb, 2) == [(1, 1), (1, 2), (2, 2)]


def test_free_algebra_is_exponential():
    gb = groebner(QLS, [], 6)
    assert list(hilbert(gb, 4).coeffs) == [1, 2, 4, 8, 16]
    assert growth(gb).verdict == "Exponential"


def test_truncated_polynomial_ring():
    gb = groebner(QLS, [x(1) ** 2, x(2) ** 2, x(2) * x(1) + x(1) * x(2)], 8)
    assert list(hilbert(gb, 4).coeffs) == [1, 2, 1, 0, 0]
    assert growth(gb).verdict == "Polynomial" and growth(gb).degree == 0


def test_single_cubic_relation_matches_oracle():
    gb = groebner(QLS, [x(2) * x(2) * x(1) - x(1) * x(2) * x(2)], 9)
    assert gb.complete
    for n, want in zip(range(6), oracle_counts(QLS, gb.generators, 5)):
        assert len(normal_words(gb, n)) == want


def test_bound_errors():
    p = relation_set("open_a3_n2_hat")
    gb = groebner(p.braiding, list(p.relations), 5)
    assert not gb.complete
    with pytest.raises(BoundError):
        normal_form(NCPoly.gen(1, 3) ** 6, gb)
    with pytest.raises(BoundError):
        groebner(Q2, [x(1) ** 5], 3)


def test_rejects_inhomogeneous_generators():
    with pytest.raises(InhomogeneousGenerator):
        groebner(Q2, [x(1) + x(1) * x(2)], 5)


RELS = st.lists(
    st.tuples(
        st.lists(st.integers(1, 2), min_size=2, max_size=3),
        st.integers(-2, 2),
        st.permutations([0, 1, 2]),
    ),
    min_size=1,
    max_size=3,
)


@given(RELS)
def test_gb_counts_match_oracle(spec):
    gens = []
    for word, c, perm in spec:
        w1 = tuple(word)
        w2 = tuple(word[p] for p in perm if p < len(word))
        g = NCPoly(2, {w1: 1}) + NCPoly(2, {w2: c})
        if not g.is_zero():
            gens.append(g)
    gb = groebner(QLS, gens, 7)
    assert list(hilbert(gb, 6).coeffs) == oracle_counts(QLS, gens, 6)


def test_left_module_member():
    p = relation_set("hat_a2_omega")
    gb = groebner(p.braiding, list(p.relations), 7)
    gens = [x(2) ** 3, ad_word(p.braiding, [2, 2, 1]), ad_word(p.braiding, [1, 1, 2]), x(1) ** 3]
    assert not left_module_member(ad_word(p.braiding, [1, 2]) ** 3, gens, gb)
    assert left_module_member(x(1) * x(2) ** 3, gens, gb)
    assert left_module_member(NCPoly.zero(2), gens, gb)


def test_hopf_ideal_and_negative_control():
    assert hopf_ideal(Q2, [ad_word(Q2, [1, 1, 2]), ad_word(Q2, [2, 2, 1])], 8)
    rep = hopf_ideal(Q2, [ad_word(Q2, [1, 2])], 6)
    assert not rep.ok
    assert rep.witness == TensorPoly.pure(x(1), x(2)).scale(1 - Q2.tilde_entry(1, 2))


def test_quotient_defect_vanishes_for_primitive_images():
    q = BraidMatrix.from_rows([[w, 1], [1, 1]])
    gb = groebner(q, [ad_word(q, [1, 1, 1, 1, 2]), ad_word(q, [2, 2, 1])], 7)
    assert quotient_coproduct_defect(ad_word(q, [1, 1, 1, 1, 2]), gb).is_zero()


def test_growth_of_eminent_algebra():
    p = relation_set("hat_a2_omega")
    g = growth(groebner(p.braiding, list(p.relations), 12))
    assert str(g) == "Polynomial(5) [UfnarovskiExact]"
