import pytest
from hypothesis import given
import hypothesis.strategies as st

from prenichols.braiding import BraidMatrix
from prenichols.freealg import NCPoly, ad_word, braided_commutator
from prenichols.parse import ParseError, parse_expr, parse_matrix, parse_poly, parse_scalar
from prenichols.scalar import Cyc, root

w = root(3)
Q = BraidMatrix.from_rows([[w, 1], [w**2, w]])


def test_scalars():
    assert parse_scalar("z(3)^2 + z(3) + 1") == 0
    assert parse_scalar("z(12,4)") == w
    assert parse_scalar("1/3 * 3") == 1
    assert parse_scalar("-(2)^-1") == Cyc(-1) / 2
    assert parse_scalar("a*b", {"a": root(4), "b": root(4)}) == -1
    assert parse_scalar(5) == 5


def test_braiding_entries():
    assert parse_expr("q(2,1)", Q) == w**2
    assert parse_expr("qt(1,2)", Q) == w**2


def test_words_and_brackets():
    x1, x2 = NCPoly.gen(1, 2), NCPoly.gen(2, 2)
    assert parse_poly("x1*x2 - x2", Q) == x1 * x2 - x2
    assert parse_poly("x112", Q) == ad_word(Q, [1, 1, 2])
    assert parse_poly("ad(1,1,2)", Q) == ad_word(Q, [1, 1, 2])
    assert parse_poly("[x1, x2]_c", Q) == braided_commutator(Q, x1, x2)
    assert parse_poly("[x12, x2]", Q) == braided_commutator(Q, ad_word(Q, [1, 2]), x2)
    assert parse_poly("x(2)^3", Q) == x2**3
    assert parse_poly("serre(1,2)", Q) == ad_word(Q, [1, 1, 2])
    assert parse_poly("3", Q) == NCPoly.one(2).scale(3)


def test_matrix():
    m = parse_matrix([["z(3)", "1"], ["z(3)^2", "z(3)"]])
    assert m == Q


@pytest.mark.parametrize(
    "text",
    ["x1 +", "x3", "q(1,2)", "x1^-1", "foo", "z(0)", "[x1 x2]", "x1 / x2", "(x1"],
)
def test_errors(text):
    with pytest.raises(ParseError):
        q = None if text == "q(1,2)" else Q
        parse_expr(text, q)


@given(st.lists(st.integers(1, 2), min_size=1, max_size=5))
def test_word_notation_is_ad_word(word):
    text = "x" + "".join(map(str, word))
    want = NCPoly.gen(word[0], 2) if len(word) == 1 else ad_word(Q, word)
    assert parse_poly(text, Q) == want


@given(st.integers(1, 12), st.integers(0, 11), st.integers(-4, 4))
def test_power_of_root(n, k, e):
    assert parse_scalar(f"z({n},{k})^{e}") == root(n, k) ** e
