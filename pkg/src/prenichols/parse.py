"""A small expression language for scalars and elements of T(V).

Grammar (whitespace ignored)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' INT]
    atom   := NUMBER | 'z(' n [',' k] ')' | 'q(' i ',' j ')' | 'qt(' i ',' j ')'
            | 'x' DIGITS | 'x(' i ')' | NAME | 'ad(' i, j, ... ')' | 'serre(' i ',' j ')'
            | '[' expr ',' expr ']' ['_c'] | '(' expr ')'

``x7`` is a generator; ``x221`` with several digits is the iterated braided
adjoint x_{221} = (ad_c x_2)(ad_c x_2) x_1.  ``[u, v]`` is the braided
commutator.  ``z(n)`` is the primitive root exp(2 pi i / n).  Other names are
looked up in an optional environment of scalars.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence

from .braiding import BraidMatrix
from .cartan import cartan_type_of
from .freealg import NCPoly, ad_word, braided_commutator, serre_element
from .scalar import Cyc, as_cyc, root

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_WORD = re.compile(r"x(\d+)")


class ParseError(ValueError):
    pass


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        if m.group(1) is not None:
            out.append(("int", m.group(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2)))
        elif m.group(3).strip():
            out.append(("op", m.group(3)))
    out.append(("end", ""))
    return out


class _Parser:
    def __init__(self, text: str, q: BraidMatrix | None, env: Mapping[str, Cyc] | None = None):
        self.text = text
        self.toks = _tokens(text)
        self.pos = 0
        self.q = q
        self.env = env or {}

    # -- token helpers
    def peek(self) -> tuple[str, str]:
        return self.toks[self.pos]

    def take(self) -> tuple[str, str]:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str) -> None:
        kind, got = self.take()
        if got != value:
            raise ParseError(f"expected {value!r}, got {got or 'end of input'!r} in {self.text!r}")

    def integer(self) -> int:
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        kind, got = self.take()
        if kind != "int":
            raise ParseError(f"expected an integer, got {got!r} in {self.text!r}")
        return sign * int(got)

    def int_args(self) -> list[int]:
        self.expect("(")
        args = [self.integer()]
        while self.peek() == ("op", ","):
            self.take()
            args.append(self.integer())
        self.expect(")")
        return args

    def need_q(self, what: str) -> BraidMatrix:
        if self.q is None:
            raise ParseError(f"{what} needs a braiding matrix")
        return self.q

    def index(self, i: int) -> int:
        q = self.need_q(f"x{i}")
        if not 1 <= i <= q.theta:
            raise ParseError(f"index {i} out of range 1..{q.theta}")
        return i

    # -- grammar
    def parse(self):
        value = self.expr()
        if self.peek()[0] != "end":
            raise ParseError(f"unexpected {self.peek()[1]!r} in {self.text!r}")
        return value

    def expr(self):
        neg = False
        if self.peek() == ("op", "-"):
            self.take()
            neg = True
        value = self.term()
        if neg:
            value = -value
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = _add(value, rhs) if op == "+" else _add(value, -rhs)
        return value

    def term(self):
        value = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.factor()
            if op == "*":
                value = _mul(value, rhs)
            else:
                if not isinstance(rhs, Cyc):
                    raise ParseError("can only divide by scalars")
                value = _mul(value, rhs.inverse())
        return value

    def factor(self):
        value = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            k = self.integer()
            if isinstance(value, NCPoly) and k < 0:
                raise ParseError("negative powers of polynomials are not allowed")
            value = value**k
        return value

    def atom(self):
        kind, tok = self.take()
        word = _WORD.fullmatch(tok) if kind == "name" else None
        if word:
            digits = word.group(1)
            q = self.need_q(tok)
            idx = [self.index(int(c)) for c in digits]
            if len(idx) == 1:
                return NCPoly.gen(idx[0], q.theta)
            return ad_word(q, idx)
        if kind == "int":
            return as_cyc(Fraction(int(tok)))
        if kind == "op" and tok == "(":
            value = self.expr()
            self.expect(")")
            return value
        if kind == "op" and tok == "-":
            return -self.factor()
        if kind == "op" and tok == "[":
            u = self.expr()
            self.expect(",")
            v = self.expr()
            self.expect("]")
            if self.peek() == ("name", "_c"):
                self.take()
            q = self.need_q("a braided commutator")
            return braided_commutator(q, _poly(u, q), _poly(v, q))
        if kind == "name" and tok in self.env and self.peek() != ("op", "("):
            return self.env[tok]
        if kind == "name":
            return self.named(tok)
        raise ParseError(f"unexpected {tok!r} in {self.text!r}")

    def named(self, tok: str):
        if tok == "z":
            args = self.int_args()
            if len(args) not in (1, 2) or args[0] < 1:
                raise ParseError("z takes (n) or (n, k) with n >= 1")
            return root(args[0], args[1] if len(args) == 2 else 1)
        if tok in ("q", "qt"):
            q = self.need_q(tok)
            i, j = self.int_args()
            self.index(i), self.index(j)
            return q[i, j] if tok == "q" else q.tilde_entry(i, j)
        if tok == "ad":
            q = self.need_q("ad")
            return ad_word(q, [self.index(i) for i in self.int_args()])
        if tok == "serre":
            q = self.need_q("serre")
            i, j = self.int_args()
            return serre_element(q, cartan_type_of(q), self.index(i), self.index(j))
        if tok == "x":
            # x(i) for an arbitrary index
            q = self.need_q("x")
            (i,) = self.int_args()
            return NCPoly.gen(self.index(i), q.theta)
        raise ParseError(f"unknown name {tok!r} in {self.text!r}")


def _poly(v, q: BraidMatrix) -> NCPoly:
    return v if isinstance(v, NCPoly) else NCPoly.one(q.theta).scale(v)


def _add(a, b):
    if isinstance(a, Cyc) and isinstance(b, Cyc):
        return a + b
    if isinstance(a, Cyc):
        return b + a
    return a + b


def _mul(a, b):
    if isinstance(a, Cyc) and isinstance(b, Cyc):
        return a * b
    if isinstance(a, Cyc):
        return b.scale(a)
    if isinstance(b, Cyc):
        return a.scale(b)
    return a * b


def parse_expr(text: str, q: BraidMatrix | None = None, env: Mapping[str, Cyc] | None = None):
    """Parse to a Cyc (pure scalar) or an NCPoly over the braiding q.

    ``env`` binds extra scalar names, e.g. {"q12": root(4)}.
    """
    return _Parser(text, q, env).parse()


def parse_poly(text: str, q: BraidMatrix, env: Mapping[str, Cyc] | None = None) -> NCPoly:
    return _poly(parse_expr(text, q, env), q)


def parse_scalar(text, env: Mapping[str, Cyc] | None = None) -> Cyc:
    if isinstance(text, (int, Fraction, Cyc)):
        return as_cyc(text)
    value = parse_expr(str(text), None, env)
    if not isinstance(value, Cyc):
        raise ParseError(f"{text!r} is not a scalar")
    return value


def parse_matrix(rows: Sequence[Sequence], env: Mapping[str, Cyc] | None = None) -> BraidMatrix:
    return BraidMatrix.from_rows([[parse_scalar(c, env) for c in r] for r in rows])
