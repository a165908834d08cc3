"""The free braided Hopf algebra T(V) of a diagonal braiding.

Elements are finitely supported linear combinations of words; a word is a
tuple of 1-based letters.  The monomial order is deglex with 1 < 2 < ... < theta.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence, Union

from .braiding import BraidMatrix, DegVec, DimensionMismatch
from .scalar import Cyc, Scalar, as_cyc

Word = tuple[int, ...]


def deglex_key(w: Word) -> tuple[int, Word]:
    return (len(w), w)


def multideg(w: Word, theta: int) -> DegVec:
    d = [0] * theta
    for a in w:
        d[a - 1] += 1
    return tuple(d)


def word_str(w: Word) -> str:
    return "*".join(f"x{a}" for a in w) if w else "1"


def _coef_str(c: Cyc) -> str:
    s = str(c)
    return f"({s})" if " + " in s else s


class NCPoly:
    """A noncommutative polynomial in x1..x_theta with cyclotomic coefficients.

    Values are treated as immutable; arithmetic returns fresh objects.

    >>> x1, x2 = NCPoly.gen(1, 2), NCPoly.gen(2, 2)
    >>> print((x1 + x2) * x1)
    x1*x1 + x2*x1
    """

    __slots__ = ("theta", "terms")

    def __init__(self, theta: int, terms: Mapping[Word, Scalar] | None = None):
        self.theta = theta
        clean: dict[Word, Cyc] = {}
        for w, c in (terms or {}).items():
            c = as_cyc(c)
            if c:
                if any(not 1 <= a <= theta for a in w):
                    raise ValueError(f"letter out of range in word {w} (theta = {theta})")
                clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def _wrap(cls, theta: int, terms: dict[Word, Cyc]) -> "NCPoly":
        obj = object.__new__(cls)
        obj.theta, obj.terms = theta, terms
        return obj

    @classmethod
    def gen(cls, i: int, theta: int) -> "NCPoly":
        return cls(theta, {(i,): 1})

    @classmethod
    def one(cls, theta: int) -> "NCPoly":
        return cls(theta, {(): 1})

    @classmethod
    def zero(cls, theta: int) -> "NCPoly":
        return cls._wrap(theta, {})

    @classmethod
    def word(cls, w: Sequence[int], theta: int, coeff: Scalar = 1) -> "NCPoly":
        return cls(theta, {tuple(w): coeff})

    # ---- structure -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterator[tuple[Word, Cyc]]:
        """Terms in deglex order."""
        for w in sorted(self.terms, key=deglex_key):
            yield w, self.terms[w]

    def coeff(self, w: Sequence[int]) -> Cyc:
        return self.terms.get(tuple(w), Cyc(0))

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=deglex_key)

    def components(self) -> dict[DegVec, "NCPoly"]:
        out: dict[DegVec, dict[Word, Cyc]] = {}
        for w, c in self.terms.items():
            out.setdefault(multideg(w, self.theta), {})[w] = c
        return {d: NCPoly._wrap(self.theta, t) for d, t in out.items()}

    def is_homogeneous(self) -> bool:
        return len({multideg(w, self.theta) for w in self.terms}) <= 1

    def multidegree(self) -> DegVec:
        comps = self.components()
        if len(comps) != 1:
            raise ValueError("polynomial is not multidegree-homogeneous")
        return next(iter(comps))

    def max_total_degree(self) -> int:
        return self.degree()

    # ---- arithmetic ------------------------------------------------------
    def _same(self, other: "NCPoly") -> None:
        if self.theta != other.theta:
            raise DimensionMismatch(f"theta mismatch: {self.theta} vs {other.theta}")

    def _lift(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            self._same(other)
            return other
        return NCPoly(self.theta, {(): other})

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w)
            if s is None:
                terms[w] = c
            else:
                s = s + c
                if s:
                    terms[w] = s
                else:
                    del terms[w]
        return NCPoly._wrap(self.theta, terms)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly._wrap(self.theta, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c: Scalar) -> "NCPoly":
        c = as_cyc(c)
        if not c:
            return NCPoly.zero(self.theta)
        return NCPoly._wrap(self.theta, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "NCPoly":
        if k < 0:
            raise ValueError("negative powers are not defined in T(V)")
        out = NCPoly.one(self.theta)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            if isinstance(other, (int, Cyc)):
                other = NCPoly(self.theta, {(): other})
            else:
                return NotImplemented
        return self.theta == other.theta and (self - other).is_zero()

    def __hash__(self):
        return hash((self.theta, frozenset((w, hash(c)) for w, c in self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            if c == 1:
                parts.append(word_str(w))
            elif not w:
                parts.append(_coef_str(c))
            else:
                parts.append(f"{_coef_str(c)}*{word_str(w)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"NCPoly({self})"


def multiply(u: NCPoly, v: NCPoly) -> NCPoly:
    """Concatenation product, extended bilinearly."""
    u._same(v)
    terms: dict[Word, Cyc] = {}
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            w = a + b
            s = terms.get(w)
            s = c * d if s is None else s + c * d
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
    return NCPoly._wrap(u.theta, terms)


class TensorPoly:
    """A finitely supported combination of pure tensors word (x) word."""

    __slots__ = ("theta", "terms")

    def __init__(self, theta: int, terms: Mapping[tuple[Word, Word], Scalar] | None = None):
        self.theta = theta
        self.terms: dict[tuple[Word, Word], Cyc] = {}
        for (a, b), c in (terms or {}).items():
            c = as_cyc(c)
            if c:
                self.terms[(tuple(a), tuple(b))] = c

    @classmethod
    def _wrap(cls, theta: int, terms: dict) -> "TensorPoly":
        obj = object.__new__(cls)
        obj.theta, obj.terms = theta, terms
        return obj

    @classmethod
    def pure(cls, u: NCPoly, v: NCPoly) -> "TensorPoly":
        """u (x) v for polynomials u, v."""
        u._same(v)
        out: dict = {}
        for a, c in u.terms.items():
            for b, d in v.terms.items():
                out[(a, b)] = c * d
        return cls._wrap(u.theta, out)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        key = lambda ab: (deglex_key(ab[0]), deglex_key(ab[1]))
        for ab in sorted(self.terms, key=key):
            yield ab, self.terms[ab]

    def coeff(self, a: Sequence[int], b: Sequence[int]) -> Cyc:
        return self.terms.get((tuple(a), tuple(b)), Cyc(0))

    def _accumulate(self, other: "TensorPoly", sign: int) -> "TensorPoly":
        if self.theta != other.theta:
            raise DimensionMismatch("theta mismatch")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k)
            s = c * sign if s is None else s + c * sign
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return TensorPoly._wrap(self.theta, terms)

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        return self._accumulate(other, 1)

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self._accumulate(other, -1)

    def __neg__(self) -> "TensorPoly":
        return TensorPoly._wrap(self.theta, {k: -c for k, c in self.terms.items()})

    def scale(self, c: Scalar) -> "TensorPoly":
        c = as_cyc(c)
        if not c:
            return TensorPoly._wrap(self.theta, {})
        return TensorPoly._wrap(self.theta, {k: v * c for k, v in self.terms.items()})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.theta == other.theta and (self - other).is_zero()

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in self.items():
            body = f"{word_str(a)} (x) {word_str(b)}"
            parts.append(body if c == 1 else f"{_coef_str(c)}*[{body}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TensorPoly({self})"

    def left_counit(self) -> NCPoly:
        """(epsilon (x) id)."""
        return NCPoly._wrap(self.theta, {b: c for (a, b), c in self.terms.items() if not a})

    def right_counit(self) -> NCPoly:
        """(id (x) epsilon)."""
        return NCPoly._wrap(self.theta, {a: c for (a, b), c in self.terms.items() if not b})

    def map_legs(self, left, right) -> "TensorPoly":
        """Apply linear maps (NCPoly -> NCPoly) to each leg."""
        out = TensorPoly._wrap(self.theta, {})
        cache_l: dict = {}
        cache_r: dict = {}
        for (a, b), c in self.terms.items():
            la = cache_l.get(a)
            if la is None:
                la = cache_l[a] = left(NCPoly._wrap(self.theta, {a: Cyc(1)}))
            rb = cache_r.get(b)
            if rb is None:
                rb = cache_r[b] = right(NCPoly._wrap(self.theta, {b: Cyc(1)}))
            out = out + TensorPoly.pure(la, rb).scale(c)
        return out


def braided_tensor_multiply(q: BraidMatrix, s: TensorPoly, t: TensorPoly) -> TensorPoly:
    """(a (x) b)(c (x) d) = q(deg b, deg c) ac (x) bd."""
    if s.theta != q.theta or t.theta != q.theta:
        raise DimensionMismatch("theta mismatch")
    th = q.theta
    terms: dict = {}
    for (a, b), x in s.terms.items():
        db = multideg(b, th)
        for (c, d), y in t.terms.items():
            k = (a + c, b + d)
            v = x * y * q.form(db, multideg(c, th))
            prev = terms.get(k)
            v = v if prev is None else prev + v
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
    return TensorPoly._wrap(th, terms)


def _word_coproduct(q: BraidMatrix, w: Word, memo: dict) -> dict:
    got = memo.get(w)
    if got is not None:
        return got
    if not w:
        out = {((), ()): Cyc(1)}
    else:
        th = q.theta
        i = w[-1]
        ai = tuple(1 if k == i - 1 else 0 for k in range(th))
        out = {}
        for (a, b), c in _word_coproduct(q, w[:-1], memo).items():
            # (a (x) b)(x_i (x) 1) and (a (x) b)(1 (x) x_i)
            for key, v in (((a + (i,), b), c * q.form(multideg(b, th), ai)), ((a, b + (i,)), c)):
                prev = out.get(key)
                out[key] = v if prev is None else prev + v
        out = {k: v for k, v in out.items() if v}
    memo[w] = out
    return out


def coproduct(q: BraidMatrix, u: NCPoly) -> TensorPoly:
    """The braided coproduct of T(V), with x_i primitive."""
    if u.theta != q.theta:
        raise DimensionMismatch("theta mismatch")
    memo = q._cache.setdefault("coproduct", {})
    terms: dict = {}
    for w, c in u.terms.items():
        for k, v in _word_coproduct(q, w, memo).items():
            prev = terms.get(k)
            v = v * c if prev is None else prev + v * c
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
    return TensorPoly._wrap(q.theta, terms)


def braided_commutator(q: BraidMatrix, u: NCPoly, v: NCPoly) -> NCPoly:
    """[u, v]_c = uv - q(alpha, beta) vu, bilinear over homogeneous components."""
    out = NCPoly.zero(q.theta)
    for a, ua in u.components().items():
        for b, vb in v.components().items():
            out = out + ua * vb - (vb * ua).scale(q.form(a, b))
    return out


def ad_word(q: BraidMatrix, seq: Sequence[int]) -> NCPoly:
    """x_{i1 i2 ... ik} = (ad_c x_i1) ... (ad_c x_i(k-1)) x_ik."""
    seq = list(seq)
    if not seq:
        raise ValueError("ad_word needs at least one index")
    out = NCPoly.gen(seq[-1], q.theta)
    for i in reversed(seq[:-1]):
        out = braided_commutator(q, NCPoly.gen(i, q.theta), out)
    return out


def serre_element(q: BraidMatrix, a: Sequence[Sequence[int]], i: int, j: int) -> NCPoly:
    """(ad_c x_i)^(1 - a_ij) x_j."""
    if i == j:
        raise ValueError("Serre element needs i != j")
    return ad_word(q, [i] * (1 - a[i - 1][j - 1]) + [j])


def primitive_defect(q: BraidMatrix, u: NCPoly) -> TensorPoly:
    """Delta(u) - u (x) 1 - 1 (x) u; zero iff u is primitive."""
    one = NCPoly.one(q.theta)
    return coproduct(q, u) - TensorPoly.pure(u, one) - TensorPoly.pure(one, u)


def is_primitive(q: BraidMatrix, u: NCPoly) -> bool:
    return primitive_defect(q, u).is_zero()
