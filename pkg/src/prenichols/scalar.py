"""Exact arithmetic in cyclotomic fields Q(zeta_n) and q-combinatorics.

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) modulo the
n-th cyclotomic polynomial, with integer numerators over a common positive
denominator.  Mixed-conductor arithmetic promotes both operands to the lcm.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Union


class NotARootOfUnity(ValueError):
    pass


class CyclotomicZeroDivision(ZeroDivisionError):
    pass


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_n for 0 <= k < max(n, 2*phi(n)-1)."""
    phi = euler_phi(n)
    cyc = cyclotomic_poly(n)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(max(n, 2 * phi - 1)):
        rows.append(tuple(cur))
        # multiply by x, then reduce the overflow coefficient
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(rows)


def _normalize(n: int, num: list[int], den: int) -> "Cyc":
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return Cyc._raw(n, tuple(num), den)


Scalar = Union["Cyc", int, Fraction]


class Cyc:
    """An element of the cyclotomic field Q(zeta_n).

    >>> root(3, 1) + root(3, 2)
    Cyc(-1)
    """

    __slots__ = ("n", "num", "den")

    def __init__(self, value: Union[int, Fraction, "Cyc"] = 0, n: int = 1):
        if isinstance(value, Cyc):
            other = value.promote(_lcm(value.n, n))
            self.n, self.num, self.den = other.n, other.num, other.den
            return
        value = Fraction(value)
        phi = euler_phi(n)
        self.n = n
        self.num = (value.numerator,) + (0,) * (phi - 1)
        self.den = value.denominator

    @classmethod
    def _raw(cls, n: int, num: tuple[int, ...], den: int) -> "Cyc":
        obj = object.__new__(cls)
        obj.n, obj.num, obj.den = n, num, den
        return obj

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Iterable[Union[int, Fraction]]) -> "Cyc":
        """Build sum_k coeffs[k] z_n^k; any number of coefficients is accepted."""
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = _lcm(den, c.denominator)
        table = _power_table(n)
        phi = euler_phi(n)
        acc = [0] * phi
        for k, c in enumerate(coeffs):
            if c:
                ci = c.numerator * (den // c.denominator)
                for i, t in enumerate(table[k % n]):
                    if t:
                        acc[i] += ci * t
        return _normalize(n, acc, den)

    # ---- structure -------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def promote(self, m: int) -> "Cyc":
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"conductor {self.n} does not divide {m}")
        step = m // self.n
        table = _power_table(m)
        acc = [0] * euler_phi(m)
        for k, c in enumerate(self.num):
            if c:
                for i, t in enumerate(table[(k * step) % m]):
                    if t:
                        acc[i] += c * t
        return Cyc._raw(m, tuple(acc), self.den)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def normalized_trace(self) -> Fraction:
        """Tr(a)/[Q(zeta_n):Q]; independent of the ambient conductor."""
        total = Fraction(0)
        for k, c in enumerate(self.num):
            if c:
                m = self.n // gcd(self.n, k)
                total += Fraction(c * mobius(m), euler_phi(m))
        return total / self.den

    # ---- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Cyc":
        if isinstance(other, Cyc):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc(other)
        return NotImplemented

    def _align(self, other: "Cyc") -> tuple["Cyc", "Cyc"]:
        if self.n == other.n:
            return self, other
        m = _lcm(self.n, other.n)
        return self.promote(m), other.promote(m)

    def __add__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        if a.den == b.den:
            return _normalize(a.n, [x + y for x, y in zip(a.num, b.num)], a.den)
        return _normalize(
            a.n, [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den
        )

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc._raw(self.n, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Cyc._raw(self.n, (0,) * len(self.num), 1)
            return _normalize(self.n, [c * other for c in self.num], self.den)
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        phi = len(a.num)
        if phi == 1:
            return _normalize(a.n, [a.num[0] * b.num[0]], a.den * b.den)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        prod[i + j] += x * y
        out = prod[:phi]
        table = _power_table(a.n)
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                for i, t in enumerate(table[k]):
                    if t:
                        out[i] += c * t
        return _normalize(a.n, out, a.den * b.den)

    __rmul__ = __mul__

    def galois(self, j: int) -> "Cyc":
        """Image under z -> z^j (j coprime to the conductor)."""
        n = self.n
        table = _power_table(n)
        acc = [0] * len(self.num)
        for k, c in enumerate(self.num):
            if c:
                for i, t in enumerate(table[(k * j) % n]):
                    if t:
                        acc[i] += c * t
        return Cyc._raw(n, tuple(acc), self.den)

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise CyclotomicZeroDivision("division by zero in Q(zeta_n)")
        if self.is_rational():
            return _rational_cyc(self.n, Fraction(self.den, self.num[0]))
        cofactor = Cyc(1, self.n)
        for j in range(2, self.n):
            if gcd(j, self.n) == 1:
                cofactor = cofactor * self.galois(j)
        norm = self * cofactor
        return cofactor * _rational_cyc(self.n, 1 / norm.rational())

    def __truediv__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> "Cyc":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Cyc(1, self.n)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ---- comparison ------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return False
        a, b = self._align(other)
        return a.den == b.den and a.num == b.num

    def __hash__(self) -> int:
        return hash(self.normalized_trace())

    def __repr__(self) -> str:
        return f"Cyc({self})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            r = Fraction(c, self.den)
            parts.append(str(r) if k == 0 else f"{r}*z({self.n})^{k}")
        return " + ".join(parts) if parts else "0"


def _rational_cyc(n: int, r: Fraction) -> Cyc:
    phi = euler_phi(n)
    return Cyc._raw(n, (r.numerator,) + (0,) * (phi - 1), r.denominator)


def as_cyc(x: Scalar) -> Cyc:
    return x if isinstance(x, Cyc) else Cyc(x)


# ---- public operations ---------------------------------------------------
def root(n: int, k: int = 1) -> Cyc:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError("conductor must be positive")
    return Cyc._raw(n, _power_table(n)[k % n], 1)


cyc_root = root


def arith(a: Scalar, b: Scalar, op: str) -> Cyc:
    a, b = as_cyc(a), as_cyc(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def order_of_root(a: Scalar, strict: bool = False) -> int | None:
    """Multiplicative order of ``a``.

    Returns None when ``a`` is not a root of unity, or raises NotARootOfUnity
    if ``strict``.
    """
    a = as_cyc(a)
    if a.is_zero():
        raise CyclotomicZeroDivision("zero has no multiplicative order")
    bound = _lcm(2, a.n)
    power = a
    for d in range(1, bound + 1):
        if power == 1:
            return d
        power = power * a
    if strict:
        raise NotARootOfUnity(f"{a} is not a root of unity")
    return None


def lcm_conductor(values: Iterable[Scalar]) -> int:
    n = 1
    for v in values:
        if isinstance(v, Cyc):
            n = _lcm(n, v.n)
    return n


def q_number(n: int, q: Scalar) -> Cyc:
    """(n)_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q_number needs n >= 0")
    q = as_cyc(q)
    total, power = Cyc(0, q.n), Cyc(1, q.n)
    for _ in range(n):
        total = total + power
        power = power * q
    return total


def q_factorial(n: int, q: Scalar) -> Cyc:
    result = as_cyc(1)
    for i in range(1, n + 1):
        result = result * q_number(i, q)
    return result


def q_binomial(n: int, k: int, q: Scalar) -> Cyc:
    """Gaussian binomial via binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k)."""
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    q = as_cyc(q)
    # row of the Pascal-type triangle, kept as a list over k
    row = [Cyc(1, q.n)]
    for m in range(1, n + 1):
        new = [Cyc(1, q.n)]
        for j in range(1, m):
            new.append(row[j - 1] + q**j * row[j])
        new.append(Cyc(1, q.n))
        row = new
    return row[k]
