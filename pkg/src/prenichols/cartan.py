"""Cartan type detection and finite/affine/indefinite classification of GCMs."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from .braiding import BraidMatrix, _components

GCM = tuple[tuple[int, ...], ...]


class NotCartan(ValueError):
    pass


class InvalidGCM(ValueError):
    pass


def as_gcm(rows: Sequence[Sequence[int]]) -> GCM:
    a = tuple(tuple(int(x) for x in r) for r in rows)
    n = len(a)
    for i, r in enumerate(a):
        if len(r) != n:
            raise InvalidGCM("matrix is not square")
        if r[i] != 2:
            raise InvalidGCM(f"diagonal entry ({i + 1},{i + 1}) is not 2")
        for j, x in enumerate(r):
            if i != j and (x > 0 or (x == 0) != (a[j][i] == 0)):
                raise InvalidGCM(f"entries ({i + 1},{j + 1}), ({j + 1},{i + 1}) violate GCM axioms")
    return a


def cartan_type_of(q: BraidMatrix, search: int = 64) -> GCM:
    """The GCM a with q_ij q_ji = q_ii^a_ij and -N_i < a_ij <= 0.

    Raises NotCartan when some pair admits no such exponent.
    """
    t = q.theta
    for i in range(1, t + 1):
        if q[i, i] == 1:
            raise ValueError(f"q_{i}{i} = 1: Cartan type undefined")
    rows = []
    for i in range(1, t + 1):
        n_i = q.orders[i - 1]
        row = []
        for j in range(1, t + 1):
            if i == j:
                row.append(2)
                continue
            target = q.tilde_entry(i, j)
            window = range(0, -(n_i if n_i is not None else search), -1)
            inv = q[i, i].inverse()
            power = q[i, i] ** 0
            found = None
            for a in window:
                if power == target:
                    found = a
                    break
                power = power * inv
            if found is None:
                if n_i is None:
                    raise ValueError(
                        f"q_{i}{i} is not a root of unity and q~_{i}{j} is not a power of it"
                    )
                raise NotCartan(f"no exponent for the pair ({i},{j})")
            row.append(found)
        rows.append(tuple(row))
    a = tuple(rows)
    for i in range(t):
        for j in range(t):
            if i != j and (a[i][j] == 0) != (a[j][i] == 0):
                raise NotCartan(f"a_{i + 1}{j + 1} and a_{j + 1}{i + 1} are not both zero")
    return a


def det(m: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def principal_minor(a: GCM, idx: Sequence[int]) -> int:
    return det([[a[i][j] for j in idx] for i in idx])


# ---- catalog ---------------------------------------------------------------
def _from_edges(n: int, edges: Sequence[tuple[int, int, int, int]]) -> GCM:
    # edges (i, j, a_ij, a_ji), 0-based
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in edges:
        m[i][j], m[j][i] = aij, aji
    return tuple(tuple(r) for r in m)


def _chain(n: int) -> list[tuple[int, int, int, int]]:
    return [(k, k + 1, -1, -1) for k in range(n - 1)]


def finite_matrix(kind: str, n: int) -> GCM:
    """Finite-type Cartan matrices, a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).

    B_n has its short simple root last, C_n its long simple root last.
    """
    if kind == "A" and n >= 1:
        return _from_edges(n, _chain(n))
    if kind == "B" and n >= 2:
        return _from_edges(n, _chain(n - 1) + [(n - 2, n - 1, -1, -2)])
    if kind == "C" and n >= 2:
        return _from_edges(n, _chain(n - 1) + [(n - 2, n - 1, -2, -1)])
    if kind == "D" and n >= 4:
        return _from_edges(n, _chain(n - 1) + [(n - 3, n - 1, -1, -1)])
    if kind == "E" and n in (6, 7, 8):
        # chain 1..n-1 with n attached to n-3
        return _from_edges(n, _chain(n - 1) + [(n - 4, n - 1, -1, -1)])
    if kind == "F" and n == 4:
        return _from_edges(4, [(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)])
    if kind == "G" and n == 2:
        return _from_edges(2, [(0, 1, -3, -1)])
    raise ValueError(f"no finite Cartan matrix of type {kind}_{n}")


def affine_matrix(kind: str, n: int) -> GCM:
    """Untwisted affine X_n^(1), extended node first (index 0)."""
    if kind == "A":
        if n == 1:
            return ((2, -2), (-2, 2))
        edges = [(k, k + 1, -1, -1) for k in range(n)] + [(n, 0, -1, -1)]
        return _from_edges(n + 1, edges)
    if kind == "B" and n >= 3:
        # 0 attached to 2; chain 1..n with short root n
        edges = [(0, 2, -1, -1)] + [(k, k + 1, -1, -1) for k in range(1, n - 1)]
        edges.append((n - 1, n, -1, -2))
        return _from_edges(n + 1, edges)
    if kind == "C" and n >= 2:
        edges = [(0, 1, -1, -2)] + [(k, k + 1, -1, -1) for k in range(1, n - 1)]
        edges.append((n - 1, n, -2, -1))
        return _from_edges(n + 1, edges)
    if kind == "D" and n >= 4:
        edges = [(0, 2, -1, -1)] + [(k, k + 1, -1, -1) for k in range(1, n - 1)]
        edges.append((n - 2, n, -1, -1))
        return _from_edges(n + 1, edges)
    if kind == "E" and n in (6, 7, 8):
        # star with three arms hanging off a central node
        arms = {6: (2, 2, 2), 7: (3, 3, 1), 8: (5, 2, 1)}[n]
        edges, nxt = [], 1
        for length in arms:
            prev = 0
            for _ in range(length):
                edges.append((prev, nxt, -1, -1))
                prev, nxt = nxt, nxt + 1
        return _from_edges(n + 1, edges)
    if kind == "F" and n == 4:
        return _from_edges(5, [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)])
    if kind == "G" and n == 2:
        # extended node attached to the long simple root
        return _from_edges(3, [(0, 2, -1, -1), (1, 2, -3, -1)])
    raise ValueError(f"no untwisted affine matrix of type {kind}_{n}^(1)")


def _catalog() -> list[tuple[str, str, GCM]]:
    out = []
    for n in range(1, 10):
        out.append(("finite", f"A_{n}", finite_matrix("A", n)))
    for n in range(2, 10):
        out.append(("finite", f"B_{n}", finite_matrix("B", n)))
        if n >= 3:
            out.append(("finite", f"C_{n}", finite_matrix("C", n)))
    for n in range(4, 10):
        out.append(("finite", f"D_{n}", finite_matrix("D", n)))
    for n in (6, 7, 8):
        out.append(("finite", f"E_{n}", finite_matrix("E", n)))
    out.append(("finite", "F_4", finite_matrix("F", 4)))
    out.append(("finite", "G_2", finite_matrix("G", 2)))
    for n in range(1, 9):
        out.append(("affine", f"A_{n}^(1)", affine_matrix("A", n)))
    for n in range(3, 9):
        out.append(("affine", f"B_{n}^(1)", affine_matrix("B", n)))
    for n in range(2, 9):
        out.append(("affine", f"C_{n}^(1)", affine_matrix("C", n)))
    for n in range(4, 9):
        out.append(("affine", f"D_{n}^(1)", affine_matrix("D", n)))
    for n in (6, 7, 8):
        out.append(("affine", f"E_{n}^(1)", affine_matrix("E", n)))
    out.append(("affine", "F_4^(1)", affine_matrix("F", 4)))
    out.append(("affine", "G_2^(1)", affine_matrix("G", 2)))
    return out


CATALOG = _catalog()


def isomorphic(a: GCM, b: GCM) -> bool:
    """True if b is a simultaneous row/column permutation of a."""
    n = len(a)
    if n != len(b):
        return False

    def profile(m, i):
        return sorted(m[i][j] * 100 + m[j][i] for j in range(n) if j != i)

    pa = [profile(a, i) for i in range(n)]
    pb = [profile(b, i) for i in range(n)]
    if sorted(map(tuple, pa)) != sorted(map(tuple, pb)):
        return False
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for k in range(n):
            if used[k] or pa[i] != pb[k]:
                continue
            if all(a[i][j] == b[k][image[j]] and a[j][i] == b[image[j]][k] for j in range(i)):
                image[i], used[k] = k, True
                if extend(i + 1):
                    return True
                used[k] = False
        return False

    return extend(0)


def _transpose(a: GCM) -> GCM:
    return tuple(zip(*a))


@dataclass(frozen=True)
class GCMClass:
    tag: str  # "finite" | "affine" | "indefinite" | "decomposable"
    name: str = "unnamed"
    components: tuple["GCMClass", ...] = field(default=())
    indices: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "name": self.name,
            "components": [dict(c.to_json(), vertices=list(c.indices)) for c in self.components],
        }

    def __str__(self) -> str:
        if self.tag == "decomposable":
            return " + ".join(str(c) for c in self.components)
        label = self.tag.capitalize()
        return f"{label}({self.name})" if self.tag != "indefinite" else label


def gcm_components(a: GCM) -> tuple[tuple[int, ...], ...]:
    n = len(a)
    pairs = [(i + 1, j + 1) for i in range(n) for j in range(n) if i != j and a[i][j]]
    return _components(n, pairs)


def _classify_indecomposable(a: GCM) -> GCMClass:
    n = len(a)
    proper_positive = all(
        principal_minor(a, idx) > 0 for k in range(1, n) for idx in combinations(range(n), k)
    )
    d = det(a)
    if proper_positive and d > 0:
        tag = "finite"
    elif proper_positive and d == 0:
        tag = "affine"
    else:
        return GCMClass("indefinite")
    for family, name, m in CATALOG:
        if family != tag or len(m) != n:
            continue
        if isomorphic(m, a) or (tag == "affine" and isomorphic(m, _transpose(a))):
            return GCMClass(tag, name)
    return GCMClass(tag)


def classify(a: Sequence[Sequence[int]]) -> GCMClass:
    """Finite / affine / indefinite via principal minors; decomposable matrices per component."""
    a = as_gcm(a)
    comps = gcm_components(a)
    if len(comps) == 1:
        return _classify_indecomposable(a)
    parts = []
    for comp in comps:
        idx = [v - 1 for v in comp]
        sub = tuple(tuple(a[i][j] for j in idx) for i in idx)
        c = _classify_indecomposable(sub)
        parts.append(GCMClass(c.tag, c.name, (), tuple(comp)))
    tags = {p.tag for p in parts}
    tag = tags.pop() if len(tags) == 1 else "decomposable"
    if tag == "finite" or tag == "affine" or tag == "indefinite":
        # every component in the same family: report it, keep the breakdown
        return GCMClass(tag, " x ".join(p.name for p in parts), tuple(parts))
    return GCMClass("decomposable", "unnamed", tuple(parts))


def symmetrizer(a: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Smallest positive integer diagonal d with d*a symmetric, or None."""
    a = as_gcm(a)
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for comp in gcm_components(a):
        idx = [v - 1 for v in comp]
        d[idx[0]] = Fraction(1)
        stack = [idx[0]]
        while stack:
            i = stack.pop()
            for j in idx:
                if a[i][j] and d[j] is None:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    stack.append(j)
        # integer-normalize this component
        den = 1
        for i in idx:
            den = den * d[i].denominator // gcd(den, d[i].denominator)
        ints = [int(d[i] * den) for i in idx]
        g = 0
        for x in ints:
            g = gcd(g, x)
        for i, x in zip(idx, ints):
            d[i] = Fraction(x // g)
    for i in range(n):
        for j in range(n):
            if d[i] * a[i][j] != d[j] * a[j][i]:
                return None
    return tuple(int(x) for x in d)


symmetrizable = symmetrizer
