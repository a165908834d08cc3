"""Quantum symmetrizer and graded dimensions of Nichols algebras."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .braiding import BraidMatrix, DegVec
from .freealg import NCPoly, Word, deglex_key
from .ideal import HilbertSeries
from .linalg import Echelon, axpy
from .scalar import Cyc

DEFAULT_SIZE_CAP = 20000


class SizeCapExceeded(ValueError):
    pass


class Symmetrizer:
    """Omega_n on words, memoized; two evaluation orders are available.

    ``back``:  Omega(w) = sum_j (prod_{k>j} q_{w_j w_k}) Omega(w minus j) x_{w_j}
    ``front``: Omega(w) = sum_j (prod_{k<j} q_{w_k w_j}) x_{w_j} Omega(w minus j)
    """

    def __init__(self, q: BraidMatrix, order: str = "back", size_cap: int = DEFAULT_SIZE_CAP):
        if order not in ("back", "front"):
            raise ValueError("order must be 'back' or 'front'")
        q.require_finite_orders()
        if not q.all_roots_of_unity():
            raise ValueError("symmetrizer needs root-of-unity braiding entries")
        self.q = q
        self.order = order
        self.size_cap = size_cap
        self.memo: dict[Word, dict[Word, Cyc]] = {(): {(): Cyc(1)}}

    def _check(self, n: int) -> None:
        if self.q.theta**n > self.size_cap:
            raise SizeCapExceeded(
                f"theta^n = {self.q.theta ** n} exceeds the size cap {self.size_cap}"
            )

    def word(self, w: Word) -> dict[Word, Cyc]:
        got = self.memo.get(w)
        if got is not None:
            return got
        q = self.q.q
        out: dict[Word, Cyc] = {}
        n = len(w)
        for j in range(n):
            a = w[j]
            c = Cyc(1)
            others = w[j + 1 :] if self.order == "back" else w[:j]
            for b in others:
                c = c * (q[a - 1][b - 1] if self.order == "back" else q[b - 1][a - 1])
            rest = self.word(w[:j] + w[j + 1 :])
            if self.order == "back":
                axpy(out, c, {v + (a,): d for v, d in rest.items()})
            else:
                axpy(out, c, {(a,) + v: d for v, d in rest.items()})
        self.memo[w] = out
        return out

    def apply(self, u: NCPoly) -> NCPoly:
        out: dict[Word, Cyc] = {}
        for w, c in u.terms.items():
            self._check(len(w))
            axpy(out, c, self.word(w))
        return NCPoly._wrap(u.theta, out)


def symmetrizer(q: BraidMatrix, n: int, order: str = "back", size_cap: int = DEFAULT_SIZE_CAP):
    """Matrix of Omega_n as {word: image row} over all words of length n."""
    s = Symmetrizer(q, order, size_cap)
    s._check(n)
    return {w: s.word(w) for w in product(range(1, q.theta + 1), repeat=n)}


def _blocks(theta: int, n: int):
    """Words of length n grouped by multidegree."""
    out: dict[DegVec, list[Word]] = {}
    for w in product(range(1, theta + 1), repeat=n):
        md = [0] * theta
        for a in w:
            md[a - 1] += 1
        out.setdefault(tuple(md), []).append(w)
    return out


def kernel(rows: dict[Word, dict[Word, Cyc]]) -> list[dict[Word, Cyc]]:
    """Basis of {sum c_w w : sum c_w rows[w] = 0}."""
    pivots: dict[Word, tuple[dict, dict]] = {}
    out = []
    for w in sorted(rows, key=deglex_key):
        vec = dict(rows[w])
        combo = {w: Cyc(1)}
        while vec:
            p = max(vec, key=deglex_key)
            hit = pivots.get(p)
            if hit is None:
                inv = vec[p].inverse()
                pivots[p] = (
                    {k: v * inv for k, v in vec.items()},
                    {k: v * inv for k, v in combo.items()},
                )
                break
            c = -vec[p]
            axpy(vec, c, hit[0])
            axpy(combo, c, hit[1])
        if not vec:
            out.append(combo)
    return out


@dataclass(frozen=True)
class SymmetrizerReport:
    degree: int
    rank: int
    kernel: tuple[NCPoly, ...]

    def to_json(self) -> dict:
        return {"degree": self.degree, "rank": self.rank, "kernel": [str(k) for k in self.kernel]}


def symmetrizer_report(q: BraidMatrix, n: int, size_cap: int = DEFAULT_SIZE_CAP) -> SymmetrizerReport:
    s = Symmetrizer(q, size_cap=size_cap)
    s._check(n)
    ker: list[NCPoly] = []
    rk = 0
    for md, words in sorted(_blocks(q.theta, n).items()):
        rows = {w: s.word(w) for w in words}
        k = kernel(rows)
        rk += len(words) - len(k)
        ker += [NCPoly._wrap(q.theta, v) for v in k]
    return SymmetrizerReport(n, rk, tuple(ker))


def nichols_hilbert(q: BraidMatrix, D: int, size_cap: int = DEFAULT_SIZE_CAP) -> HilbertSeries:
    """dim B(V)_n = rank Omega_n for n = 0..D (stops early once a degree vanishes)."""
    s = Symmetrizer(q, size_cap=size_cap)
    coeffs = [1]
    for n in range(1, D + 1):
        if coeffs[-1] == 0:
            coeffs.append(0)
            continue
        s._check(n)
        rk = 0
        for md, words in _blocks(q.theta, n).items():
            e = Echelon(deglex_key)
            for w in words:
                e.insert(s.word(w))
            rk += len(e)
        coeffs.append(rk)
        # words of length n-1 are no longer needed
        for w in [w for w in s.memo if len(w) == n - 1]:
            del s.memo[w]
    return HilbertSeries(tuple(coeffs), math.inf)


def contains_in_Jq(q: BraidMatrix, gens: Sequence[NCPoly], size_cap: int = DEFAULT_SIZE_CAP) -> bool:
    """True iff every generator lies in the kernel of the quantum symmetrizer."""
    s = Symmetrizer(q, size_cap=size_cap)
    for g in gens:
        if not s.apply(g).is_zero():
            return False
    return True
