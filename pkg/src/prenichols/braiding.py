"""Braiding matrices of diagonal type and their bilinear forms.

Generator indices are 1-based throughout (x1, ..., x_theta), matching the
usual notation; degree vectors are plain integer tuples of length theta.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .scalar import Cyc, Scalar, as_cyc, lcm_conductor, order_of_root

DegVec = tuple[int, ...]


class DimensionMismatch(ValueError):
    pass


def unit(theta: int, i: int) -> DegVec:
    """The simple root alpha_i (1-based)."""
    return tuple(1 if k == i - 1 else 0 for k in range(theta))


@dataclass(frozen=True)
class BraidMatrix:
    theta: int
    q: tuple[tuple[Cyc, ...], ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if len(self.q) != self.theta or any(len(row) != self.theta for row in self.q):
            raise DimensionMismatch(f"braiding must be {self.theta}x{self.theta}")
        n = lcm_conductor(x for row in self.q for x in row)
        rows = tuple(tuple(Cyc(as_cyc(x), n) for x in row) for row in self.q)
        if any(x.is_zero() for row in rows for x in row):
            raise ValueError("braiding matrix entries must be nonzero")
        object.__setattr__(self, "q", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "BraidMatrix":
        return cls(len(rows), tuple(tuple(as_cyc(x) for x in row) for row in rows))

    @property
    def conductor(self) -> int:
        return self.q[0][0].n

    def __getitem__(self, ij: tuple[int, int]) -> Cyc:
        i, j = ij
        return self.q[i - 1][j - 1]

    def tilde_entry(self, i: int, j: int) -> Cyc:
        return self[i, j] * self[j, i]

    @property
    def orders(self) -> tuple[int | None, ...]:
        """N_i = ord q_ii (None when q_ii is not a root of unity)."""
        if "orders" not in self._cache:
            self._cache["orders"] = tuple(order_of_root(self.q[i][i]) for i in range(self.theta))
        return self._cache["orders"]

    def all_roots_of_unity(self) -> bool:
        return all(
            order_of_root(x) is not None for row in self.q for x in row
        )

    def require_finite_orders(self) -> None:
        bad = [i + 1 for i, n in enumerate(self.orders) if n is None]
        if bad:
            raise ValueError(f"q_ii is not a root of unity at vertices {bad}")

    def _check(self, v: Sequence[int]) -> DegVec:
        if len(v) != self.theta:
            raise DimensionMismatch(f"degree vector {tuple(v)} has length != {self.theta}")
        return tuple(v)

    def form(self, alpha: Sequence[int], beta: Sequence[int]) -> Cyc:
        """q(alpha, beta) = prod q_ij^(a_i b_j); cached per pair."""
        key = (tuple(alpha), tuple(beta))
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        alpha, beta = self._check(alpha), self._check(beta)
        value = Cyc(1, self.conductor)
        for i, a in enumerate(alpha):
            if a:
                for j, b in enumerate(beta):
                    if b:
                        value = value * self.q[i][j] ** (a * b)
        self._cache[key] = value
        return value

    def to_json(self) -> dict:
        return {"theta": self.theta, "q": [[str(x) for x in row] for row in self.q]}


def bform(q: BraidMatrix, alpha: Sequence[int], beta: Sequence[int]) -> Cyc:
    return q.form(alpha, beta)


def tilde(q: BraidMatrix, alpha: Sequence[int], beta: Sequence[int]) -> Cyc:
    return q.form(alpha, beta) * q.form(beta, alpha)


@dataclass(frozen=True)
class Diagram:
    labels: tuple[Cyc, ...]
    edges: tuple[tuple[int, int, Cyc], ...]
    components: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "vertices": [{"index": i + 1, "label": str(x)} for i, x in enumerate(self.labels)],
            "edges": [{"i": i, "j": j, "label": str(x)} for i, j, x in self.edges],
            "components": [list(c) for c in self.components],
        }


def _components(theta: int, pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    parent = list(range(theta + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in pairs:
        parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for v in range(1, theta + 1):
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(g) for g in groups.values()))


def dynkin(q: BraidMatrix) -> Diagram:
    labels = tuple(q[i, i] for i in range(1, q.theta + 1))
    edges = []
    for i in range(1, q.theta + 1):
        for j in range(i + 1, q.theta + 1):
            t = q.tilde_entry(i, j)
            if t != 1:
                edges.append((i, j, t))
    return Diagram(labels, tuple(edges), _components(q.theta, [(i, j) for i, j, _ in edges]))


def induced_braiding(q: BraidMatrix, degs: Sequence[Sequence[int]]) -> BraidMatrix:
    """Braiding on homogeneous elements of the given degrees: entry (s,t) = q(deg_s, deg_t)."""
    degs = [q._check(d) for d in degs]
    if not degs:
        raise ValueError("need at least one degree vector")
    if len(set(degs)) != len(degs):
        raise ValueError("degree vectors must be pairwise distinct")
    if any(c < 0 for d in degs for c in d):
        raise ValueError("induced_braiding needs nonnegative degree vectors")
    return BraidMatrix.from_rows([[q.form(a, b) for b in degs] for a in degs])


def twist(q: BraidMatrix, upper: Mapping[tuple[int, int], Scalar]) -> BraidMatrix:
    """Twist-equivalent braiding with prescribed entries p_ij (i < j).

    Entries not mentioned in ``upper`` keep their value q_ij; the lower
    triangle is forced by p_ij p_ji = q_ij q_ji.
    """
    rows = [list(r) for r in q.q]
    for (i, j), value in upper.items():
        if not i < j:
            raise ValueError(f"twist entries must satisfy i < j, got {(i, j)}")
        value = as_cyc(value)
        if value.is_zero():
            raise ValueError(f"twist entry {(i, j)} is zero")
        rows[i - 1][j - 1] = value
        rows[j - 1][i - 1] = q.tilde_entry(i, j) / value
    return BraidMatrix.from_rows(rows)


def twist_equivalent(q: BraidMatrix, p: BraidMatrix) -> bool:
    if q.theta != p.theta:
        raise DimensionMismatch("braidings have different rank")
    t = q.theta
    return all(q[i, i] == p[i, i] for i in range(1, t + 1)) and all(
        q.tilde_entry(i, j) == p.tilde_entry(i, j)
        for i in range(1, t + 1)
        for j in range(i + 1, t + 1)
    )


def twist_cocycle(q: BraidMatrix, p: BraidMatrix):
    """The bilinear form sigma(alpha_i, alpha_j) = p_ij / q_ij for i <= j, 1 otherwise."""
    if not twist_equivalent(q, p):
        raise ValueError("braidings are not twist-equivalent")

    def sigma(alpha: Sequence[int], beta: Sequence[int]) -> Cyc:
        value = Cyc(1)
        for i, a in enumerate(alpha):
            for j, b in enumerate(beta):
                if a and b and i <= j:
                    value = value * (p.q[i][j] / q.q[i][j]) ** (a * b)
        return value

    return sigma
