"""Graded two-sided ideals of T(V): truncated Groebner bases and what they compute.

The engine is the homogeneous Buchberger algorithm run degree by degree.
At degree d the candidates are the generators of degree d and all overlap
S-polynomials g1*b - a*g2 of total degree d; after reduction modulo the
lower-degree basis they are put in reduced echelon form, and each echelon row
becomes a new basis element.  Overlaps of degree > D are recorded; the basis
is certified complete when every recorded overlap reduces to zero against
the final basis (diamond lemma), which makes it a Groebner basis of the
whole ideal.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .braiding import BraidMatrix, DegVec
from .freealg import (
    NCPoly,
    TensorPoly,
    Word,
    coproduct,
    deglex_key,
    multideg,
    primitive_defect,
)
from .linalg import Echelon, axpy
from .scalar import Cyc

DEFAULT_BOUND = 12


class BoundError(ValueError):
    """A query needs degrees beyond what the truncated basis certifies."""


class InhomogeneousGenerator(ValueError):
    pass


# ---- rewriting engine ------------------------------------------------------
class _Rewriter:
    """Reduction modulo a set of monic homogeneous elements, memoized per word."""

    def __init__(self, theta: int):
        self.theta = theta
        self.rules: dict[Word, dict[Word, Cyc]] = {}  # leading word -> tail (negated)
        self.lengths: list[int] = []
        self.memo: dict[Word, dict[Word, Cyc]] = {}

    def add(self, lead: Word, tail: dict[Word, Cyc]) -> None:
        self.rules[lead] = {w: -c for w, c in tail.items()}
        if len(lead) not in self.lengths:
            self.lengths.append(len(lead))
            self.lengths.sort()

    def forget(self, length: int) -> None:
        for w in [w for w in self.memo if len(w) >= length]:
            del self.memo[w]

    def find(self, w: Word):
        rules = self.rules
        n = len(w)
        for i in range(n):
            for L in self.lengths:
                if i + L > n:
                    break
                sub = w[i : i + L]
                if sub in rules:
                    return i, sub
        return None

    def is_normal(self, w: Word) -> bool:
        return self.find(w) is None

    def _enc(self, w: Word) -> int:
        b = self.theta + 1
        v = 0
        for a in w:
            v = v * b + a
        return v

    def reduce(self, poly: dict[Word, Cyc]) -> dict[Word, Cyc]:
        """Normal form of a (total-degree homogeneous or not) combination of words."""
        out: dict[Word, Cyc] = {}
        pending: dict[Word, Cyc] = {}
        heap: list = []
        for w, c in poly.items():
            if c:
                pending[w] = c
                heapq.heappush(heap, (-len(w), -self._enc(w), w))
        memo = self.memo
        while heap:
            _, _, w = heapq.heappop(heap)
            c = pending.pop(w, None)
            if c is None or not c:
                continue
            known = memo.get(w)
            if known is None:
                hit = self.find(w)
                if hit is None:
                    memo[w] = {w: Cyc(1)}
                    known = memo[w]
                else:
                    i, lead = hit
                    pre, post = w[:i], w[i + len(lead) :]
                    for t, d in self.rules[lead].items():
                        v = pre + t + post
                        prev = pending.get(v)
                        if prev is None:
                            pending[v] = c * d
                            heapq.heappush(heap, (-len(v), -self._enc(v), v))
                        else:
                            pending[v] = prev + c * d
                    continue
            axpy(out, c, known)
        return out

    def word_nf(self, w: Word) -> dict[Word, Cyc]:
        got = self.memo.get(w)
        if got is None:
            got = self.reduce({w: Cyc(1)})
            self.memo[w] = got
        return got

    def reduce_memo(self, poly: dict[Word, Cyc]) -> dict[Word, Cyc]:
        out: dict[Word, Cyc] = {}
        for w, c in poly.items():
            axpy(out, c, self.word_nf(w))
        return out


def _overlaps(a: Word, b: Word) -> Iterable[int]:
    """Lengths k of proper overlaps: a = a' s, b = s b' with |s| = k."""
    m = min(len(a), len(b))
    for k in range(1, m):
        if a[len(a) - k :] == b[:k]:
            yield k


@dataclass(frozen=True)
class GBasis:
    """A reduced deglex Groebner basis truncated at total degree D."""

    q: BraidMatrix
    generators: tuple[NCPoly, ...]
    D: int
    basis: tuple[NCPoly, ...]
    complete: bool
    stable: bool
    pending_overlaps: int
    unresolved_overlaps: int
    _rw: _Rewriter = field(compare=False, repr=False)

    @property
    def theta(self) -> int:
        return self.q.theta

    @property
    def leading_words(self) -> tuple[Word, ...]:
        return tuple(p.leading_word() for p in self.basis)

    def max_degree(self) -> int:
        return max((p.degree() for p in self.basis), default=0)

    def certified_through(self) -> float:
        return math.inf if self.complete else self.D

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "size": len(self.basis),
            "complete": self.complete,
            "stable": self.stable,
            "pending_overlaps": self.pending_overlaps,
            "unresolved_overlaps": self.unresolved_overlaps,
            "leading_words": ["".join(map(str, w)) for w in self.leading_words],
        }


def _check_generators(q: BraidMatrix, gens: Sequence[NCPoly]) -> list[NCPoly]:
    out = []
    for g in gens:
        if g.theta != q.theta:
            raise ValueError("generator lives in a different rank")
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise InhomogeneousGenerator(f"generator is not multidegree-homogeneous: {g}")
        if g.coeff(()) and len(g) == 1:
            raise InhomogeneousGenerator("unit ideal")
        out.append(g)
    return out


def groebner(
    q: BraidMatrix,
    gens: Sequence[NCPoly],
    D: int = DEFAULT_BOUND,
    certify: bool = True,
    certify_budget: int = 200_000,
) -> GBasis:
    """Reduced Groebner basis of the two-sided ideal generated by ``gens``, through degree D."""
    gens = _check_generators(q, gens)
    top = max((g.degree() for g in gens), default=0)
    if D < top:
        raise BoundError(f"degree bound {D} is below the generator degree {top}")
    th = q.theta
    rw = _Rewriter(th)
    basis: list[tuple[Word, dict[Word, Cyc]]] = []  # (lead, full monic terms)
    by_degree: dict[int, list[dict[Word, Cyc]]] = {}
    for g in gens:
        by_degree.setdefault(g.degree(), []).append(dict(g.terms))
    pending: dict[int, list[tuple[int, int, int]]] = {}  # degree -> (idx_a, idx_b, k)
    new_at_bound = False

    def add_overlaps(idx: int) -> None:
        for jdx in range(idx + 1):
            for x, y in ((idx, jdx), (jdx, idx)) if jdx != idx else ((idx, idx),):
                wa, wb = basis[x][0], basis[y][0]
                for k in _overlaps(wa, wb):
                    pending.setdefault(len(wa) + len(wb) - k, []).append((x, y, k))

    def spoly(x: int, y: int, k: int) -> dict[Word, Cyc]:
        la, ga = basis[x]
        lb, gb = basis[y]
        left, right = lb[k:], la[: len(la) - k]
        out: dict[Word, Cyc] = {}
        for w, c in ga.items():
            out[w + left] = c
        for w, c in gb.items():
            v = right + w
            prev = out.get(v)
            s = -c if prev is None else prev - c
            if s:
                out[v] = s
            else:
                out.pop(v, None)
        return out

    for d in range(1, D + 1):
        cands = [dict(g) for g in by_degree.get(d, [])]
        cands += [spoly(*o) for o in pending.pop(d, [])]
        if not cands:
            continue
        blocks: dict[DegVec, Echelon] = {}
        for c in cands:
            r = rw.reduce(c)
            if not r:
                continue
            md = multideg(next(iter(r)), th)
            blocks.setdefault(md, Echelon(deglex_key)).insert(r)
        fresh = []
        for md in sorted(blocks):
            for lead, row in blocks[md].rows.items():
                fresh.append((lead, row))
        if not fresh:
            continue
        if d == D:
            new_at_bound = True
        fresh.sort(key=lambda lr: deglex_key(lr[0]))
        rw.forget(d)
        for lead, row in fresh:
            basis.append((lead, row))
            rw.add(lead, {w: c for w, c in row.items() if w != lead})
        for idx in range(len(basis) - len(fresh), len(basis)):
            add_overlaps(idx)

    ignored = sorted((deg, o) for deg, lst in pending.items() for o in lst)
    unresolved = 0
    complete = False
    if certify:
        work = 0
        complete = True
        for deg, o in ignored:
            r = rw.reduce(spoly(*o))
            work += 1
            if r:
                unresolved += 1
                complete = False
                break
            if work > certify_budget or len(rw.memo) > 4 * certify_budget:
                complete = False
                unresolved = -1  # gave up
                break
    polys = tuple(NCPoly._wrap(th, dict(row)) for _, row in basis)
    return GBasis(
        q=q,
        generators=tuple(gens),
        D=D,
        basis=polys,
        complete=complete,
        stable=not new_at_bound,
        pending_overlaps=len(ignored),
        unresolved_overlaps=unresolved,
        _rw=rw,
    )


# ---- queries -----------------------------------------------------------------
def _require(gb: GBasis, degree: int, what: str) -> None:
    if degree > gb.D and not gb.complete:
        raise BoundError(
            f"{what}: degree {degree} exceeds the bound D = {gb.D} of an uncertified basis"
        )


def normal_form(u: NCPoly, gb: GBasis) -> NCPoly:
    _require(gb, u.degree(), "normal_form")
    return NCPoly._wrap(gb.theta, gb._rw.reduce_memo(u.terms))


def member(u: NCPoly, gb: GBasis) -> bool:
    return normal_form(u, gb).is_zero()


def normal_words(gb: GBasis, n: int) -> list[Word]:
    """Normal words of length n, in deglex order."""
    out: list[Word] = [()]
    for _ in range(n):
        out = [w + (a,) for w in out for a in range(1, gb.theta + 1) if gb._rw.is_normal(w + (a,))]
    return out


def left_module_member(u: NCPoly, module_gens: Sequence[NCPoly], gb: GBasis) -> bool:
    """Is u in A * span(module_gens), A the quotient algebra?"""
    if u.is_zero():
        return True
    _require(gb, u.degree(), "left_module_member")
    th = gb.theta
    target = normal_form(u, gb)
    if target.is_zero():
        return True
    ok = True
    for md, part in target.components().items():
        n = sum(md)
        e = Echelon(deglex_key)
        for g in module_gens:
            for gm, gpart in g.components().items():
                rest = tuple(a - b for a, b in zip(md, gm))
                if any(r < 0 for r in rest):
                    continue
                for w in normal_words(gb, sum(rest)):
                    if multideg(w, th) != rest:
                        continue
                    prod = {w + v: c for v, c in gpart.terms.items()}
                    row = gb._rw.reduce_memo(prod)
                    if row:
                        e.insert(row)
        if not e.contains(part.terms):
            ok = False
            break
    return ok


@dataclass(frozen=True)
class HilbertSeries:
    coeffs: tuple[int, ...]
    certified_through: float

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def total(self) -> int:
        return sum(self.coeffs)

    def to_json(self) -> dict:
        cert = self.certified_through
        return {
            "coeffs": list(self.coeffs),
            "certified_through": None if cert == math.inf else cert,
        }


class _Automaton:
    """Aho-Corasick automaton of the leading words; states avoid all patterns."""

    def __init__(self, theta: int, patterns: Iterable[Word]):
        self.theta = theta
        goto: list[dict[int, int]] = [{}]
        bad = [False]
        for p in patterns:
            s = 0
            for a in p:
                nxt = goto[s].get(a)
                if nxt is None:
                    goto.append({})
                    bad.append(False)
                    nxt = goto[s][a] = len(goto) - 1
                s = nxt
            bad[s] = True
        fail = [0] * len(goto)
        delta = [[0] * (theta + 1) for _ in goto]
        order = []
        for a in range(1, theta + 1):
            t = goto[0].get(a)
            delta[0][a] = t if t is not None else 0
            if t is not None:
                order.append(t)
        i = 0
        while i < len(order):
            s = order[i]
            i += 1
            bad[s] = bad[s] or bad[fail[s]]
            for a in range(1, theta + 1):
                t = goto[s].get(a)
                if t is not None:
                    fail[t] = delta[fail[s]][a]
                    delta[s][a] = t
                    order.append(t)
                else:
                    delta[s][a] = delta[fail[s]][a]
        self.delta = delta
        self.bad = bad

    def edges(self) -> dict[int, list[int]]:
        out = {}
        for s, row in enumerate(self.delta):
            if not self.bad[s]:
                out[s] = [row[a] for a in range(1, self.theta + 1) if not self.bad[row[a]]]
        return out

    def counts(self, n: int) -> list[int]:
        cur = {0: 1}
        res = [1]
        for _ in range(n):
            nxt: dict[int, int] = {}
            for s, c in cur.items():
                for a in range(1, self.theta + 1):
                    t = self.delta[s][a]
                    if not self.bad[t]:
                        nxt[t] = nxt.get(t, 0) + c
            cur = nxt
            res.append(sum(cur.values()))
        return res


def hilbert(gb: GBasis, upto: int | None = None) -> HilbertSeries:
    """Counts of normal words per total degree 0..upto (default D)."""
    n = gb.D if upto is None else upto
    auto = _Automaton(gb.theta, gb.leading_words)
    return HilbertSeries(tuple(auto.counts(n)), math.inf if gb.complete else gb.D)


# ---- growth ------------------------------------------------------------------
@dataclass(frozen=True)
class GrowthReport:
    verdict: str  # "Polynomial" | "Exponential" | "Inconclusive"
    degree: int | None
    method: str  # "UfnarovskiExact" | "FiniteDifferenceHeuristic"
    estimate: float | None = None

    def __str__(self) -> str:
        if self.verdict == "Polynomial":
            return f"Polynomial({self.degree}) [{self.method}]"
        if self.verdict == "Inconclusive" and self.estimate is not None:
            return f"Inconclusive(~{self.estimate:.2f}) [{self.method}]"
        return f"{self.verdict} [{self.method}]"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "degree": self.degree,
            "method": self.method,
            "estimate": self.estimate,
        }


def _scc(nodes: Sequence, adj: dict) -> list[list]:
    """Tarjan, iterative."""
    index: dict = {}
    low: dict = {}
    on: set = set()
    stack: list = []
    out: list[list] = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(adj.get(root, ())))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on.add(w)
                    work.append((w, iter(adj.get(w, ()))))
                    advanced = True
                    break
                if w in on:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
    return out


def graph_growth(nodes: Sequence, adj: dict) -> int | None:
    """Max number of cyclic components on a path; None if some component has two cycles."""
    comps = _scc(nodes, adj)
    where = {v: i for i, c in enumerate(comps) for v in c}
    cyclic = []
    for c in comps:
        members = set(c)
        inner = sum(1 for v in c for w in adj.get(v, ()) if w in members)
        if inner > len(c):
            return None
        cyclic.append(inner > 0)
    # Tarjan emits components in reverse topological order
    best = [0] * len(comps)
    for i, c in enumerate(comps):
        succ = {where[w] for v in c for w in adj.get(v, ()) if where[w] != i}
        best[i] = max((best[j] for j in succ), default=0) + (1 if cyclic[i] else 0)
    return max(best, default=0)


def ufnarovski_graph(theta: int, leads: Sequence[Word], limit: int = 500_000):
    """Vertices: normal words of length m-1; edges u -> v when u = a s, v = s b, u b normal."""
    if not leads:
        return None
    m = max(len(w) for w in leads)
    if m == 1:
        free = theta - len(set(leads))
        return [()], {(): [()] * free}
    lead_set = set(leads)
    lengths = sorted({len(w) for w in leads})

    def normal(w: Word) -> bool:
        n = len(w)
        for i in range(n):
            for L in lengths:
                if i + L > n:
                    break
                if w[i : i + L] in lead_set:
                    return False
        return True

    verts: list[Word] = [()]
    for _ in range(m - 1):
        verts = [w + (a,) for w in verts for a in range(1, theta + 1) if normal(w + (a,))]
        if len(verts) > limit:
            return None
    vset = set(verts)
    adj = {}
    for u in verts:
        adj[u] = [u[1:] + (a,) for a in range(1, theta + 1) if normal(u + (a,)) and u[1:] + (a,) in vset]
    return verts, adj


def _heuristic(h: Sequence[int]) -> GrowthReport:
    n = len(h) - 1
    cum = [0]
    for c in h:
        cum.append(cum[-1] + c)
    if n >= 4 and h[n] > 0 and all(h[k] > 0 for k in range(n // 2, n + 1)):
        ratios = [h[k + 1] / h[k] for k in range(n // 2, n)]
        if min(ratios) > 1.3 and ratios[-1] >= ratios[0] * 0.98:
            return GrowthReport("Inconclusive", None, "FiniteDifferenceHeuristic", math.inf)
    half = max(1, n // 2)
    if cum[half + 1] <= 0 or cum[n + 1] <= 0:
        return GrowthReport("Inconclusive", None, "FiniteDifferenceHeuristic", None)
    est = math.log(cum[n + 1] / cum[half + 1]) / math.log((n + 1) / (half + 1))
    return GrowthReport("Inconclusive", None, "FiniteDifferenceHeuristic", round(est, 3))


def growth(gb: GBasis) -> GrowthReport:
    """Exact verdict from the Ufnarovski graph when the basis is complete."""
    if not gb.complete:
        return _heuristic(hilbert(gb).coeffs)
    leads = gb.leading_words
    auto = _Automaton(gb.theta, leads)
    adj = auto.edges()
    d_auto = graph_growth(sorted(adj), adj)
    graph = ufnarovski_graph(gb.theta, leads)
    if graph is not None:
        d_uf = graph_growth(*graph)
        if d_uf != d_auto:
            raise AssertionError(f"growth cross-check failed: {d_uf} vs {d_auto}")
    if d_auto is None:
        return GrowthReport("Exponential", None, "UfnarovskiExact")
    return GrowthReport("Polynomial", d_auto, "UfnarovskiExact")


# ---- Hopf structure in quotients ---------------------------------------------
def _reduce_legs(t: TensorPoly, gb: GBasis) -> TensorPoly:
    rw = gb._rw
    out: dict = {}
    for (a, b), c in t.terms.items():
        for a2, ca in rw.word_nf(a).items():
            for b2, cb in rw.word_nf(b).items():
                k = (a2, b2)
                v = c * ca * cb
                prev = out.get(k)
                v = v if prev is None else prev + v
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
    return TensorPoly._wrap(gb.theta, out)


@dataclass(frozen=True)
class HopfReport:
    ok: bool
    witness_generator: NCPoly | None = None
    witness: TensorPoly | None = None

    def __bool__(self) -> bool:
        return self.ok


def hopf_ideal(
    q: BraidMatrix, gens: Sequence[NCPoly], D: int = DEFAULT_BOUND, gb: GBasis | None = None
) -> HopfReport:
    """Checks Delta(r) in I (x) T + T (x) I for every generator r."""
    gens = _check_generators(q, gens)
    if gb is None:
        gb = groebner(q, gens, D, certify=False)
    for r in gens:
        _require(gb, r.degree(), "hopf_ideal")
        res = _reduce_legs(coproduct(q, r), gb)
        if not res.is_zero():
            return HopfReport(False, r, res)
    return HopfReport(True)


def reduce_tensor(t: TensorPoly, gb: GBasis) -> TensorPoly:
    """Both legs of t in normal form modulo the ideal."""
    return _reduce_legs(t, gb)


def quotient_coproduct_defect(u: NCPoly, gb: GBasis) -> TensorPoly:
    """primitive_defect(u) with both legs in normal form."""
    _require(gb, u.degree(), "quotient_coproduct_defect")
    return _reduce_legs(primitive_defect(gb.q, u), gb)


# ---- independent oracle ---------------------------------------------------
def oracle_counts(q: BraidMatrix, gens: Sequence[NCPoly], n_max: int) -> list[int]:
    """theta^n - dim I_n by plain linear algebra, no rewriting.

    I_n is spanned by x_a I_(n-1), I_(n-1) x_a and the generators of degree n;
    the work is split by multidegree.
    """
    gens = _check_generators(q, gens)
    th = q.theta
    prev: dict[DegVec, Echelon] = {}
    out = [1]
    for n in range(1, n_max + 1):
        cur: dict[DegVec, Echelon] = {}

        def put(row):
            md = multideg(next(iter(row)), th)
            cur.setdefault(md, Echelon(deglex_key)).insert(row)

        for g in gens:
            if g.degree() == n:
                for part in g.components().values():
                    put(dict(part.terms))
        for e in prev.values():
            for row in e.rows.values():
                for a in range(1, th + 1):
                    put({(a,) + w: c for w, c in row.items()})
                    put({w + (a,): c for w, c in row.items()})
        out.append(th**n - sum(len(e) for e in cur.values()))
        prev = cur
    return out
