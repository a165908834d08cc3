"""Data-driven verification scenarios.

A scenario file is JSON::

    {"id": ..., "title": ..., "source": ..., "anchor": ...,
     "runs": [{"env": {...}, "braiding": {...}, "relations": ...,
               "degree_bound": 12, "checks": [{"op": ..., "tag": ...}, ...]}]}

``braiding`` is one of ``{"preset": name, "params": {...}}``,
``{"cartan": [type, theta, q]}``, ``{"qls": [d1, ...]}`` or
``{"matrix": [[...]]}``, optionally with ``"twist": {"i,j": value}``.
``relations`` is a list of expression strings or ``{"preset": ..., "params": ...}``;
a preset braiding brings its own relations unless overridden.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Mapping, Sequence

from . import ideal, nichols
from .braiding import BraidMatrix, dynkin, induced_braiding
from .cartan import cartan_type_of, classify
from .freealg import NCPoly, TensorPoly, coproduct, is_primitive, primitive_defect
from .parse import parse_expr, parse_matrix, parse_poly, parse_scalar
from .presets import _twisted, cartan_braiding, qls_braiding, relation_set, serre_relations
from .scalar import Cyc

TAGS = ("PAPER", "DERIVED", "TRIVIAL")


class ScenarioError(ValueError):
    pass


class ConductorCapExceeded(ValueError):
    pass


@dataclass
class Limits:
    degree_bound: int = ideal.DEFAULT_BOUND
    conductor_cap: int = 10_000
    size_cap: int = nichols.DEFAULT_SIZE_CAP


@dataclass
class CheckResult:
    scenario: str
    run: int
    op: str
    tag: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "scenario": self.scenario,
            "run": self.run,
            "op": self.op,
            "tag": self.tag,
            "passed": self.passed,
            "detail": self.detail,
        }
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


# ---- building blocks ----------------------------------------------------------
def _env(spec: Mapping[str, str] | None) -> dict[str, Cyc]:
    env: dict[str, Cyc] = {}
    for k, v in (spec or {}).items():
        env[k] = parse_scalar(v, env)
    return env


def build_braiding(spec: Mapping, env: Mapping[str, Cyc]) -> tuple[BraidMatrix, list[str] | None]:
    """Returns the braiding and, for presets, the relation strings."""
    twist = spec.get("twist")
    if twist:
        twist = {k: parse_scalar(v, env) for k, v in twist.items()}
    if "preset" in spec:
        params = dict(spec.get("params", {}))
        if twist:
            params["twist"] = twist
        p = relation_set(spec["preset"], **params)
        return p.braiding, list(p.labels)
    if "cartan" in spec:
        kind, theta, q = spec["cartan"]
        check = spec.get("check", True)
        return cartan_braiding(kind, int(theta), parse_scalar(q, env), twist, check), None
    if "qls" in spec:
        return qls_braiding([parse_scalar(x, env) for x in spec["qls"]], twist), None
    if "matrix" in spec:
        return _twisted(parse_matrix(spec["matrix"], env), twist), None
    raise ScenarioError(f"cannot build a braiding from {sorted(spec)}")


def _words_to_degrees(words: Sequence[str], theta: int) -> list[list[int]]:
    out = []
    for w in words:
        digits = w[1:] if w.startswith("x") else w
        if not digits.isdigit() or any(not 1 <= int(c) <= theta for c in digits):
            raise ScenarioError(f"bad word {w!r} for rank {theta}")
        v = [0] * theta
        for c in digits:
            v[int(c) - 1] += 1
        out.append(v)
    return out


def _coeff(text: str, q: BraidMatrix, env) -> Cyc:
    value = parse_expr(str(text), q, env)
    if not isinstance(value, Cyc):
        raise ScenarioError(f"coefficient {text!r} is not a scalar")
    return value


def _tensor(q: BraidMatrix, terms: Sequence[Sequence[str]], env) -> TensorPoly:
    """Sum of coeff * (L (x) R) from [coeff, L, R] triples."""
    out = TensorPoly(q.theta)
    for c, left, right in terms:
        pure = TensorPoly.pure(parse_poly(left, q, env), parse_poly(right, q, env))
        out = out + pure.scale(_coeff(c, q, env))
    return out


def expand_series(num: Sequence[Sequence[int]], den: Sequence[int], upto: int) -> list[int]:
    """Coefficients of prod(num polys) / prod(1 - t^d) through t^upto."""
    coeffs = [1] + [0] * upto
    for poly in num:
        new = [0] * (upto + 1)
        for i, a in enumerate(coeffs):
            if a:
                for j, b in enumerate(poly):
                    if i + j <= upto:
                        new[i + j] += a * b
        coeffs = new
    for d in den:
        for n in range(d, upto + 1):
            coeffs[n] += coeffs[n - d]
    return coeffs


class Run:
    """One braiding + relation set with lazily computed Groebner data."""

    def __init__(self, spec: Mapping, limits: Limits):
        self.spec = spec
        self.limits = limits
        self.env = _env(spec.get("env"))
        self.q, preset_rels = build_braiding(spec["braiding"], self.env)
        if self.q.conductor > limits.conductor_cap:
            raise ConductorCapExceeded(
                f"conductor {self.q.conductor} exceeds the cap {limits.conductor_cap}"
            )
        rels = spec.get("relations", preset_rels) or []
        if isinstance(rels, Mapping):
            rels = list(relation_set(rels["preset"], **rels.get("params", {})).labels)
        self.relation_strings = list(rels)
        self.relations = [self.poly(s) for s in self.relation_strings]
        self.D = int(spec.get("degree_bound", limits.degree_bound))
        self._gb: ideal.GBasis | None = None

    def poly(self, text: str, q: BraidMatrix | None = None) -> NCPoly:
        return parse_poly(text, q or self.q, self.env)

    def elements(self, spec) -> list[NCPoly]:
        if spec == "relations":
            return list(self.relations)
        if spec == "serre":
            return serre_relations(self.q)
        if isinstance(spec, str):
            return [self.poly(spec)]
        return [self.poly(s) for s in spec]

    @property
    def gb(self) -> ideal.GBasis:
        if self._gb is None:
            self._gb = ideal.groebner(self.q, self.relations, self.D)
        return self._gb


# ---- checks ------------------------------------------------------------------
def _check_equal(run: Run, c) -> tuple[bool, str]:
    """Exact identity in T(V)."""
    diff = run.poly(c["lhs"]) - run.poly(c["rhs"])
    return diff.is_zero() == c.get("expect", True), f"lhs - rhs has {len(diff)} terms"


def _check_coproduct(run: Run, c) -> tuple[bool, str]:
    u = run.poly(c["element"])
    got = coproduct(run.q, u)
    want = _tensor(run.q, c["expect"], run.env)
    diff = got - want
    return diff.is_zero(), f"Delta({c['element']}): {len(got)} terms, difference has {len(diff)} terms"


def _check_defect(run: Run, c) -> tuple[bool, str]:
    u = run.poly(c["element"])
    want = _tensor(run.q, c["expect"], run.env)
    if c.get("in_quotient"):
        got = ideal.quotient_coproduct_defect(u, run.gb)
        want = ideal.reduce_tensor(want, run.gb)
    else:
        got = primitive_defect(run.q, u)
    return (got - want).is_zero(), f"defect({c['element']}) = {got}"


def _check_primitive(run: Run, c) -> tuple[bool, str]:
    elems = run.elements(c.get("elements", "relations"))
    flags = [is_primitive(run.q, u) for u in elems]
    want = c.get("expect", True)
    return all(f == want for f in flags), f"{sum(flags)}/{len(flags)} primitive"


def _class_ok(c, a) -> tuple[bool, str]:
    cls = classify(a)
    ok = True
    if "expect_matrix" in c:
        ok &= tuple(map(tuple, c["expect_matrix"])) == a
    if "expect_class" in c:
        ok &= cls.tag == c["expect_class"]
    if "expect_name" in c:
        ok &= cls.name == c["expect_name"]
    return ok, f"{[list(r) for r in a]} -> {cls}"


def _check_classify(run: Run, c) -> tuple[bool, str]:
    return _class_ok(c, cartan_type_of(run.q))


def _check_classify_induced(run: Run, c) -> tuple[bool, str]:
    degs = c.get("degrees") or _words_to_degrees(c["words"], run.q.theta)
    p = induced_braiding(run.q, degs)
    if "expect_labels" in c:
        d = dynkin(p)
        want = [parse_scalar(x, run.env) for x in c["expect_labels"]]
        if list(d.labels) != want:
            return False, f"vertex labels {[str(x) for x in d.labels]}"
    return _class_ok(c, cartan_type_of(p))


def _check_gb(run: Run, c) -> tuple[bool, str]:
    gb = run.gb
    ok = True
    if "expect_complete" in c:
        ok &= gb.complete == c["expect_complete"]
    if "expect_size" in c:
        ok &= len(gb.basis) == c["expect_size"]
    return ok, f"{len(gb.basis)} elements, complete={gb.complete}, stable={gb.stable}"


def _check_hilbert(run: Run, c) -> tuple[bool, str]:
    upto = int(c.get("upto", run.D))
    h = list(ideal.hilbert(run.gb, upto).coeffs)
    if "expect" in c:
        want = list(c["expect"])[: upto + 1]
    else:
        s = c["expect_series"]
        want = expand_series(s.get("num", []), s.get("den", []), upto)
    cmp = c.get("compare", "eq")
    ok = h == want if cmp == "eq" else all(a <= b for a, b in zip(h, want))
    return ok, f"H = {h} ({'=' if cmp == 'eq' else '<='} {want})"


def _check_growth(run: Run, c) -> tuple[bool, str]:
    g = ideal.growth(run.gb)
    want = c["expect"]
    label = f"{g.verdict}({g.degree})" if g.verdict == "Polynomial" else g.verdict
    return label == want, str(g)


def _check_member(run: Run, c) -> tuple[bool, str]:
    elems = run.elements(c["elements"] if "elements" in c else [c["element"]])
    flags = [ideal.member(u, run.gb) for u in elems]
    want = c.get("expect", True)
    bad = [i for i, f in enumerate(flags) if f != want]
    return not bad, f"{sum(flags)}/{len(flags)} in the ideal" + (f", mismatches at {bad}" if bad else "")


def _check_leftmember(run: Run, c) -> tuple[bool, str]:
    u = run.poly(c["element"])
    mods = [run.poly(s) for s in c["module"]]
    got = ideal.left_module_member(u, mods, run.gb)
    return got == c["expect"], f"left_module_member = {got}"


def _check_hopf(run: Run, c) -> tuple[bool, str]:
    rep = ideal.hopf_ideal(run.q, run.relations, run.D, gb=run.gb)
    ok = rep.ok == c["expect"]
    detail = f"hopf = {rep.ok}"
    if not rep.ok:
        detail += f"; witness generator {rep.witness_generator}, residue {rep.witness}"
        if "expect_witness" in c:
            ok &= (rep.witness - _tensor(run.q, c["expect_witness"], run.env)).is_zero()
    return ok, detail


def _check_nichols(run: Run, c) -> tuple[bool, str]:
    upto = int(c.get("upto", run.D))
    h = nichols.nichols_hilbert(run.q, upto, run.limits.size_cap)
    ok = True
    if "expect" in c:
        ok &= list(h.coeffs) == list(c["expect"])[: upto + 1]
    if "expect_series" in c:
        s = c["expect_series"]
        ok &= list(h.coeffs) == expand_series(s.get("num", []), s.get("den", []), upto)
    if "expect_total" in c:
        ok &= h.total() == c["expect_total"]
    return ok, f"dims {list(h.coeffs)}, total {h.total()}"


def _check_in_jq(run: Run, c) -> tuple[bool, str]:
    elems = run.elements(c.get("elements", "relations"))
    got = nichols.contains_in_Jq(run.q, elems, run.limits.size_cap)
    return got == c.get("expect", True), f"contained in J_q: {got}"


def _check_twist_hilbert(run: Run, c) -> tuple[bool, str]:
    upto = int(c.get("upto", run.D))
    base = list(ideal.hilbert(run.gb, upto).coeffs)
    seen = []
    for tw in c["twists"]:
        spec = dict(run.spec)
        spec["braiding"] = {**run.spec["braiding"], "twist": tw}
        other = Run(spec, run.limits)
        seen.append(list(ideal.hilbert(other.gb, upto).coeffs))
    ok = all(s == base for s in seen)
    return ok, f"{1 + len(seen)} twist-equivalent braidings, identical = {ok}; H = {base}"


def _check_oracle(run: Run, c) -> tuple[bool, str]:
    upto = int(c.get("upto", 8))
    h = list(ideal.hilbert(run.gb, upto).coeffs)
    o = ideal.oracle_counts(run.q, run.relations, upto)
    return h == o, f"GB {h} vs oracle {o}"


CHECKS: dict[str, Callable[[Run, Mapping], tuple[bool, str]]] = {
    "coproduct": _check_coproduct,
    "defect": _check_defect,
    "equal": _check_equal,
    "primitive": _check_primitive,
    "classify": _check_classify,
    "classify_induced": _check_classify_induced,
    "gb": _check_gb,
    "hilbert": _check_hilbert,
    "growth": _check_growth,
    "member": _check_member,
    "leftmember": _check_leftmember,
    "hopf": _check_hopf,
    "nichols": _check_nichols,
    "in_jq": _check_in_jq,
    "twist_hilbert": _check_twist_hilbert,
    "oracle": _check_oracle,
}


# ---- scenario files ------------------------------------------------------------
def validate(s: Mapping) -> None:
    for key in ("id", "title", "source", "runs"):
        if key not in s:
            raise ScenarioError(f"scenario is missing {key!r}")
    for r in s["runs"]:
        if "braiding" not in r:
            raise ScenarioError(f"{s['id']}: run without a braiding")
        for c in r.get("checks", []):
            if c.get("op") not in CHECKS:
                raise ScenarioError(f"{s['id']}: unknown check {c.get('op')!r}")
            if c.get("tag") not in TAGS:
                raise ScenarioError(f"{s['id']}: check {c['op']} needs a tag in {TAGS}")


def bundled_dir() -> Path:
    return Path(str(resources.files("prenichols") / "scenarios"))


def load_all(directory: Path | None = None) -> dict[str, dict]:
    directory = directory or bundled_dir()
    out = {}
    for path in sorted(directory.glob("*.json")):
        s = json.loads(path.read_text(encoding="utf-8"))
        validate(s)
        if s["id"] in out:
            raise ScenarioError(f"duplicate scenario id {s['id']}")
        out[s["id"]] = s
    return out


def run_scenario(s: Mapping, limits: Limits | None = None) -> list[CheckResult]:
    limits = limits or Limits()
    results = []
    for k, spec in enumerate(s["runs"]):
        run = Run(spec, limits)
        for c in spec.get("checks", []):
            t0 = time.perf_counter()
            ok, detail = CHECKS[c["op"]](run, c)
            results.append(CheckResult(s["id"], k, c["op"], c["tag"], bool(ok), detail, time.perf_counter() - t0))
    return results
