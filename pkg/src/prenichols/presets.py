"""Named braidings and relation sets.

Every preset is built from a braiding matrix plus a list of relation strings
in the expression language of :mod:`prenichols.parse`, so ``preset show``
prints exactly what is being computed with.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .braiding import BraidMatrix, twist as twist_braiding
from .cartan import cartan_type_of, finite_matrix, symmetrizer, NotCartan
from .freealg import NCPoly, serre_element
from .parse import parse_poly, parse_scalar
from .scalar import Cyc, Scalar, order_of_root, root


class InadmissibleParameters(ValueError):
    pass


class UnknownPreset(KeyError):
    pass


@dataclass(frozen=True)
class Preset:
    name: str
    params: tuple[tuple[str, str], ...]
    braiding: BraidMatrix
    relations: tuple[NCPoly, ...]
    labels: tuple[str, ...]
    provenance: str
    in_jq: bool = True  # relations are asserted to vanish in the Nichols algebra
    notes: str = ""

    @property
    def theta(self) -> int:
        return self.braiding.theta

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "braiding": self.braiding.to_json(),
            "relations": [{"label": l, "poly": str(r)} for l, r in zip(self.labels, self.relations)],
            "provenance": self.provenance,
            "in_jq": self.in_jq,
            "notes": self.notes,
        }


# ---- braidings -------------------------------------------------------------
def _as_q(q: Scalar | str | None, N: int | None, default_N: int) -> Cyc:
    if q is not None and N is not None:
        raise InadmissibleParameters("give either q or N, not both")
    if q is not None:
        return parse_scalar(q)
    return root(default_N if N is None else int(N), 1)


def _twisted(q: BraidMatrix, twist: Mapping | None) -> BraidMatrix:
    if not twist:
        return q
    upper = {}
    for key, value in twist.items():
        i, j = (int(s) for s in key.split(",")) if isinstance(key, str) else key
        upper[(i, j)] = parse_scalar(value)
    return twist_braiding(q, upper)


def cartan_braiding(
    kind: str,
    theta: int,
    q: Scalar | str,
    twist: Mapping | None = None,
    check: bool = True,
) -> BraidMatrix:
    """Cartan-type braiding with q_ii = q^d_i, q_ij = 1 (i < j), q_ji = q^(d_i a_ij).

    ``twist`` maps pairs (i, j), i < j, to a replacement value of q_ij (the
    lower entry is adjusted so q~ is unchanged).  With ``check`` the result
    must have Cartan type exactly the requested matrix.
    """
    try:
        a = finite_matrix(kind, theta)
    except ValueError as e:
        raise InadmissibleParameters(str(e)) from None
    q = parse_scalar(q)
    if order_of_root(q) is None:
        raise InadmissibleParameters("q must be a root of unity")
    d = symmetrizer(a)
    rows = [[Cyc(1)] * theta for _ in range(theta)]
    for i in range(theta):
        rows[i][i] = q ** d[i]
        for j in range(i + 1, theta):
            rows[j][i] = q ** (d[i] * a[i][j])
    out = _twisted(BraidMatrix.from_rows(rows), twist)
    if check:
        try:
            got = cartan_type_of(out)
        except (NotCartan, ValueError) as e:
            raise InadmissibleParameters(f"{kind}_{theta} at this q: {e}") from None
        if got != a:
            raise InadmissibleParameters(
                f"{kind}_{theta} at q of order {order_of_root(q)} has Cartan type {got}, not {a}"
            )
    return out


def qls_braiding(diag: Sequence[Scalar | str], twist: Mapping | None = None) -> BraidMatrix:
    """Quantum linear space: q_ij q_ji = 1 off the diagonal, normalized to q_ij = 1."""
    d = [parse_scalar(x) for x in diag]
    if not d:
        raise InadmissibleParameters("need at least one diagonal entry")
    if any(x.is_zero() for x in d):
        raise InadmissibleParameters("diagonal entries must be nonzero")
    rows = [[d[i] if i == j else Cyc(1) for j in range(len(d))] for i in range(len(d))]
    return _twisted(BraidMatrix.from_rows(rows), twist)


# ---- relation helpers ------------------------------------------------------
def _x(*idx: int) -> str:
    """x_{i1 i2 ...} as a parse string; ad(...) when an index has two digits."""
    if all(i < 10 for i in idx):
        return "x" + "".join(map(str, idx))
    return "ad(" + ",".join(map(str, idx)) + ")"


def _run(i: int, j: int) -> str:
    """x_{(i j)} = x_{i, i+1, ..., j}."""
    return _x(*range(i, j + 1))


def _serre_labels(q: BraidMatrix, a) -> list[str]:
    out = []
    for i in range(1, q.theta + 1):
        for j in range(1, q.theta + 1):
            if i == j:
                continue
            if a[i - 1][j - 1] == 0 and j < i:
                continue  # x_ji is a scalar multiple of x_ij
            out.append(_x(*([i] * (1 - a[i - 1][j - 1]) + [j])))
    return out


def _need_order(q: Cyc, allowed: Sequence[int], what: str) -> None:
    n = order_of_root(q)
    if n not in allowed:
        raise InadmissibleParameters(f"{what} needs ord q in {sorted(allowed)}, got {n}")


_BUILDERS: dict[str, tuple[Callable, dict, str]] = {}


def _preset(name: str, defaults: dict, summary: str):
    def wrap(fn):
        _BUILDERS[name] = (fn, defaults, summary)
        return fn

    return wrap


# Each builder returns (braiding, labels, provenance, notes); the braiding is
# already twisted so relations are instantiated on the final matrix.
@_preset("qls_distinguished", {"diag": ["z(3)", "z(3)"]}, "quantum linear space, x_ij for i < j")
def _qls_distinguished(diag, twist=None):
    q = qls_braiding(diag, twist)
    labels = [_x(i, j) for i in range(1, q.theta + 1) for j in range(i + 1, q.theta + 1)]
    return q, labels, "quantum linear space: x_ij = 0 for i < j", ""


@_preset("qls_nichols", {"diag": ["z(3)", "z(3)"]}, "quantum linear space Nichols algebra")
def _qls_nichols(diag, twist=None):
    q, labels, _, _ = _qls_distinguished(diag, twist)
    for i, n in enumerate(q.orders, start=1):
        if q[i, i] != 1:
            if n is None:
                raise InadmissibleParameters(f"q_{i}{i} is not a root of unity")
            labels.append(f"x{i}^{n}" if i < 10 else f"x({i})^{n}")
    return q, labels, "quantum linear space: x_ij = 0 (i < j), x_i^N_i = 0", ""


@_preset("breve_g2_degenerate", {}, "degenerate G2 at q = omega: quantum plane (omega, 1)")
def _breve(twist=None):
    q = qls_braiding([root(3), 1], twist)
    return q, ["x11112", "x221"], "degenerate G2 Serre relations on the quantum plane (omega, 1)", ""


@_preset("hat_a2_omega", {}, "A2 at N = 3, the eminent pre-Nichols algebra")
def _hat_a2(twist=None):
    q = cartan_braiding("A", 2, root(3), twist)
    return q, ["x1112", "x2221", "x2112", "x1221"], "A2, N = 3: eminent pre-Nichols algebra", ""


@_preset("z_generators", {}, "A2 at N = 3, generators of the central Hopf subalgebra")
def _z_gens(twist=None):
    q = cartan_braiding("A", 2, root(3), twist)
    return q, ["x2^3", "x221", "x112", "x1^3", "x12^3"], "A2, N = 3: z_1, ..., z_5", ""


@_preset("serre_only", {"type": "A", "theta": 2, "N": 3}, "all quantum Serre relations")
def _serre_only(type, theta, q=None, N=None, twist=None):
    theta = int(theta)
    qq = cartan_braiding(type, theta, _as_q(q, N, 3), twist)
    return qq, _serre_labels(qq, finite_matrix(type, theta)), f"quantum Serre relations, type {type}_{theta}", ""


def _cartan_with(type, theta, q, N, default_N, twist, orders, extra, what):
    theta = int(theta)
    qv = _as_q(q, N, default_N)
    if orders is not None:
        _need_order(qv, orders, what)
    qq = cartan_braiding(type, theta, qv, twist)
    return qq, _serre_labels(qq, finite_matrix(type, theta)) + extra


@_preset("b3_n3", {}, "B3, N = 3: Serre + [x3321, x32]")
def _b3_n3(q=None, N=None, twist=None):
    qq, labels = _cartan_with("B", 3, q, N, 3, twist, [3], ["[x3321, x32]"], "b3_n3")
    return qq, labels, "distinguished presentation, B3, N = 3", ""


@_preset("b3_n4", {}, "B3, N = 4: Serre + [x123, x2]")
def _b3_n4(q=None, N=None, twist=None):
    qq, labels = _cartan_with("B", 3, q, N, 4, twist, [4], ["[x123, x2]"], "b3_n4")
    return qq, labels, "distinguished presentation, B3, N = 4", ""


@_preset("c3_n3", {}, "C3, N = 3: Serre + [[x123, x2], x2]")
def _c3_n3(q=None, N=None, twist=None):
    qq, labels = _cartan_with("C", 3, q, N, 3, twist, [3], ["[[x123, x2], x2]"], "c3_n3")
    return qq, labels, "distinguished presentation, C3, N = 3", ""


@_preset("c3_n4", {}, "C3, N = 4: Serre + [x123, x23]")
def _c3_n4(q=None, N=None, twist=None):
    qq, labels = _cartan_with("C", 3, q, N, 4, twist, [4], ["[x123, x23]"], "c3_n4")
    return qq, labels, "distinguished presentation, C3, N = 4", ""


@_preset("f4_n3", {}, "F4, N = 3: Serre + [x2234, x23]")
def _f4_n3(q=None, N=None, twist=None):
    qq, labels = _cartan_with("F", 4, q, N, 3, twist, [3], ["[x2234, x23]"], "f4_n3")
    return qq, labels, "distinguished presentation, F4, N = 3", ""


@_preset("f4_n4", {}, "F4, N = 4: Serre + [x123, x23], [x432, x3]")
def _f4_n4(q=None, N=None, twist=None):
    qq, labels = _cartan_with("F", 4, q, N, 4, twist, [4], ["[x123, x23]", "[x432, x3]"], "f4_n4")
    return qq, labels, "distinguished presentation, F4, N = 4", ""


@_preset("btheta_n3", {"theta": 4}, "B_theta, N = 3")
def _btheta_n3(theta, q=None, N=None, twist=None):
    t = int(theta)
    if t < 3:
        raise InadmissibleParameters("btheta_n3 needs theta >= 3")
    extra = [f"[{_x(t, t, t - 1, t - 2)}, {_x(t, t - 1)}]"]
    qq, labels = _cartan_with("B", t, q, N, 3, twist, [3], extra, "btheta_n3")
    return qq, labels, f"distinguished presentation, B_{t}, N = 3", ""


@_preset("btheta_n4", {"theta": 4}, "B_theta, N = 4")
def _btheta_n4(theta, q=None, N=None, twist=None):
    t = int(theta)
    if t < 3:
        raise InadmissibleParameters("btheta_n4 needs theta >= 3")
    extra = [f"[{_run(i, i + 2)}, {_x(i + 1)}]" for i in range(1, t - 1)]
    qq, labels = _cartan_with("B", t, q, N, 4, twist, [4], extra, "btheta_n4")
    return qq, labels, f"distinguished presentation, B_{t}, N = 4", ""


@_preset("ctheta_n3", {"theta": 4}, "C_theta, N = 3")
def _ctheta_n3(theta, q=None, N=None, twist=None):
    t = int(theta)
    if t < 3:
        raise InadmissibleParameters("ctheta_n3 needs theta >= 3")
    extra = [f"[[{_run(t - 2, t)}, {_x(t - 1)}], {_x(t - 1)}]"]
    qq, labels = _cartan_with("C", t, q, N, 3, twist, [3], extra, "ctheta_n3")
    return qq, labels, f"distinguished presentation, C_{t}, N = 3", ""


@_preset("ctheta_n4", {"theta": 4}, "C_theta, N = 4")
def _ctheta_n4(theta, q=None, N=None, twist=None):
    t = int(theta)
    if t < 3:
        raise InadmissibleParameters("ctheta_n4 needs theta >= 3")
    extra = [f"[{_run(t - 2, t)}, {_x(t - 1, t)}]"]
    qq, labels = _cartan_with("C", t, q, N, 4, twist, [4], extra, "ctheta_n4")
    return qq, labels, f"distinguished presentation, C_{t}, N = 4", ""


def _atheta_n2_labels(t: int) -> list[str]:
    labels = [_x(i, j) for i in range(1, t + 1) for j in range(i + 2, t + 1)]
    for i in range(1, t + 1):
        for j in (i - 1, i + 1):
            if 1 <= j <= t:
                labels.append(_x(i, i, j))
    return labels


@_preset("atheta_n2", {"theta": 4}, "A_theta, N = 2, distinguished")
def _atheta_n2(theta, twist=None):
    t = int(theta)
    if t < 3:
        raise InadmissibleParameters("atheta_n2 needs theta >= 3")
    qq = cartan_braiding("A", t, -1, twist)
    extra = [f"[{_run(i, i + 2)}, {_x(i + 1)}]" for i in range(1, t - 1)]
    return qq, _atheta_n2_labels(t) + extra, f"distinguished presentation, A_{t}, N = 2", ""


@_preset("dtheta_n2_distinguished", {"theta": 4}, "D_theta, N = 2, distinguished")
def _dtheta_n2(theta, twist=None):
    t = int(theta)
    if t < 4:
        raise InadmissibleParameters("D_theta needs theta >= 4")
    qq = cartan_braiding("D", t, -1, twist)
    extra = [f"[{_run(i, i + 2)}, {_x(i + 1)}]" for i in range(1, t - 2)]
    extra.append(f"[{_x(t - 3, t - 2, t)}, {_x(t - 2)}]")
    extra.append(f"[{_x(t, t - 2, t - 1)}, {_x(t - 2)}]")
    labels = _serre_labels(qq, finite_matrix("D", t)) + extra
    return qq, labels, f"distinguished presentation, D_{t}, N = 2", ""


@_preset("etheta_n2", {"theta": 6}, "E_theta, N = 2, distinguished")
def _etheta_n2(theta, twist=None):
    t = int(theta)
    if t not in (6, 7, 8):
        raise InadmissibleParameters("E_theta needs theta in 6, 7, 8")
    qq = cartan_braiding("E", t, -1, twist)
    a = finite_matrix("E", t)
    extra = []
    for j in range(1, t + 1):
        nb = [i for i in range(1, t + 1) if i != j and a[i - 1][j - 1]]
        for i in nb:
            for k in nb:
                if i != k:
                    extra.append(f"[{_x(i, j, k)}, {_x(j)}]")
    labels = _serre_labels(qq, a) + extra
    return qq, labels, f"distinguished presentation, E_{t}, N = 2", ""


_SERRE_SUFFICES = "quantum Serre relations generate the distinguished ideal"


@_preset("distinguished", {"type": "A", "theta": 2, "N": 3}, "distinguished pre-Nichols algebra")
def _distinguished(type, theta, q=None, N=None, twist=None):
    t = int(theta)
    qv = _as_q(q, N, 3)
    n = order_of_root(qv)
    simply_laced = type in ("A", "D", "E")
    if (
        (type in ("A", "B") and t <= 2)
        or (type == "A" and t == 1)
        or (type == "G" and n not in (4, 6))
        or (simply_laced and n is not None and n > 2)
        or (type in ("B", "C", "F") and n is not None and n > 4)
    ):
        qq, labels, _, _ = _serre_only(type, t, q=qv, twist=twist)
        return qq, labels, f"distinguished presentation, {type}_{t}: {_SERRE_SUFFICES}", ""
    table = {
        ("B", 3): ("b3_n3", "b3_n4"),
        ("C", 3): ("c3_n3", "c3_n4"),
        ("F", 4): ("f4_n3", "f4_n4"),
    }
    if (type, t) in table and n in (3, 4):
        return _BUILDERS[table[type, t][n - 3]][0](q=qv, twist=twist)
    if type in ("B", "C") and t > 3 and n in (3, 4):
        name = f"{type.lower()}theta_n{n}"
        return _BUILDERS[name][0](t, q=qv, twist=twist)
    if n == 2 and type == "A" and t >= 3:
        return _atheta_n2(t, twist)
    if n == 2 and type == "D":
        return _dtheta_n2(t, twist)
    if n == 2 and type == "E":
        return _etheta_n2(t, twist)
    raise InadmissibleParameters(f"no distinguished presentation recorded for {type}_{t} at N = {n}")


# ---- open cases at N = 2 ---------------------------------------------------
@_preset("open_a2_n2_hat1", {}, "A2, N = 2: <x221, x11112>")
def _open_a2_1(twist=None):
    return cartan_braiding("A", 2, -1, twist), ["x221", "x11112"], "A2, N = 2: first candidate", ""


@_preset("open_a2_n2_hat2", {}, "A2, N = 2: <x112, x22221>")
def _open_a2_2(twist=None):
    return cartan_braiding("A", 2, -1, twist), ["x112", "x22221"], "A2, N = 2: second candidate", ""


@_preset("open_a3_n2_hat", {"quotient": 0}, "A3, N = 2: seven relations (+ one of x113, x331, x221, x223)")
def _open_a3(quotient=0, twist=None):
    k = int(quotient)
    if not 0 <= k <= 4:
        raise InadmissibleParameters("quotient must be 0 (none) or 1..4")
    labels = ["x112", "x332", "x22221", "x22223", "x11113", "x33331", "x213"]
    if k:
        labels.append(["x113", "x331", "x221", "x223"][k - 1])
    note = "x213 carries an unexplained star annotation in the source; it is included"
    return cartan_braiding("A", 3, -1, twist), labels, f"A3, N = 2: candidate (quotient {k})", note


def _open_atheta(t: int, which: int, twist):
    if t < 4:
        raise InadmissibleParameters("needs theta >= 4")
    labels = [_x(i, j) for i in range(1, t + 1) for j in range(i + 2, t + 1)]
    skip = (t - 1, t) if which == 1 else (2, 1)
    for i in range(1, t + 1):
        for j in (i - 1, i + 1):
            if 1 <= j <= t and (i, j) != skip:
                labels.append(_x(i, i, j))
    labels.append(_x(*([skip[0]] * 4 + [skip[1]])))
    labels.append(f"[{_run(1, 3)}, x2]" if which == 1 else f"[{_run(t - 2, t)}, {_x(t - 1)}]")
    return cartan_braiding("A", t, -1, twist), labels, f"A_{t}, N = 2: candidate {which}", ""


@_preset("open_atheta_n2_hat1", {"theta": 4}, "A_theta, N = 2, first candidate")
def _open_atheta_1(theta, twist=None):
    return _open_atheta(int(theta), 1, twist)


@_preset("open_atheta_n2_hat2", {"theta": 4}, "A_theta, N = 2, second candidate")
def _open_atheta_2(theta, twist=None):
    return _open_atheta(int(theta), 2, twist)


@_preset("open_d4_n2_hat", {}, "D4, N = 2 candidate")
def _open_d4(twist=None):
    t = 4
    qq = cartan_braiding("D", t, -1, twist)
    labels = []
    for i in range(1, t + 1):
        for j in range(1, t + 1):
            if i == j:
                continue
            if qq.tilde_entry(i, j) == -1:
                labels.append(_x(i, i, j))
            elif i < j:
                labels += [_x(k, i, j) for k in range(1, t + 1)]
    rs = [f"[{_run(1, 3)}, x2]", f"[{_x(1, 2, 4)}, x2]", f"[{_x(4, 2, 3)}, x2]"]
    labels += [f"[x{k}, {r}]" for r in rs for k in range(1, t + 1)]
    return qq, labels, "D4, N = 2: candidate", ""


@_preset("open_dtheta_n2_hat", {"theta": 5}, "D_theta (theta > 4), N = 2 candidate")
def _open_dtheta(theta, twist=None):
    t = int(theta)
    if t < 5:
        raise InadmissibleParameters("needs theta >= 5")
    qq = cartan_braiding("D", t, -1, twist)
    labels = []
    for i in range(1, t + 1):
        for j in range(1, t + 1):
            if i == j:
                continue
            if qq.tilde_entry(i, j) == -1:
                labels.append(_x(i, i, j))
            elif i < j and (i, j) != (t - 1, t):
                labels.append(_x(i, j))
    labels += [_x(k, t, t - 1) for k in range(1, t + 1)]
    labels.append(f"[{_x(t - 3, t - 2, t)}, {_x(t - 2)}]")
    labels += [f"[{_run(i, i + 2)}, {_x(i + 1)}]" for i in range(1, t - 2)]
    r = f"[{_x(t, t - 2, t - 1)}, {_x(t - 2)}]"
    labels += [f"[{_x(k)}, {r}]" for k in range(1, t + 1)]
    return qq, labels, f"D_{t}, N = 2: candidate", ""


# ---- public entry points -----------------------------------------------------
def preset_names() -> list[str]:
    return sorted(_BUILDERS)


def preset_summary(name: str) -> tuple[dict, str]:
    if name not in _BUILDERS:
        raise UnknownPreset(name)
    _, defaults, summary = _BUILDERS[name]
    return dict(defaults), summary


def relation_set(name: str, **params) -> Preset:
    """Instantiate a named preset; missing parameters take their defaults."""
    if name not in _BUILDERS:
        raise UnknownPreset(f"unknown preset {name!r}; known: {', '.join(preset_names())}")
    fn, defaults, _ = _BUILDERS[name]
    kwargs = {**defaults, **{k: v for k, v in params.items() if v is not None}}
    if "q" in kwargs and "N" in kwargs and "N" not in params:
        del kwargs["N"]
    try:
        q, labels, provenance, notes = fn(**kwargs)
    except TypeError as e:
        raise InadmissibleParameters(f"{name}: {e}") from None
    rels = tuple(parse_poly(s, q) for s in labels)
    shown = tuple(sorted((k, _show(v)) for k, v in kwargs.items()))
    return Preset(name, shown, q, rels, tuple(labels), provenance, True, notes)


def _show(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(map(str, v)) + "]"
    if isinstance(v, Mapping):
        return "{" + ", ".join(f"{k}: {w}" for k, w in sorted(v.items(), key=str)) + "}"
    return str(v)


def serre_relations(q: BraidMatrix) -> list[NCPoly]:
    """All (ad_c x_i)^(1 - a_ij) x_j for the Cartan type of q."""
    a = cartan_type_of(q)
    return [
        serre_element(q, a, i, j)
        for i in range(1, q.theta + 1)
        for j in range(1, q.theta + 1)
        if i != j
    ]
