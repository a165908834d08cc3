"""Acceptance criteria 1-11, one PASS/FAIL line each.

Run with pytest (lines appear in the terminal summary) or directly:
``python tests/test_acceptance.py``.
"""
import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import ACCEPTANCE_LINES  # noqa: E402

from prenichols import ideal  # noqa: E402
from prenichols.braiding import BraidMatrix  # noqa: E402
from prenichols.cartan import NotCartan, cartan_type_of  # noqa: E402
from prenichols.freealg import NCPoly, TensorPoly, ad_word, coproduct, is_primitive, primitive_defect  # noqa: E402
from prenichols.nichols import contains_in_Jq, nichols_hilbert  # noqa: E402
from prenichols.parse import parse_matrix, parse_poly, parse_scalar  # noqa: E402
from prenichols.presets import cartan_braiding, preset_names, qls_braiding, relation_set, serre_relations  # noqa: E402
from prenichols.scalar import order_of_root, root  # noqa: E402
from prenichols.scenario import expand_series, load_all, run_scenario  # noqa: E402


@contextmanager
def criterion(n, title, budget):
    t0 = time.perf_counter()
    ok, note = False, ""
    try:
        yield
        ok = True
    except AssertionError as e:
        note = f" ({e})" if str(e) else ""
        raise
    finally:
        dt = time.perf_counter() - t0
        within = dt < budget
        verdict = "PASS" if ok and within else "FAIL"
        if ok and not within:
            note = f" (over the {budget:g} s budget)"
        line = f"criterion {n}: {verdict}  {title}  [{dt:.2f} s, budget {budget:g} s]{note}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert within, f"criterion {n} took {dt:.2f} s, budget {budget} s"


def _poly(q, text, env=None):
    return parse_poly(text, q, env)


# ---- 1 -------------------------------------------------------------------------
DELTA_X12_CUBED = [
    ("1", "x12^3", "1"),
    ("1", "1", "x12^3"),
    ("q^-1 - q^-2", "x112", "x221"),
    ("(1 - q^-1)^3 * q21^3", "x1^3", "x2^3"),
    ("(1 - q)^2 * q21^3", "x1112", "x2^2"),
    ("-(1 - q^-1)^2 * q^-1", "x1^2", "x2221"),
    ("q - 1", "x1", "[x12, x221]"),
    ("-(1 - q^-1) * q21", "[x12, x112]", "x2"),
]


def test_criterion_01_coproduct_formula():
    with criterion(1, "Delta(x12^3) for A2 at omega, 4 values of q12", 1.0):
        for q12 in ("1", "z(4)", "z(12)", "-2"):
            env = {"q": root(3), "q12": parse_scalar(q12)}
            env["q21"] = env["q"] ** -1 * env["q12"] ** -1
            q = parse_matrix([["q", "q12"], ["q21", "q"]], env)
            want = TensorPoly(2)
            for c, a, b in DELTA_X12_CUBED:
                want = want + TensorPoly.pure(_poly(q, a, env), _poly(q, b, env)).scale(parse_scalar(c, env))
            got = coproduct(q, _poly(q, "x12^3"))
            assert got == want, f"mismatch at q12 = {q12}"


# ---- 2 -------------------------------------------------------------------------
def test_criterion_02_step2_gap():
    with criterion(2, "z5 not in the left ideal generated by z1..z4 (D = 7)", 30.0):
        p = relation_set("hat_a2_omega")
        gb = ideal.groebner(p.braiding, list(p.relations), 7)
        mods = [_poly(p.braiding, s) for s in ("x2^3", "x221", "x112", "x1^3")]
        assert not ideal.left_module_member(_poly(p.braiding, "x12^3"), mods, gb)


# ---- 3 -------------------------------------------------------------------------
def test_criterion_03_hopf_ideal():
    with criterion(3, "hatB ideal is Hopf; {x12} is not, witness (1 - q~) x1 (x) x2", 60.0):
        p = relation_set("hat_a2_omega")
        assert ideal.hopf_ideal(p.braiding, list(p.relations), 12).ok
        q = cartan_braiding("A", 2, root(3))
        rep = ideal.hopf_ideal(q, [_poly(q, "x12")], 12)
        assert not rep.ok
        x1, x2 = NCPoly.gen(1, 2), NCPoly.gen(2, 2)
        assert q.tilde_entry(1, 2) != 1
        assert rep.witness == TensorPoly.pure(x1, x2).scale(1 - q.tilde_entry(1, 2))


# ---- 4 -------------------------------------------------------------------------
def test_criterion_04_hatb_hilbert_and_gk():
    with criterion(4, "hatB Hilbert series through 12 and GK = 5", 300.0):
        p = relation_set("hat_a2_omega")
        gb = ideal.groebner(p.braiding, list(p.relations), 12)
        h = list(ideal.hilbert(gb, 12).coeffs)
        assert h == expand_series([[1, 1, 1], [1, 1, 1], [1, 0, 1, 0, 1]], [3, 3, 3, 3, 6], 12)
        g = ideal.growth(gb)
        assert (g.verdict, g.degree) == ("Polynomial", 5)


# ---- 5 -------------------------------------------------------------------------
def test_criterion_05_breve_gk():
    with criterion(5, "degenerate G2: GK = 6, Hilbert <= PBW product series", 300.0):
        p = relation_set("breve_g2_degenerate")
        gb = ideal.groebner(p.braiding, list(p.relations), 12)
        g = ideal.growth(gb)
        assert (g.verdict, g.degree) == ("Polynomial", 6)
        h = ideal.hilbert(gb, 12).coeffs
        bound = expand_series([], [1, 1, 2, 3, 4, 5], 12)
        assert all(a <= b for a, b in zip(h, bound))


# ---- 6 -------------------------------------------------------------------------
LEDGER = [
    "x12*x2 - q12*q^3*x2*x12",
    "x112*x2 - q12^2*q^3*x2*x112 - q12*q*(q-1)*(1+q)*x12^2",
    "x1112*x2 - q12^3*q^3*x2*x1112 - q12*q*(q^2-q-1)*y - q12^2*q^2*(q-1)*(1+q+q^2)*x12*x112",
    "y*x2 - q12^3*q^6*x2*y - q12^2*q^3*(q-1)^2*(1+q)*x12^3",
    "x1*y - q12^2*q^3*y*x1 - x1112*x12 + q12^2*q^3*x12*x1112",
    "(1+q)*x1112*x12 - q12^2*q^3*(1+q)*x12*x1112 - q12*q*(q-1)*(1+q+q^2)*x112^2",
]


def _g2_quotient(q, q12):
    env = {"q": q, "q12": q12}
    b = parse_matrix([["q", "q12"], ["q12^-1 * q^-3", "q^3"]], env)
    gb = ideal.groebner(b, [_poly(b, "x11112"), _poly(b, "x221")], 8)
    return b, env, gb


def test_criterion_06_commutation_ledger():
    with criterion(6, "six G2 commutations at 3 values of q12; x112^2 = 0 at q = -1", 60.0):
        for q in (root(3), root(5), root(8)):
            for q12 in (parse_scalar("1"), root(4), parse_scalar("3")):
                b, env, gb = _g2_quotient(q, q12)
                for rel in LEDGER:
                    u = _poly(b, rel.replace("y", "[x112,x12]"), env)
                    assert ideal.member(u, gb), f"{rel} at q = {q}, q12 = {q12}"
        for q12 in (parse_scalar("1"), root(4), parse_scalar("3")):
            b, env, gb = _g2_quotient(parse_scalar("-1"), q12)
            assert ideal.member(_poly(b, "x112^2", env), gb)


def test_g2_second_relation_coefficient():
    # the second commutation holds with q12 q (q-1)(2)_q; with q12 q^2 (q-1)(2)_q it fails for q^2 != 1
    for q in (root(3), root(5)):
        b, env, gb = _g2_quotient(q, root(4))
        wrong = _poly(b, "x112*x2 - q12^2*q^3*x2*x112 - q12*q^2*(q-1)*(1+q)*x12^2", env)
        assert not ideal.member(wrong, gb)


# ---- 7 -------------------------------------------------------------------------
def _is_cartan(q):
    try:
        cartan_type_of(q)
    except (NotCartan, ValueError):
        return False
    return True


def test_criterion_07_primitivity_battery():
    with criterion(7, "Serre elements primitive; degenerate G2 relations; defect of x_ij", 60.0):
        checked = 0
        for name in preset_names():
            if name.startswith(("qls", "breve", "open", "z_")):
                continue
            p = relation_set(name)
            if not _is_cartan(p.braiding):
                continue
            for r in serre_relations(p.braiding):
                assert is_primitive(p.braiding, r), f"{name}: {r}"
                checked += 1
        assert checked > 50
        p = relation_set("breve_g2_degenerate")
        assert all(is_primitive(p.braiding, r) for r in p.relations)
        rng = random.Random(20)
        for _ in range(30):
            t = rng.randint(2, 4)
            rows = [[root(n := rng.choice((2, 3, 4, 5, 6, 8)), rng.randrange(n)) for _ in range(t)] for _ in range(t)]
            q = BraidMatrix.from_rows(rows)
            i, j = rng.sample(range(1, t + 1), 2)
            d = primitive_defect(q, ad_word(q, [i, j]))
            want = TensorPoly.pure(NCPoly.gen(i, t), NCPoly.gen(j, t)).scale(1 - q.tilde_entry(i, j))
            assert d == want


# ---- 8 -------------------------------------------------------------------------
CLASSIFICATION_SCENARIOS = [
    "a2-n-gt-3-cartan", "a2-n3-discard", "b2-cartan", "b3-cartan", "c3-cartan",
    "g2-cartan", "g2-degenerate-cartan", "qls-rank2-cartan", "qls-set-e",
]


def test_criterion_08_cartan_classifications():
    pool = load_all()
    with criterion(8, "Cartan matrices in the proofs classify as stated (each < 1 s)", 9.0):
        count = 0
        for sid in CLASSIFICATION_SCENARIOS:
            for r in run_scenario(pool[sid]):
                if r.op != "classify_induced":
                    continue
                assert r.passed, f"{sid}: {r.detail}"
                assert r.seconds < 1.0, f"{sid}: {r.seconds:.2f} s"
                count += 1
        assert count >= 30


# ---- 9 -------------------------------------------------------------------------
def test_criterion_09_nichols_oracle():
    with criterion(9, "QLS truncated PBW; A2 at omega has dim 27; presets lie in J_q", 300.0):
        for diag in (["z(3)", "z(3)"], ["-1", "z(4)", "z(3)"], ["z(5)", "-1"]):
            q = qls_braiding(diag)
            want = expand_series([[1] * order_of_root(q[i, i]) for i in range(1, q.theta + 1)], [], 8)
            assert list(nichols_hilbert(q, 8).coeffs) == want
        h = nichols_hilbert(cartan_braiding("A", 2, root(3)), 10)
        assert h.total() == 27 and h.coeffs[-1] == 0
        for name in preset_names():
            p = relation_set(name)
            if p.in_jq:
                assert contains_in_Jq(p.braiding, list(p.relations), size_cap=300_000), name


# ---- 10 ------------------------------------------------------------------------
def test_criterion_10_twist_invariance():
    with criterion(10, "Hilbert series equal across 3 twist-equivalent braidings", 600.0):
        for name, twists in (("hat_a2_omega", ("z(4)", "-2")), ("breve_g2_degenerate", ("z(5)", "3"))):
            series = []
            for t in (None, *twists):
                p = relation_set(name, twist={"1,2": t} if t else None)
                gb = ideal.groebner(p.braiding, list(p.relations), 12)
                series.append(ideal.hilbert(gb, 12).coeffs)
            assert len(set(series)) == 1, name


# ---- 11 ------------------------------------------------------------------------
def test_criterion_11_engine_self_consistency():
    with criterion(11, "GB normal-word counts equal the linear-algebra oracle, theta <= 3, n <= 8", 600.0):
        count = 0
        for name in preset_names():
            p = relation_set(name)
            if p.theta > 3:
                continue
            gens = list(p.relations)
            gb = ideal.groebner(p.braiding, gens, 8)
            assert list(ideal.hilbert(gb, 8).coeffs) == ideal.oracle_counts(p.braiding, gens, 8), name
            count += 1
        assert count >= 10


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
