"""Command-line front end: ``prenichols <command> [options]``.

Exit codes: 0 success, 1 unmet expectation, 2 usage error, 3 parse or
scenario error, 4 degree bound violated, 5 size or conductor cap exceeded,
6 unknown preset or inadmissible parameters.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import ideal, nichols, scenario
from .braiding import dynkin, induced_braiding
from .cartan import NotCartan, cartan_type_of, classify
from .freealg import coproduct, primitive_defect
from .parse import ParseError
from .presets import InadmissibleParameters, UnknownPreset, preset_names, preset_summary, relation_set

EXIT_OK, EXIT_UNMET, EXIT_USAGE, EXIT_PARSE, EXIT_BOUND, EXIT_CAP, EXIT_PRESET = range(7)

ENV_PREFIX = "PRENICHOLS_"


class Unmet(Exception):
    pass


# ---- option parsing helpers ---------------------------------------------------
def _split_top(text: str, sep: str) -> list[str]:
    """Split on sep outside parentheses and brackets."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    return out


def _key_value(items: Sequence[str] | None, what: str) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise ParseError(f"{what} expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _param_value(v: str):
    try:
        return json.loads(v)
    except json.JSONDecodeError:
        return v


def _env_default(name: str, fallback, cast=int):
    raw = os.environ.get(ENV_PREFIX + name)
    return fallback if raw is None else cast(raw)


def _truthy(s: str) -> bool:
    return s.strip().lower() in ("1", "true", "yes", "on")


def _limits(args) -> scenario.Limits:
    return scenario.Limits(
        degree_bound=args.degree_bound,
        conductor_cap=args.conductor_cap,
        size_cap=args.size_cap,
    )


def _run_spec(args) -> dict:
    chosen = [x for x in ("preset", "cartan", "qls", "matrix") if getattr(args, x)]
    if len(chosen) != 1:
        raise ParseError("give exactly one of --preset, --cartan, --qls, --matrix")
    b: dict = {}
    if args.preset:
        b["preset"] = args.preset
        b["params"] = {k: _param_value(v) for k, v in _key_value(args.param, "--param").items()}
    elif args.cartan:
        kind, theta, q = args.cartan
        b["cartan"] = [kind.upper(), int(theta), q]
    elif args.qls:
        b["qls"] = list(args.qls)
    else:
        b["matrix"] = [_split_top(row, ",") for row in _split_top(args.matrix, ";")]
    if args.twist:
        b["twist"] = _key_value(args.twist, "--twist")
    spec = {"braiding": b, "env": _key_value(args.env, "--env"), "degree_bound": args.degree_bound}
    if args.relations is not None:
        spec["relations"] = list(args.relations)
    return spec


def _expect(args, got) -> None:
    want = getattr(args, "expect", None)
    if want is None:
        return
    if isinstance(got, bool):
        ok = got == _truthy(want)
    else:
        ok = str(got) == want
    if not ok:
        raise Unmet(f"expected {want}, got {got}")


# ---- commands ------------------------------------------------------------------
def cmd_classify(run: scenario.Run, args) -> dict:
    q = run.q
    out = {"braiding": q.to_json(), "dynkin": dynkin(q).to_json()}
    if args.words or args.degrees:
        degs = (
            [[int(x) for x in d.split(",")] for d in args.degrees]
            if args.degrees
            else scenario._words_to_degrees(args.words, q.theta)
        )
        q = induced_braiding(q, degs)
        out["induced"] = {"degrees": degs, "braiding": q.to_json(), "dynkin": dynkin(q).to_json()}
    try:
        a = cartan_type_of(q)
    except (NotCartan, ValueError) as e:
        out["cartan"] = None
        out["class"] = None
        out["text"] = f"not of Cartan type: {e}"
        _expect(args, "none")
        return out
    cls = classify(a)
    out["cartan"] = [list(r) for r in a]
    out["class"] = cls.to_json()
    out["text"] = f"{[list(r) for r in a]} -> {cls}"
    _expect(args, str(cls))
    return out


def cmd_coproduct(run, args) -> dict:
    u = run.poly(args.expr)
    d = coproduct(run.q, u)
    return {"element": args.expr, "coproduct": str(d), "terms": len(d), "text": str(d)}


def cmd_defect(run, args) -> dict:
    u = run.poly(args.expr)
    if args.in_quotient:
        d = ideal.quotient_coproduct_defect(u, run.gb)
    else:
        d = primitive_defect(run.q, u)
    _expect(args, d.is_zero())
    return {"element": args.expr, "defect": str(d), "primitive": d.is_zero(), "text": str(d) or "0"}


def cmd_nf(run, args) -> dict:
    nf = ideal.normal_form(run.poly(args.expr), run.gb)
    return {"element": args.expr, "normal_form": str(nf), "text": str(nf) or "0"}


def cmd_gb(run, args) -> dict:
    gb = run.gb
    data = gb.to_json()
    data["basis"] = [str(p) for p in gb.basis]
    lines = [f"{len(gb.basis)} elements, D = {gb.D}, complete = {gb.complete}, stable = {gb.stable}"]
    lines += [f"  {p}" for p in gb.basis]
    data["text"] = "\n".join(lines)
    return data


def cmd_hilbert(run, args) -> dict:
    h = ideal.hilbert(run.gb, args.upto)
    data = h.to_json()
    cert = data["certified_through"]
    data["text"] = f"{list(h.coeffs)}  (certified through {'all degrees' if cert is None else cert})"
    return data


def cmd_growth(run, args) -> dict:
    g = ideal.growth(run.gb)
    label = f"Polynomial({g.degree})" if g.verdict == "Polynomial" else g.verdict
    _expect(args, label)
    return {**g.to_json(), "text": str(g)}


def cmd_member(run, args) -> dict:
    got = ideal.member(run.poly(args.expr), run.gb)
    _expect(args, got)
    return {"element": args.expr, "member": got, "text": str(got).lower()}


def cmd_leftmember(run, args) -> dict:
    got = ideal.left_module_member(run.poly(args.expr), [run.poly(m) for m in args.module], run.gb)
    _expect(args, got)
    return {"element": args.expr, "module": list(args.module), "member": got, "text": str(got).lower()}


def cmd_hopf(run, args) -> dict:
    rep = ideal.hopf_ideal(run.q, run.relations, run.D, gb=run.gb)
    _expect(args, rep.ok)
    out = {"hopf": rep.ok, "text": str(rep.ok).lower()}
    if not rep.ok:
        out["witness_generator"] = str(rep.witness_generator)
        out["witness"] = str(rep.witness)
        out["text"] += f"\nwitness generator: {rep.witness_generator}\nresidue: {rep.witness}"
    return out


def cmd_nichols(run, args) -> dict:
    h = nichols.nichols_hilbert(run.q, args.upto, run.limits.size_cap)
    out = {"coeffs": list(h.coeffs), "total_through_upto": h.total()}
    if args.kernel is not None:
        rep = nichols.symmetrizer_report(run.q, args.kernel, run.limits.size_cap)
        out["kernel"] = rep.to_json()
    out["text"] = f"{list(h.coeffs)}, sum {h.total()}"
    return out


RUN_COMMANDS = {
    "classify": cmd_classify,
    "coproduct": cmd_coproduct,
    "defect": cmd_defect,
    "nf": cmd_nf,
    "gb": cmd_gb,
    "hilbert": cmd_hilbert,
    "growth": cmd_growth,
    "member": cmd_member,
    "leftmember": cmd_leftmember,
    "hopf": cmd_hopf,
    "nichols": cmd_nichols,
}


def _scenario_job(item) -> list[dict]:
    s, limits, timings = item
    try:
        results = scenario.run_scenario(s, limits)
    except Exception as e:  # reported as a failed check
        return [
            {"scenario": s["id"], "run": -1, "op": "error", "tag": "-", "passed": False,
             "detail": f"{type(e).__name__}: {e}"}
        ]
    return [r.to_json(timings) for r in results]


def cmd_verify(args) -> tuple[dict, int]:
    pool = scenario.load_all(args.dir) if args.dir else scenario.load_all()
    if args.all or not args.scenario:
        ids = sorted(pool)
    else:
        missing = [i for i in args.scenario if i not in pool]
        if missing:
            raise scenario.ScenarioError(f"unknown scenario(s): {', '.join(missing)}")
        ids = sorted(set(args.scenario))
    limits = _limits(args)
    items = [(pool[i], limits, args.timings) for i in ids]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            chunks = list(ex.map(_scenario_job, items))
    else:
        chunks = [_scenario_job(it) for it in items]
    rows = [r for chunk in chunks for r in chunk]
    failed = sum(not r["passed"] for r in rows)
    lines = []
    for r in rows:
        t = f"  ({r['seconds']:.3f}s)" if "seconds" in r else ""
        lines.append(
            f"{'PASS' if r['passed'] else 'FAIL'}  {r['scenario']}  run {r['run']}  {r['op']}  [{r['tag']}]  {r['detail']}{t}"
        )
    lines.append(f"{len(ids)} scenarios, {len(rows)} checks: {len(rows) - failed} passed, {failed} failed")
    report = {"scenarios": ids, "results": rows, "passed": len(rows) - failed, "failed": failed,
              "text": "\n".join(lines)}
    return report, EXIT_UNMET if failed else EXIT_OK


def cmd_preset(args) -> dict:
    if args.action == "list":
        rows = []
        for name in preset_names():
            defaults, summary = preset_summary(name)
            rows.append({"name": name, "defaults": defaults, "summary": summary})
        text = "\n".join(f"{r['name']:<26} {r['summary']}" for r in rows)
        return {"presets": rows, "text": text}
    if not args.name:
        raise ParseError("preset show needs a name")
    params = {k: _param_value(v) for k, v in _key_value(args.param, "--param").items()}
    p = relation_set(args.name, **params)
    data = p.to_json()
    lines = [f"{p.name} {dict(p.params)}", f"braiding: {[[str(x) for x in r] for r in p.braiding.q]}"]
    lines += [f"  {lab}" for lab in p.labels]
    lines.append(f"provenance: {p.provenance}")
    if p.notes:
        lines.append(f"notes: {p.notes}")
    data["text"] = "\n".join(lines)
    return data


# ---- argument parser -------------------------------------------------------------
def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", default=_env_default("JSON", False, _truthy),
                   help="emit the JSON report")
    p.add_argument("--degree-bound", type=int, default=_env_default("DEGREE_BOUND", ideal.DEFAULT_BOUND))
    p.add_argument("--conductor-cap", type=int, default=_env_default("CONDUCTOR_CAP", 10_000))
    p.add_argument("--size-cap", type=int, default=_env_default("SIZE_CAP", nichols.DEFAULT_SIZE_CAP))


def _braiding_opts(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("braiding")
    g.add_argument("--preset", help="named relation set (brings braiding and relations)")
    g.add_argument("--param", action="append", metavar="K=V", help="preset parameter; V may be JSON")
    g.add_argument("--cartan", nargs=3, metavar=("TYPE", "THETA", "Q"))
    g.add_argument("--qls", nargs="+", metavar="Q_II", help="quantum linear space diagonal")
    g.add_argument("--matrix", help="rows separated by ';', entries by ','")
    g.add_argument("--twist", action="append", metavar="I,J=V", help="replace q_ij (i<j), keeping q~")
    g.add_argument("--env", action="append", metavar="NAME=EXPR", help="bind a scalar name")
    g.add_argument("--relations", nargs="*", metavar="EXPR", help="override the relation set")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="prenichols", description="Pre-Nichols algebras of diagonal type.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_text, expect=False):
        p = sub.add_parser(name, help=help_text)
        _common(p)
        _braiding_opts(p)
        if expect:
            p.add_argument("--expect", help="expected answer; mismatch exits with 1")
        return p

    p = add("classify", "Dynkin diagram, Cartan matrix and its class", expect=True)
    p.add_argument("--words", nargs="+", help="vertices given by words, e.g. 1 12 11112")
    p.add_argument("--degrees", nargs="+", help="vertices given by degree vectors, e.g. 2,1")
    for name, h in (("coproduct", "braided coproduct of an element"), ("nf", "normal form modulo the relations")):
        add(name, h).add_argument("expr")
    p = add("defect", "Delta(u) - u(x)1 - 1(x)u", expect=True)
    p.add_argument("expr")
    p.add_argument("--in-quotient", action="store_true", help="reduce both legs modulo the relations")
    add("gb", "Groebner basis of the relation ideal")
    add("hilbert", "Hilbert series of the quotient").add_argument("--upto", type=int)
    add("growth", "growth of the quotient", expect=True)
    add("member", "ideal membership", expect=True).add_argument("expr")
    p = add("leftmember", "membership in a left module of the quotient", expect=True)
    p.add_argument("expr")
    p.add_argument("--module", nargs="+", required=True, metavar="EXPR")
    add("hopf", "is the relation ideal a Hopf ideal?", expect=True)
    p = add("nichols", "graded dimensions of the Nichols algebra")
    p.add_argument("--upto", type=int, default=8)
    p.add_argument("--kernel", type=int, metavar="N", help="also list ker Omega_N")

    p = sub.add_parser("verify-paper", help="run the bundled verification scenarios")
    _common(p)
    p.add_argument("--scenario", action="append", metavar="ID")
    p.add_argument("--all", action="store_true")
    p.add_argument("--jobs", type=int, default=_env_default("JOBS", 1))
    p.add_argument("--timings", action="store_true", help="include per-check timings")
    p.add_argument("--dir", help="scenario directory (default: bundled)")
    p.add_argument("--list", action="store_true", help="list scenario ids and titles")

    p = sub.add_parser("preset", help="list or show relation presets")
    _common(p)
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.add_argument("--param", action="append", metavar="K=V")
    return ap


def _emit(args, command: str, data: dict) -> None:
    if args.json:
        body = {k: v for k, v in data.items() if k != "text"}
        print(json.dumps({"command": command, "result": body}, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(data["text"])


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    code = EXIT_OK
    try:
        if args.command == "verify-paper":
            if args.list:
                pool = scenario.load_all(args.dir) if args.dir else scenario.load_all()
                data = {"scenarios": [{"id": k, "title": v["title"]} for k, v in sorted(pool.items())]}
                data["text"] = "\n".join(f"{k:<24} {v['title']}" for k, v in sorted(pool.items()))
            else:
                data, code = cmd_verify(args)
        elif args.command == "preset":
            data = cmd_preset(args)
        else:
            run = scenario.Run(_run_spec(args), _limits(args))
            data = RUN_COMMANDS[args.command](run, args)
    except Unmet as e:
        print(f"unmet expectation: {e}", file=sys.stderr)
        return EXIT_UNMET
    except (ParseError, scenario.ScenarioError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ideal.BoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BOUND
    except (nichols.SizeCapExceeded, scenario.ConductorCapExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (UnknownPreset, InadmissibleParameters) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRESET
    _emit(args, args.command, data)
    return code


if __name__ == "__main__":
    sys.exit(main())
