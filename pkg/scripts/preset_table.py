"""Hilbert series, growth and Hopf status of every preset at its default parameters.

    python scripts/preset_table.py --degree 10 --max-theta 4
"""
import argparse
import time
from dataclasses import dataclass

from prenichols import ideal
from prenichols.presets import preset_names, relation_set


@dataclass
class Config:
    degree: int = 10
    max_theta: int = 4
    skip_hopf: bool = False


def row(name: str, cfg: Config) -> str:
    t0 = time.perf_counter()
    p = relation_set(name)
    if p.theta > cfg.max_theta:
        return f"| {name} | {p.theta} | skipped | | | | |"
    try:
        gb = ideal.groebner(p.braiding, list(p.relations), cfg.degree)
    except ideal.BoundError as e:
        return f"| {name} | {p.theta} | {e} | | | | |"
    h = ideal.hilbert(gb, cfg.degree).coeffs
    status = "complete" if gb.complete else ("stable" if gb.stable else "truncated")
    hopf = "" if cfg.skip_hopf else str(ideal.hopf_ideal(p.braiding, list(p.relations), cfg.degree, gb=gb).ok)
    dt = time.perf_counter() - t0
    return f"| {name} | {p.theta} | {','.join(map(str, h))} | {ideal.growth(gb)} | {status} | {hopf} | {dt:.1f} |"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=Config.degree)
    ap.add_argument("--max-theta", type=int, default=Config.max_theta)
    ap.add_argument("--skip-hopf", action="store_true")
    ap.add_argument("names", nargs="*", help="presets to run (default: all)")
    a = ap.parse_args()
    cfg = Config(a.degree, a.max_theta, a.skip_hopf)
    print("| preset | theta | Hilbert series | growth | basis | Hopf | s |")
    print("|---|---|---|---|---|---|---|")
    for name in a.names or preset_names():
        print(row(name, cfg), flush=True)


if __name__ == "__main__":
    main()
