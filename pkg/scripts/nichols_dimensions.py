"""Graded dimensions of rank-two Cartan-type Nichols algebras at small orders."""
import argparse

from prenichols.nichols import SizeCapExceeded, nichols_hilbert
from prenichols.presets import InadmissibleParameters, cartan_braiding
from prenichols.scalar import root


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=12)
    ap.add_argument("--size-cap", type=int, default=1 << 13)
    a = ap.parse_args()
    for kind in ("A", "B", "G"):
        for n in (3, 4, 5):
            try:
                q = cartan_braiding(kind, 2, root(n))
                h = nichols_hilbert(q, a.degree, size_cap=a.size_cap)
            except (SizeCapExceeded, InadmissibleParameters) as e:
                print(f"{kind}2 N={n}: {e}")
                continue
            done = h.coeffs[-1] == 0
            tail = "" if done else " (truncated)"
            print(f"{kind}2 N={n}: {list(h.coeffs)} total {h.total()}{tail}")


if __name__ == "__main__":
    main()
