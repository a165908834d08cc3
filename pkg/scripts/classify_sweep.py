"""Classify the Cartan matrix of standard braidings for a range of orders N.

For each finite type X_theta and each N, the braiding q_ij = q^{d_i a_ij}
(q of order N) is built and its own generalized Cartan matrix classified.
"""
import argparse

from prenichols.cartan import CATALOG, NotCartan, cartan_type_of, classify
from prenichols.presets import InadmissibleParameters, cartan_braiding
from prenichols.scalar import root

TYPES = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=9)
    a = ap.parse_args()
    orders = range(2, a.max_order + 1)
    print("type  " + "  ".join(f"N={n:<14}" for n in orders))
    for kind, theta in TYPES:
        cells = []
        for n in orders:
            try:
                cells.append(str(classify(cartan_type_of(cartan_braiding(kind, theta, root(n))))))
            except (NotCartan, InadmissibleParameters):
                cells.append("-")
        print(f"{kind}{theta:<4} " + "  ".join(f"{c:<16}" for c in cells))
    print(f"\n{len(CATALOG)} catalogued matrices")


if __name__ == "__main__":
    main()
