"""Print the derived upper bounds on h = g - 1 for a range of degrees as TSV."""

import argparse

from tiltbg.castelnuovo import b1_wall, b2_wall, derive_h_bound
from tiltbg.core import format_rational


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=20)
    args = ap.parse_args()
    print("d\th_bound_general\th_bound_integral_nonplanar")
    for d in range(1, args.max_degree + 1):
        general = format_rational(derive_h_bound(d, b1_wall(d)))
        sharp = format_rational(derive_h_bound(d, b2_wall(d))) if d >= 3 else "-"
        print(f"{d}\t{general}\t{sharp}")


if __name__ == "__main__":
    main()
