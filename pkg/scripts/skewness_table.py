"""Skewness of meets for a few classic curves, printed as a small table."""

from fractions import Fraction
from itertools import combinations

from valinterp.intersect import germ
from valinterp.poly import format_rat
from valinterp.valtree import QMValuation, skewness_pair

CURVES = ["y", "y-x^2", "y^2-x^3", "(y^2-x^3)^3 - x^10", "x"]


def main():
    germs = {c: germ(c) for c in CURVES}
    print(f"{'f':>20}  {'g':>20}  skewness")
    for a, b in combinations(CURVES, 2):
        print(f"{a:>20}  {b:>20}  {format_rat(skewness_pair(germs[a], germs[b]))}")
    print()
    # values of v_{C,t} along the segment toward the cusp
    cusp = germs["y^2-x^3"]
    for t in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2)):
        v = QMValuation(cusp, t)
        row = ", ".join(f"v({c}) = {format_rat(v(germs[c]))}" for c in ("x", "y", "y-x^2"))
        print(f"t = {format_rat(v.t)}: {row}")


if __name__ == "__main__":
    main()
