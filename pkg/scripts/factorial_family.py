"""The curves y - x - 2! x^2 - ... - j! x^j.

Prints the intersection table, decides the k-point instance with
b = (2, ..., k, b_k) for a range of b_k, and runs the sequence check.
"""

import argparse
from fractions import Fraction

from valinterp.interp import check_sequence_prefix, decide
from valinterp.intersect import CurveGerm, factorial_curve, imult
from valinterp.poly import format_rat


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-k", type=int, default=8)
    args = ap.parse_args()
    k = args.k
    germs = [CurveGerm.from_poly(factorial_curve(j), "verify") for j in range(1, k + 1)]

    print("I(f_i, f_j):")
    for i in range(k):
        print("  " + " ".join(
            f"{'-' if i == j else imult(germs[i].poly, germs[j].poly):>3}" for j in range(k)))

    print(f"\nb = (2, ..., {k}, b_{k}):")
    for bk in (Fraction(2 * k - 1, 2), Fraction(k), Fraction(2 * k + 1, 2), Fraction(k + 5)):
        b = [Fraction(j + 1) for j in range(1, k)] + [bk]
        res = decide(list(zip(germs, b)))
        if res.accepted:
            msg = f"yes, v_min = (f_{res.certificate['I1'][0]}, {format_rat(res.minimal_solution.t)})"
        else:
            c = res.certificate
            msg = f"no, {c['violated']} at {tuple(c['pair'])}"
        print(f"  b_{k} = {format_rat(bk):>5}: {msg}")

    report = check_sequence_prefix([(g, Fraction(j + 1)) for j, g in enumerate(germs, 1)])
    print(f"\nsequence b_j = j + 1: passed={report.passed}, pairs={report.pairs_checked}, "
          f"bounded hint={report.hints['bounded_hint']}")


if __name__ == "__main__":
    main()
