"""Two small non-existence computations in the monomial regime.

1. nu(z1) = 1, nu(z2) = 2, nu(z1 + z2) = 3 has no solution.  After the
   change z1 = w1 - w2, z2 = w2 the three functions become monomials up to
   the factor w1 - w2, and the relative type of the product misses the sum
   of targets.
2. Six functions vanishing at the origin and at (1, 1): the criterion fails
   at the origin but holds at (1, 1), where a valuation exists.
"""

from fractions import Fraction

from valinterp.lp import feasibility_lp
from valinterp.monomial import (
    FracMonomialWeight,
    MonomialWeight,
    kiselman_sigma,
    relative_type_frac,
)
from valinterp.poly import MPoly, format_poly, format_rat, parse_poly, poly_subst_linear


def linear_example():
    print("targets nu(z1) = 1, nu(z2) = 2, nu(z1 + z2) = 3")
    F = poly_subst_linear(parse_poly("z1*z2*(z1+z2)", ["z1", "z2"]), [[1, -1], [0, 1]])
    print(f"  product after z1 = w1 - w2: {format_poly(F, ['w1', 'w2'])}")
    sigma = kiselman_sigma(F, MonomialWeight((Fraction(1, 3), Fraction(1, 2))))
    print(f"  relative type {format_rat(sigma)} vs sum of targets 6")
    rows = [((1, 0), Fraction(1)), ((0, 1), Fraction(2)), ((1, 0), Fraction(3))]
    res = feasibility_lp(rows)
    cert = ", ".join(format_rat(v) for v in res.certificate)
    print(f"  linear system with nu(z1 + z2) = nu(z1): infeasible, certificate y = ({cert})")


def two_point_example():
    print("\nsix functions h_i g_j, all targets 1")
    at_o = kiselman_sigma(MPoly.monomial((4, 4)), MonomialWeight((Fraction(1), Fraction(1))))
    hull = relative_type_frac((4, 4), FracMonomialWeight((((1, 0), 1), ((0, 1), 1), ((1, 1), 1))))
    at_11 = relative_type_frac((3, 3), FracMonomialWeight((((1, 0), 1), ((0, 1), 1))))
    print(f"  at the origin: relative type {format_rat(at_o)} (hull facets give {format_rat(hull)}) > 6")
    print(f"  at (1, 1): relative type {format_rat(at_11)} = 6")


if __name__ == "__main__":
    linear_example()
    two_point_example()
