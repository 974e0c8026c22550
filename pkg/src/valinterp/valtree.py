"""Quasimonomial and curve valuations on the valuative tree of Q[[x, y]].

A quasimonomial valuation is stored as a pair ``(curve, t)``: the point of
skewness ``t`` on the segment from the multiplicity valuation to the curve
valuation of ``curve``.  ``t = INF`` is the curve valuation itself.  The
representation is not canonical; use :func:`qm_equal` to compare.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Tuple

from valinterp.intersect import CurveGerm, imult
from valinterp.poly import INF, ExtRat, is_inf


class NotIrreducibleError(ValueError):
    pass


def _check_irreducible(*germs: CurveGerm) -> None:
    for g in germs:
        if not g.irreducible_asserted:
            raise NotIrreducibleError(f"{g.poly} is not asserted irreducible")


@dataclass(frozen=True)
class QMValuation:
    curve: CurveGerm
    t: ExtRat

    def __post_init__(self):
        _check_irreducible(self.curve)
        if not is_inf(self.t):
            object.__setattr__(self, "t", Fraction(self.t))
            if self.t < 1:
                raise ValueError(f"skewness parameter must be >= 1, got {self.t}")

    @property
    def skewness(self) -> ExtRat:
        return self.t

    def __call__(self, g: CurveGerm) -> ExtRat:
        return qm_eval_irreducible(self, g)


def skewness_pair(f: CurveGerm, g: CurveGerm) -> ExtRat:
    """Skewness of the meet of the two curve valuations: I(f, g) / (m(f) m(g))."""
    _check_irreducible(f, g)
    i = imult(f.poly, g.poly)
    if is_inf(i):
        return INF
    return Fraction(i, f.mult * g.mult)


def inf_skewness(curves: Sequence[CurveGerm]) -> ExtRat:
    """Skewness of the infimum of the curve valuations in ``curves``."""
    if not curves:
        raise ValueError("inf_skewness of an empty list")
    _check_irreducible(*curves)
    best: ExtRat = INF
    for f, g in combinations(curves, 2):
        best = min(best, skewness_pair(f, g))
    return best


def qm_eval_irreducible(v: QMValuation, g: CurveGerm) -> ExtRat:
    """``v(g) = m(g) * min(t, skewness(v_C ^ v_g))`` for irreducible ``g``."""
    _check_irreducible(g)
    a = min(v.t, skewness_pair(v.curve, g))
    if is_inf(a):
        return INF
    return g.mult * a


def qm_eval_product(v: QMValuation, factors: Sequence[Tuple[CurveGerm, int]]) -> ExtRat:
    """Value on a product of irreducible factors with multiplicities."""
    total: ExtRat = Fraction(0)
    for g, e in factors:
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"factor exponent must be a positive integer, got {e!r}")
        total = total + e * qm_eval_irreducible(v, g)
    return total


def qm_equal(v1: QMValuation, v2: QMValuation) -> bool:
    if is_inf(v1.t) or is_inf(v2.t):
        raise ValueError(
            "curve valuations are compared through skewness_pair(...) == INF, not qm_equal"
        )
    return v1.t == v2.t and v1.t <= skewness_pair(v1.curve, v2.curve)
