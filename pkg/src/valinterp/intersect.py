"""Local intersection numbers of plane curves at the origin.

Two independent routes compute ``dim Q[[x,y]]/(f, g)``:

* :func:`imult`, Fulton's reduction (leading-term elimination on the
  restrictions to ``y = 0`` plus splitting off factors of ``y``);
* :func:`imult_oracle`, brute-force linear algebra on truncations of the
  ideal modulo increasing powers of the maximal ideal.

The module also carries the ``CurveGerm`` record used by the valuation code,
Newton polygons, and a sufficient irreducibility test.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence

from valinterp.poly import INF, ExtRat, MPoly, gcd_bivariate, parse_poly

DEFAULT_ORACLE_CEILING = 64


class OracleUndecided(RuntimeError):
    """The truncated dimension did not stabilize below the degree ceiling."""


class CommonComponentError(ValueError):
    pass


def _require_bivariate(*polys: MPoly) -> None:
    for p in polys:
        if p.nvars != 2:
            raise ValueError("expected a bivariate polynomial")
        if p.is_zero():
            raise ValueError("zero polynomial has no intersection number")


def _restrict_y0(f: MPoly) -> Dict[int, Fraction]:
    return {ex: c for (ex, ey), c in f if ey == 0}


def _divide_by_y(f: MPoly) -> MPoly:
    return MPoly._raw(2, {(ex, ey - 1): c for (ex, ey), c in f})


def shares_component_at_origin(f: MPoly, g: MPoly) -> bool:
    h = gcd_bivariate(f, g)
    return not h.is_constant() and h.constant_term() == 0


def imult(f: MPoly, g: MPoly) -> ExtRat:
    """Intersection multiplicity of ``f = 0`` and ``g = 0`` at the origin.

    Returns an ``int``, or ``INF`` when the curves share a component through
    the origin.

    >>> imult(parse_poly("y - x^2"), parse_poly("y^2 - x^3"))
    3
    """
    _require_bivariate(f, g)
    if f.constant_term() != 0 or g.constant_term() != 0:
        return 0
    if shares_component_at_origin(f, g):
        return INF
    return _fulton(f, g)


def _fulton(f: MPoly, g: MPoly) -> int:
    total = 0
    while True:
        if f.constant_term() != 0 or g.constant_term() != 0:
            return total
        f0, g0 = _restrict_y0(f), _restrict_y0(g)
        if not f0 and not g0:
            # both divisible by y; excluded by the gcd test
            raise CommonComponentError("common component y = 0")
        if not f0 or not g0:
            if not f0:
                f, g, f0, g0 = g, f, g0, f0
            # now g = y * h:  I(f, y h) = ord_x f(x, 0) + I(f, h)
            total += min(f0)
            g = _divide_by_y(g)
            continue
        r, s = max(f0), max(g0)
        if r > s:
            f, g, f0, g0, r, s = g, f, g0, f0, s, r
        factor = g0[s] / f0[r]
        shift = s - r
        g = g - MPoly._raw(2, {(ex + shift, ey): c * factor for (ex, ey), c in f})


def _truncated_codim(f: MPoly, g: MPoly, D: int) -> int:
    """dim of Q[x,y] / ((f, g) + (x, y)^D)."""
    index = {}
    for d in range(D):
        for a in range(d, -1, -1):
            index[(a, d - a)] = len(index)
    pivots: Dict[int, Dict[int, Fraction]] = {}
    for h in (f, g):
        if h.order() >= D:
            continue
        for d in range(D - h.order()):
            for a in range(d + 1):
                b = d - a
                row = {}
                for (ex, ey), c in h:
                    if ex + a + ey + b < D:
                        row[index[(ex + a, ey + b)]] = c
                while row:
                    col = min(row)
                    prow = pivots.get(col)
                    if prow is None:
                        lead = row[col]
                        pivots[col] = {k: v / lead for k, v in row.items()}
                        break
                    factor = row[col]
                    for k, v in prow.items():
                        nv = row.get(k, 0) - factor * v
                        if nv:
                            row[k] = nv
                        else:
                            row.pop(k, None)
    return len(index) - len(pivots)


def imult_oracle(
    f: MPoly, g: MPoly, D0: int = 1, ceiling: int = DEFAULT_ORACLE_CEILING
) -> int:
    """Intersection multiplicity by truncated linear algebra.

    Escalates the truncation degree from ``D0`` and stops when two
    consecutive truncations give the same codimension.
    """
    _require_bivariate(f, g)
    if shares_component_at_origin(f, g):
        raise CommonComponentError("curves share a component through the origin")
    prev: Optional[int] = None
    for D in range(max(D0, 1), ceiling + 1):
        cur = _truncated_codim(f, g, D)
        if cur == prev:
            return cur
        prev = cur
    raise OracleUndecided(f"undecided at ceiling D={ceiling}")


# --- Newton polygon and irreducibility ---------------------------------------


@dataclass(frozen=True)
class NewtonPolygon:
    """Vertices of the lower-left boundary, x strictly up, y strictly down."""

    vertices: tuple

    def edges(self):
        return list(zip(self.vertices, self.vertices[1:]))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(f: MPoly) -> NewtonPolygon:
    if f.nvars != 2 or f.is_zero():
        raise ValueError("newton_polygon needs a nonzero bivariate polynomial")
    if f.constant_term() != 0:
        raise ValueError("polynomial does not vanish at the origin")
    pts = sorted(f.support())
    # keep the lowest point per column, then the lower hull
    lowest: Dict[int, int] = {}
    for a, b in pts:
        lowest[a] = min(b, lowest.get(a, b))
    hull: list = []
    for p in sorted(lowest.items()):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    # cut where the boundary stops descending
    out = [hull[0]]
    for p in hull[1:]:
        if p[1] < out[-1][1]:
            out.append(p)
        else:
            break
    return NewtonPolygon(tuple(out))


class Irreducibility(enum.Enum):
    IRREDUCIBLE = "irreducible"
    UNKNOWN = "unknown"


def irreducible_sufficient(f: MPoly) -> Irreducibility:
    """Classical sufficient test for irreducibility of the germ at the origin.

    Smooth germs (order 1) are irreducible.  Otherwise the Newton polygon
    must be one segment from ``(0, m)`` to ``(n, 0)`` with ``gcd(m, n) = 1``.
    """
    poly = newton_polygon(f)
    if f.order() == 1:
        return Irreducibility.IRREDUCIBLE
    v = poly.vertices
    if len(v) == 2 and v[0][0] == 0 and v[1][1] == 0 and math.gcd(v[0][1], v[1][0]) == 1:
        return Irreducibility.IRREDUCIBLE
    return Irreducibility.UNKNOWN


class IrreducibilityError(ValueError):
    pass


@dataclass(frozen=True)
class CurveGerm:
    """A plane curve germ through the origin.

    ``verified`` is True when :func:`irreducible_sufficient` proved the
    irreducibility; otherwise irreducibility is the caller's assertion.
    """

    poly: MPoly
    irreducible_asserted: bool = True
    verified: bool = False
    mult: int = field(init=False)

    def __post_init__(self):
        if self.poly.nvars != 2:
            raise ValueError("curve germs are bivariate")
        if self.poly.is_zero():
            raise ValueError("curve germ defined by the zero polynomial")
        if self.poly.constant_term() != 0:
            raise ValueError(f"{self.poly} does not vanish at the origin")
        object.__setattr__(self, "mult", self.poly.order())

    @classmethod
    def from_poly(cls, poly: MPoly | str, irreducible: str = "assert") -> "CurveGerm":
        """Build a germ; ``irreducible`` is ``"assert"``, ``"verify"`` or ``"none"``."""
        if isinstance(poly, str):
            poly = parse_poly(poly)
        if irreducible == "assert":
            ok = irreducible_sufficient(poly) is Irreducibility.IRREDUCIBLE
            return cls(poly, True, ok)
        if irreducible == "verify":
            if irreducible_sufficient(poly) is not Irreducibility.IRREDUCIBLE:
                raise IrreducibilityError(f"could not verify irreducibility of {poly}")
            return cls(poly, True, True)
        if irreducible == "none":
            return cls(poly, False, False)
        raise ValueError(f"unknown irreducibility mode {irreducible!r}")

    @property
    def irreducibility(self) -> str:
        if self.verified:
            return "verified"
        return "asserted" if self.irreducible_asserted else "unasserted"

    def __str__(self):
        return str(self.poly)


def germ(text: str, irreducible: str = "assert") -> CurveGerm:
    return CurveGerm.from_poly(parse_poly(text), irreducible)


def factorial_curve(j: int) -> MPoly:
    """``y - x - 2! x^2 - ... - j! x^j``."""
    terms = {(0, 1): 1}
    for m in range(1, j + 1):
        terms[(m, 0)] = -math.factorial(m)
    return MPoly(2, terms)
