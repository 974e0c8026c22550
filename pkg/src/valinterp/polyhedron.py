"""Facets of Newton polyhedra ``conv(points) + R_{>=0}^n`` in exact arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Tuple

from valinterp.linalg import nullspace, rank

MAX_DIM = 6

Vector = Tuple[Fraction, ...]


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class Facet:
    """The inequality ``normal . x >= offset``; normal is a primitive integer vector."""

    normal: Tuple[int, ...]
    offset: Fraction

    def value(self, x: Sequence) -> Fraction:
        return sum((Fraction(u) * v for u, v in zip(self.normal, x)), Fraction(0))

    def contains(self, x: Sequence) -> bool:
        return self.value(x) >= self.offset


@dataclass(frozen=True)
class NewtonPolyhedron:
    generators: Tuple[Vector, ...]
    facets: Tuple[Facet, ...]

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    def contains(self, x: Sequence) -> bool:
        return all(f.contains(x) for f in self.facets)

    def vertices(self) -> list:
        """Generators that are not a convex combination of the others plus the orthant."""
        out = []
        for p in self.generators:
            tight = [f for f in self.facets if f.value(p) == f.offset]
            if tight and rank([f.normal for f in tight]) == self.dim:
                out.append(p)
        return out


def _primitive(u: Sequence[Fraction]) -> Tuple[int, ...]:
    den = 1
    for v in u:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in u]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return tuple(v // g for v in ints)


def newton_facets(points: Sequence[Sequence], max_dim: int = MAX_DIM) -> NewtonPolyhedron:
    """Facet description of ``conv(points) + R_{>=0}^n``.

    Candidate hyperplanes pass through ``k`` of the points and contain
    ``n - k`` coordinate directions; a candidate is kept when it is spanned
    (one-dimensional normal space), has a nonnegative normal and supports
    every point.  Facets are returned sorted by (normal, offset).
    """
    if not points:
        raise ValueError("newton_facets needs at least one point")
    pts = []
    for p in points:
        q = tuple(Fraction(v) for v in p)
        if q not in pts:
            pts.append(q)
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points have mixed dimensions")
    if n > max_dim:
        raise DimensionError(f"dimension {n} exceeds bound {max_dim}")
    if any(v < 0 for p in pts for v in p):
        raise ValueError("Newton polyhedron points must be nonnegative")

    facets = set()
    for k in range(1, min(n, len(pts)) + 1):
        for chosen in combinations(pts, k):
            p0 = chosen[0]
            diffs = [[a - b for a, b in zip(p, p0)] for p in chosen[1:]]
            for dirs in combinations(range(n), n - k):
                rows = diffs + [[Fraction(int(i == j)) for i in range(n)] for j in dirs]
                ker = nullspace(rows, n)
                if len(ker) != 1:
                    continue
                u = ker[0]
                if any(v < 0 for v in u):
                    if any(v > 0 for v in u):
                        continue
                    u = [-v for v in u]
                normal = _primitive(u)
                offset = sum((Fraction(a) * b for a, b in zip(normal, p0)), Fraction(0))
                if all(sum((Fraction(a) * b for a, b in zip(normal, p)), Fraction(0)) >= offset
                       for p in pts):
                    facets.add(Facet(normal, offset))
    return NewtonPolyhedron(tuple(pts), tuple(sorted(facets, key=lambda f: (f.normal, f.offset))))
