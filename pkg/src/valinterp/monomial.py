"""Monomial weights: multiplier ideals, jumping numbers, relative types.

For the weight ``phi_a = max_j a_j log|z_j|`` (sum over the active
variables only) the multiplier ideal of ``c * phi_a`` is monomial: ``f``
belongs to it iff every exponent ``alpha`` in its support has
``sum_j (alpha_j + 1) / (c a_j) > 1``.  Consequently

    jumping number  c(f)     = min_alpha sum_j (alpha_j + 1) / a_j
    relative type   sigma(f) = min_alpha sum_j alpha_j / a_j

For fractional monomial weights ``log sum_j |z^beta_j|^(1/a_j)`` the relative
type of ``z^gamma`` is read off the facets of the Newton polyhedron of the
points ``beta_j / a_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from valinterp.lp import InconsistencyError, LPResult, feasibility_lp
from valinterp.polyhedron import NewtonPolyhedron, newton_facets
from valinterp.poly import MPoly


@dataclass(frozen=True)
class MonomialWeight:
    a: Tuple[Fraction, ...]
    active: Optional[Tuple[bool, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(v) for v in self.a))
        if self.active is not None:
            if len(self.active) != len(self.a):
                raise ValueError("active mask length differs from weight length")
            object.__setattr__(self, "active", tuple(bool(v) for v in self.active))
        if not any(self.is_active(j) for j in range(len(self.a))):
            raise ValueError("weight has no active variables")
        for j, v in enumerate(self.a):
            if self.is_active(j) and v <= 0:
                raise ValueError(f"weight a_{j + 1} = {v} must be positive")

    @property
    def n(self) -> int:
        return len(self.a)

    def is_active(self, j: int) -> bool:
        return self.active is None or self.active[j]

    def scaled(self, c) -> "MonomialWeight":
        return MonomialWeight(tuple(Fraction(c) * v for v in self.a), self.active)

    def weighted(self, alpha: Sequence[int], shift: int = 0) -> Fraction:
        return sum(
            (Fraction(e + shift) / self.a[j] for j, e in enumerate(alpha) if self.is_active(j)),
            Fraction(0),
        )


def _check(f: MPoly, w: MonomialWeight) -> None:
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.nvars != w.n:
        raise ValueError(f"polynomial has {f.nvars} variables, weight has {w.n}")


def ideal_member(f: MPoly, w: MonomialWeight, c) -> bool:
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    _check(f, w)
    return all(w.weighted(alpha, 1) / c > 1 for alpha in f.terms)


def jumping_number(f: MPoly, w: MonomialWeight) -> Fraction:
    _check(f, w)
    return min(w.weighted(alpha, 1) for alpha in f.terms)


def kiselman_sigma(f: MPoly, w: MonomialWeight) -> Fraction:
    _check(f, w)
    return min(w.weighted(alpha) for alpha in f.terms)


@dataclass(frozen=True)
class TianValue:
    """Tian function value; ``exact`` is only computed for integer ``t``."""

    t: Fraction
    value: Fraction
    exact: Optional[Fraction]

    @property
    def consistent(self) -> bool:
        return self.exact is None or self.exact == self.value


def tian_monomial(g: MPoly, f: MPoly, w: MonomialWeight, t) -> TianValue:
    """``Tn(t) = c(g) + t * sigma(f)``, cross-checked against ``c(g f^t)`` for integer t."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    value = jumping_number(g, w) + t * kiselman_sigma(f, w)
    exact = None
    if t.denominator == 1:
        exact = jumping_number(g * f ** int(t), w)
    return TianValue(t, value, exact)


# --- fractional monomial weights ----------------------------------------------


class DegenerateWeight(ValueError):
    pass


@dataclass(frozen=True)
class FracMonomialWeight:
    """The weight ``log sum_j |z^beta_j|^(1/a_j)``."""

    pairs: Tuple[Tuple[Tuple[int, ...], Fraction], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("fractional monomial weight needs at least one pair")
        clean = []
        n = len(self.pairs[0][0])
        for beta, a in self.pairs:
            beta = tuple(int(v) for v in beta)
            a = Fraction(a)
            if len(beta) != n:
                raise ValueError("exponent vectors have mixed lengths")
            if any(v < 0 for v in beta) or not any(beta):
                raise ValueError(f"exponent {beta} must be nonnegative and nonzero")
            if a <= 0:
                raise ValueError(f"a = {a} must be positive")
            clean.append((beta, a))
        object.__setattr__(self, "pairs", tuple(clean))

    @property
    def n(self) -> int:
        return len(self.pairs[0][0])

    def points(self) -> list:
        return [tuple(Fraction(v) / a for v in beta) for beta, a in self.pairs]

    def polyhedron(self) -> NewtonPolyhedron:
        return newton_facets(self.points())


def relative_type_frac(gamma: Sequence[int], w: FracMonomialWeight) -> Fraction:
    """Largest ``c`` with ``gamma`` in ``c * (conv(beta_j / a_j) + orthant)``."""
    gamma = tuple(int(v) for v in gamma)
    if len(gamma) != w.n:
        raise ValueError("gamma has the wrong length")
    if not any(gamma) or any(v < 0 for v in gamma):
        raise ValueError("gamma must be a nonzero exponent vector")
    bounds = [f.value(gamma) / f.offset for f in w.polyhedron().facets if f.offset > 0]
    if not bounds:
        raise DegenerateWeight("no facet with positive offset")
    return min(bounds)


@dataclass(frozen=True)
class MonomialDecision:
    decision: str  # "yes" or "no"
    sigma: Fraction  # relative type of the product against the weight
    target: Fraction  # sum of the a_j
    witness: Optional[Tuple[Fraction, ...]]
    certificate: Optional[Tuple[Fraction, ...]]


def monomial_interp_decide(pairs: Sequence[Tuple[Sequence[int], Fraction]]) -> MonomialDecision:
    """Is there a valuation with ``v(z^beta_j) = a_j`` for all j?

    Route A compares the relative type of ``prod_j z^beta_j`` with
    ``sum_j a_j``.  Route B looks for a monomial valuation ``w >= 0`` with
    ``beta_j . w = a_j`` by exact elimination.  The two must agree.
    """
    weight = FracMonomialWeight(tuple((tuple(b), Fraction(a)) for b, a in pairs))
    gamma = [sum(beta[i] for beta, _ in weight.pairs) for i in range(weight.n)]
    sigma = relative_type_frac(gamma, weight)
    target = sum((a for _, a in weight.pairs), Fraction(0))
    route_a = sigma == target
    lp: LPResult = feasibility_lp(weight.pairs)
    if route_a != lp.feasible:
        raise InconsistencyError(
            f"criterion says {route_a} (sigma={sigma}, sum a={target}) "
            f"but feasibility says {lp.feasible}"
        )
    return MonomialDecision("yes" if route_a else "no", sigma, target, lp.solution, lp.certificate)


def monomial_valuation(f: MPoly, w: Sequence) -> Fraction:
    """``nu_w(f) = min_{alpha in supp f} alpha . w``."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    return min(sum((Fraction(e) * Fraction(x) for e, x in zip(alpha, w)), Fraction(0))
               for alpha in f.terms)
