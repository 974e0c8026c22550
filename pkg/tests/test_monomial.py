import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polys
from valinterp.lp import InconsistencyError
from valinterp.monomial import (
    DegenerateWeight,
    FracMonomialWeight,
    MonomialWeight,
    ideal_member,
    jumping_number,
    kiselman_sigma,
    monomial_interp_decide,
    monomial_valuation,
    relative_type_frac,
    tian_monomial,
)
from valinterp.poly import MPoly, parse_poly
from valinterp.polyhedron import DimensionError, Facet, newton_facets

Z = ["z1", "z2"]


def P(text, vars=Z):
    return parse_poly(text, vars)


def W(*a):
    return MonomialWeight(tuple(Fraction(v) for v in a))


# --- max-monomial weights -------------------------------------------------------


def test_membership_examples():
    assert ideal_member(P("z1*z2"), W(1, 1), Fraction(3, 2))
    assert not ideal_member(P("z1"), W(1, 1), 3)
    assert ideal_member(P("z1^2 + z2^3"), W(1, 1), 2)


def test_jumping_number_examples():
    assert jumping_number(P("1"), W(3, 5)) == Fraction(8, 15)
    assert jumping_number(P("z1"), W(2, 2)) == Fraction(3, 2)
    assert jumping_number(P("z1*z2^2"), W(1, 2)) == Fraction(7, 2)


def test_sigma_examples():
    assert kiselman_sigma(P("z1^4*z2^4"), W(1, 1)) == 8
    assert kiselman_sigma(P("z1^2*z2 - z1*z2^2"), W(Fraction(1, 3), Fraction(1, 2))) == 7


def test_inactive_variables_are_ignored():
    w = MonomialWeight((Fraction(1), Fraction(5)), (True, False))
    assert kiselman_sigma(P("z1*z2^7"), w) == 1
    with pytest.raises(ValueError):
        MonomialWeight((Fraction(1),), (False,))


def test_tian_examples():
    t = tian_monomial(P("1"), P("z1+z2"), W(1, 2), 2)
    assert t.value == Fraction(5, 2) and t.exact == t.value
    assert tian_monomial(P("z1"), P("z1*z2"), W(1, 1), Fraction(3, 2)).exact is None


weights = st.lists(st.builds(Fraction, st.integers(1, 6), st.integers(1, 4)), min_size=2, max_size=2)


@given(polys(max_terms=4).filter(lambda f: not f.is_zero()), weights, st.builds(Fraction, st.integers(1, 9), st.integers(1, 5)))
def test_scaling(f, a, c):
    w = MonomialWeight(tuple(a))
    # c * phi_a = phi_{c a}, so both thresholds shrink by the factor c
    assert jumping_number(f, w.scaled(c)) == jumping_number(f, w) / c
    assert kiselman_sigma(f, w.scaled(c)) == kiselman_sigma(f, w) / c


@given(polys(max_terms=4).filter(lambda f: not f.is_zero()), weights)
def test_bracket(f, a):
    w = MonomialWeight(tuple(a))
    gap = jumping_number(f, w) - kiselman_sigma(f, w)
    assert gap == sum(1 / v for v in a) and gap >= 0


@given(polys(max_terms=4).filter(lambda f: not f.is_zero()), weights)
def test_membership_threshold(f, a):
    w = MonomialWeight(tuple(a))
    c = jumping_number(f, w)
    assert ideal_member(f, w, c * Fraction(99, 100))
    assert not ideal_member(f, w, c)


@given(polys(max_terms=3).filter(lambda f: not f.is_zero()),
       polys(max_terms=3).filter(lambda f: not f.is_zero()), weights, st.integers(0, 4))
def test_tian_affine(g, f, a, t):
    w = MonomialWeight(tuple(a))
    v = tian_monomial(g, f, w, t)
    assert v.value == jumping_number(g, w) + t * kiselman_sigma(f, w)
    # integer t: the direct computation can only drop through cancellation
    assert v.exact >= v.value


def test_sigma_is_additive_without_cancellation():
    rng = random.Random(2)
    w = W(2, 3)
    for _ in range(50):
        mono = MPoly.monomial((rng.randint(0, 4), rng.randint(0, 4)), rng.randint(1, 5))
        f = MPoly(2, {(rng.randint(0, 4), rng.randint(0, 4)): rng.randint(1, 5) for _ in range(3)})
        assert kiselman_sigma(mono * f, w) == kiselman_sigma(mono, w) + kiselman_sigma(f, w)


# --- Newton polyhedra and fractional weights ------------------------------------


def test_facet_examples():
    poly = newton_facets([(1, 0), (0, 1), (1, 1)])
    assert [(f.normal, f.offset) for f in poly.facets] == [((0, 1), 0), ((1, 0), 0), ((1, 1), 1)]
    seg = newton_facets([(2, 0), (0, 3)])
    assert Facet((3, 2), Fraction(6)) in seg.facets
    single = newton_facets([(2, 1)])
    assert {(f.normal, f.offset) for f in single.facets} == {((1, 0), 2), ((0, 1), 1)}
    with pytest.raises(DimensionError):
        newton_facets([(1,) * 7])


def test_vertices_are_tight():
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(2, 3)
        pts = [tuple(Fraction(rng.randint(0, 4), rng.randint(1, 3)) for _ in range(n)) for _ in range(rng.randint(1, 4))]
        pts = [p for p in pts if any(p)] or [(1,) * n]
        poly = newton_facets(pts)
        assert all(poly.contains(p) for p in pts)
        for v in poly.vertices():
            assert any(f.value(v) == f.offset for f in poly.facets)


def test_relative_type_examples():
    assert relative_type_frac((4, 4), FracMonomialWeight((((1, 0), 1), ((0, 1), 1), ((1, 1), 1)))) == 8
    assert relative_type_frac((3, 3), FracMonomialWeight((((1, 0), 1), ((0, 1), 1)))) == 6
    assert relative_type_frac((2, 3), FracMonomialWeight((((2, 3), Fraction(5, 2)),))) == Fraction(5, 2)
    weight = FracMonomialWeight((((1, 0), 1), ((0, 1), 2), ((1, 1), 4)))
    assert relative_type_frac((2, 2), weight) == 8


def test_degenerate_inputs():
    with pytest.raises(ValueError):
        FracMonomialWeight((((0, 0), 1),))
    with pytest.raises(ValueError):
        relative_type_frac((0, 0), FracMonomialWeight((((1, 0), 1),)))
    assert issubclass(DegenerateWeight, ValueError)


def test_decide_examples():
    yes = monomial_interp_decide([((1, 0), 1), ((0, 1), 2), ((1, 1), 3)])
    assert yes.decision == "yes" and yes.witness == (1, 2)
    no = monomial_interp_decide([((1, 0), 1), ((0, 1), 2), ((1, 1), 4)])
    assert no.decision == "no" and no.sigma == 8 and no.target == 7
    assert no.certificate == (1, 1, -1)
    one = monomial_interp_decide([((2, 1), 4)])
    assert one.decision == "yes" and one.witness == (2, 0)


def test_witness_interpolates():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(1, 3)
        w = [Fraction(rng.randint(0, 4), rng.randint(1, 3)) for _ in range(n)]
        pairs = []
        for _ in range(rng.randint(1, 4)):
            beta = tuple(rng.randint(0, 3) for _ in range(n))
            a = sum((b * x for b, x in zip(beta, w)), Fraction(0))
            if a > 0:
                pairs.append((beta, a))
        if not pairs:
            continue
        d = monomial_interp_decide(pairs)
        assert d.decision == "yes"
        for beta, a in pairs:
            assert monomial_valuation(MPoly.monomial(beta), d.witness) == a


def test_inconsistency_error_is_distinct():
    assert not issubclass(InconsistencyError, ValueError)
