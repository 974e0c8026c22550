"""Exact valuative interpolation on plane curve germs and monomial weights."""

from valinterp.interp import (
    InstanceError,
    InterpInstance,
    InterpResult,
    check_sequence_prefix,
    decide,
    decide_finite,
    validate_instance,
)
from valinterp.intersect import (
    CurveGerm,
    Irreducibility,
    factorial_curve,
    germ,
    imult,
    imult_oracle,
    irreducible_sufficient,
    newton_polygon,
)
from valinterp.lp import feasibility_lp
from valinterp.monomial import (
    FracMonomialWeight,
    MonomialWeight,
    ideal_member,
    jumping_number,
    kiselman_sigma,
    monomial_interp_decide,
    relative_type_frac,
    tian_monomial,
)
from valinterp.poly import INF, MPoly, gcd_bivariate, order, parse_poly, poly_subst_linear
from valinterp.polyhedron import newton_facets
from valinterp.valtree import (
    QMValuation,
    inf_skewness,
    qm_equal,
    qm_eval_irreducible,
    qm_eval_product,
    skewness_pair,
)

__version__ = "0.1.0"
