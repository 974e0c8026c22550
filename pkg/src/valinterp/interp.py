"""Valuative interpolation for irreducible plane curve germs.

Given germs ``f_1, ..., f_k`` and rational targets ``b_j``, decide whether a
normalized centered valuation ``v`` on Q[[x, y]] with ``v(f_j) = b_j``
exists, and if so return the minimal one as a quasimonomial valuation.

With ``B_j = b_j / m(f_j)``, ``B = max B_j``, ``I1 = {j : B_j = B}`` and
``I2`` the rest, a solution exists iff

1. every pair in ``I1`` has skewness ``>= B`` (vacuous for one index), and
2. ``skewness(f_i, f_j) == B_j`` for every ``i`` in ``I1``, ``j`` in ``I2``.

The minimal solution is then ``(f_i, B)`` for any ``i`` in ``I1``.

Indices in instances, certificates and reports are 1-based, matching the
usual numbering ``f_1, ..., f_k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Tuple

from valinterp.intersect import CurveGerm, imult
from valinterp.poly import INF, is_inf
from valinterp.valtree import QMValuation, qm_eval_irreducible, skewness_pair


class InstanceError(ValueError):
    """An instance violates a hypothesis of the interpolation problem.

    ``kind`` is one of ``"empty"``, ``"not_irreducible"``, ``"b_below_one"``,
    ``"b_below_multiplicity"``, ``"duplicate_curve"``.
    """

    def __init__(self, kind: str, message: str, indices: Tuple[int, ...] = ()):
        super().__init__(message)
        self.kind = kind
        self.indices = indices


class InternalInconsistency(RuntimeError):
    pass


@dataclass(frozen=True)
class InterpInstance:
    germs: Tuple[CurveGerm, ...]
    b: Tuple[Fraction, ...]
    B: Tuple[Fraction, ...] = field(init=False)
    B_max: Fraction = field(init=False)
    I1: Tuple[int, ...] = field(init=False)
    I2: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        B = tuple(Fraction(b, g.mult) for g, b in zip(self.germs, self.b))
        top = max(B)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "B_max", top)
        object.__setattr__(self, "I1", tuple(j + 1 for j, v in enumerate(B) if v == top))
        object.__setattr__(self, "I2", tuple(j + 1 for j, v in enumerate(B) if v < top))

    def __len__(self):
        return len(self.germs)

    def germ(self, j: int) -> CurveGerm:
        return self.germs[j - 1]

    @property
    def irreducibility(self) -> list:
        return [g.irreducibility for g in self.germs]


def validate_instance(items: Sequence[Tuple[CurveGerm, Fraction]]) -> InterpInstance:
    """Check the hypotheses of the problem and build the instance."""
    if not items:
        raise InstanceError("empty", "an instance needs at least one curve")
    germs = tuple(g for g, _ in items)
    bs = tuple(Fraction(b) for _, b in items)
    for j, (g, b) in enumerate(zip(germs, bs), start=1):
        if not g.irreducible_asserted:
            raise InstanceError("not_irreducible", f"f_{j} = {g.poly} is not asserted irreducible", (j,))
        if b < 1:
            raise InstanceError("b_below_one", f"b_{j} = {b} < 1", (j,))
        if b < g.mult:
            raise InstanceError(
                "b_below_multiplicity",
                f"b_{j} = {b} < m(f_{j}) = {g.mult}; every valuation has v(f) >= m(f)",
                (j,),
            )
    for i, j in combinations(range(len(germs)), 2):
        if is_inf(imult(germs[i].poly, germs[j].poly)):
            raise InstanceError(
                "duplicate_curve", f"f_{i + 1} and f_{j + 1} define the same curve", (i + 1, j + 1)
            )
    return InterpInstance(germs, bs)


@dataclass(frozen=True)
class InterpResult:
    decision: str  # "yes" or "no"
    minimal_solution: Optional[QMValuation]
    certificate: dict
    irreducibility: list

    @property
    def accepted(self) -> bool:
        return self.decision == "yes"


def decide_finite(inst: InterpInstance) -> InterpResult:
    I1, I2, top = inst.I1, inst.I2, inst.B_max
    base = {"B": list(inst.B), "B_max": top, "I1": list(I1), "I2": list(I2)}

    # condition 1: the curves achieving the maximum must not separate below B
    pair_skew = {}
    for i, j in combinations(I1, 2):
        pair_skew[(i, j)] = skewness_pair(inst.germ(i), inst.germ(j))
    inf_i1 = min(pair_skew.values(), default=INF)
    if inf_i1 < top:
        worst = min(pair_skew, key=lambda p: pair_skew[p])
        return InterpResult(
            "no",
            None,
            {**base, "violated": "condition1", "pair": list(worst),
             "computed": inf_i1, "required": top, "relation": ">="},
            inst.irreducibility,
        )

    # condition 2: exact equality against every lower target
    checks = []
    for i in I1:
        for j in I2:
            s = skewness_pair(inst.germ(i), inst.germ(j))
            if s != inst.B[j - 1]:
                return InterpResult(
                    "no",
                    None,
                    {**base, "violated": "condition2", "pair": [i, j],
                     "computed": s, "required": inst.B[j - 1], "relation": "=="},
                    inst.irreducibility,
                )
            checks.append({"pair": [i, j], "skewness": s})

    v = QMValuation(inst.germ(I1[0]), top)
    evaluations = []
    for j, (g, b) in enumerate(zip(inst.germs, inst.b), start=1):
        value = qm_eval_irreducible(v, g)
        if value != b:
            raise InternalInconsistency(f"minimal solution gives v(f_{j}) = {value}, expected {b}")
        evaluations.append({"index": j, "value": value})
    cert = {
        **base,
        "condition1": {"inf_skewness": inf_i1, "pairs": [
            {"pair": list(p), "skewness": s} for p, s in pair_skew.items()]},
        "condition2": checks,
        "evaluations": evaluations,
    }
    return InterpResult("yes", v, cert, inst.irreducibility)


def verify_result(inst: InterpInstance, result: InterpResult) -> bool:
    """Recompute every skewness value quoted in a certificate."""
    cert = result.certificate
    if result.accepted:
        for entry in cert["condition1"]["pairs"] + cert["condition2"]:
            i, j = entry["pair"]
            if skewness_pair(inst.germ(i), inst.germ(j)) != entry["skewness"]:
                return False
        v = result.minimal_solution
        return all(qm_eval_irreducible(v, g) == b for g, b in zip(inst.germs, inst.b))
    i, j = cert["pair"]
    s = skewness_pair(inst.germ(i), inst.germ(j))
    if s != cert["computed"]:
        return False
    if cert["violated"] == "condition1":
        return s < cert["required"]
    return s != cert["required"]


def decide(items: Sequence[Tuple[CurveGerm, Fraction]]) -> InterpResult:
    return decide_finite(validate_instance(items))


# --- increasing sequences -----------------------------------------------------


@dataclass(frozen=True)
class SequenceReport:
    passed: bool
    pairs_checked: int
    first_failure: Optional[dict]
    B: list
    hints: dict


def check_sequence_prefix(items: Sequence[Tuple[CurveGerm, Fraction]]) -> SequenceReport:
    """Check ``I(f_i, f_j) == m(f_i) b_j`` for all ``i > j`` on a finite prefix.

    Requires ``b_j / m(f_j)`` strictly increasing.  The hints only describe
    the prefix; they cannot settle the behaviour of an infinite sequence.
    """
    if not items:
        raise ValueError("empty sequence")
    germs = [g for g, _ in items]
    bs = [Fraction(b) for _, b in items]
    for j, g in enumerate(germs, start=1):
        if not g.irreducible_asserted:
            raise InstanceError("not_irreducible", f"f_{j} = {g.poly} is not asserted irreducible", (j,))
    B = [b / g.mult for g, b in zip(germs, bs)]
    for j in range(1, len(B)):
        if not B[j] > B[j - 1]:
            raise ValueError(
                f"B_{j + 1} = {B[j]} does not exceed B_{j} = {B[j - 1]}; "
                "use decide_finite for non-increasing targets"
            )

    checked = 0
    failure = None
    for i in range(2, len(germs) + 1):
        for j in range(1, i):
            got = imult(germs[i - 1].poly, germs[j - 1].poly)
            want = germs[i - 1].mult * bs[j - 1]
            checked += 1
            if got != want:
                failure = {"pair": [i, j], "computed": got if is_inf(got) else Fraction(got),
                           "required": want}
                break
        if failure:
            break

    steps = [b - a for a, b in zip(B, B[1:])]
    dens = [b.denominator for b in bs]
    half = len(dens) // 2
    hints = {
        "B_max": B[-1],
        "increments": steps,
        # shrinking steps are what a bounded sequence has to do eventually
        "bounded_hint": len(steps) >= 2 and all(b < a for a, b in zip(steps, steps[1:])),
        "denominators": dens,
        "denominators_growing": half > 0 and max(dens[half:]) > max(dens[:half]),
    }
    return SequenceReport(failure is None, checked, failure, B, hints)
