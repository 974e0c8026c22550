"""JSON encodings for instances, results and monomial inputs.

Every rational is written as a string, ``"p/q"`` (or ``"p"`` when integral,
or ``"inf"``), so values survive a round trip bit for bit.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Sequence

from valinterp.interp import InterpResult, SequenceReport
from valinterp.intersect import CurveGerm
from valinterp.monomial import MonomialDecision, MonomialWeight, TianValue
from valinterp.poly import MPoly, format_poly, format_rat, parse_extrat, parse_poly, parse_rat
from valinterp.valtree import QMValuation

IRREDUCIBLE_MODES = {"asserted": "assert", "assert": "assert", "verify": "verify"}


def jsonable(obj: Any, vars: Sequence[str] = ("x", "y")) -> Any:
    if isinstance(obj, Fraction):
        return format_rat(obj)
    if isinstance(obj, float):
        if obj == math.inf:
            return "inf"
        raise TypeError(f"float {obj!r} in exact output")
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, MPoly):
        return format_poly(obj, vars)
    if isinstance(obj, CurveGerm):
        return format_poly(obj.poly, vars)
    if isinstance(obj, dict):
        return {str(k): jsonable(v, vars) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v, vars) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj: Any, vars: Sequence[str] = ("x", "y")) -> str:
    return json.dumps(jsonable(obj, vars), indent=2)


# --- interpolation instances ----------------------------------------------------


def parse_instance(data: dict, default_mode: str = "assert"):
    """Return ``(items, vars)`` from the instance schema."""
    vars = list(data.get("vars", ["x", "y"]))
    if len(vars) != 2:
        raise ValueError("interpolation instances are bivariate: 'vars' needs two names")
    curves = data.get("curves")
    if not isinstance(curves, list) or not curves:
        raise ValueError("instance needs a nonempty 'curves' list")
    items = []
    for k, entry in enumerate(curves, start=1):
        try:
            text, b = entry["poly"], entry["b"]
        except (KeyError, TypeError):
            raise ValueError(f"curve {k} needs 'poly' and 'b'") from None
        mode = entry.get("irreducible", default_mode)
        if mode not in IRREDUCIBLE_MODES:
            raise ValueError(f"curve {k}: irreducible must be 'asserted' or 'verify', got {mode!r}")
        germ = CurveGerm.from_poly(parse_poly(text, vars), IRREDUCIBLE_MODES[mode])
        items.append((germ, parse_rat(b)))
    return items, vars


def instance_to_json(items, vars=("x", "y")) -> dict:
    return {
        "vars": list(vars),
        "curves": [
            {"poly": format_poly(g.poly, vars), "b": format_rat(b),
             "irreducible": "verify" if g.verified else "asserted"}
            for g, b in items
        ],
    }


def result_to_json(result: InterpResult, vars=("x", "y")) -> dict:
    sol = None
    if result.minimal_solution is not None:
        sol = solution_to_json(result.minimal_solution, vars)
    return {
        "decision": result.decision,
        "minimal_solution": sol,
        "certificate": jsonable(result.certificate, vars),
        "irreducibility": list(result.irreducibility),
    }


def solution_to_json(v: QMValuation, vars=("x", "y")) -> dict:
    return {"curve": format_poly(v.curve.poly, vars), "t": format_rat(v.t)}


def solution_from_json(data: dict, vars=("x", "y")) -> QMValuation:
    if "minimal_solution" in data:
        data = data["minimal_solution"]
        if data is None:
            raise ValueError("result has no minimal solution")
    germ = CurveGerm.from_poly(parse_poly(data["curve"], vars), "assert")
    return QMValuation(germ, parse_extrat(data["t"]))


def report_to_json(report: SequenceReport) -> dict:
    return jsonable({
        "passed": report.passed,
        "pairs_checked": report.pairs_checked,
        "first_failure": report.first_failure,
        "B": report.B,
        "hints": report.hints,
    })


# --- monomial inputs -------------------------------------------------------------


def monomial_vars(n: int) -> list:
    return [f"z{i + 1}" for i in range(n)]


def parse_monomial_input(data: dict):
    """``{"vars": n, "a": [...], "f": ..., "g": ..., "t": ...}`` -> dict of parsed fields."""
    n = data.get("vars")
    if isinstance(n, list):
        names = list(n)
    elif isinstance(n, int) and n > 0:
        names = monomial_vars(n)
    else:
        raise ValueError("'vars' must be a positive integer or a list of names")
    out = {"vars": names}
    if "a" in data:
        out["weight"] = MonomialWeight(tuple(parse_rat(v) for v in data["a"]))
        if out["weight"].n != len(names):
            raise ValueError("'a' must have one entry per variable")
    for key in ("f", "g"):
        if key in data:
            out[key] = parse_poly(data[key], names)
    if "t" in data:
        out["t"] = parse_rat(data["t"])
    return out


def parse_pairs(data: dict):
    pairs = data.get("pairs")
    if not isinstance(pairs, list) or not pairs:
        raise ValueError("input needs a nonempty 'pairs' list")
    out = []
    for k, p in enumerate(pairs, start=1):
        try:
            beta = [int(v) for v in p["beta"]]
            a = parse_rat(p["a"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"pair {k}: {exc}") from None
        out.append((tuple(beta), a))
    return out


def decision_to_json(d: MonomialDecision) -> dict:
    return jsonable({
        "decision": d.decision,
        "sigma": d.sigma,
        "target": d.target,
        "witness": list(d.witness) if d.witness is not None else None,
        "certificate": list(d.certificate) if d.certificate is not None else None,
    })


def tian_to_json(v: TianValue) -> dict:
    return jsonable({"t": v.t, "value": v.value, "exact": v.exact, "consistent": v.consistent})
