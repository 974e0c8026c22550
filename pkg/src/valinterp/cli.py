"""Command-line front end.

Exit codes: 0 computed (a "no" decision is still a result), 1 invalid input,
2 internal inconsistency between independent computations.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from valinterp import io
from valinterp.interp import InternalInconsistency, check_sequence_prefix, decide
from valinterp.intersect import CurveGerm, OracleUndecided, imult, imult_oracle
from valinterp.lp import InconsistencyError
from valinterp.monomial import (
    MonomialWeight,
    jumping_number,
    kiselman_sigma,
    monomial_interp_decide,
    tian_monomial,
)
from valinterp.poly import format_poly, format_rat, parse_extrat, parse_poly, parse_rat
from valinterp.valtree import QMValuation, qm_eval_irreducible, skewness_pair

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _bivariate_vars(text: Optional[str]) -> list:
    if not text:
        return ["x", "y"]
    names = [v.strip() for v in text.split(",")]
    if len(names) != 2:
        raise ValueError("--vars for curve commands takes two comma-separated names")
    return names


def _load_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _emit(args, payload: dict, text_lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


# --- curve commands -------------------------------------------------------------


def cmd_imult(args):
    vars = _bivariate_vars(args.vars)
    f, g = parse_poly(args.f, vars), parse_poly(args.g, vars)
    value = imult(f, g)
    _emit(args, {"imult": format_rat(value)}, [format_rat(value)])


def cmd_oracle_imult(args):
    vars = _bivariate_vars(args.vars)
    f, g = parse_poly(args.f, vars), parse_poly(args.g, vars)
    value = imult_oracle(f, g, args.d0, args.ceiling)
    fulton = imult(f, g)
    if value != fulton:
        raise InconsistencyError(f"oracle gives {value}, Fulton reduction gives {fulton}")
    _emit(args, {"imult": format_rat(value)}, [format_rat(value)])


def cmd_mult(args):
    vars = _bivariate_vars(args.vars)
    f = parse_poly(args.f, vars)
    _emit(args, {"mult": str(f.order())}, [str(f.order())])


def _germ(text, vars, mode):
    return CurveGerm.from_poly(parse_poly(text, vars), mode)


def cmd_skewness(args):
    vars = _bivariate_vars(args.vars)
    f, g = _germ(args.f, vars, args.irreducible), _germ(args.g, vars, args.irreducible)
    value = skewness_pair(f, g)
    _emit(args, {"skewness": format_rat(value), "irreducibility": [f.irreducibility, g.irreducibility]},
          [format_rat(value)])


def _instance(args):
    if not args.input:
        raise ValueError("--input FILE is required")
    return io.parse_instance(_load_json(args.input), args.irreducible)


def cmd_interpolate(args):
    items, vars = _instance(args)
    result = decide(items)
    payload = io.result_to_json(result, vars)
    cert = payload["certificate"]
    if result.accepted:
        sol = payload["minimal_solution"]
        lines = [f"yes: minimal solution v = ({sol['curve']}, t={sol['t']})"]
        for e in cert["condition2"]:
            lines.append(f"  skewness(f_{e['pair'][0]}, f_{e['pair'][1]}) = {e['skewness']}")
        for e in cert["evaluations"]:
            lines.append(f"  v(f_{e['index']}) = {e['value']}")
    else:
        i, j = cert["pair"]
        lines = [f"no: {cert['violated']} fails at pair ({i}, {j}): "
                 f"skewness {cert['computed']}, required {cert['relation']} {cert['required']}"]
    lines.append("  irreducibility: " + ", ".join(result.irreducibility))
    _emit(args, payload, lines)


def cmd_evaluate(args):
    vars = _bivariate_vars(args.vars)
    if args.solution:
        v = io.solution_from_json(_load_json(args.solution), vars)
    else:
        if args.curve is None or args.t is None:
            raise ValueError("give --solution FILE or both --curve and --t")
        v = QMValuation(_germ(args.curve, vars, args.irreducible), parse_extrat(args.t))
    targets = []
    if args.instance:
        items, vars_i = io.parse_instance(_load_json(args.instance), args.irreducible)
        targets = [(g, b) for g, b in items]
    targets += [(_germ(p, vars, args.irreducible), None) for p in args.g]
    if not targets:
        raise ValueError("nothing to evaluate")
    rows, lines, ok = [], [], True
    for g, b in targets:
        value = qm_eval_irreducible(v, g)
        row = {"curve": format_poly(g.poly, vars), "value": format_rat(value)}
        line = f"v({format_poly(g.poly, vars)}) = {format_rat(value)}"
        if b is not None:
            row["b"] = format_rat(b)
            row["match"] = value == b
            ok = ok and value == b
            line += f"  (target {format_rat(b)}{'' if value == b else ', MISMATCH'})"
        rows.append(row)
        lines.append(line)
    payload = {"valuation": io.solution_to_json(v, vars), "values": rows}
    if args.instance:
        payload["all_match"] = ok
        lines.insert(0, "all targets match" if ok else "targets do not match")
    _emit(args, payload, lines)


def cmd_check_sequence(args):
    items, _ = _instance(args)
    report = check_sequence_prefix(items)
    payload = io.report_to_json(report)
    if report.passed:
        lines = [f"pass: {report.pairs_checked} pairs satisfy I(f_i, f_j) = m(f_i) b_j"]
    else:
        fail = payload["first_failure"]
        lines = [f"fail at pair {tuple(fail['pair'])}: I = {fail['computed']}, "
                 f"m(f_i) b_j = {fail['required']}"]
    hints = payload["hints"]
    lines.append(f"  B_max so far {hints['B_max']}; bounded hint {hints['bounded_hint']}; "
                 f"denominators growing {hints['denominators_growing']}")
    _emit(args, payload, lines)


# --- monomial commands ----------------------------------------------------------


def _monomial_setup(args, need=("f",)):
    if args.input:
        data = io.parse_monomial_input(_load_json(args.input))
    else:
        if args.vars is None or not args.a:
            raise ValueError("give --input FILE or --vars N with one --a per variable")
        raw = {"vars": int(args.vars), "a": args.a}
        if getattr(args, "f", None):
            raw["f"] = args.f
        if getattr(args, "g", None):
            raw["g"] = args.g
        if getattr(args, "t", None) is not None:
            raw["t"] = args.t
        data = io.parse_monomial_input(raw)
    for key in ("weight",) + tuple(need):
        if key not in data:
            raise ValueError(f"missing {key!r}")
    return data


def cmd_monomial_sigma(args):
    data = _monomial_setup(args)
    value = kiselman_sigma(data["f"], data["weight"])
    _emit(args, {"sigma": format_rat(value)}, [format_rat(value)])


def cmd_monomial_jump(args):
    data = _monomial_setup(args)
    value = jumping_number(data["f"], data["weight"])
    _emit(args, {"jumping_number": format_rat(value)}, [format_rat(value)])


def cmd_monomial_tian(args):
    data = _monomial_setup(args, need=("f", "t"))
    g = data.get("g")
    if g is None:
        g = parse_poly("1", data["vars"])
    value = tian_monomial(g, data["f"], data["weight"], data["t"])
    payload = io.tian_to_json(value)
    line = format_rat(value.value)
    if value.exact is not None:
        line += f"  (exact {format_rat(value.exact)}{'' if value.consistent else ', CANCELLATION'})"
    _emit(args, payload, [line])


def _parse_pair_flag(text: str):
    # "1,0:3/2"
    beta, _, a = text.partition(":")
    if not a:
        raise ValueError(f"pair {text!r} must look like 'b1,b2,...:a'")
    return tuple(int(v) for v in beta.split(",")), parse_rat(a)


def cmd_monomial_decide(args):
    if args.input:
        pairs = io.parse_pairs(_load_json(args.input))
    elif args.pair:
        pairs = [_parse_pair_flag(p) for p in args.pair]
    else:
        raise ValueError("give --input FILE or --pair b1,..,bn:a (repeatable)")
    d = monomial_interp_decide(pairs)
    payload = io.decision_to_json(d)
    if d.decision == "yes":
        line = f"yes: w = ({', '.join(payload['witness'])}); sigma = {payload['sigma']} = sum a"
    else:
        line = (f"no: sigma = {payload['sigma']} != {payload['target']} = sum a; "
                f"certificate y = ({', '.join(payload['certificate'])})")
    _emit(args, payload, [line])


# --- wiring ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="valinterp", description="Valuative interpolation calculator")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(func=func)
        return sp

    for name, func, help in [
        ("imult", cmd_imult, "intersection multiplicity at the origin"),
        ("oracle-imult", cmd_oracle_imult, "intersection multiplicity by truncated linear algebra"),
    ]:
        sp = add(name, func, help)
        sp.add_argument("f")
        sp.add_argument("g")
        sp.add_argument("--vars")
        if name == "oracle-imult":
            sp.add_argument("--d0", type=int, default=1)
            sp.add_argument("--ceiling", type=int, default=64)

    sp = add("mult", cmd_mult, "multiplicity (order) at the origin")
    sp.add_argument("f")
    sp.add_argument("--vars")

    sp = add("skewness", cmd_skewness, "skewness of the meet of two curve valuations")
    sp.add_argument("f")
    sp.add_argument("g")
    sp.add_argument("--vars")
    sp.add_argument("--irreducible", choices=["assert", "verify"], default="assert")

    for name, func, help in [
        ("interpolate", cmd_interpolate, "decide a finite interpolation instance"),
        ("check-sequence", cmd_check_sequence, "check a prefix of an increasing sequence"),
    ]:
        sp = add(name, func, help)
        sp.add_argument("--input", required=True)
        sp.add_argument("--irreducible", choices=["assert", "verify"], default="assert")

    sp = add("evaluate", cmd_evaluate, "evaluate a quasimonomial valuation on curves")
    sp.add_argument("g", nargs="*")
    sp.add_argument("--solution", help="result JSON from interpolate")
    sp.add_argument("--curve")
    sp.add_argument("--t")
    sp.add_argument("--instance", help="instance JSON; compares values with targets")
    sp.add_argument("--vars")
    sp.add_argument("--irreducible", choices=["assert", "verify"], default="assert")

    for name, func, help in [
        ("monomial-sigma", cmd_monomial_sigma, "relative type for a max-monomial weight"),
        ("monomial-jump", cmd_monomial_jump, "jumping number for a max-monomial weight"),
        ("monomial-tian", cmd_monomial_tian, "Tian function value"),
    ]:
        sp = add(name, func, help)
        sp.add_argument("f", nargs="?")
        sp.add_argument("--vars")
        sp.add_argument("--a", action="append", default=[])
        sp.add_argument("--input")
        if name == "monomial-tian":
            sp.add_argument("--g")
            sp.add_argument("--t")

    sp = add("monomial-decide", cmd_monomial_decide, "monomial interpolation via both routes")
    sp.add_argument("--pair", action="append", default=[])
    sp.add_argument("--input")
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except (InconsistencyError, InternalInconsistency) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except OracleUndecided as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
