"""Command-line interface: ``e36 <subcommand>``, JSON on stdout."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .algebra import NotEigenvectorError, check_relation_suite, e36_membership, g0_weight
from .e510 import InvariantError, consistent_degree, secondary_degree, super_bracket
from .induced import parametric_y_search, singular_search
from .model import IrrepF
from .parser import InvalidElementError, ParseError, parse_element, parse_expression, to_text
from .scalar import format_rational
from .verify import UnknownLemmaError, enumerate_hwv_lambda, theorem41_scan, verify_lemma


class UsageError(Exception):
    pass


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _emit(payload, pretty_text: Optional[str], pretty: bool) -> None:
    if pretty and pretty_text is not None:
        print(pretty_text)
    else:
        print(json.dumps(payload, sort_keys=True))


def cmd_bracket(args) -> int:
    a, b = parse_element(args.a), parse_element(args.b)
    c = super_bracket(a, b)
    _emit({"a": a.to_string(), "b": b.to_string(), "bracket": c.to_string()}, f"[{a.to_string()}, {b.to_string()}] = {c.to_string()}", args.pretty)
    return 0


def cmd_grade(args) -> int:
    a = parse_element(args.expr)
    fn = consistent_degree if args.which == "consistent" else secondary_degree
    try:
        deg = fn(a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({"element": a.to_string(), "grading": args.which, "degree": deg}, f"{args.which} degree of {a.to_string()}: {deg}", args.pretty)
    return 0


def cmd_weight(args) -> int:
    a = parse_element(args.expr)
    if not e36_membership(a):
        raise UsageError(f"{a.to_string()} does not lie in E(3,6)")
    try:
        w = g0_weight(a)
    except NotEigenvectorError as exc:
        raise UsageError(str(exc)) from None
    _emit({"element": a.to_string(), "weight": w.as_list()}, f"weight of {a.to_string()}: {w}", args.pretty)
    return 0


def cmd_relations(args) -> int:
    results = check_relation_suite()
    rows = [r.as_dict() for r in results]
    text = "\n".join(f"{r.status:9} {r.name}: {r.computed.to_string()}" + (f"  ({r.note})" if r.note else "") for r in results)
    _emit(rows, text, args.pretty)
    return 1 if any(r.status == "fail" for r in results) else 0


def cmd_hwv(args) -> int:
    lines = enumerate_hwv_lambda(args.p, args.q, args.sign)
    rows = []
    for ln in lines:
        terms = [
            {"lambda": list(key[0][1] or key[0][2]), "fIndex": key[1], "coeff": format_rational(c)}
            for key, c in sorted(ln.vector.items())
        ]
        rows.append({"tag": ln.tag, "weight": list(ln.weight), "terms": terms})
    text = "\n".join(f"{ln.tag or 'unmatched'} {ln.weight}" for ln in lines)
    _emit(rows, text, args.pretty)
    return 1 if any(ln.tag is None for ln in lines) else 0


def cmd_singular(args) -> int:
    if args.parametric_y:
        conds = parametric_y_search(args.p, args.q, args.r, args.max_depth)
        payload = {"F": {"p": args.p, "q": args.q, "r": args.r, "y": "parametric"}, "maxDepth": args.max_depth,
                   "conditions": [c.to_json() for c in conds]}
        text = "\n".join(f"depth {c.depth} weight {c.weight}: {c.to_json()['poly-in-y']}" for c in conds) or f"no conditions up to depth {args.max_depth}"
    else:
        if args.y is None:
            raise UsageError("--y is required unless --parametric-y is given")
        y = _rat(args.y)
        found = singular_search(IrrepF(args.p, args.q, args.r, y), args.max_depth)
        payload = {"F": {"p": args.p, "q": args.q, "r": args.r, "y": format_rational(y)}, "maxDepth": args.max_depth,
                   "found": [s.to_json() for s in found]}
        text = "\n".join(f"depth {s.depth} weight {s.weight}: {s.vector}" for s in found) or f"none found up to depth {args.max_depth}"
    _emit(payload, text, args.pretty)
    return 0


def cmd_scan(args) -> int:
    try:
        rs = [int(t) for t in args.r.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--r expects a comma separated list of integers, got {args.r!r}") from None
    rows = theorem41_scan(args.pmax, args.qmax, rs, args.max_depth, pmin=args.pmin, qmin=args.qmin, jobs=args.jobs)
    text = "\n".join(f"p={r['p']} q={r['q']} r={r['r']}: " + (", ".join(c["poly-in-y"] for c in r["conditions"]) or "none") for r in rows)
    _emit(rows, text, args.pretty)
    bad = any(r["conditions"] and r["p"] * r["q"] for r in rows)
    return 1 if bad else 0


def cmd_verify(args) -> int:
    params = {}
    for item in args.param or []:
        if "=" not in item:
            raise UsageError(f"--param expects k=v, got {item!r}")
        k, v = item.split("=", 1)
        params[k] = v
    try:
        rep = verify_lemma(args.lemma, params)
    except UnknownLemmaError as exc:
        raise UsageError(exc.args[0]) from None
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad parameter: {exc}") from None
    lines = [f"{args.lemma}: {rep.status} ({len(rep.details)} records)"]
    lines += [f"  {r.status}: {r.claim}" for r in rep.details if r.status != "pass"]
    _emit(rep.to_json(), "\n".join(lines), args.pretty)
    return 1 if rep.status == "fail" else 0


def cmd_parse(args) -> int:
    ast = parse_expression(args.expr)
    el = parse_element(args.expr)
    payload = {"input": args.expr, "ast": to_text(ast), "element": el.to_string(), "parity": el.parity()}
    _emit(payload, el.to_string(), args.pretty)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="e36", description="Exact computations in E(3,6) and E(5,10).")
    ap.add_argument("--pretty", action="store_true", help="human readable text instead of JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=fn)
        return p

    p = add("bracket", cmd_bracket, "super bracket of two elements")
    p.add_argument("a")
    p.add_argument("b")
    p = add("grade", cmd_grade, "degree in the consistent or secondary grading")
    p.add_argument("--which", choices=("consistent", "secondary"), default="consistent")
    p.add_argument("expr")
    p = add("weight", cmd_weight, "g0 weight (h1,h2;h3;Y) of an element of E(3,6)")
    p.add_argument("expr")
    add("relations", cmd_relations, "run the relation table")
    p = add("hwv", cmd_hwv, "highest weight lines of Lambda (x) F(p,q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p = add("singular", cmd_singular, "singular vector search in M(F)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--y")
    p.add_argument("--max-depth", type=int, default=2)
    p.add_argument("--parametric-y", action="store_true")
    p = add("scan", cmd_scan, "parametric search over a (p,q,r) grid")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--pmin", type=int, default=1)
    p.add_argument("--qmin", type=int, default=1)
    p.add_argument("--r", default="0")
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p = add("verify", cmd_verify, "run a verification suite by id")
    p.add_argument("lemma")
    p.add_argument("--param", action="append", metavar="K=V")
    p = add("parse", cmd_parse, "parse and validate an expression")
    p.add_argument("expr")
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        return args.func(args)
    except (UsageError, ParseError, InvalidElementError, InvariantError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
