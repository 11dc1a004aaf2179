"""Command-line interface: parse inputs, run the pipeline, print JSON or text.

Exit codes: 0 success, 1 mathematical error (NotIrreducible, NegativeValue,
...; machine-readable JSON on stdout when --output json), 2 usage or parse
errors with a message on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import ValExtError
from .extensions import extensions_of
from .numberfield import NFElem, NumberField
from .orders import p_maximal_order
from .padic import is_prime
from .theorems import approx_element, check_fundamental, weak_approx


class PolyParseError(ValueError):
    pass


def parse_poly(text: str, var: str) -> list[Fraction]:
    """poly := term (('+'|'-') term)*; term := [coef '*'?]? VAR ('^' uint)? | coef;
    coef := int | int '/' uint. Whitespace-insensitive; a leading sign is allowed."""
    s = "".join(text.split())
    if not s:
        raise PolyParseError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    i = 0
    n = len(s)

    def parse_uint(k: int) -> tuple[int, int]:
        j = k
        while j < n and s[j].isdigit():
            j += 1
        if j == k:
            raise PolyParseError(f"expected a number at position {k} in {text!r}")
        return int(s[k:j]), j

    first = True
    while i < n:
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        elif not first:
            raise PolyParseError(f"expected '+' or '-' at position {i} in {text!r}")
        first = False
        coef = None
        if i < n and s[i].isdigit():
            num, i = parse_uint(i)
            coef = Fraction(num)
            if i < n and s[i] == "/":
                den, i = parse_uint(i + 1)
                if den == 0:
                    raise PolyParseError("zero denominator")
                coef = Fraction(num, den)
            if i < n and s[i] == "*":
                i += 1
                if i >= n or s[i] != var:
                    raise PolyParseError(f"expected {var!r} after '*' in {text!r}")
        exp = 0
        if i < n and s[i] == var:
            i += 1
            exp = 1
            if i < n and s[i] == "^":
                exp, i = parse_uint(i + 1)
            if coef is None:
                coef = Fraction(1)
        elif coef is None:
            raise PolyParseError(f"unexpected character {s[i]!r} in {text!r}")
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
    deg = max(coeffs) if coeffs else 0
    return [coeffs.get(k, Fraction(0)) for k in range(deg + 1)]


def parse_defining_poly(text: str) -> NumberField:
    coeffs = parse_poly(text, "x")
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise PolyParseError("defining polynomial must have degree >= 1")
    if coeffs[-1] != 1:
        raise PolyParseError("defining polynomial must be monic")
    if any(c.denominator != 1 for c in coeffs):
        raise PolyParseError("defining polynomial must have integer coefficients")
    return NumberField(coeffs)


def parse_element(text: str, field: NumberField) -> NFElem:
    return field.from_poly(parse_poly(text, "a"))


def format_element(x: NFElem) -> str:
    parts = []
    for k in range(x.field.n - 1, -1, -1):
        c = x.coords[k]
        if c == 0:
            continue
        if k == 0:
            term = str(c)
        else:
            gen = "a" if k == 1 else f"a^{k}"
            if c == 1:
                term = gen
            elif c == -1:
                term = f"-{gen}"
            else:
                term = f"{c}*{gen}"
        parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def _prime_type(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"prime must be an integer, got {text!r}")
    if p < 2 or not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _gamma_type(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 3/2, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="valext",
        description="Extensions of the p-adic valuation v_p to a number field Q[x]/(f).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--prime", type=_prime_type, required=True, help="prime p")
    shared.add_argument("--poly", required=True, help="monic integer polynomial in x")
    shared.add_argument("--output", choices=["json", "text"], default="text")
    shared.add_argument("--trace", action="store_true", help="emit procedure trace lines")
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--trials", type=int, default=100)

    sub.add_parser("extensions", parents=[shared], help="list all extensions of v_p")

    p_value = sub.add_parser("value", parents=[shared], help="values w_i(elem)")
    p_value.add_argument("--elem", required=True, help="element, polynomial in a")
    p_value.add_argument("--extension", type=int, help="restrict to one extension (1-based)")

    p_res = sub.add_parser("residue", parents=[shared], help="residue of elem at one extension")
    p_res.add_argument("--elem", required=True, help="element, polynomial in a")
    p_res.add_argument("--extension", type=int, required=True, help="extension index (1-based)")

    p_weak = sub.add_parser(
        "weak-approx", parents=[shared], help="element hitting prescribed residues"
    )
    p_weak.add_argument(
        "--targets",
        required=True,
        help="per-extension residue coordinates, e.g. '0;1' or '1,0;2'",
    )

    p_approx = sub.add_parser(
        "approx", parents=[shared], help="element with value gamma at one extension"
    )
    p_approx.add_argument("--extension", type=int, required=True, help="target index (1-based)")
    p_approx.add_argument("--gamma", type=_gamma_type, required=True, help="target value m/e")

    sub.add_parser("verify", parents=[shared], help="run the fundamental-inequality check")
    sub.add_parser("order", parents=[shared], help="print the p-maximal order basis")
    return parser


def _pick_extension(exts, index: int, parser):
    if not 1 <= index <= len(exts):
        parser.error(f"--extension must be in 1..{len(exts)}")
    return exts[index - 1]


def _parse_targets(text: str, exts, parser) -> list[list[int]]:
    groups = text.split(";")
    if len(groups) != len(exts):
        parser.error(f"--targets needs {len(exts)} ';'-separated groups, got {len(groups)}")
    out = []
    for g, w in zip(groups, exts):
        try:
            coords = [int(c) for c in g.split(",")] if g.strip() else []
        except ValueError:
            parser.error(f"bad target coordinates {g!r}")
        if len(coords) != w.f:
            parser.error(
                f"target for extension {w.index} needs {w.f} coordinates, got {len(coords)}"
            )
        out.append(coords)
    return out


def run_command(args, parser) -> tuple[dict, list[str], list[str]]:
    """Returns (json payload, text lines, trace lines)."""
    field = parse_defining_poly(args.poly)
    p = args.prime
    trace: list[str] | None = [] if args.trace else None

    if args.command == "order":
        order = p_maximal_order(field, p)
        basis = [[str(x) for x in row] for row in order.basis]
        payload = {"prime": p, "poly": args.poly, "basis": basis}
        lines = [" ".join(row) for row in basis]
        return payload, lines, trace or []

    exts = extensions_of(field, p, trace=trace)

    if args.command == "extensions":
        payload = {"extensions": [w.to_descriptor() for w in exts]}
        lines = [
            f"w_{w.index}: e={w.e} f={w.f} residue_field_dim={w.residue_algebra.dim}"
            for w in exts
        ]
        return payload, lines, trace or []

    if args.command == "value":
        elem = parse_element(args.elem, field)
        chosen = exts if args.extension is None else [_pick_extension(exts, args.extension, parser)]
        vals = [(w.index, w.value(elem, trace=trace)) for w in chosen]
        estr = format_element(elem)
        payload = {
            "element": estr,
            "values": [{"extension": i, "value": str(v)} for i, v in vals],
        }
        lines = [f"w_{i}({estr}) = {v}" for i, v in vals]
        return payload, lines, trace or []

    if args.command == "residue":
        elem = parse_element(args.elem, field)
        w = _pick_extension(exts, args.extension, parser)
        res = w.residue(elem, trace=trace)
        estr = format_element(elem)
        payload = {"element": estr, "extension": w.index, "residue": res}
        lines = [f"res_{w.index}({estr}) = {res}"]
        return payload, lines, trace or []

    if args.command == "weak-approx":
        targets = _parse_targets(args.targets, exts, parser)
        x = weak_approx(exts, targets)
        residues = [w.residue(x) for w in exts]
        estr = format_element(x)
        payload = {
            "element": estr,
            "residues": residues,
            "targets": targets,
        }
        lines = [f"x = {estr}"] + [
            f"res_{w.index}(x) = {r}" for w, r in zip(exts, residues)
        ]
        return payload, lines, trace or []

    if args.command == "approx":
        w = _pick_extension(exts, args.extension, parser)
        x = approx_element(exts, w.index - 1, args.gamma)
        vals = [(u.index, u.value(x)) for u in exts]
        estr = format_element(x)
        payload = {
            "element": estr,
            "gamma": str(Fraction(args.gamma)),
            "values": [{"extension": i, "value": str(v)} for i, v in vals],
        }
        lines = [f"x = {estr}"] + [f"w_{i}(x) = {v}" for i, v in vals]
        return payload, lines, trace or []

    if args.command == "verify":
        report = check_fundamental(exts, trials=args.trials, seed=args.seed)
        payload = report.to_json()
        lines = [
            f"instance: {report.instance}",
            f"sum_ef = {report.sum_ef}, degree = {report.degree}, rank = {report.rank}",
            f"trials: {len(report.trials)}, all equal: {all(t.equal for t in report.trials)}",
            f"pass: {str(report.passed).lower()}",
        ]
        return payload, lines, trace or []

    raise AssertionError(f"unhandled command {args.command}")


def _join_gamma(argv: list[str]) -> list[str]:
    """Fold "--gamma -1/2" into "--gamma=-1/2" so negative values parse."""
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--gamma" and i + 1 < len(argv):
            out.append(f"--gamma={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_gamma(list(argv)))
    try:
        payload, lines, trace = run_command(args, parser)
    except PolyParseError as exc:
        parser.error(str(exc))
    except ValExtError as exc:
        if args.output == "json":
            print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        else:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output == "json":
        if args.trace:
            payload = {**payload, "trace": trace}
        print(json.dumps(payload))
    else:
        for line in trace:
            print(line)
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
