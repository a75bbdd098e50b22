"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 the mathematics rejects the input (infinite quotient, inhomogeneous
input where a grading is required).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import verify
from .apolarity import DualPairing, apolar_ideal
from .groebner import InfiniteQuotientError, NotHomogeneousError, quotient_dimension
from .ideals import (
    Ideal,
    homogenize,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    saturate,
)
from .parser import ParseError, parse_ideal, parse_polynomial, serialize
from .poly import ContextMismatchError, RingContext, get_order

SCHEMA_VERSION = 1

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_MATH = 0, 1, 2, 3

_RANGE_RE = re.compile(r"^([A-Za-z][A-Za-z_]*)(\d+)\.\.([A-Za-z][A-Za-z_]*)?(\d+)$")


class UsageError(Exception):
    pass


def parse_vars(spec: str) -> list[str]:
    """``a1..a5`` or ``x,y,z`` or a mix: ``x1..x3,z``."""
    names = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        m = _RANGE_RE.match(part)
        if m:
            prefix, lo, prefix2, hi = m.groups()
            if prefix2 not in (None, prefix):
                raise UsageError(f"bad variable range {part!r}")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise UsageError(f"empty variable range {part!r}")
            names.extend(f"{prefix}{i}" for i in range(lo, hi + 1))
        else:
            names.append(part)
    if not names:
        raise UsageError("no variables declared")
    return names


def _context(args) -> RingContext:
    try:
        return RingContext(parse_vars(args.vars))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_operand(text: str) -> str:
    if text.startswith("@"):
        try:
            return Path(text[1:]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {text[1:]}: {exc}") from None
    return text


def _single_input(args) -> str:
    if (args.input is None) == (args.file is None):
        raise UsageError("give exactly one of an inline input or --file")
    if args.file is not None:
        try:
            return Path(args.file).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from None
    return args.input


def _emit(args, value, text: str) -> None:
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA_VERSION, "value": value}, indent=2))
    else:
        print(text)


# --- subcommands ----------------------------------------------------------------

def cmd_apolar(args) -> int:
    primal = _context(args)
    dual_names = parse_vars(args.dual_vars) if args.dual_vars else None
    try:
        pairing = DualPairing.for_primal(primal, dual_names)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    F = parse_polynomial(_single_input(args), primal)
    if F.is_zero():
        raise UsageError("the zero form has no apolar algebra")
    gens = apolar_ideal(F, pairing.dual).generators
    texts = [serialize(g) for g in gens]
    _emit(args, texts, "\n".join(texts))
    return EXIT_OK


def _ideal_from_input(args) -> Ideal:
    ctx = _context(args)
    return Ideal(ctx, parse_ideal(_single_input(args), ctx))


def cmd_qdim(args) -> int:
    I = _ideal_from_input(args)
    n = quotient_dimension(I.groebner(get_order(args.order)))
    _emit(args, n, str(n))
    return EXIT_OK


def cmd_hilbert(args) -> int:
    I = _ideal_from_input(args)
    h = I.hilbert_function()
    _emit(args, list(h.values), ",".join(map(str, h.values)))
    return EXIT_OK


def cmd_tangent(args) -> int:
    I = _ideal_from_input(args)
    n = ideal_power(I, 2).quotient_dimension() - I.quotient_dimension()
    _emit(args, n, str(n))
    return EXIT_OK


_BINARY = {"sum": ideal_sum, "product": ideal_product, "intersect": ideal_intersect}


def cmd_ideal(args) -> int:
    ctx = _context(args)
    order = get_order(args.order)
    ops = [_read_operand(t) for t in args.operands]
    op = args.op
    arity = {"power": 1, "homogenize": 1}.get(op, 2)
    if len(ops) != arity:
        raise UsageError(f"'{op}' takes {arity} operand(s), got {len(ops)}")
    first = Ideal(ctx, parse_ideal(ops[0], ctx))
    if op in _BINARY:
        result = _BINARY[op](first, Ideal(ctx, parse_ideal(ops[1], ctx)))
    elif op == "equal":
        same = ideal_equal(first, Ideal(ctx, parse_ideal(ops[1], ctx)))
        _emit(args, same, "true" if same else "false")
        return EXIT_OK
    elif op in ("colon", "saturate"):
        f = parse_polynomial(ops[1], ctx)
        if f.is_zero():
            raise UsageError(f"{op} by the zero polynomial")
        result = ideal_colon(first, f) if op == "colon" else saturate(first, f)
    elif op == "power":
        if args.n is None or args.n < 1:
            raise UsageError("power needs --n >= 1")
        result = ideal_power(first, args.n)
    elif op == "homogenize":
        if args.new_var in ctx:
            raise UsageError(f"variable {args.new_var!r} already declared")
        result = homogenize(first, args.new_var)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown operation {op}")
    texts = [serialize(g) for g in result.groebner(order)]
    _emit(args, texts, "\n".join(texts))
    return EXIT_OK


def _parse_alpha(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"alpha must be a rational number, got {text!r}") from None
    if value == 0:
        raise UsageError("alpha must be nonzero")
    return value


def render_text(reports, verbose: bool = False) -> str:
    lines = []
    for r in reports:
        params = ", ".join(f"{k}={v}" for k, v in r.parameters.items())
        head = f"[{'PASS' if r.passed else 'FAIL'}] {r.scenario}: {r.title}"
        if params:
            head += f" ({params})"
        if verbose:
            head += f"  [{r.wall_time:.3f}s]"
        lines.append(head)
        for c in r.checks:
            d = c.to_dict()
            lines.append(
                f"    [{'PASS' if c.passed else 'FAIL'}] ({c.id}) {c.description}: "
                f"computed {json.dumps(d['computed'])}, expected {json.dumps(d['expected'])}"
            )
            lines.append(f"        source: {c.source}")
        for note in r.notes:
            lines.append(f"    note: {note}")
    ok = all(r.passed for r in reports)
    lines.append("all scenarios passed" if ok else "VERIFICATION FAILED")
    return "\n".join(lines)


def render_json(reports, verbose: bool = False) -> str:
    doc = {
        "schema": SCHEMA_VERSION,
        "passed": all(r.passed for r in reports),
        "reports": [r.to_dict(include_time=verbose) for r in reports],
    }
    return json.dumps(doc, indent=2)


def cmd_verify_paper(args) -> int:
    alphas = [_parse_alpha(a) for a in args.alpha] if args.alpha else list(verify.DEFAULT_ALPHAS)
    reports = verify.verify_all(alphas)
    render = render_json if args.format == "json" else render_text
    print(render(reports, verbose=args.verbose))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


# --- argument parsing -------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="apolarkit", description="Exact apolarity and Groebner toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, order=True):
        p.add_argument("--vars", required=True, help="ordered variables, e.g. a1..a5 or x,y,z")
        p.add_argument("--format", choices=["text", "json"], default="text")
        if order:
            p.add_argument("--order", choices=["grevlex", "lex", "grlex"], default="grevlex")

    p = sub.add_parser("apolar", help="apolar ideal of a form")
    p.add_argument("input", nargs="?", help="the form, e.g. 'x1^2*x2'")
    p.add_argument("--file", help="read the form from a file")
    p.add_argument("--dual-vars", help="names of the dual variables (default: x<i> -> a<i>)")
    common(p, order=False)
    p.set_defaults(func=cmd_apolar)

    for name, func, what in (
        ("qdim", cmd_qdim, "dimension of the quotient ring"),
        ("hilbert", cmd_hilbert, "Hilbert function of a graded quotient"),
        ("tangent", cmd_tangent, "dim S/I^2 - dim S/I"),
    ):
        p = sub.add_parser(name, help=what)
        p.add_argument("input", nargs="?", help="comma-separated generators")
        p.add_argument("--file", help="read generators from a file")
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("ideal", help="ideal arithmetic")
    p.add_argument("op", choices=["sum", "product", "power", "intersect", "colon", "saturate", "equal", "homogenize"])
    p.add_argument("operands", nargs="+", help="generator lists (or @file); colon/saturate take a polynomial second")
    p.add_argument("--n", type=int, help="exponent for 'power'")
    p.add_argument("--new-var", default="z", help="homogenizing variable (default z)")
    common(p)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("verify-paper", help="re-run every scenario and report")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--alpha", action="append", help="nonzero rational for the family scenario (repeatable)")
    p.add_argument("--verbose", action="store_true", help="include wall times")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, ContextMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InfiniteQuotientError, NotHomogeneousError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
