"""Command-line front end.

Result records go to stdout as a single line of key=value pairs;
diagnostics go to stderr.  Exit codes: 0 success, 1 parse or usage
error, 2 domain error (a = 0, zero polynomial, size limits).
"""

from __future__ import annotations

import argparse
import sys

from . import classify as _classify
from . import cyclo as _cyclo
from . import unitcheck as _unitcheck
from .cyclo import DEFAULT_DEGREE_BUDGET
from .classify import DEFAULT_SCAN_LIMIT
from .errors import (
    DegreeLimitError,
    InvalidInputError,
    ParseError,
    RingUnitsError,
    ShapeNotCyclotomicError,
    SizeLimitError,
)
from .polycore import ONE, IntPoly, mult_matrix_det

# ---------------------------------------------------------------------------
# expression parsing
#
# expr   := term (('+'|'-') term)*
# term   := unary (('*' unary) | implicit-power)*     implicit: juxtaposition
# unary  := ('-'|'+') unary | power
# power  := atom ('^' INT)?                           non-associative
# atom   := INT | 'x' | '(' expr ')'
#
# The alternate list form "coeffs:c0,c1,...,ck" gives coefficients
# ascending.  The single variable is x, case-insensitive; whitespace is
# insignificant; "2x" style juxtaposition multiplies.
# ---------------------------------------------------------------------------

_ATOM_STARTERS = ("int", "x", "(")


def _tokenize(text: str) -> list[tuple[str, int | None, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch in "xX":
            tokens.append(("x", None, i))
            i += 1
        elif ch in "+-*^()":
            tokens.append((ch, None, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", position=i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, max_degree: int):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.max_degree = max_degree

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", position=tok[2])
        return tok

    def parse(self) -> IntPoly:
        poly = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[0]!r}", position=tok[2])
        return poly

    def expr(self) -> IntPoly:
        poly = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def term(self) -> IntPoly:
        poly = self.unary()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                poly = self._checked_mul(poly, self.unary())
            elif kind in _ATOM_STARTERS:  # juxtaposition, e.g. "2x"
                poly = self._checked_mul(poly, self.power())
            else:
                return poly

    def unary(self) -> IntPoly:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> IntPoly:
        base = self.atom()
        if self.peek()[0] != "^":
            return base
        caret = self.take()
        tok = self.take()
        if tok[0] != "int":
            raise ParseError(
                "exponent must be a nonnegative integer literal", position=caret[2]
            )
        exponent = tok[1]
        follow = self.peek()
        if follow[0] == "^":
            raise ParseError(
                "'^' is non-associative; parenthesize nested exponents",
                position=follow[2],
            )
        if base.degree > 0 and base.degree * exponent > self.max_degree:
            raise DegreeLimitError(
                f"degree {base.degree * exponent} exceeds the budget {self.max_degree}"
            )
        if base.degree == 0 and abs(base.coeffs[0]) > 1 and exponent > self.max_degree:
            raise DegreeLimitError(
                f"constant power {exponent} exceeds the expansion budget"
            )
        return base**exponent

    def atom(self) -> IntPoly:
        tok = self.take()
        kind = tok[0]
        if kind == "int":
            return IntPoly((tok[1],))
        if kind == "x":
            return IntPoly((0, 1))
        if kind == "(":
            poly = self.expr()
            self.expect(")")
            return poly
        raise ParseError(
            f"expected a number, 'x' or '(', found {kind!r}", position=tok[2]
        )

    def _checked_mul(self, a: IntPoly, b: IntPoly) -> IntPoly:
        if a.degree > 0 and b.degree > 0 and a.degree + b.degree > self.max_degree:
            raise DegreeLimitError(
                f"degree {a.degree + b.degree} exceeds the budget {self.max_degree}"
            )
        return a * b


def _parse_coeff_list(text: str) -> IntPoly:
    body = text.split(":", 1)[1]
    if not body.strip():
        raise ParseError("empty coefficient list")
    coeffs = []
    for part in body.split(","):
        part = part.strip()
        try:
            coeffs.append(int(part))
        except ValueError:
            raise ParseError(f"bad coefficient {part!r}") from None
    return IntPoly(tuple(coeffs))


def parse_poly(text: str, max_degree: int = DEFAULT_DEGREE_BUDGET) -> IntPoly:
    """Parse a polynomial expression in x, or the 'coeffs:...' list form.

    Raises ParseError on syntax errors and DegreeLimitError when the
    expanded degree would exceed max_degree.
    """
    stripped = text.strip()
    if stripped.lower().startswith("coeffs:"):
        return _parse_coeff_list(stripped)
    if not stripped:
        raise ParseError("empty polynomial expression")
    return _Parser(stripped, max_degree).parse()


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """argparse variant that raises instead of exiting with code 2."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def _cmd_check(args) -> str:
    f = parse_poly(args.poly, args.max_degree)
    verdict = _unitcheck.defines_units_on_roots(
        f, args.n, args.a, want_certificate=args.certificate
    )
    line = (
        f"unit={_fmt_bool(verdict.is_unit)} n={verdict.n} a={verdict.a}"
        f" resultant={verdict.resultant}"
    )
    if verdict.certificate is not None:
        line += f" p={verdict.certificate.p} q={verdict.certificate.q}"
    if args.oracle:
        det = mult_matrix_det(f, args.n, args.a)
        agree = abs(det) == abs(verdict.resultant)
        line += f" oracle={'agree' if agree else 'disagree'}"
    return line


def _cmd_order(args) -> str:
    args.a = 1
    args.oracle = False
    return _cmd_check(args)


def _cmd_generic(args) -> str:
    f = parse_poly(args.poly, args.max_degree)
    verdict = _classify.is_generic(f)
    if verdict.is_generic:
        return f"generic=true D={verdict.modulus}"
    offenders = [str(m) for m in verdict.offending_indices]
    if verdict.shape.content != 1:
        offenders.append("content")
    if verdict.shape.remainder != ONE:
        offenders.append("remainder")
    return f"generic=false offenders={','.join(offenders)}"


def _cmd_classify(args) -> str:
    f = parse_poly(args.poly, args.max_degree)
    result = _classify.classify_roots(f, args.a, scan_limit=args.max_n)
    if result.kind == "infinite":
        residues = ",".join(str(r) for r in result.periodic.sorted_residues())
        return (
            f"class=infinite modulus={result.periodic.modulus} residues={residues}"
        )
    if result.kind == "finite":
        members = ",".join(str(n) for n in result.members)
        return (
            f"class=finite bound={result.bound} members={members}"
            f" exhaustive={_fmt_bool(result.exhaustive)}"
        )
    return f"class={result.kind}"


def _cmd_bound(args) -> str:
    f = parse_poly(args.poly, args.max_degree)
    return f"bound={_classify.compute_bound(f, args.a)}"


def _cmd_cyclotomic(args) -> str:
    poly = _cyclo.cyclotomic(args.m, max_degree=args.max_degree)
    return f"m={args.m} poly={poly}"


def _cmd_phi_class(args) -> str:
    cls = _cyclo.phi_is_pm1(args.m, args.a)
    return f"plus_one={_fmt_bool(cls.plus_one)} minus_one={_fmt_bool(cls.minus_one)}"


def _cmd_factor(args) -> str:
    f = parse_poly(args.poly, args.max_degree)
    shape = _classify.factor_shape(f)
    factors = ",".join(f"{m}^{e}" for m, e in shape.cyclo_factors)
    return (
        f"content={shape.content} sign={shape.sign} xpow={shape.x_power}"
        f" factors={factors} remainder={shape.remainder}"
    )


def _add_poly_arg(sub):
    sub.add_argument("poly", metavar="POLY", help="polynomial in x, or coeffs:c0,c1,...")


def _add_max_degree(sub):
    sub.add_argument(
        "--max-degree",
        type=int,
        default=DEFAULT_DEGREE_BUDGET,
        help="degree budget for expression expansion (default %(default)s)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="ringunits",
        description="Decide and classify units defined by integer polynomials "
        "on n-th roots of an integer a.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="is f a unit of Z[x]/(x^n - a)?")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--certificate", action="store_true", help="attach a Bezout pair")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check with the multiplication-matrix determinant",
    )
    _add_max_degree(p)
    _add_poly_arg(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("order", help="is f(x) a unit of Z C_n?  (a = 1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--certificate", action="store_true")
    _add_max_degree(p)
    _add_poly_arg(p)
    p.set_defaults(handler=_cmd_order)

    p = sub.add_parser("generic", help="does f define generic units?")
    _add_max_degree(p)
    _add_poly_arg(p)
    p.set_defaults(handler=_cmd_generic)

    p = sub.add_parser("classify", help="classify the unit-order set of f")
    p.add_argument("--a", type=int, required=True)
    p.add_argument(
        "--max-n",
        type=int,
        default=DEFAULT_SCAN_LIMIT,
        help="scan limit for finite sets (default %(default)s)",
    )
    _add_max_degree(p)
    _add_poly_arg(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("bound", help="cardinality bound for a finite unit-order set")
    p.add_argument("--a", type=int, required=True)
    _add_max_degree(p)
    _add_poly_arg(p)
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("cyclotomic", help="print the m-th cyclotomic polynomial")
    p.add_argument("m", type=int)
    _add_max_degree(p)
    p.set_defaults(handler=_cmd_cyclotomic)

    p = sub.add_parser("phi-class", help="is Phi_m(a) equal to +1 or -1?")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.set_defaults(handler=_cmd_phi_class)

    p = sub.add_parser("factor", help="content/sign/x-power/cyclotomic shape of f")
    _add_max_degree(p)
    _add_poly_arg(p)
    p.set_defaults(handler=_cmd_factor)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    try:
        line = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (SizeLimitError, InvalidInputError, ShapeNotCyclotomicError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RingUnitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
