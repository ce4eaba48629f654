"""Command-line front end and the expression grammar for superfunctions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' integer]
    atom   := rational | var | '(' expr ')' | '-' factor
    var    := x<i> | th<j> | r | R

Unary minus covers a whole factor, so ``-x1^2`` is ``-(x1^2)``.  Products
keep source order, so ``th2*th1`` lowers to ``-th1*th2``.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .geometry import VectorField, divergence, flat_metric, laplacian_flat
from .grassmann import SpaceDims, SuperFun, render_superfun, superpower_R
from .harmonic import (check_fundamental_solution, harmonic_basis, rotations, translations,
                       verify_divergence_theorem, verify_green, verify_mvt_ball,
                       verify_mvt_sphere, verify_noether)
from .integrate import ball_integral, ball_volume, sphere_integral, sphere_volume


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int | None = None):
        self.pos = pos
        super().__init__(msg if pos is None else f"{msg} at position {pos}")


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str  # "x", "th", "r" or "R"
    index: int = 0


@dataclass(frozen=True)
class Add:
    left: object
    right: object
    sub: bool = False


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Neg:
    arg: object


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<var>x\d+|th\d+|r|R)|(?P<op>[-+*^()]))")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {src[pos:].lstrip()[:1]!r}",
                             pos + len(src[pos:]) - len(src[pos:].lstrip()))
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, dims: SpaceDims):
        self.src = src
        self.dims = dims
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, text=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (text and tok[1] != text):
            want = text or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = Add(node, self.term(), op == "-")
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            pos = self.peek()[2]
            exp = self.integer()
            node = Pow(node, exp)
            if isinstance(node.base, Var) and node.base.name in ("r", "R") and exp % 2:
                raise ParseError(f"odd power of {node.base.name}", pos)
        elif isinstance(node, Var) and node.name in ("r", "R"):
            raise ParseError(f"odd power of {node.name}", self.peek()[2])
        return node

    def integer(self) -> int:
        sign = 1
        paren = False
        if self.peek()[1] == "(":
            self.take()
            paren = True
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            sign = -1
        tok = self.take("num")
        if "/" in tok[1]:
            raise ParseError("exponent must be an integer", tok[2])
        if paren:
            self.take("op", ")")
        return sign * int(tok[1])

    def atom(self):
        kind, text, pos = self.peek()
        if kind == "num":
            self.take()
            if "/" in text:
                p, q = (int(s) for s in text.split("/"))
                if q == 0:
                    raise ParseError("division by zero", pos)
                return Num(Fraction(p, q))
            return Num(Fraction(int(text)))
        if kind == "var":
            self.take()
            return self.variable(text, pos)
        if kind == "op" and text == "(":
            self.take()
            node = self.expr()
            self.take("op", ")")
            return node
        if kind == "op" and text == "-":
            # binds looser than '^', so -x1^2 is -(x1^2)
            self.take()
            return Neg(self.factor())
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)

    def variable(self, text: str, pos: int) -> Var:
        if text in ("r", "R"):
            return Var(text)
        name = "th" if text.startswith("th") else "x"
        idx = int(text[len(name):])
        bound = self.dims.m if name == "x" else self.dims.odd
        if not 1 <= idx <= bound:
            raise ParseError(f"unknown variable {text!r} for dimension {self.dims}", pos)
        return Var(name, idx)


def parse(src: str, dims: SpaceDims):
    """Parse ``src`` into an AST; raises :class:`ParseError`."""
    return _Parser(src, dims).parse()


def lower(node, dims: SpaceDims) -> SuperFun:
    """Evaluate an AST to a superfunction."""
    if isinstance(node, Num):
        return SuperFun.const(dims, node.value)
    if isinstance(node, Var):
        if node.name == "x":
            return SuperFun.x(dims, node.index)
        if node.name == "th":
            return SuperFun.theta(dims, node.index)
        raise ParseError(f"odd power of {node.name}")
    if isinstance(node, Neg):
        return -lower(node.arg, dims)
    if isinstance(node, Add):
        a, b = lower(node.left, dims), lower(node.right, dims)
        return a - b if node.sub else a + b
    if isinstance(node, Mul):
        return lower(node.left, dims) * lower(node.right, dims)
    if isinstance(node, Pow):
        base = node.base
        if isinstance(base, Var) and base.name == "r":
            return SuperFun.r_pow(dims, node.exp)
        if isinstance(base, Var) and base.name == "R":
            return superpower_R(dims, node.exp)
        if node.exp < 0:
            raise ParseError("negative exponent is only allowed on r and R")
        return lower(base, dims) ** node.exp
    raise TypeError(f"unknown node {node!r}")


def parse_superfun(src: str, dims: SpaceDims) -> SuperFun:
    return lower(parse(src, dims), dims)


def parse_field(src: str, dims: SpaceDims) -> VectorField:
    """``"E1;...;E_(m+2n)"``: components in the order x1..xm, th1..th2n."""
    parts = src.split(";")
    if len(parts) != dims.total:
        raise ParseError(f"expected {dims.total} components separated by ';', got {len(parts)}")
    return VectorField(dims, [parse_superfun(p, dims) for p in parts])


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


class UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dims(args) -> SpaceDims:
    if args.m < 1 or args.n < 0:
        raise UsageError("need m >= 1 and n >= 0")
    return SpaceDims(args.m, args.n)


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for this command")
    return value


def _emit(args, text: str, payload) -> None:
    print(json.dumps(payload, sort_keys=False) if args.json else text)


def _cmd_volume(args) -> int:
    dims = _dims(args)
    value = sphere_volume(dims) if args.shape == "sphere" else ball_volume(dims)
    _emit(args, str(value), value.to_json())
    return 0


def _cmd_integrate(args) -> int:
    dims = _dims(args)
    f = parse_superfun(args.expr, dims)
    if args.domain == "sphere":
        value = sphere_integral(f, dims)
    else:
        value = ball_integral(f, dims, args.retraction)
    _emit(args, str(value), value.to_json())
    return 0


def _cmd_laplacian(args) -> int:
    dims = _dims(args)
    text = render_superfun(laplacian_flat(dims, parse_superfun(args.expr, dims)))
    _emit(args, text, {"laplacian": text})
    return 0


def _cmd_divergence(args) -> int:
    dims = _dims(args)
    X = parse_field(args.field, dims)
    text = render_superfun(divergence(flat_metric(dims), X, args.formula))
    _emit(args, text, {"divergence": text, "formula": args.formula})
    return 0


def _reports_for(args, dims):
    kind = args.theorem
    if kind == "fundamental":
        return [check_fundamental_solution(dims)]
    if kind == "divergence":
        return [verify_divergence_theorem(parse_field(_need(args, "field"), dims), dims)]
    if kind == "green":
        f = parse_superfun(_need(args, "expr"), dims)
        k = parse_superfun(_need(args, "expr2"), dims)
        return [verify_green(f, k, dims)]
    if args.expr is not None:
        fs = [parse_superfun(args.expr, dims)]
    elif args.degree is not None:
        fs = harmonic_basis(dims, args.degree)
    else:
        raise UsageError("give --expr or --degree")
    if kind == "noether":
        xis = [parse_field(args.field, dims)] if args.field else translations(dims) + rotations(dims)
        return [verify_noether(f, xi, dims) for f in fs for xi in xis]
    check = not args.skip_harmonic_check
    fn = verify_mvt_sphere if kind == "mvt-sphere" else verify_mvt_ball
    return [fn(f, dims, check_harmonic=check) for f in fs]


def _cmd_verify(args) -> int:
    dims = _dims(args)
    reports = _reports_for(args, dims)
    if args.json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload))
    else:
        for r in reports:
            print(r)
    return 0 if all(r.equal for r in reports) else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgParser(prog="supersphere",
                        description="Exact Berezin integration and harmonic analysis on R^(m|2n).")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def dims_args(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("volume", help="closed-form sphere or ball volume")
    p.add_argument("--shape", choices=("sphere", "ball"), required=True)
    dims_args(p)
    p.set_defaults(func=_cmd_volume)

    p = sub.add_parser("integrate", help="integrate an expression")
    p.add_argument("--domain", choices=("sphere", "ball"), required=True)
    p.add_argument("--retraction", choices=("gamma", "std"), default="gamma")
    dims_args(p)
    p.add_argument("--expr", required=True)
    p.set_defaults(func=_cmd_integrate)

    p = sub.add_parser("laplacian", help="flat super Laplacian")
    dims_args(p)
    p.add_argument("--expr", required=True)
    p.set_defaults(func=_cmd_laplacian)

    p = sub.add_parser("divergence", help="divergence for the flat metric")
    dims_args(p)
    p.add_argument("--field", required=True)
    p.add_argument("--formula", choices=("i", "ii", "iii"), default="i")
    p.set_defaults(func=_cmd_divergence)

    p = sub.add_parser("verify", help="check an integral theorem exactly")
    p.add_argument("theorem", choices=("mvt-sphere", "mvt-ball", "green", "divergence",
                                       "noether", "fundamental"))
    dims_args(p)
    p.add_argument("--expr")
    p.add_argument("--expr2", help="second function for green")
    p.add_argument("--field", help="vector field for divergence, or xi for noether")
    p.add_argument("--degree", type=int, help="run over a harmonic basis of this degree")
    p.add_argument("--skip-harmonic-check", action="store_true",
                   help="report inequality instead of rejecting non-harmonic input")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (ParseError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
