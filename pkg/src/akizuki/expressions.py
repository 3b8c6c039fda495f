"""Parsing and evaluation of ring expressions.

Grammar: atoms ``t``, ``w``, ``g0``, ``g1``, ...; integer constants;
operators ``+ - * /``; parentheses; ``^`` with a nonnegative integer
exponent.  Rational constants are spelled as quotients (``1/2``), which the
evaluator resolves by local division, so they need no dedicated literal.

Two evaluators are provided: ``eval_nf`` works through normal forms (the
ring's own arithmetic), while ``eval_series`` evaluates the same expression
directly in the completed DVR and serves as an independent cross-check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .ring import AkizukiRing, NormalForm
from .series import TruncatedSeries


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Atom:
    name: str  # "t" or "w"


@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(g\d+)|([tw])|([()+\-*/^])|(\S))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            break
        number, gen, atom, op, bad = m.groups()
        if bad is not None:
            raise ParseError(f"unexpected character {bad!r} in expression")
        if number is not None:
            tokens.append(("num", int(number)))
        elif gen is not None:
            tokens.append(("gen", int(gen[1:])))
        elif atom is not None:
            tokens.append(("atom", atom))
        else:
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect_op(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise ParseError(f"expected {op!r}, got {tok!r}")

    def parse(self):
        node = self.sum()
        if self.peek() is not None:
            raise ParseError(f"trailing input at token {self.peek()!r}")
        return node

    def sum(self):
        node = self.product()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = BinOp(op, node, self.product())
        return node

    def product(self):
        node = self.signed()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            node = BinOp(op, node, self.signed())
        return node

    def signed(self):
        if self.peek() == ("op", "-"):
            self.take()
            return Neg(self.signed())
        if self.peek() == ("op", "+"):
            self.take()
            return self.signed()
        return self.power()

    def power(self):
        node = self.primary()
        if self.peek() == ("op", "^"):
            self.take()
            kind, value = self.take()
            if kind != "num":
                raise ParseError("the exponent after ^ must be a nonnegative integer")
            node = Pow(node, value)
        return node

    def primary(self):
        kind, value = self.take()
        if kind == "num":
            return Num(value)
        if kind == "atom":
            return Atom(value)
        if kind == "gen":
            return Gen(value)
        if (kind, value) == ("op", "("):
            node = self.sum()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected token {value!r}")


def parse_expression(text: str):
    """Parse an expression into an AST; raises ParseError on bad input."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    return _Parser(tokens).parse()


def eval_nf(node, ring: AkizukiRing, level: int) -> NormalForm:
    """Evaluate an AST to a normal form at the given level."""
    field = ring.field
    if isinstance(node, Num):
        return ring.constant_nf(field.from_int(node.value), level)
    if isinstance(node, Atom):
        if node.name == "t":
            return ring.nf(
                TruncatedSeries.t_power(field, 1, level),
                TruncatedSeries.zero(field, level),
            )
        return ring.w_nf(level)
    if isinstance(node, Gen):
        return ring.generator_nf(node.index, level)
    if isinstance(node, Neg):
        return -eval_nf(node.arg, ring, level)
    if isinstance(node, Pow):
        out = ring.one_nf(level)
        base = eval_nf(node.base, ring, level)
        for _ in range(node.exponent):
            out = out * base
        return out
    if isinstance(node, BinOp):
        left = eval_nf(node.left, ring, level)
        right = eval_nf(node.right, ring, level)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left * right.invert()
    raise TypeError(f"not an expression node: {node!r}")


def eval_series(node, ring: AkizukiRing, level: int) -> TruncatedSeries:
    """Evaluate an AST directly in the completed DVR, mod t^level."""
    field = ring.field
    if isinstance(node, Num):
        return TruncatedSeries.constant(field, field.from_int(node.value), level)
    if isinstance(node, Atom):
        if node.name == "t":
            return TruncatedSeries.t_power(field, 1, level)
        return ring.w.truncate(level)
    if isinstance(node, Gen):
        return ring.generator_series(node.index, level)
    if isinstance(node, Neg):
        return -eval_series(node.arg, ring, level)
    if isinstance(node, Pow):
        out = TruncatedSeries.one(field, level)
        base = eval_series(node.base, ring, level)
        for _ in range(node.exponent):
            out = out * base
        return out
    if isinstance(node, BinOp):
        left = eval_series(node.left, ring, level)
        right = eval_series(node.right, ring, level)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left * right.invert()
    raise TypeError(f"not an expression node: {node!r}")
