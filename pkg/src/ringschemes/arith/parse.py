"""A small recursive-descent parser for polynomial and rational expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' '-'? INT)?
    atom   := INT | NAME | '(' expr ')'

Names: ``t3`` is parameter 3, ``x2`` is variable 2, ``x2_1`` and ``x2_1_3``
are its prolongation layers, ``w`` is the root of the field modulus.
"""
import re

from ..errors import ParseError
from .poly import MultiPoly, VarId
from .ratfunc import RatFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")
_XNAME = re.compile(r"x(\d+)((?:_\d+){0,2})$")
_TNAME = re.compile(r"t(\d+)$")


def parse_var(name):
    m = _XNAME.match(name)
    if m:
        path = tuple(int(i) for i in m.group(2).split("_")[1:]) if m.group(2) else ()
        return VarId(int(m.group(1)), path)
    m = _TNAME.match(name)
    if m:
        return VarId(-int(m.group(1)), ())
    raise ParseError(f"unknown name {name!r}")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", position=pos)
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("int", int(num), start))
        elif name is not None:
            tokens.append(("name", name, start))
        else:
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, ctx, text):
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", position=pos)

    def parse(self):
        value = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input", position=pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                value = value * rhs if val == "*" else value / rhs
            else:
                return value

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val, pos = self.peek()
            if kind == "op" and val == "-":
                self.take()
                sign = -1
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer", position=pos)
            return base.pow(sign * val)
        return base

    def atom(self):
        ctx = self.ctx
        kind, val, pos = self.take()
        if kind == "int":
            return RatFunc(MultiPoly.const(ctx, ctx.embed_int(val)))
        if kind == "name":
            if val == "w":
                if ctx.d == 1:
                    raise ParseError("'w' needs an extension field", position=pos)
                return RatFunc(MultiPoly.const(ctx, ctx.omega))
            try:
                v = parse_var(val)
            except ParseError as err:
                raise ParseError(err.message, position=pos) from None
            return RatFunc(MultiPoly.var(ctx, v))
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError("unexpected token", position=pos)


def parse_ratfunc(ctx, text):
    return _Parser(ctx, text).parse()


def parse_poly(ctx, text):
    value = parse_ratfunc(ctx, text)
    if not value.is_poly():
        raise ParseError(f"expected a polynomial, got a fraction: {text!r}")
    return value.num
