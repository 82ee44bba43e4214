"""Recursive-descent parser for polynomial expressions.

Grammar: integer literals, declared variable names, + - * ^ and parentheses.
Implicit multiplication is rejected ("2x" is an error, "2*x" is fine).
Exponents must be nonnegative integer literals; Laurent inverses are handled
upstream by paired variables, never by negative exponents here.  A rational
literal p/q is accepted as a coefficient so characteristic-0 action data
(e.g. z^2/2 terms of an exponentiated derivation) can be written down; over
ZZ a non-integral literal is an error.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .poly import MultiPoly, PolyRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()/]))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            raise ParseError("unexpected character %r at position %d" % (text[pos], pos))
        if m.group(1) is not None:
            out.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            out.append(("name", m.group(2)))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    def __init__(self, tokens, ring: PolyRing):
        self.toks = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError("expected %r" % op)

    def parse_expr(self) -> MultiPoly:
        kind, val = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        acc = self.parse_term()
        if negate:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.parse_term()
                acc = acc - rhs if val == "-" else acc + rhs
            else:
                return acc

    def parse_term(self) -> MultiPoly:
        acc = self.parse_factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.parse_factor()
            elif kind == "op" and val == "/":
                self.take()
                acc = self._divide(acc, self.parse_factor())
            elif kind in ("int", "name") or (kind == "op" and val == "("):
                raise ParseError("implicit multiplication is not allowed")
            else:
                return acc

    def _divide(self, num: MultiPoly, den: MultiPoly) -> MultiPoly:
        if not den.is_const() or not num.is_const():
            raise ParseError("'/' is only allowed between integer literals")
        dval = den.const_value()
        nval = num.const_value()
        dom = self.ring.domain
        try:
            c = dom.from_fraction(int(nval), int(dval))
        except (AttributeError, TypeError):
            raise ParseError("rational literal unsupported over %s" % dom.name)
        except ZeroDivisionError:
            raise ParseError("division by zero literal")
        return self.ring.const(c)

    def parse_factor(self) -> MultiPoly:
        base = self.parse_atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            e = self.parse_exponent()
            return base ** e
        return base

    def parse_exponent(self) -> int:
        kind, val = self.peek()
        if kind == "int":
            self.take()
            return val
        if kind == "op" and val == "(":
            self.take()
            sign = 1
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                if val == "-":
                    sign = -1
            kind, val = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer literal")
            self.expect_op(")")
            e = sign * val
            if e < 0:
                raise ParseError("negative exponent %d (use paired inverse variables)" % e)
            return e
        raise ParseError("exponent must be a nonnegative integer")

    def parse_atom(self) -> MultiPoly:
        kind, val = self.take()
        if kind == "int":
            return self.ring.from_int(val)
        if kind == "name":
            return self.ring.var(self.ring.index(val))
        if kind == "op" and val == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if kind == "op" and val == "-":
            return -self.parse_factor()
        raise ParseError("unexpected token %r" % (val,))


def parse_poly(text: str, ring: PolyRing) -> MultiPoly:
    """Parse an expression over the given ring; raises ParseError on bad input."""
    parser = _Parser(_tokenize(text), ring)
    result = parser.parse_expr()
    kind, _ = parser.peek()
    if kind != "end":
        raise ParseError("trailing input after expression")
    return result
