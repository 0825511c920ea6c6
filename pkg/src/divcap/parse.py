"""Text grammar for polynomials, factored elements and rational functions.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := unary (('*' | '/' | <juxtaposition>) unary)*
    unary  := '-' unary | power
    power  := atom ['^' ['-'] INT]
    atom   := INT | IDENT | '(' expr ')'

Identifiers not in the variable context are split into a concatenation of
context variables when that split is unique, so ``x^2yz`` and ``xrho`` both
read as products. Products and quotients keep their factor structure; a sum
becomes a single factor after pulling out content and variable powers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ParseError
from .factored import FactoredElement, FracElement, from_poly
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    text_len = len(text)
    while pos < text_len:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", m.group(1), start))
        elif m.group(2):
            out.append(("ident", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            out.append(("op", op, start))
        pos = m.end()
    out.append(("end", "", text_len))
    return out


def split_identifier(word: str, vars: Sequence[str]) -> list[str] | None:
    """Unique way to write ``word`` as a concatenation of context variables, else None."""
    vars = tuple(vars)

    @lru_cache(maxsize=None)
    def ways(i: int) -> tuple[tuple[str, ...], ...]:
        if i == len(word):
            return ((),)
        found: list[tuple[str, ...]] = []
        for v in vars:
            if word.startswith(v, i):
                for rest in ways(i + len(v)):
                    found.append((v,) + rest)
                    if len(found) > 1:
                        return tuple(found)
        return tuple(found)

    options = ways(0)
    return list(options[0]) if len(options) == 1 else None


class _Parser:
    def __init__(self, text: str, vars: Sequence[str]):
        self.text = text
        self.vars = tuple(vars)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok=None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(message, self.text, tok[2])

    def expect(self, op: str) -> None:
        kind, val, _ = self.peek()
        if kind != "op" or val != op:
            raise self.error(f"expected {op!r}")
        self.take()

    # values are FracElement; sums force polynomial operands

    def parse(self) -> FracElement:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            raise self.error("unexpected trailing input")
        return value

    def expr(self) -> FracElement:
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        acc = self.term()
        if negate:
            acc = -acc
        poly: Poly | None = None
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op_tok = self.take()
            start = self.peek()
            rhs = self.term()
            if poly is None:
                poly = self._as_poly(acc, op_tok)
            rhs_poly = self._as_poly(rhs, start)
            poly = poly + rhs_poly if op_tok[1] == "+" else poly - rhs_poly
        if poly is None:
            return acc
        if poly.is_zero():
            raise self.error("expression evaluates to zero", op_tok)
        return from_poly(poly)

    def _as_poly(self, value: FracElement, tok) -> Poly:
        if not value.is_polynomial():
            raise self.error("sums of non-polynomial fractions are not supported", tok)
        return value.expand()

    def _starts_atom(self) -> bool:
        kind, val, _ = self.peek()
        return kind in ("int", "ident") or (kind == "op" and val == "(")

    def term(self) -> FracElement:
        acc = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                acc = acc * rhs if val == "*" else acc / rhs
            elif self._starts_atom():
                acc = acc * self.unary()
            else:
                return acc

    def unary(self) -> FracElement:
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> FracElement:
        prefix = None
        kind, val, _ = self.peek()
        if kind == "ident" and val not in self.vars:
            # in a split identifier the exponent binds to the last variable only
            tok = self.take()
            parts = split_identifier(val, self.vars)
            if parts is None:
                raise self.error(f"unknown variable {val!r} (context {', '.join(self.vars)})", tok)
            prefix = FracElement.one(self.vars)
            for v in parts[:-1]:
                prefix = prefix * FracElement.variable(self.vars, v)
            base = FracElement.variable(self.vars, parts[-1])
        else:
            base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            if self.peek()[:2] == ("op", "-"):
                self.take()
                sign = -1
            kind, val, _ = self.peek()
            if kind != "int":
                raise self.error("exponent must be an integer literal")
            self.take()
            base = base ** (sign * int(val))
        return base if prefix is None else prefix * base

    def atom(self) -> FracElement:
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            n = int(val)
            if n == 0:
                raise self.error("zero is not a valid factor", tok)
            return FracElement.one(self.vars) * n
        if kind == "ident":
            return FracElement.variable(self.vars, val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise self.error("expected a number, variable or '('", tok)


def parse_frac(text: str, vars: Sequence[str]) -> FracElement:
    """Parse a nonzero rational function."""
    return _Parser(text, vars).parse()


def parse_element(text: str, vars: Sequence[str]) -> FactoredElement:
    """Parse a nonzero ring element in factored form (``unit * (poly)^e * ...``)."""
    value = parse_frac(text, vars)
    if not value.is_polynomial():
        raise ParseError(f"{text!r} is not a polynomial (negative exponents)", text, None)
    return value.as_factored()


def parse_poly(text: str, vars: Sequence[str]) -> Poly:
    """Parse a polynomial; ``0`` is accepted."""
    if text.strip() == "0":
        return Poly.zero(vars)
    return parse_element(text, vars).expand()


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}", text, 0) from None
