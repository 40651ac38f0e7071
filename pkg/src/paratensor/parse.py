"""Text grammar for scalars, maps and k-differentials.

::

    expr    = term { ("+" | "-") term } ;
    term    = unary { ("*" | "/") unary } ;
    unary   = ("+" | "-") unary | power ;
    power   = atom [ "^" [ "-" ] integer ] ;
    atom    = integer | "z" | "i" | "w" | "s" | "(" expr ")" ;
    diff    = [ expr ] "dz" [ "^" integer ] ;

``i``, ``w`` and ``s`` denote the generator of the declared field
(Q(i), Q(w) with w^2+w+1=0, Q(sqrt -D)); using one in any other field is
a :class:`ParseError`.  Whitespace is ignored.
"""

from __future__ import annotations

import re

from .algebra import Field, Poly, Q, RationalFunction, Scalar

__all__ = ["ParseError", "parse_scalar", "parse_rational", "parse_differential_parts"]


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(.))")


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        pos = m.end()
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok and not tok.isspace():
            out.append(tok)
    return out


class _Parser:
    def __init__(self, text: str, field: Field, allow_z: bool):
        self.toks = _tokenize(text)
        self.pos = 0
        self.field = field
        self.allow_z = allow_z
        self.text = text

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r} in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> RationalFunction:
        if not self.toks:
            raise ParseError("empty expression")
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"unexpected token {self.peek()!r} in {self.text!r}")
        return value

    def expr(self) -> RationalFunction:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError(f"division by zero in {self.text!r}")
                value = value / rhs
        return value

    def unary(self) -> RationalFunction:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"exponent must be an integer, got {tok!r}")
            n = sign * int(tok)
            if n < 0 and base.is_zero():
                raise ParseError("negative power of zero")
            return base ** n
        return base

    def atom(self) -> RationalFunction:
        tok = self.take()
        F = self.field
        if tok.isdigit():
            return RationalFunction.const(int(tok), F)
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        if tok == "z":
            if not self.allow_z:
                raise ParseError("variable z not allowed in a scalar")
            return RationalFunction.z(F)
        if tok in ("i", "w", "s"):
            if F.symbol != tok:
                raise ParseError(f"symbol {tok!r} is not a generator of {F}")
            return RationalFunction(Poly.const(F.gen(), F))
        raise ParseError(f"unexpected token {tok!r} in {self.text!r}")


def parse_rational(text: str, field: Field = Q) -> RationalFunction:
    """Parse a rational function of z."""
    return _Parser(text, field, allow_z=True).parse()


def parse_scalar(text: str, field: Field = Q) -> Scalar:
    value = _Parser(text, field, allow_z=False).parse()
    return value.num.coeff(0)


_DIFF = re.compile(r"^(?P<r>.*?)\s*dz\s*(?:\^\s*(?P<k>\d+))?\s*$", re.S)


def parse_differential_parts(text: str, field: Field = Q) -> tuple[RationalFunction, int]:
    """Split ``"<rational function> dz^<k>"`` into (R, k)."""
    m = _DIFF.match(text)
    if m is None:
        raise ParseError(f"differential must end in dz or dz^k: {text!r}")
    body = m.group("r").strip()
    k = int(m.group("k")) if m.group("k") else 1
    if k < 1:
        raise ParseError("k must be at least 1")
    if body.endswith("*"):
        body = body[:-1].strip()
    R = parse_rational(body, field) if body else RationalFunction.const(1, field)
    return R, k
