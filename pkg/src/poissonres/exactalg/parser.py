"""Text front end for polynomials.

Grammar (whitespace insensitive, binary operators left-associative)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INT)*
    atom   := NUMBER | VAR | '(' expr ')'
    NUMBER := INT ['/' INT]
    VAR    := 'x' INT            (x1 .. x{nvars})

``^`` binds tighter than unary minus, so ``-x1^2`` is ``-(x1^2)``. A ``/``
is only legal inside a rational literal.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .polynomial import Polynomial


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.text = text


class UnknownVariableError(PolynomialSyntaxError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<var>[A-Za-z_]\w*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.text = text
        self.nvars = nvars
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return PolynomialSyntaxError(msg, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            p = p * self.unary()
        return p

    def unary(self) -> Polynomial:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        p = self.atom()
        while self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.peek()
            if tok[:2] == ("op", "-"):
                raise self.error("negative exponent")
            if tok[0] != "num" or "/" in tok[1]:
                raise self.error("exponent must be a non-negative integer literal")
            self.take()
            p = p ** int(tok[1])
        return p

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            if "/" in val:
                a, b = (int(s) for s in val.split("/"))
                if b == 0:
                    raise PolynomialSyntaxError("zero denominator", pos, self.text)
                return Polynomial.constant(self.nvars, Fraction(a, b))
            return Polynomial.constant(self.nvars, int(val))
        if kind == "var":
            m = re.fullmatch(r"x(\d+)", val)
            if not m or not 1 <= int(m.group(1)) <= self.nvars:
                raise UnknownVariableError(f"unknown variable {val!r}", pos, self.text)
            return Polynomial.var(self.nvars, int(m.group(1)))
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.peek()[:2] != ("op", ")"):
                raise self.error("expected ')'")
            self.take()
            return p
        if kind == "end":
            raise PolynomialSyntaxError("unexpected end of input", pos, self.text)
        raise PolynomialSyntaxError(f"unexpected token {val!r}", pos, self.text)


def parse_poly(text: str, nvars: int) -> Polynomial:
    """Parse ``text`` into a canonical polynomial in ``x1 .. x{nvars}``."""
    if nvars < 1:
        raise ValueError("nvars must be positive")
    return _Parser(text, nvars).parse()


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Polynomial, var: str = "x") -> str:
    """Canonical text form, terms in descending graded-lex order."""
    if p.is_zero():
        return "0"
    parts = []
    for mono, c in p.items():
        factors = []
        for i, e in enumerate(mono, start=1):
            if e == 1:
                factors.append(f"{var}{i}")
            elif e > 1:
                factors.append(f"{var}{i}^{e}")
        mag = abs(c)
        if not factors:
            body = format_rational(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([format_rational(mag)] + factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_RATIONAL = re.compile(r"\s*([-+]?\d+)(?:\s*/\s*(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals are rejected."""
    m = _RATIONAL.fullmatch(text)
    if not m:
        raise ValueError(f"not an exact rational: {text!r}")
    den = int(m.group(2) or 1)
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)
