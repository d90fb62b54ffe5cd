"""Canonical text format for polynomials, with a bit-exact round-trip.

Printing: terms sorted graded-lex descending; rationals as ``p/q``;
coefficients as ``a``, ``bi``, ``a+bi`` or ``a-bi`` (parenthesized when both
parts are nonzero and a monomial follows); monomials as ``z1^3*z2``.
Example: ``(1/2+3i)*z1^2*z2 - z3^3 + 5``.

Parsing accepts general polynomial expressions, not just the canonical shape:
sums, differences, products, parenthesized subexpressions and integer powers,
e.g. ``(z1+i*z2)^4``.  Whitespace is insignificant, ``i`` alone denotes the
imaginary unit, and multiplication may be implicit by adjacency (``3i``,
``2z1``).  ``parse(format(p)) == p`` exactly, and formatting is idempotent
after one normalization pass.
"""

from __future__ import annotations

import re as _re

from .errors import ParseError
from .poly import Polynomial
from .scalars import GaussianRational, Rational


# -- printing ---------------------------------------------------------------


def _monomial_text(exponent) -> str:
    parts = []
    for i, e in enumerate(exponent, start=1):
        if e == 1:
            parts.append(f"z{i}")
        elif e > 1:
            parts.append(f"z{i}^{e}")
    return "*".join(parts)


def _is_negative_leading(c: GaussianRational) -> bool:
    if c.re:
        return c.re < 0
    return c.im < 0


def _coefficient_text(c: GaussianRational, needs_parens: bool) -> str:
    text = str(c)
    if needs_parens and c.re and c.im:
        return f"({text})"
    return text


def format_polynomial(p: Polynomial) -> str:
    """Render in the canonical text format (graded-lex descending)."""
    if p.is_zero():
        return "0"
    chunks: list[str] = []
    for exponent, coeff in p.sorted_terms():
        negative = _is_negative_leading(coeff)
        display = -coeff if negative else coeff
        monomial = _monomial_text(exponent)
        if not monomial:
            # Mixed-sign constants keep their grouping under negation or when
            # following another term: -(2+i) must not print as -2+i.
            body = _coefficient_text(display, negative or bool(chunks))
        elif display == 1:
            body = monomial
        else:
            body = f"{_coefficient_text(display, True)}*{monomial}"
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(chunks)


def format_matrix(rows) -> str:
    """One bracketed row of canonical polynomial texts per line."""
    return "\n".join("[" + ", ".join(format_polynomial(p) for p in row) + "]" for row in rows)


def format_gaussian_list(values) -> list[str]:
    """Canonical text for each entry of a vector of Gaussian rationals."""
    return [
        str(v if isinstance(v, GaussianRational) else GaussianRational(v))
        for v in values
    ]


# -- lexing -------------------------------------------------------------------

_TOKEN_RE = _re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+)
  | (?P<var>z(?P<varindex>\d+))
  | (?P<imag>i)
  | (?P<op>[-+*/^()])
    """,
    _re.VERBOSE,
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if match.lastgroup != "ws" and match.lastgroup != "varindex":
            kind = match.lastgroup
            if kind == "var":
                index = int(match.group("varindex"))
                if index < 1:
                    raise ParseError("variable indices start at z1", pos)
                tokens.append(("var", index, pos))
            elif kind == "number":
                tokens.append(("number", int(match.group()), pos))
            elif kind == "imag":
                tokens.append(("imag", "i", pos))
            else:
                tokens.append((match.group(), match.group(), pos))
        pos = match.end()
    tokens.append(("end", None, len(text)))
    return tokens


# -- parsing ---------------------------------------------------------------


class _Parser:
    """Recursive-descent parser building Polynomial values directly."""

    def __init__(self, tokens, n: int):
        self.tokens = tokens
        self.pos = 0
        self.n = n

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str):
        token = self.advance()
        if token[0] != kind:
            raise ParseError(f"expected {kind!r}", token[2])
        return token

    def parse_expression(self) -> Polynomial:
        sign = 1
        kind, _, _ = self.peek()
        if kind in ("+", "-"):
            self.advance()
            sign = -1 if kind == "-" else 1
        result = self.parse_term()
        if sign < 0:
            result = -result
        while True:
            kind, _, _ = self.peek()
            if kind == "+":
                self.advance()
                result = result + self.parse_term()
            elif kind == "-":
                self.advance()
                result = result - self.parse_term()
            else:
                return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while True:
            kind, _, _ = self.peek()
            if kind == "*":
                self.advance()
                result = result * self.parse_factor()
            elif kind in ("number", "var", "imag", "("):
                # implicit multiplication by adjacency, e.g. "3i" or "2z1"
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> Polynomial:
        base = self.parse_primary()
        kind, _, _ = self.peek()
        if kind == "^":
            self.advance()
            token = self.advance()
            if token[0] != "number":
                raise ParseError("exponent must be a non-negative integer", token[2])
            return base ** token[1]
        return base

    def parse_primary(self) -> Polynomial:
        token = self.advance()
        kind, value, position = token
        if kind == "number":
            numerator = value
            if self.peek()[0] == "/":
                self.advance()
                den_token = self.advance()
                if den_token[0] != "number":
                    raise ParseError("expected a denominator after '/'", den_token[2])
                if den_token[1] == 0:
                    raise ParseError("zero denominator", den_token[2])
                return Polynomial.constant(
                    self.n, GaussianRational(Rational(numerator, den_token[1]))
                )
            return Polynomial.constant(self.n, numerator)
        if kind == "imag":
            return Polynomial.constant(self.n, GaussianRational(0, 1))
        if kind == "var":
            if value > self.n:
                raise ParseError(
                    f"variable z{value} exceeds the variable count {self.n}", position
                )
            return Polynomial.variable(self.n, value)
        if kind == "(":
            inner = self.parse_expression()
            closing = self.advance()
            if closing[0] != ")":
                raise ParseError("expected ')'", closing[2])
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", position)
        raise ParseError(f"unexpected {kind!r}", position)


def parse_polynomial(text: str, n: int | None = None) -> Polynomial:
    """Parse polynomial text over z1..zn.

    When ``n`` is omitted it is inferred as the largest variable index that
    appears (1 for constant input).  An explicit ``n`` must cover every
    variable mentioned.
    """
    tokens = _tokenize(text)
    if n is None:
        n = max((t[1] for t in tokens if t[0] == "var"), default=1)
    parser = _Parser(tokens, n)
    result = parser.parse_expression()
    trailing = parser.peek()
    if trailing[0] != "end":
        raise ParseError(f"unexpected {trailing[0]!r}", trailing[2])
    return result


def parse_gaussian(text: str) -> GaussianRational:
    """Parse a bare Gaussian-rational literal such as ``1/2+3i`` or ``-i``."""
    p = parse_polynomial(text, n=1)
    if not p.is_constant():
        raise ParseError("expected a constant, found a variable", 0)
    return p.constant_term()


def scan_variable_count(text: str) -> int:
    """Largest variable index mentioned in ``text`` (at least 1); parses nothing else."""
    return max((t[1] for t in _tokenize(text) if t[0] == "var"), default=1)


__all__ = [
    "format_polynomial",
    "format_matrix",
    "format_gaussian_list",
    "parse_polynomial",
    "parse_gaussian",
    "scan_variable_count",
    "ParseError",
]
