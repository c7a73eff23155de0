"""Text grammar for polynomials.

Integers, rationals ``p/q``, declared variables, the operators ``+ - * ^`` and
parentheses. ``*`` is mandatory between factors and ``^`` takes a nonnegative
integer exponent. Whitespace is ignored.
"""
import re
from typing import List, Optional, Sequence, Tuple

from ..errors import PolynomialSyntaxError, UnknownVariableError
from ..helper import format_rational
from .polycore import (Polynomial, canonical_variables, polynomial_ring, to_fraction,
                       to_qq, variable_names)

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            offset = len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[pos + offset]!r}", text, pos + offset)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:

    def __init__(self, text: str, ring):
        self.text = text
        self.ring = ring
        self.names = variable_names(ring)
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def take(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, message: str, token=None):
        token = token or self.peek()
        raise PolynomialSyntaxError(message, self.text, token[2])

    def expect_op(self, op: str):
        token = self.take()
        if token[0] != "op" or token[1] != op:
            self.fail(f"expected {op!r}", token)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty polynomial")
        result = self.expression()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return result

    def expression(self) -> Polynomial:
        result = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            if op == "*":
                result = result * self.unary()
            else:
                token = self.take()
                if token[0] != "number":
                    self.fail("only integer denominators are allowed", token)
                if int(token[1]) == 0:
                    self.fail("division by zero", token)
                result = result.quo_ground(to_qq(int(token[1])))
        return result

    def unary(self) -> Polynomial:
        token = self.peek()
        if token[0] == "op" and token[1] in "+-":
            self.take()
            operand = self.unary()
            return operand if token[1] == "+" else -operand
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            token = self.take()
            if token[0] != "number":
                self.fail("exponent must be a nonnegative integer", token)
            return base ** int(token[1])
        return base

    def atom(self) -> Polynomial:
        token = self.take()
        kind, value, _ = token
        if kind == "number":
            return self.ring.ground_new(to_qq(int(value)))
        if kind == "name":
            if value not in self.names:
                raise UnknownVariableError(
                    f"unknown variable {value!r} at position {token[2]}; expected one of {', '.join(self.names)}")
            return self.ring.gens[self.names.index(value)]
        if kind == "op" and value == "(":
            inner = self.expression()
            self.expect_op(")")
            return inner
        self.fail(f"unexpected {value!r}" if value else "unexpected end of input", token)


def parse_poly(text: str, variables: Sequence[str], canonical: bool = True) -> Polynomial:
    """Parses ``text`` into a polynomial over ``variables``.

    With ``canonical`` the variables are put in the storage order
    ``x, y, z, w, s, t, u``; otherwise the given order is kept.
    """
    names = canonical_variables(variables) if canonical else tuple(variables)
    return _Parser(text, polynomial_ring(names)).parse()


def _format_monomial(names: Sequence[str], monom: Sequence[int]) -> Optional[str]:
    factors = []
    for name, e in zip(names, monom):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else None


def format_poly(f: Polynomial) -> str:
    """Prints ``f`` in the text grammar, terms in descending ring order."""
    if not f:
        return "0"
    names = variable_names(f.ring)
    pieces = []
    for monom, coeff in f.terms():
        c = to_fraction(coeff)
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        body = _format_monomial(names, monom)
        if body is None:
            text = format_rational(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{format_rational(magnitude)}*{body}"
        pieces.append((sign, text))
    first_sign, first_text = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_text
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out
