"""Text grammar for spinor polynomials and operator words.

Spinor syntax: terms joined by ``+``/``-``, coefficients written as ``a``,
``a/b``, ``ci`` or ``(a/b+c/d i)``, variables ``x1..x{2n}`` and
``q1..q{n}``, exponents with ``^``, juxtaposition with ``*``.  Example:
``(1/2+1/2i)*x1^2*q3 - i*x4``.

Operator words: whitespace-separated tokens ``Ds``, ``Xs``, ``Es``,
``cl(l)``, ``mp(X|Y|Z,j,k)``, composed left over right (the rightmost
token acts first).
"""

from __future__ import annotations

import re

from .rational import GaussianRational, rational
from .poly import SpinorPoly
from . import operators


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([xq]\d+)|(i)|([-+*^/()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip():
                raise ParseError("unexpected character %r" % text[pos], pos)
            break
        num, var, imag, punct = m.groups()
        start = m.end() - len((num or var or imag or punct))
        if num is not None:
            tokens.append(("num", int(num), start))
        elif var is not None:
            tokens.append(("var", var, start))
        elif imag is not None:
            tokens.append(("i", "i", start))
        else:
            tokens.append((punct, punct, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _SpinorParser:
    def __init__(self, text, rank):
        self.text = text
        self.rank = rank
        self.tokens = _tokenize(text)
        self.at = 0

    def peek(self):
        return self.tokens[self.at]

    def take(self, kind=None):
        tok = self.tokens[self.at]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %r, found %r" % (kind, tok[1]), tok[2])
        self.at += 1
        return tok

    def parse(self):
        result = self.expression()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("trailing input %r" % tok[1], tok[2])
        return result

    def expression(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        total = self.term().scale(GaussianRational(sign))
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            nxt = self.term()
            total = total + (nxt if op == "+" else -nxt)
        return total

    def term(self):
        product = self.factor()
        while self.peek()[0] == "*":
            self.take()
            product = product * self.factor()
        return product

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "(":
            self.take()
            coeff = self.coefficient_body()
            self.take(")")
            return SpinorPoly.constant(self.rank, coeff)
        if kind in ("num", "i"):
            return SpinorPoly.constant(self.rank, self.number_coefficient())
        if kind == "var":
            self.take()
            letter, index = value[0], int(value[1:])
            limit = 2 * self.rank if letter == "x" else self.rank
            if not 1 <= index <= limit:
                raise ParseError("variable %s exceeds rank %d (index %d)"
                                 % (value, self.rank, index), pos)
            base = (SpinorPoly.x(index, self.rank) if letter == "x"
                    else SpinorPoly.q(index, self.rank))
            if self.peek()[0] == "^":
                self.take()
                exp_tok = self.take("num")
                power = SpinorPoly.one(self.rank)
                for _ in range(exp_tok[1]):
                    power = power * base
                return power
            return base
        raise ParseError("expected a coefficient or variable, found %r"
                         % (value,), pos)

    def number_coefficient(self):
        """``a``, ``a/b``, optionally followed by ``i``, or bare ``i``."""
        kind, value, pos = self.take()
        if kind == "i":
            return GaussianRational(0, 1)
        if kind != "num":
            raise ParseError("expected a number, found %r" % (value,), pos)
        num = value
        den = 1
        if self.peek()[0] == "/":
            self.take()
            den_tok = self.take("num")
            if den_tok[1] == 0:
                raise ParseError("zero denominator", den_tok[2])
            den = den_tok[1]
        if self.peek()[0] == "i":
            self.take()
            return GaussianRational(0, rational(num, den))
        return GaussianRational(rational(num, den))

    def coefficient_body(self):
        """Signed component sum inside parentheses, e.g. ``1/2+1/2i``."""
        total = GaussianRational(0)
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            comp = self.number_coefficient()
            total = total + comp * GaussianRational(sign)
            if self.peek()[0] in ("+", "-"):
                sign = -1 if self.take()[0] == "-" else 1
                continue
            return total


def parse_spinor(text, rank) -> SpinorPoly:
    """Parse the canonical text form of a spinor polynomial."""
    text = text.strip()
    return _SpinorParser(text, rank).parse()


_OP_TOKEN = re.compile(
    r"^(?:(Ds|Xs|Es)|cl\((\d+)\)|mp\((X|Y|Z),(\d+),(\d+)\))$")


def parse_operator(text, rank) -> operators.LinearOperator:
    """Parse a whitespace-separated operator word into one operator."""
    pieces = text.split()
    if not pieces:
        raise ParseError("empty operator word", 0)
    result = None
    for piece in pieces:
        if piece == "Ts":
            raise ParseError(
                "Ts has 2n components and cannot appear in an operator "
                "word; use the apply command with --op Ts", 0)
        m = _OP_TOKEN.match(piece)
        if m is None:
            raise ParseError("unknown operator token %r" % piece, 0)
        named, cl_index, mp_kind, mp_j, mp_k = m.groups()
        if named == "Ds":
            op = operators.ds_operator(rank)
        elif named == "Xs":
            op = operators.xs_operator(rank)
        elif named == "Es":
            op = operators.es_operator(rank)
        elif cl_index is not None:
            l = int(cl_index)
            if not 1 <= l <= 2 * rank:
                raise ParseError(
                    "clifford direction %d out of range 1..%d"
                    % (l, 2 * rank), 0)
            op = operators.clifford_operator(l, rank)
        else:
            j, k = int(mp_j), int(mp_k)
            if not (1 <= j <= rank and 1 <= k <= rank):
                raise ParseError(
                    "mp indices (%d,%d) out of range 1..%d"
                    % (j, k, rank), 0)
            op = operators.mp_generator(mp_kind, j, k, rank)
        result = op if result is None else operators.compose(result, op)
    return result
