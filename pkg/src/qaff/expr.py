"""Tokenizer and recursive-descent parser for algebraic input.

Grammar (precedence ``^`` > ``*``, ``/`` > ``+``, ``-``)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' exponent)?
    exponent:= ['-'] INT | '(' ['-'] INT ')'
    atom    := INT | NAME | '(' expr ')'

Names are ``mu``, ``U``, ``xi``, ``xis``, ``a``, ``as``, ``g``, ``gs``,
``e+`` and ``e-``.  Division is only meaningful by scalar expressions;
that is enforced by the evaluator, not the parser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

NAMES = ("mu", "U", "xi", "xis", "a", "as", "g", "gs", "e+", "e-")

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>e[+-]|xis|xi|mu|as|gs|a|g|U)|(?P<op>[-+*/^()]))"
)


_FACTOR_START = ("integer", "name", "(", "-")


class ExprSyntaxError(SyntaxError):
    """Parse failure carrying the character offset of the bad token."""

    def __init__(self, message: str, offset: int, text: str = "", expected: tuple = ()):
        super().__init__(f"{message} at offset {offset}")
        self.msg = message
        self.offset = offset
        self.text = text
        self.expected = tuple(expected)


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


Node = Union[Num, Sym, Pow, Neg, BinOp]


def tokenize(text: str) -> list[tuple[str, str, int]]:
    """Return ``(kind, value, offset)`` triples, ending with an ``end`` token."""
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastgroup)
        out.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, expected: tuple):
        kind, value, off = self.peek()
        what = "end of input" if kind == "end" else repr(value)
        raise ExprSyntaxError(f"{message}, got {what}", off, self.text, expected)

    def is_op(self, ch: str) -> bool:
        kind, value, _ = self.peek()
        return kind == "op" and value == ch

    def parse(self) -> Node:
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail("expected operator", ("+", "-", "*", "/", "^", "end"))
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.is_op("+") or self.is_op("-"):
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.is_op("*") or self.is_op("/"):
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.is_op("-"):
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.is_op("^"):
            self.take()
            return Pow(base, self.exponent())
        return base

    def exponent(self) -> int:
        paren = self.is_op("(")
        if paren:
            self.take()
        sign = 1
        if self.is_op("-"):
            self.take()
            sign = -1
        kind, value, _ = self.peek()
        if kind != "int":
            self.fail("expected integer exponent", ("integer",))
        self.take()
        if paren:
            if not self.is_op(")"):
                self.fail("expected ')'", (")",))
            self.take()
        return sign * int(value)

    def atom(self) -> Node:
        kind, value, _ = self.peek()
        if kind == "int":
            self.take()
            return Num(Fraction(int(value)))
        if kind == "name":
            self.take()
            return Sym(value)
        if kind == "op" and value == "(":
            self.take()
            node = self.expr()
            if not self.is_op(")"):
                self.fail("expected ')'", (")",))
            self.take()
            return node
        self.fail("expected a factor", _FACTOR_START)


def parse(text: str) -> Node:
    """Parse ``text`` into an AST; raises :class:`ExprSyntaxError`."""
    return _Parser(text).parse()


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_string(node: Node) -> str:
    """Print an AST so that ``parse(to_string(n)) == n``."""
    return _show(node, 0)


def _show(node: Node, ctx: int) -> str:
    if isinstance(node, Num):
        v = node.value
        s = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        if v < 0 or v.denominator != 1:
            # negative or fractional literals never come out of the parser
            return f"({s})"
        return s
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Pow):
        exp = str(node.exp) if node.exp >= 0 else f"({node.exp})"
        base = _show(node.base, 4)
        if isinstance(node.base, Pow):
            base = f"({base})"
        return f"{base}^{exp}"
    if isinstance(node, Neg):
        s = "-" + _show(node.arg, 3)
        return f"({s})" if ctx > 2 else s
    prec = _PREC[node.op]
    left = _show(node.left, prec)
    # right operand of a left-associative operator needs strictly higher binding
    right = _show(node.right, prec + 1)
    s = f"{left}{node.op}{right}"
    return f"({s})" if prec < ctx else s
