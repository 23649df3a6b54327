"""Tokenizer, LL(1) parser and printer for multivector expressions.

Grammar::

    sum     := product (("+" | "-") product)*
    product := unary (OP unary)*          # one OP per chain; mixing needs parentheses
    unary   := ("-" | "+") unary | primary
    primary := NUMBER [primary-start primary]  # "3 e1" is a scalar multiple
             | BASIS
             | FUNC "(" sum ")"
             | "grade" "(" sum "," NUMBER ")"
             | "(" sum ")"

with ``OP`` one of ``*`` (geometric), ``^`` (outer), ``.`` (inner), ``x``
(commutator) and ``&`` (join).  A number exponent needs an explicit sign
(``1e-05``), so ``2e1`` reads as ``2 e1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ExpressionSyntaxError

BASIS_SYMBOLS = ("e0", "e1", "e2", "e12", "e20", "e01", "e012", "I")
FUNCTIONS = ("exp", "rev", "inv", "norm", "dual", "undual", "normalise", "grade")
PRODUCT_OPS = ("*", "^", ".", "x", "&")
SUM_OPS = ("+", "-")

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<punct>[-+*^.&(),])"
    r")"
)


@dataclass(frozen=True)
class Token:
    kind: str  # number, name, punct, end
    text: str
    offset: int  # byte offset into the source

    @property
    def key(self) -> str:
        """What the grammar dispatches on."""
        if self.kind == "number":
            return "NUMBER"
        if self.kind == "end":
            return "end of input"
        return self.text


def tokenize(src: str) -> list:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(src, pos)
        if m is None or m.lastgroup is None:
            rest = src[pos:].lstrip()
            offset = len(src[: len(src) - len(rest)].encode())
            if not rest:
                tokens.append(Token("end", "", offset))
                return tokens
            raise ExpressionSyntaxError(offset, ("NUMBER", "name", "operator", "("), rest[0])
        start = m.start(m.lastgroup)
        tokens.append(Token(m.lastgroup, m.group(m.lastgroup), len(src[:start].encode())))
        pos = m.end()


# --- AST -----------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Basis:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Scale:
    factor: float
    operand: object


@dataclass(frozen=True)
class Call:
    name: str
    argument: object
    k: int | None = None  # only for grade


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


# --- parser --------------------------------------------------------------

_PRIMARY_START = frozenset(("NUMBER", "(") + BASIS_SYMBOLS + FUNCTIONS)
_AFTER_OPERAND = ("+", "-") + PRODUCT_OPS + (")", ",", "end of input")


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, expected):
        t = self.tok
        raise ExpressionSyntaxError(t.offset, expected, t.text)

    def expect(self, key: str) -> Token:
        if self.tok.key != key:
            self.fail((key,))
        return self.advance()

    def parse(self):
        node = self.sum()
        if self.tok.kind != "end":
            self.fail(_AFTER_OPERAND[:-3] + ("end of input",))
        return node

    def sum(self):
        node = self.product()
        while self.tok.key in SUM_OPS:
            op = self.advance().text
            node = BinOp(op, node, self.product())
        return node

    def product(self):
        node = self.unary()
        chain = None
        while self.tok.key in PRODUCT_OPS:
            if chain is not None and self.tok.key != chain:
                # a ^ b * c: ambiguous without parentheses
                self.fail((chain, "+", "-", ")", "end of input"))
            chain = self.advance().text
            node = BinOp(chain, node, self.unary())
        return node

    def unary(self):
        if self.tok.key == "-":
            self.advance()
            return Neg(self.unary())
        if self.tok.key == "+":
            self.advance()
            return self.unary()
        return self.primary()

    def primary(self):
        t = self.tok
        key = t.key
        if key == "NUMBER":
            self.advance()
            value = float(t.text)
            if self.tok.key in _PRIMARY_START and self.tok.key != "NUMBER":
                return Scale(value, self.primary())
            return Num(value)
        if key in BASIS_SYMBOLS:
            self.advance()
            return Basis(t.text)
        if key in FUNCTIONS:
            self.advance()
            self.expect("(")
            arg = self.sum()
            k = None
            if key == "grade":
                self.expect(",")
                kt = self.tok
                num = self.expect("NUMBER")
                if not re.fullmatch(r"\d+", num.text):
                    raise ExpressionSyntaxError(kt.offset, ("integer grade",), num.text)
                k = int(num.text)
            self.expect(")")
            return Call(key, arg, k)
        if key == "(":
            self.advance()
            node = self.sum()
            self.expect(")")
            return node
        self.fail(("NUMBER", "(", "-") + BASIS_SYMBOLS + FUNCTIONS)


def parse(src: str):
    """Parse expression text into an AST; raises :class:`ExpressionSyntaxError`."""
    return _Parser(src).parse()


# --- printer -------------------------------------------------------------


def format_number(value: float) -> str:
    text = repr(float(value))
    if text.endswith(".0"):
        text = text[:-2]
    if "e" in text:
        mant, exp = text.split("e")
        if exp[0] not in "+-":
            exp = "+" + exp
        text = f"{mant}e{exp}"
    return text


def to_source(node) -> str:
    """Text that parses back to ``node``."""
    if isinstance(node, Num):
        return format_number(node.value)
    if isinstance(node, Basis):
        return node.name
    if isinstance(node, Call):
        inner = to_source(node.argument)
        if node.name == "grade":
            return f"grade({inner}, {node.k})"
        return f"{node.name}({inner})"
    if isinstance(node, Scale):
        return f"{format_number(node.factor)} {_wrap_scaled(node.operand)}"
    if isinstance(node, Neg):
        operand = node.operand
        body = to_source(operand)
        if isinstance(operand, BinOp):
            body = f"({body})"
        return f"-{body}"
    if isinstance(node, BinOp):
        if node.op in SUM_OPS:
            left = to_source(node.left)
            right = _paren_if(node.right, lambda n: isinstance(n, BinOp) and n.op in SUM_OPS)
            return f"{left} {node.op} {right}"
        left = _paren_if(node.left, lambda n: isinstance(n, BinOp) and n.op != node.op)
        right = _paren_if(node.right, lambda n: isinstance(n, BinOp))
        return f"{left} {node.op} {right}"
    raise TypeError(f"not an expression node: {node!r}")


def _paren_if(node, test) -> str:
    text = to_source(node)
    return f"({text})" if test(node) else text


def _wrap_scaled(node) -> str:
    # the operand of a scale must itself start a primary and not be a bare number
    if isinstance(node, (Basis, Call)):
        return to_source(node)
    return f"({to_source(node)})"
