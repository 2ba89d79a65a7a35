"""Parser and evaluator for physical-quantity expressions.

Grammar (whitespace is insignificant between tokens)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := unary ('^' int)?
    unary  := '-' unary | atom
    atom   := number (symbol ('^' int)?)? | symbol | '(' expr ')'
    int    := '-'? digits

A symbol is a named constant (``c``, ``hbar``, ``G``, ``kB``) or a unit with
an optional SI prefix (``fs``, ``GW``, ``uJ``). A number directly followed by
one symbol multiplies it, so ``10 fs`` is ten femtoseconds and ``3 m^2`` is
three square metres. All binary operators are left associative; ``^`` binds
tighter than ``*``/``/``, which bind tighter than ``+``/``-``, and unary minus
binds tighter than any binary operator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import quantity as q
from .constants import PhysicalConstants, constants
from .quantity import Quantity, QuantityError, UnitTable, default_units

CONSTANT_NAMES = {"c": "c", "hbar": "hbar", "G": "G", "kB": "k_B"}


class ParseError(ValueError):
    """Syntax error; ``offset`` is the character index of the offending token."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class LexError(ParseError):
    """Unknown character or symbol."""


class EvalError(QuantityError):
    """Arithmetic failure while evaluating; ``span`` locates the subexpression."""

    def __init__(self, message: str, span: tuple[int, int], source: str = ""):
        where = f" in {source[span[0]:span[1]]!r}" if source else ""
        super().__init__(f"{message}{where} (offsets {span[0]}-{span[1]})")
        self.message = message
        self.span = span
        self.source = source


class EvalDimensionError(EvalError, q.DimensionError):
    pass


# --- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float
    span: tuple[int, int]

    def __str__(self):
        return f"{self.value:g}"


@dataclass(frozen=True)
class Sym:
    """Unit symbol or named constant."""

    name: str
    is_constant: bool
    span: tuple[int, int]

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    span: tuple[int, int]

    def __str__(self):
        return f"(-{self.operand})"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    span: tuple[int, int]

    def __str__(self):
        # Juxtaposition prints as a middle dot to tell it apart from an explicit '*'.
        sep = "·" if self.op == "juxt" else f" {self.op} "
        return f"({self.left}{sep}{self.right})"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int
    span: tuple[int, int]

    def __str__(self):
        return f"({self.base}^{self.exponent})"


Node = Union[Num, Sym, Neg, BinOp, Pow]


@dataclass(frozen=True)
class QuantityExpr:
    text: str
    root: Node

    def __str__(self):
        return str(self.root)

    def evaluate(self, consts: PhysicalConstants | None = None, units: UnitTable | None = None) -> Quantity:
        return evaluate(self, consts, units)


# --- lexer -------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-zµμ]+)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # 'num', 'ident', 'op', 'end'
    text: str
    start: int

    @property
    def end(self) -> int:
        return self.start + len(self.text)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise LexError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# --- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, units: UnitTable):
        self.text = text
        self.units = units
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, *ops: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def unexpected(self, expected: str = "") -> ParseError:
        t = self.tok
        what = "end of input" if t.kind == "end" else f"token {t.text!r}"
        msg = f"unexpected {what}" + (f", expected {expected}" if expected else "")
        return ParseError(msg, t.start)

    def parse(self) -> QuantityExpr:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        root = self.expr()
        if self.tok.kind != "end":
            raise self.unexpected("operator")
        return QuantityExpr(self.text, root)

    def expr(self) -> Node:
        node = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            right = self.term()
            node = BinOp(op, node, right, (node.span[0], right.span[1]))
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.at_op("*", "/"):
            op = self.advance().text
            right = self.factor()
            node = BinOp(op, node, right, (node.span[0], right.span[1]))
        return node

    def factor(self) -> Node:
        node = self.unary()
        if self.at_op("^"):
            self.advance()
            exp, end = self.integer()
            node = Pow(node, exp, (node.span[0], end))
        return node

    def integer(self) -> tuple[int, int]:
        start = self.tok.start
        sign = 1
        if self.at_op("-"):
            self.advance()
            sign = -1
        t = self.tok
        if t.kind != "num" or not t.text.isdigit():
            raise ParseError("exponent must be an integer literal", t.start if t.kind != "end" else start)
        self.advance()
        return sign * int(t.text), t.end

    def unary(self) -> Node:
        if self.at_op("-"):
            start = self.advance().start
            operand = self.unary()
            return Neg(operand, (start, operand.span[1]))
        return self.atom()

    def symbol(self) -> Sym:
        t = self.advance()
        if t.text in CONSTANT_NAMES:
            return Sym(t.text, True, (t.start, t.end))
        if t.text in self.units:
            return Sym(t.text, False, (t.start, t.end))
        raise LexError(f"unknown symbol {t.text!r}", t.start)

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "num":
            self.advance()
            num = Num(float(t.text), (t.start, t.end))
            if self.tok.kind != "ident":
                return num
            sym: Node = self.symbol()
            if self.at_op("^"):
                self.advance()
                exp, end = self.integer()
                sym = Pow(sym, exp, (sym.span[0], end))
            return BinOp("juxt", num, sym, (num.span[0], sym.span[1]))
        if t.kind == "ident":
            return self.symbol()
        if self.at_op("("):
            self.advance()
            inner = self.expr()
            if not self.at_op(")"):
                raise self.unexpected("')'")
            close = self.advance()
            # Keep the inner node but widen its span to include the parentheses.
            return _with_span(inner, (t.start, close.end))
        raise self.unexpected("number, unit, constant or '('")


def _with_span(node: Node, span: tuple[int, int]) -> Node:
    return type(node)(**{**node.__dict__, "span": span})


def parse(text: str, units: UnitTable | None = None) -> QuantityExpr:
    """Parse ``text`` into a :class:`QuantityExpr`. Raises :class:`ParseError`."""
    return _Parser(text, units or default_units()).parse()


# --- evaluation --------------------------------------------------------------

_BINOPS = {"+": q.add, "-": q.sub, "*": q.mul, "juxt": q.mul, "/": q.div}


def _eval(node: Node, consts: PhysicalConstants, units: UnitTable, source: str) -> Quantity:
    try:
        if isinstance(node, Num):
            return Quantity(node.value)
        if isinstance(node, Sym):
            if node.is_constant:
                return getattr(consts, CONSTANT_NAMES[node.name])
            return units[node.name]
        if isinstance(node, Neg):
            return -_eval(node.operand, consts, units, source)
        if isinstance(node, Pow):
            return q.pow_int(_eval(node.base, consts, units, source), node.exponent)
        left = _eval(node.left, consts, units, source)
        right = _eval(node.right, consts, units, source)
        return _BINOPS[node.op](left, right)
    except EvalError:
        raise
    except q.DimensionError as exc:
        raise EvalDimensionError(str(exc), node.span, source) from exc
    except QuantityError as exc:
        raise EvalError(str(exc), node.span, source) from exc


def evaluate(
    expr: QuantityExpr | str,
    consts: PhysicalConstants | None = None,
    units: UnitTable | None = None,
) -> Quantity:
    """Evaluate a parsed expression (or parse and evaluate a string)."""
    units = units or default_units()
    if isinstance(expr, str):
        expr = parse(expr, units)
    return _eval(expr.root, consts or constants(), units, expr.text)


def quantity(text: str) -> Quantity:
    """Shorthand: ``quantity("10 fs")``."""
    return evaluate(text)
