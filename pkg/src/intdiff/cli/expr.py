"""Expression trees, a recursive-descent parser and a printer.

Grammar (lowest to highest precedence)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := primary ('^' unary)?          right-associative
    primary := number | name | name '(' expr ')' | '(' expr ')'

so ``-x^2`` is ``-(x^2)`` and ``2^-1`` is ``2^(-1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

FUNCTIONS = ("sin", "cos", "exp", "sinc", "log", "sqrt", "abs")
VARIABLES = ("x", "t", "y")
CONSTANTS = ("i", "pi")


class ExprSyntaxError(ValueError):
    """Parse failure at a byte offset into the input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object

    def __post_init__(self):
        if self.op not in "+-*/^" or len(self.op) != 1:
            raise ValueError(f"unknown operator {self.op!r}")


@dataclass(frozen=True)
class Call:
    fn: str
    arg: object

    def __post_init__(self):
        if self.fn not in FUNCTIONS:
            raise ValueError(f"unknown function {self.fn!r}")


def Add(a, b):
    return BinOp("+", a, b)


def Sub(a, b):
    return BinOp("-", a, b)


def Mul(a, b):
    return BinOp("*", a, b)


def Div(a, b):
    return BinOp("/", a, b)


def Pow_(a, b):
    return BinOp("^", a, b)


_TOKEN = re.compile(rb"\s*(?:(?P<num>\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
                    rb"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str):
    data = text.encode("utf-8")
    pos = 0
    out = []
    while pos < len(data):
        if data[pos:].strip() == b"":
            break
        m = _TOKEN.match(data, pos)
        if not m or m.end() == pos:
            start = pos + (len(data[pos:]) - len(data[pos:].lstrip()))
            raise ExprSyntaxError(f"unexpected character {data[start:start + 1].decode(errors='replace')!r}", start)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind).decode(), start))
        pos = m.end()
    out.append(("end", "", len(data)))
    return out


class _Parser:
    def __init__(self, text: str, names):
        self.toks = _tokenize(text)
        self.i = 0
        self.names = set(names)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, off = self.peek()
        if val != value or kind != "op":
            found = "end of input" if kind == "end" else repr(val)
            raise ExprSyntaxError(f"expected {value!r}, found {found}", off)
        self.take()

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in ("-", "+"):
            self.take()
            arg = self.unary()
            return Neg(arg) if val == "-" else arg
        return self.power()

    def power(self):
        base = self.primary()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            return BinOp("^", base, self.unary())
        return base

    def primary(self):
        kind, val, off = self.take()
        if kind == "num":
            return Num(Fraction(val))
        if kind == "name":
            if val in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(val, arg)
            if val not in self.names:
                raise ExprSyntaxError(f"unknown identifier {val!r}", off)
            return Sym(val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(f"expected an expression, found {found}", off)


def parse_expression(text: str, params=()) -> object:
    """Parse ``text``; identifiers are variables, ``i``, ``pi`` and the given parameter names."""
    if not text or not text.strip():
        raise ExprSyntaxError("empty expression", 0)
    p = _Parser(text, set(VARIABLES) | set(CONSTANTS) | set(params))
    node = p.expr()
    kind, val, off = p.peek()
    if kind != "end":
        raise ExprSyntaxError(f"unexpected {val!r}", off)
    return node


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4}


def to_text(e) -> str:
    """Minimal-parenthesis printer; ``parse_expression(to_text(e)) == e``."""
    return _print(e, 0)


def _print(e, ctx: int) -> str:
    if isinstance(e, Num):
        s = _num_text(e.value)
        # a non-decimal rational prints as a division, so guard it like one
        return f"({s})" if "/" in s and ctx >= 2 else s
    if isinstance(e, Sym):
        return e.name
    if isinstance(e, Call):
        return f"{e.fn}({_print(e.arg, 0)})"
    if isinstance(e, Neg):
        s = "-" + _print(e.arg, _PREC["neg"])
        return f"({s})" if ctx > _PREC["neg"] else s
    p = _PREC[e.op]
    if e.op == "^":
        s = f"{_print(e.left, p + 1)}^{_print(e.right, _PREC['neg'])}"
    else:
        # left-associative: the right operand needs strictly higher precedence
        s = f"{_print(e.left, p)}{e.op}{_print(e.right, p + 1)}"
        if e.op in "+-":
            s = f"{_print(e.left, p)} {e.op} {_print(e.right, p + 1)}"
    return f"({s})" if ctx > p else s


def _num_text(v: Fraction) -> str:
    """Integer, exact terminating decimal, or ``p/q``."""
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    d, k = v.denominator, 0
    while d % 2 == 0 or d % 5 == 0:
        d //= 2 if d % 2 == 0 else 5
        k += 1
    if d != 1:
        return f"{v.numerator}/{v.denominator}"
    digits = str(abs(v.numerator) * 10 ** k // v.denominator).rjust(k + 1, "0")
    sign = "-" if v < 0 else ""
    return f"{sign}{digits[:-k]}.{digits[-k:]}".rstrip("0")


def substitute(e, values: dict):
    """Replace symbols by expressions (or numbers)."""
    if isinstance(e, Sym) and e.name in values:
        v = values[e.name]
        if not isinstance(v, (int, Fraction)):
            return v
        return Neg(Num(-Fraction(v))) if v < 0 else Num(Fraction(v))
    if isinstance(e, Neg):
        return Neg(substitute(e.arg, values))
    if isinstance(e, BinOp):
        return BinOp(e.op, substitute(e.left, values), substitute(e.right, values))
    if isinstance(e, Call):
        return Call(e.fn, substitute(e.arg, values))
    return e


def free_variables(e) -> set:
    if isinstance(e, Sym):
        return {e.name} if e.name in VARIABLES else set()
    if isinstance(e, Neg):
        return free_variables(e.arg)
    if isinstance(e, BinOp):
        return free_variables(e.left) | free_variables(e.right)
    if isinstance(e, Call):
        return free_variables(e.arg)
    return set()


def the_variable(e, default: str = "x") -> str:
    names = free_variables(e)
    if len(names) > 1:
        raise ValueError(f"expression has several variables {sorted(names)}; use one")
    return names.pop() if names else default
