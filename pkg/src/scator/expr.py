"""Single-expression scator calculator: tokenizer, parser, printer, evaluator.

Grammar::

    expr    := term ('+' term)*
    term    := atom ('*' atom)*
    atom    := literal | '(' expr ')' | NAME '(' args ')'
    literal := '(' num ';' num ',' num [',' num] ')'
    num     := ['-'] NUMBER            # 3, 0.25, 1e-3, 7/2

Functions: conj, dual, idual, edual, inv, norm2, classify (one scator),
dot, kappa (two scators), scale(num, expr).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import core, embedding, metric, scator3d as s3
from .core import Causality, Scator
from .dualities import DualityKind, dual
from .numeric import Number, ScatorError, Tolerance, format_number


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected: frozenset[str] = frozenset()):
        detail = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at offset {position}{detail}")
        self.position = position
        self.expected = expected


class EvalError(ScatorError):
    """Ill-typed expression, e.g. a number where a scator is needed."""


# ---- AST ------------------------------------------------------------------

@dataclass(frozen=True)
class Lit:
    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Conj:
    arg: "Expr"


@dataclass(frozen=True)
class Dual:
    arg: "Expr"
    kind: DualityKind = DualityKind.Ordinary


@dataclass(frozen=True)
class Inv:
    arg: "Expr"


@dataclass(frozen=True)
class Norm2:
    arg: "Expr"


@dataclass(frozen=True)
class Dot:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Kappa:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Classify:
    arg: "Expr"


@dataclass(frozen=True)
class Scale:
    factor: Fraction
    arg: "Expr"


Expr = Union[Lit, Mul, Add, Conj, Dual, Inv, Norm2, Dot, Kappa, Classify, Scale]

UNARY = {
    "conj": Conj,
    "inv": Inv,
    "norm2": Norm2,
    "classify": Classify,
}
DUALS = {
    "dual": DualityKind.Ordinary,
    "idual": DualityKind.Internal,
    "edual": DualityKind.External,
}
BINARY = {"dot": Dot, "kappa": Kappa}
FUNCTIONS = frozenset(UNARY) | frozenset(DUALS) | frozenset(BINARY) | {"scale"}


# ---- tokenizer ------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[();,*+\-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "number", "name", an operator character, or "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "op":
            tokens.append(Token(m.group(), m.group(), pos))
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def _parse_number(text: str, pos: int) -> Fraction:
    num, _, den = text.partition("/")
    value = Fraction(num)
    if den:
        if int(den) == 0:
            raise ParseError("zero denominator", pos)
        value /= int(den)
    return value


# ---- parser ---------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, *kinds: str) -> Token:
        if self.tok.kind not in kinds:
            found = "end of input" if self.tok.kind == "end" else repr(self.tok.text)
            raise ParseError(f"unexpected {found}", self.tok.pos, frozenset(kinds))
        return self.advance()

    def parse(self) -> Expr:
        e = self.expr()
        self.expect("end")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.tok.kind == "+":
            self.advance()
            e = Add(e, self.term())
        return e

    def term(self) -> Expr:
        e = self.atom()
        while self.tok.kind == "*":
            self.advance()
            e = Mul(e, self.atom())
        return e

    def number(self) -> Fraction:
        neg = False
        if self.tok.kind == "-":
            self.advance()
            neg = True
        tok = self.expect("number")
        value = _parse_number(tok.text, tok.pos)
        return -value if neg else value

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "(":
            nxt = self.tokens[self.i + 1]
            if nxt.kind in ("number", "-"):
                return self.literal()
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if tok.kind == "name":
            return self.call()
        self.expect("(", "name")
        raise AssertionError("unreachable")

    def literal(self) -> Lit:
        self.expect("(")
        values = [self.number()]
        self.expect(";")
        values.append(self.number())
        self.expect(",")
        values.append(self.number())
        if self.tok.kind == ",":
            self.advance()
            values.append(self.number())
            self.expect(")")
        else:
            self.expect(",", ")")
        return Lit(tuple(values))

    def call(self) -> Expr:
        tok = self.advance()
        name = tok.text
        if name not in FUNCTIONS:
            raise ParseError(f"unknown function {name!r}", tok.pos, FUNCTIONS)
        self.expect("(")
        if name == "scale":
            factor = self.number()
            self.expect(",")
            node: Expr = Scale(factor, self.expr())
        elif name in BINARY:
            left = self.expr()
            self.expect(",")
            node = BINARY[name](left, self.expr())
        elif name in DUALS:
            node = Dual(self.expr(), DUALS[name])
        else:
            node = UNARY[name](self.expr())
        self.expect(")")
        return node


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# ---- printer --------------------------------------------------------------

_DUAL_NAMES = {kind: name for name, kind in DUALS.items()}
_UNARY_NAMES = {cls: name for name, cls in UNARY.items()}
_BINARY_NAMES = {cls: name for name, cls in BINARY.items()}


def to_text(e: Expr) -> str:
    """Canonical source text; ``parse(to_text(e)) == e``."""
    if isinstance(e, Lit):
        first, *rest = (format_number(v) for v in e.values)
        return f"({first}; {', '.join(rest)})"
    if isinstance(e, Add):
        right = to_text(e.right)
        if isinstance(e.right, Add):
            right = f"({right})"
        return f"{to_text(e.left)} + {right}"
    if isinstance(e, Mul):
        left, right = to_text(e.left), to_text(e.right)
        if isinstance(e.left, Add):
            left = f"({left})"
        if isinstance(e.right, (Add, Mul)):
            right = f"({right})"
        return f"{left} * {right}"
    if isinstance(e, Dual):
        return f"{_DUAL_NAMES[e.kind]}({to_text(e.arg)})"
    if isinstance(e, Scale):
        return f"scale({format_number(e.factor)}, {to_text(e.arg)})"
    if type(e) in _BINARY_NAMES:
        return f"{_BINARY_NAMES[type(e)]}({to_text(e.left)}, {to_text(e.right)})"
    return f"{_UNARY_NAMES[type(e)]}({to_text(e.arg)})"


# ---- evaluator ------------------------------------------------------------

Value = Union[Scator, s3.Scator3, Number, Causality]


def evaluate(e: Expr, exact: bool = True, tol: Tolerance | None = None) -> Value:
    """Evaluate ``e`` with exact rationals or floats.

    Algebraic failures are re-raised with the offending subexpression
    attached as ``exc.expr`` and appended to the message.
    """
    return _eval(e, exact, tol)


def _scator_arg(e: Expr, exact: bool, tol) -> Scator | s3.Scator3:
    v = _eval(e, exact, tol)
    if not isinstance(v, (Scator, s3.Scator3)):
        raise EvalError(f"{to_text(e)} is not a scator", e)
    return v


def _same_shape(node: Expr, *xs) -> None:
    if len({type(x) for x in xs}) > 1:
        raise EvalError(f"cannot mix 1+2 and 1+3 scators in {to_text(node)}", node)


def _only_2d(node: Expr, x) -> Scator:
    if isinstance(x, s3.Scator3):
        raise EvalError(f"{to_text(node)} is only defined for 1+2 scators", node)
    return x


def _eval(e: Expr, exact: bool, tol) -> Value:
    try:
        return _eval_node(e, exact, tol)
    except ScatorError as exc:
        if isinstance(exc.expr, (Lit, Mul, Add, Conj, Dual, Inv, Norm2, Dot, Kappa, Classify, Scale)):
            raise
        raise type(exc)(f"{exc} (in {to_text(e)})", e) from exc


def _eval_node(e: Expr, exact: bool, tol) -> Value:
    if isinstance(e, Lit):
        values = e.values if exact else tuple(float(v) for v in e.values)
        return Scator(*values) if len(values) == 3 else s3.Scator3(*values)
    if isinstance(e, Scale):
        factor = e.factor if exact else float(e.factor)
        return factor * _scator_arg(e.arg, exact, tol)
    if isinstance(e, (Mul, Add, Dot, Kappa)):
        x = _scator_arg(e.left, exact, tol)
        y = _scator_arg(e.right, exact, tol)
        _same_shape(e, x, y)
        if isinstance(e, Add):
            return x + y
        if isinstance(e, Mul):
            if isinstance(x, s3.Scator3):
                return s3.product3(x, y, tol)
            return core.product(x, y, tol)
        if isinstance(e, Dot):
            return metric.dot(_only_2d(e, x), y, tol)
        return embedding.kappa(_only_2d(e, x), y, tol)
    x = _scator_arg(e.arg, exact, tol)
    if isinstance(e, Conj):
        return s3.conjugate3(x) if isinstance(x, s3.Scator3) else core.conjugate(x)
    if isinstance(e, Inv):
        return s3.inverse3(x, tol) if isinstance(x, s3.Scator3) else core.inverse(x, tol)
    if isinstance(e, Norm2):
        return s3.modulus_squared3(x, tol) if isinstance(x, s3.Scator3) else core.modulus_squared(x, tol)
    if isinstance(e, Dual):
        return dual(_only_2d(e, x), e.kind, tol)
    if isinstance(e, Classify):
        return core.classify(_only_2d(e, x), tol)
    raise TypeError(f"not an expression node: {e!r}")


def format_value(v: Value) -> str:
    if isinstance(v, Causality):
        return v.name
    if isinstance(v, (Scator, s3.Scator3)):
        return str(v)
    return format_number(v)
