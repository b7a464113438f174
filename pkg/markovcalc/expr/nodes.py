"""AST for endpoint expressions and branch predicates.

Nodes are frozen dataclasses. Source spans are kept for error messages but do
not take part in equality, so a reparsed tree compares equal to the original.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple, Union

from ..core.quadnum import QuadNum


@dataclass(frozen=True)
class Span:
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class BinaryOp(Enum):
    """Arithmetic operators with their source symbols."""
    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"

    @classmethod
    def from_symbol(cls, symbol: str) -> "BinaryOp":
        for op in cls:
            if op.value == symbol:
                return op
        raise ValueError(f"unknown operator {symbol!r}")

    @property
    def additive(self) -> bool:
        return self in (BinaryOp.ADD, BinaryOp.SUB)


class Relation(Enum):
    """Comparison operators allowed in predicates."""
    LT = "<"
    LE = "<="
    GT = ">"
    GE = ">="

    @classmethod
    def from_symbol(cls, symbol: str) -> "Relation":
        for rel in cls:
            if rel.value == symbol:
                return rel
        raise ValueError(f"unknown relation {symbol!r}")

    def holds(self, sign: int) -> bool:
        """Decide `lhs rel rhs` from the sign of lhs - rhs."""
        if self is Relation.LT:
            return sign < 0
        if self is Relation.LE:
            return sign <= 0
        if self is Relation.GT:
            return sign > 0
        return sign >= 0


# Expressions

@dataclass(frozen=True)
class Const:
    value: QuadNum
    span: Optional[Span] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Var:
    span: Optional[Span] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Optional[Span] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Abs:
    operand: "Expr"
    span: Optional[Span] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class BinOp:
    op: BinaryOp
    left: "Expr"
    right: "Expr"
    span: Optional[Span] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class MinMax:
    """min(...) or max(...) over two or more arguments."""
    is_max: bool
    args: Tuple["Expr", ...]
    span: Optional[Span] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    span: Optional[Span] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Piecewise:
    branches: Tuple[Tuple["Predicate", "Expr"], ...]
    otherwise: "Expr"
    span: Optional[Span] = field(default=None, compare=False, repr=False)


# Predicates

@dataclass(frozen=True)
class Compare:
    relation: Relation
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class IsRational:
    operand: "Expr"


@dataclass(frozen=True)
class And:
    parts: Tuple["Predicate", ...]


@dataclass(frozen=True)
class Or:
    parts: Tuple["Predicate", ...]


Expr = Union[Const, Var, Neg, Abs, BinOp, MinMax, Pow, Piecewise]
Predicate = Union[Compare, IsRational, And, Or]

T = Var()


def const(value) -> Const:
    return Const(QuadNum.coerce(value))


def substitute(expr: Expr, replacement: Expr) -> Expr:
    """Replace every occurrence of the variable by `replacement`."""
    if isinstance(expr, Var):
        return replacement
    if isinstance(expr, Const):
        return expr
    if isinstance(expr, Neg):
        return Neg(substitute(expr.operand, replacement), expr.span)
    if isinstance(expr, Abs):
        return Abs(substitute(expr.operand, replacement), expr.span)
    if isinstance(expr, BinOp):
        return BinOp(
            expr.op,
            substitute(expr.left, replacement),
            substitute(expr.right, replacement),
            expr.span,
        )
    if isinstance(expr, MinMax):
        return MinMax(expr.is_max, tuple(substitute(a, replacement) for a in expr.args), expr.span)
    if isinstance(expr, Pow):
        return Pow(substitute(expr.base, replacement), expr.exponent, expr.span)
    if isinstance(expr, Piecewise):
        return Piecewise(
            tuple(
                (substitute_predicate(p, replacement), substitute(e, replacement))
                for p, e in expr.branches
            ),
            substitute(expr.otherwise, replacement),
            expr.span,
        )
    raise TypeError(f"not an expression: {expr!r}")


def substitute_predicate(pred: Predicate, replacement: Expr) -> Predicate:
    if isinstance(pred, Compare):
        return Compare(
            pred.relation,
            substitute(pred.left, replacement),
            substitute(pred.right, replacement),
        )
    if isinstance(pred, IsRational):
        return IsRational(substitute(pred.operand, replacement))
    if isinstance(pred, And):
        return And(tuple(substitute_predicate(p, replacement) for p in pred.parts))
    if isinstance(pred, Or):
        return Or(tuple(substitute_predicate(p, replacement) for p in pred.parts))
    raise TypeError(f"not a predicate: {pred!r}")
