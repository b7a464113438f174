"""Canonical text for expression trees; `parse(to_source(e)) == e`."""

from __future__ import annotations

from fractions import Fraction

from ..core.quadnum import QuadNum
from .nodes import (
    Abs,
    And,
    BinOp,
    Compare,
    Const,
    Expr,
    IsRational,
    MinMax,
    Neg,
    Or,
    Piecewise,
    Pow,
    Predicate,
    Var,
)

# precedence levels
_ADDITIVE = 1
_MULTIPLICATIVE = 2
_FACTOR = 3
_ATOM = 4


def _rational(value: Fraction) -> str:
    return str(value)


def _const_text(value: QuadNum) -> str:
    if value.is_rational():
        return _rational(value.a)
    if value == QuadNum(0, 1):
        return "sqrt2"
    return f"quad({_rational(value.a)}, {_rational(value.b)})"


def _level(expr: Expr) -> int:
    if isinstance(expr, BinOp):
        return _ADDITIVE if expr.op.additive else _MULTIPLICATIVE
    if isinstance(expr, Neg):
        return _FACTOR
    if isinstance(expr, Const) and expr.value.is_rational() and expr.value.a < 0:
        return _FACTOR
    if isinstance(expr, Pow):
        return _FACTOR
    return _ATOM


def _wrap(expr: Expr, minimum: int) -> str:
    text = to_source(expr)
    return f"({text})" if _level(expr) < minimum else text


def to_source(expr: Expr) -> str:
    """Render an expression in the grammar accepted by `parse`."""
    if isinstance(expr, Const):
        return _const_text(expr.value)
    if isinstance(expr, Var):
        return "t"
    if isinstance(expr, Neg):
        if isinstance(expr.operand, Var):
            return "-t"
        return f"-({to_source(expr.operand)})"
    if isinstance(expr, Abs):
        return f"abs({to_source(expr.operand)})"
    if isinstance(expr, BinOp):
        if expr.op.additive:
            left = _wrap(expr.left, _ADDITIVE)
            right = _wrap(expr.right, _MULTIPLICATIVE)
        else:
            left = _wrap(expr.left, _MULTIPLICATIVE)
            right = _wrap(expr.right, _FACTOR)
        # blanks around '/' keep `1 / 2` from lexing as one literal
        return f"{left} {expr.op.value} {right}"
    if isinstance(expr, MinMax):
        name = "max" if expr.is_max else "min"
        return f"{name}({', '.join(to_source(a) for a in expr.args)})"
    if isinstance(expr, Pow):
        return f"{_wrap(expr.base, _ATOM)}^{expr.exponent}"
    if isinstance(expr, Piecewise):
        parts = [f"{predicate_source(p)}: {to_source(e)}" for p, e in expr.branches]
        parts.append(f"else: {to_source(expr.otherwise)}")
        return f"piecewise({', '.join(parts)})"
    raise TypeError(f"not an expression: {expr!r}")


def predicate_source(pred: Predicate) -> str:
    """Render a predicate; `and` binds tighter than `or`."""
    if isinstance(pred, Compare):
        return f"{to_source(pred.left)} {pred.relation.value} {to_source(pred.right)}"
    if isinstance(pred, IsRational):
        return f"rational({to_source(pred.operand)})"
    if isinstance(pred, And):
        return " and ".join(
            f"({predicate_source(p)})" if isinstance(p, (And, Or)) else predicate_source(p)
            for p in pred.parts
        )
    if isinstance(pred, Or):
        return " or ".join(
            f"({predicate_source(p)})" if isinstance(p, Or) else predicate_source(p)
            for p in pred.parts
        )
    raise TypeError(f"not a predicate: {pred!r}")
