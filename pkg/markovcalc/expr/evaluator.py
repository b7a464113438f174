"""Evaluation of expression trees at points of Q(sqrt 2).

Branch predicates are always decided exactly on the QuadNum point. The values
themselves are computed either exactly or, in float mode, in float64.
"""

from __future__ import annotations

from typing import Optional, Tuple, Union

from ..core.quadnum import QuadNum
from ..errors import DivisionByZero, EvaluationError, NoBranchMatched, OutOfDomain
from .nodes import (
    Abs,
    And,
    BinaryOp,
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
from .printer import to_source


class ExactArithmetic:
    """Values stay in Q(sqrt 2)."""

    name = "exact"

    def variable(self, t: QuadNum) -> QuadNum:
        return t

    def constant(self, value: QuadNum) -> QuadNum:
        return value

    def is_zero(self, value) -> bool:
        return value.is_zero()


class FloatArithmetic:
    """Values are rounded to float64 after every operation."""

    name = "float"

    def variable(self, t: QuadNum) -> float:
        return t.to_float()

    def constant(self, value: QuadNum) -> float:
        return value.to_float()

    def is_zero(self, value) -> bool:
        return value == 0.0


EXACT = ExactArithmetic()
FLOAT = FloatArithmetic()

Arithmetic = Union[ExactArithmetic, FloatArithmetic]


def _location(expr: Expr) -> str:
    where = f" (at {expr.span})" if getattr(expr, "span", None) else ""
    return f"`{to_source(expr)}`{where}"


def _eval(expr: Expr, t: QuadNum, arith: Arithmetic):
    if isinstance(expr, Const):
        return arith.constant(expr.value)
    if isinstance(expr, Var):
        return arith.variable(t)
    if isinstance(expr, Neg):
        return -_eval(expr.operand, t, arith)
    if isinstance(expr, Abs):
        return abs(_eval(expr.operand, t, arith))
    if isinstance(expr, BinOp):
        left = _eval(expr.left, t, arith)
        right = _eval(expr.right, t, arith)
        if expr.op is BinaryOp.ADD:
            return left + right
        if expr.op is BinaryOp.SUB:
            return left - right
        if expr.op is BinaryOp.MUL:
            return left * right
        if arith.is_zero(right):
            raise DivisionByZero("division by zero", _location(expr))
        return left / right
    if isinstance(expr, MinMax):
        values = [_eval(a, t, arith) for a in expr.args]
        return max(values) if expr.is_max else min(values)
    if isinstance(expr, Pow):
        return _eval(expr.base, t, arith) ** expr.exponent
    if isinstance(expr, Piecewise):
        return _eval(select_branch(expr, t), t, arith)
    raise EvaluationError(f"cannot evaluate {expr!r}")


def select_branch(expr: Piecewise, t: QuadNum) -> Expr:
    """The expression of the first branch whose predicate holds at t."""
    for pred, branch in expr.branches:
        if holds(pred, t):
            return branch
    if expr.otherwise is None:
        where = f" at {expr.span}" if expr.span else ""
        raise NoBranchMatched(f"no branch of the piecewise expression{where} matched t = {t}")
    return expr.otherwise


def holds(pred: Predicate, t: QuadNum) -> bool:
    """Decide a predicate exactly at t."""
    if isinstance(pred, Compare):
        left = _eval(pred.left, t, EXACT)
        right = _eval(pred.right, t, EXACT)
        return pred.relation.holds((left - right).sign())
    if isinstance(pred, IsRational):
        return _eval(pred.operand, t, EXACT).is_rational()
    if isinstance(pred, And):
        return all(holds(p, t) for p in pred.parts)
    if isinstance(pred, Or):
        return any(holds(p, t) for p in pred.parts)
    raise EvaluationError(f"cannot decide {pred!r}")


def evaluate(expr: Expr, t: QuadNum, domain: Optional[Tuple[QuadNum, QuadNum]] = None) -> QuadNum:
    """Evaluate exactly.

    Args:
        expr: Expression tree
        t: Evaluation point
        domain: Optional open interval (lo, hi) that t must lie in

    Returns:
        The exact value

    Raises:
        OutOfDomain: if a domain is given and t is not inside it
        DivisionByZero: on a zero divisor along the selected path
    """
    t = QuadNum.coerce(t)
    if domain is not None and not (domain[0] < t < domain[1]):
        raise OutOfDomain(f"t = {t} is outside ({domain[0]}, {domain[1]})")
    return _eval(expr, t, EXACT)


def evaluate_float(expr: Expr, t: QuadNum) -> float:
    """Evaluate in float64, choosing branches exactly at t."""
    return _eval(expr, QuadNum.coerce(t), FLOAT)


def evaluate_with(expr: Expr, t: QuadNum, arith: Arithmetic):
    return _eval(expr, t, arith)


def uses_variable(expr) -> bool:
    """True if the tree mentions t anywhere, predicates included."""
    if isinstance(expr, Var):
        return True
    if isinstance(expr, Const):
        return False
    if isinstance(expr, (Neg, Abs, IsRational)):
        return uses_variable(expr.operand)
    if isinstance(expr, (BinOp, Compare)):
        return uses_variable(expr.left) or uses_variable(expr.right)
    if isinstance(expr, MinMax):
        return any(uses_variable(a) for a in expr.args)
    if isinstance(expr, Pow):
        return uses_variable(expr.base)
    if isinstance(expr, Piecewise):
        return uses_variable(expr.otherwise) or any(
            uses_variable(p) or uses_variable(e) for p, e in expr.branches
        )
    if isinstance(expr, (And, Or)):
        return any(uses_variable(p) for p in expr.parts)
    raise TypeError(f"not an expression: {expr!r}")
