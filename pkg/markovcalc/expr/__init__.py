"""Expression language for endpoint functions."""

from .evaluator import evaluate, evaluate_float, holds, uses_variable
from .function import (
    IntervalFunction,
    eval_interval,
    eval_interval_float,
    load_function,
    parse_definition,
)
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
    Relation,
    T,
    Var,
    const,
    substitute,
)
from .parser import parse, parse_constant, parse_predicate
from .printer import predicate_source, to_source

__all__ = [
    "Abs",
    "And",
    "BinOp",
    "BinaryOp",
    "Compare",
    "Const",
    "Expr",
    "IntervalFunction",
    "IsRational",
    "MinMax",
    "Neg",
    "Or",
    "Piecewise",
    "Pow",
    "Predicate",
    "Relation",
    "T",
    "Var",
    "const",
    "eval_interval",
    "eval_interval_float",
    "evaluate",
    "evaluate_float",
    "holds",
    "load_function",
    "parse",
    "parse_constant",
    "parse_definition",
    "parse_predicate",
    "predicate_source",
    "substitute",
    "to_source",
    "uses_variable",
]
