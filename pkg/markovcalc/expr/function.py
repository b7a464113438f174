"""Interval functions F(t) = [f(t), g(t)] and their definition files."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from ..core.interval import Interval
from ..core.quadnum import QuadNum
from ..errors import EndpointOrderViolation, OutOfDomain, ParseError
from .evaluator import EXACT, FLOAT, Arithmetic, evaluate_with, uses_variable
from .lexer import tokenize
from .nodes import BinaryOp, BinOp, Expr, Neg, T, substitute
from .parser import Parser, parse
from .printer import to_source

logger = logging.getLogger(__name__)

Domain = Tuple[QuadNum, QuadNum]


@dataclass(frozen=True)
class IntervalFunction:
    """An interval function with endpoint expressions f <= g on the open domain omega."""

    f: Expr
    g: Expr
    omega: Domain
    name: str = "F"

    def __post_init__(self):
        lo, hi = self.omega
        object.__setattr__(self, "omega", (QuadNum.coerce(lo), QuadNum.coerce(hi)))
        if not self.omega[0] < self.omega[1]:
            raise ParseError(f"empty domain ({lo}, {hi})")

    def contains(self, t: QuadNum) -> bool:
        return self.omega[0] < t < self.omega[1]

    def distance_to_boundary(self, x: QuadNum) -> QuadNum:
        return min(x - self.omega[0], self.omega[1] - x)

    def evaluate(self, t: QuadNum, arith: Arithmetic = EXACT) -> Interval:
        """F(t) = [f(t), g(t)].

        Args:
            t: Point of the domain
            arith: EXACT or FLOAT arithmetic for the endpoint values

        Returns:
            The interval value

        Raises:
            OutOfDomain: t outside omega
            EndpointOrderViolation: f(t) > g(t)
        """
        t = QuadNum.coerce(t)
        if not self.contains(t):
            raise OutOfDomain(
                f"t = {t} is outside the domain ({self.omega[0]}, {self.omega[1]}) of {self.name}"
            )
        lo = evaluate_with(self.f, t, arith)
        hi = evaluate_with(self.g, t, arith)
        if lo <= hi:
            return Interval(lo, hi)
        if arith is not EXACT:
            # rounded endpoints may cross; the order is decided on the exact values
            exact_lo = evaluate_with(self.f, t, EXACT)
            exact_hi = evaluate_with(self.g, t, EXACT)
            if exact_lo == exact_hi:
                return Interval(lo, lo)
            if exact_lo < exact_hi:
                return Interval(hi, lo)
        raise EndpointOrderViolation(
            f"{self.name}: f({t}) = {lo} exceeds g({t}) = {hi}"
        )

    def length(self) -> Expr:
        """The expression g - f."""
        return BinOp(BinaryOp.SUB, self.g, self.f)

    def reflect(self) -> "IntervalFunction":
        """G(t) = F(-t) on the mirrored domain."""
        minus_t = Neg(T)
        return IntervalFunction(
            substitute(self.f, minus_t),
            substitute(self.g, minus_t),
            (-self.omega[1], -self.omega[0]),
            f"{self.name}(-t)",
        )

    def to_source(self) -> str:
        """The function in definition-file form."""
        lo, hi = self.omega
        return (
            f"f = {to_source(self.f)}\n"
            f"g = {to_source(self.g)}\n"
            f"omega = ({_constant_source(lo)}, {_constant_source(hi)})\n"
        )


def _constant_source(value: QuadNum) -> str:
    from .nodes import Const
    return to_source(Const(value))


def eval_interval(F: IntervalFunction, t: QuadNum) -> Interval:
    """Exact value of F at t."""
    return F.evaluate(t, EXACT)


def eval_interval_float(F: IntervalFunction, t: QuadNum) -> Interval:
    return F.evaluate(t, FLOAT)


def parse_constant_at(src: str, line: int, column: int, names: Dict[str, Expr]) -> QuadNum:
    from .evaluator import evaluate

    expr = parse(src, names, line, column)
    if uses_variable(expr):
        raise ParseError("constant expected, found the variable t", line, column)
    return evaluate(expr, QuadNum(0))


def _parse_domain(src: str, line: int, column: int) -> Domain:
    parser = Parser(tokenize(src, line, column))
    parser.eat("(")
    lo = parser.expr()
    parser.eat(",")
    hi = parser.expr()
    parser.eat(")")
    if parser.current.kind != "EOF":
        raise parser._error(f"unexpected {parser.current.describe()} after domain")
    from .evaluator import evaluate

    for bound in (lo, hi):
        if uses_variable(bound):
            raise ParseError("domain bounds must be constants", line, column)
    return evaluate(lo, QuadNum(0)), evaluate(hi, QuadNum(0))


def parse_bindings(text: str) -> Dict[str, Tuple[str, int, int]]:
    """Split a definition file into `key -> (source, line, column)`.

    Blank lines and `#` comments are skipped.
    """
    bindings: Dict[str, Tuple[str, int, int]] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            raise ParseError("expected `name = value`", number, 1)
        key, value = line.split("=", 1)
        key = key.strip()
        if not key.isidentifier():
            raise ParseError(f"invalid binding name {key!r}", number, 1)
        if key in bindings:
            raise ParseError(f"duplicate binding {key!r}", number, 1)
        column = len(line) - len(value.lstrip()) + 1
        bindings[key] = (value.strip(), number, column)
    return bindings


def parse_definition(text: str, name: str = "F") -> IntervalFunction:
    """Parse the `f = ...`, `g = ...`, `omega = (lo, hi)` file format.

    Args:
        text: File contents
        name: Display name of the function

    Returns:
        The interval function

    Raises:
        ParseError: on malformed or missing bindings
    """
    bindings = parse_bindings(text)
    for required in ("f", "g", "omega"):
        if required not in bindings:
            raise ParseError(f"missing binding {required!r}")
    unknown = set(bindings) - {"f", "g", "omega"}
    if unknown:
        key = sorted(unknown)[0]
        raise ParseError(f"unknown binding {key!r}", bindings[key][1], 1)
    src, line, column = bindings["f"]
    f = parse(src, None, line, column)
    src, line, column = bindings["g"]
    g = parse(src, {"f": f}, line, column)
    omega = _parse_domain(*bindings["omega"])
    logger.debug("parsed %s: f = %s, g = %s", name, to_source(f), to_source(g))
    return IntervalFunction(f, g, omega, name)


def load_function(path: Union[str, Path]) -> IntervalFunction:
    """Read a definition file from disk."""
    path = Path(path)
    return parse_definition(path.read_text(encoding="utf-8"), path.stem)
