"""Linear-relation witnesses alpha*f + beta*g = c + d and the checks behind them.

A witness certifies that an existing one-sided Markov derivative forces the
one-sided endpoint derivatives to exist. The user supplies the witness; this
module only verifies its hypotheses on ladders and probe points.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Tuple, Union

from ..core.quadnum import QuadNum
from ..errors import ParseError
from ..expr.evaluator import evaluate
from ..expr.function import Domain, IntervalFunction, parse_bindings, parse_constant_at
from ..expr.nodes import Const, Expr
from ..expr.parser import parse
from ..expr.printer import to_source
from .derivative import FLAVORS, continuity_at, one_sided_scalar_derivative
from .ladder import LadderConfig, Side, ladder_points

logger = logging.getLogger(__name__)

WITNESS_KEYS = ("alpha", "beta", "c", "d", "mu")


@dataclass(frozen=True)
class LinearRelationWitness:
    """Functions alpha, beta, c, d and the bound mu."""

    alpha: Expr
    beta: Expr
    c: Expr
    d: Expr
    mu: QuadNum

    def __post_init__(self):
        object.__setattr__(self, "mu", QuadNum.coerce(self.mu))
        if self.mu.sign() <= 0:
            raise ParseError(f"mu must be positive, got {self.mu}")

    def to_source(self) -> str:
        return "".join(
            f"{key} = {to_source(getattr(self, key) if key != 'mu' else Const(self.mu))}\n"
            for key in WITNESS_KEYS
        )


def parse_witness(text: str, F: IntervalFunction) -> LinearRelationWitness:
    """Parse `alpha = ...`, `beta = ...`, `c = ...`, `d = ...`, `mu = ...`.

    The names f and g refer to the endpoints of F; mu must be a constant.
    """
    bindings = parse_bindings(text)
    missing = [key for key in WITNESS_KEYS if key not in bindings]
    if missing:
        raise ParseError(f"missing binding {missing[0]!r}")
    unknown = sorted(set(bindings) - set(WITNESS_KEYS))
    if unknown:
        raise ParseError(f"unknown binding {unknown[0]!r}", bindings[unknown[0]][1], 1)
    names = {"f": F.f, "g": F.g}
    parts = {key: parse(*_at(bindings[key], names)) for key in WITNESS_KEYS[:4]}
    src, line, column = bindings["mu"]
    return LinearRelationWitness(mu=parse_constant_at(src, line, column, names), **parts)


def _at(binding: Tuple[str, int, int], names):
    src, line, column = binding
    return src, names, line, column


def load_witness(path: Union[str, Path], F: IntervalFunction) -> LinearRelationWitness:
    return parse_witness(Path(path).read_text(encoding="utf-8"), F)


def side_domain(omega: Domain, x: QuadNum, side: Side) -> Domain:
    """omega cut down to the open half on the given side of x."""
    return (x, omega[1]) if side is Side.RIGHT else (omega[0], x)


def probe_points(omega: Domain, x: QuadNum, side: Side, count: int) -> List[QuadNum]:
    """`count` points evenly spread over the first half of the side domain."""
    lo, hi = side_domain(omega, x, side)
    reach = (hi - lo) / 2
    found = []
    for j in range(1, count + 1):
        offset = reach * Fraction(j, count + 1)
        found.append(x + offset if side is Side.RIGHT else x - offset)
    return found


def witness_continuity(
    e: Expr, x: QuadNum, omega: Domain, side: Side, cfg: LadderConfig, probes: int
) -> Tuple[bool, str]:
    """Continuity of e on the open side of x, judged at probe points."""
    inner = side_domain(omega, x, side)
    for p in probe_points(omega, x, side, probes):
        check = continuity_at(e, p, cfg.replace(h0=None), inner)
        if not check.continuous:
            return False, check.reason
    return True, f"continuous at {probes} probe points {side.value} of {x}"


def explain_linear_relation(
    F: IntervalFunction,
    w: LinearRelationWitness,
    side: Side,
    x: QuadNum,
    cfg: LadderConfig,
    probes: int = 3,
) -> List[str]:
    """Hypotheses of the witness that fail on the given side of x.

    Checked: the relation alpha*f + beta*g = c + d exactly at every ladder and
    probe point, |alpha| + |beta| <= mu and mu*|alpha - beta| >= 1 at the same
    points, continuity of alpha, beta and c on the side, d(x) = 0 and a zero
    one-sided derivative of d.

    Returns:
        Human-readable failures; empty when the witness is accepted
    """
    x = QuadNum.coerce(x)
    failures: List[str] = []
    sample = list(probe_points(F.omega, x, side, probes))
    for flavor in FLAVORS:
        sample.extend(ladder_points(x, side, flavor, cfg, F.omega))

    for t in sample:
        a, b = evaluate(w.alpha, t), evaluate(w.beta, t)
        left = a * evaluate(F.f, t) + b * evaluate(F.g, t)
        right = evaluate(w.c, t) + evaluate(w.d, t)
        if left != right:
            failures.append(f"alpha*f + beta*g = {left} but c + d = {right} at t = {t}")
            break
        if abs(a) + abs(b) > w.mu:
            failures.append(f"|alpha| + |beta| = {abs(a) + abs(b)} exceeds mu = {w.mu} at t = {t}")
            break
        if w.mu * abs(a - b) < 1:
            failures.append(f"mu*|alpha - beta| = {w.mu * abs(a - b)} is below 1 at t = {t}")
            break

    for key in ("alpha", "beta", "c"):
        ok, reason = witness_continuity(getattr(w, key), x, F.omega, side, cfg, probes)
        if not ok:
            failures.append(f"{key} is not continuous {side.value} of {x}: {reason}")

    d_at_x = evaluate(w.d, x)
    if d_at_x != 0:
        failures.append(f"d({x}) = {d_at_x}, not 0")
    slope = one_sided_scalar_derivative(w.d, x, side, cfg, F.omega, "d")
    if not slope.exists:
        failures.append(f"d'{side.symbol}({x}) does not exist ({slope.verdict.value})")
    elif abs(float(slope.value)) > cfg.tolerance(0):
        failures.append(f"d'{side.symbol}({x}) = {slope.value}, not 0")

    for failure in failures:
        logger.info("witness rejected: %s", failure)
    return failures


def check_linear_relation(
    F: IntervalFunction,
    w: LinearRelationWitness,
    side: Side,
    x: QuadNum,
    cfg: LadderConfig,
    probes: int = 3,
) -> bool:
    return not explain_linear_relation(F, w, side, x, cfg, probes)
