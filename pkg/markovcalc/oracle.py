"""Brute-force reference quotients and central differences.

Evaluates the expressions directly and never goes through the ladder or
convergence machinery, so a bug there cannot confirm itself.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, List, Optional

import numpy as np

from .core.interval import Interval, hausdorff_dist, markov_diff, scalar_to_float, scale_div
from .core.quadnum import QuadNum
from .errors import PreconditionFailed
from .expr.evaluator import evaluate
from .expr.function import IntervalFunction
from .expr.nodes import Expr

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("t_float", "lo_float", "hi_float", "t_exact", "lo_exact", "hi_exact")

_SQRT2_MINUS_ONE = QuadNum(-1, 1)


@dataclass(frozen=True)
class OracleRow:
    t: QuadNum
    side: str
    flavor: str
    step: Fraction
    quotient: Interval


def _value(F: IntervalFunction, t: QuadNum) -> Interval:
    lo, hi = evaluate(F.f, t, F.omega), evaluate(F.g, t, F.omega)
    return Interval(lo, hi)


def _steps(h0: float, ratio: float, depth: int, n: int) -> List[Fraction]:
    grid = np.geomspace(h0, h0 * ratio ** depth, num=n)
    return [Fraction(float(h)) for h in grid]


def _points(x: QuadNum, sign: int, step: Fraction):
    """The rational and the irrational sample point at distance about `step`."""
    if x.is_rational():
        return x + sign * step, x + sign * _SQRT2_MINUS_ONE * step
    irrational = x + sign * step
    return QuadNum(Fraction(irrational.to_float())), irrational


def brute_quotient_scan(
    F: IntervalFunction,
    x: QuadNum,
    n: int = 16,
    h0: Optional[float] = None,
    ratio: float = 0.5,
    depth: int = 40,
) -> List[OracleRow]:
    """Exact Markov quotients at n rational and n irrational points per side.

    Args:
        F: Interval function
        x: Interior point
        n: Points per flavor and side, at least 16
        h0: Largest step; a quarter of the distance to the boundary by default
        ratio: Ladder ratio; the smallest step is h0 * ratio**depth
        depth: Exponent of the smallest step

    Returns:
        4n rows ordered by side, flavor, then decreasing step
    """
    if n < 16:
        raise PreconditionFailed("the oracle scan needs at least 16 points per flavor and side")
    x = QuadNum.coerce(x)
    if h0 is None:
        h0 = min(x - F.omega[0], F.omega[1] - x).to_float() / 4
    if h0 <= 0:
        raise PreconditionFailed(f"x = {x} is not interior to the domain of {F.name}")
    base = _value(F, x)
    rows = []
    for side, sign in (("left", -1), ("right", 1)):
        samples = [(step, _points(x, sign, step)) for step in _steps(h0, ratio, depth, n)]
        for index, flavor in enumerate(("rational", "irrational")):
            for step, pair in samples:
                t = pair[index]
                q = scale_div(markov_diff(_value(F, t), base), t - x)
                rows.append(OracleRow(t, side, flavor, step, q))
    logger.debug("oracle scanned %d points of %s at %s", len(rows), F.name, x)
    return rows


def central_difference(e: Expr, x: QuadNum, h: QuadNum) -> float:
    """(e(x+h) - e(x-h)) / 2h, computed exactly and rounded once."""
    x = QuadNum.coerce(x)
    h = QuadNum.coerce(h)
    if h.sign() <= 0:
        raise PreconditionFailed("central difference needs h > 0")
    return ((evaluate(e, x + h) - evaluate(e, x - h)) / (2 * h)).to_float()


def write_csv(rows: Iterable[OracleRow], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        q = row.quotient
        writer.writerow([
            repr(row.t.to_float()),
            repr(scalar_to_float(q.lo)),
            repr(scalar_to_float(q.hi)),
            row.t.to_text(),
            str(q.lo),
            str(q.hi),
        ])


def finest(rows: Iterable[OracleRow]) -> List[OracleRow]:
    """The smallest-step row of every (side, flavor) group."""
    best = {}
    for row in rows:
        key = (row.side, row.flavor)
        if key not in best or row.step < best[key].step:
            best[key] = row
    return [best[key] for key in sorted(best)]


def agrees_with(result, rows: Iterable[OracleRow], tol: float) -> bool:
    """Whether the oracle's finest quotients match an engine result.

    Only sides on which the engine reports a limit are compared; a result
    without any limit has nothing to disagree with.

    Args:
        result: DerivativeResult from the engine
        rows: Oracle scan
        tol: Hausdorff tolerance
    """
    targets = {"left": result.left, "right": result.right}
    for row in finest(rows):
        target = targets.get(row.side)
        if target is None:
            continue
        gap = scalar_to_float(hausdorff_dist(row.quotient.to_float(), target.to_float()))
        if gap > tol:
            logger.info("oracle disagrees %s/%s: %s vs %s (gap %.3g)", row.side, row.flavor,
                        row.quotient.to_float(), target.to_float(), gap)
            return False
    return True
