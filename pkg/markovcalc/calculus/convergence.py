"""Verdicts on finite traces of difference quotients.

A finite ladder cannot decide a limit; the verdicts below are evidence. An
exactly constant tail, a tail that settles within tolerance, unbounded growth,
a jump that refuses to shrink and bounded wobbling are told apart, and
everything else is reported as inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

from ..core.interval import Scalar, scalar_to_float
from ..core.quadnum import QuadNum
from .ladder import LadderConfig, Mode

WINDOW = 4


class Verdict(Enum):
    """Outcome of a limit computation."""
    EXISTS = "EXISTS"
    NOT_EXISTS_DIVERGENT = "NOT_EXISTS_DIVERGENT"
    NOT_EXISTS_OSCILLATING = "NOT_EXISTS_OSCILLATING"
    INCONCLUSIVE = "INCONCLUSIVE"

    @property
    def exists(self) -> bool:
        return self is Verdict.EXISTS

    @property
    def refuted(self) -> bool:
        return self in (Verdict.NOT_EXISTS_DIVERGENT, Verdict.NOT_EXISTS_OSCILLATING)


@dataclass(frozen=True)
class TraceVerdict:
    verdict: Verdict
    value: Optional[Scalar]
    reason: str
    # more rungs would not change the verdict
    settled: bool = False
    # value is a quotient within tolerance, not a settled limit
    approximate: bool = False


def _spread(values: Sequence[float]) -> float:
    return max(values) - min(values)


def _exactly_constant(tail: Sequence[Scalar]) -> bool:
    return isinstance(tail[0], QuadNum) and all(v == tail[0] for v in tail[1:])


def _diverges_beyond_bound(floats: Sequence[float], cfg: LadderConfig) -> bool:
    tail = [abs(v) for v in floats[-3:]]
    return len(tail) == 3 and all(v > cfg.divergence_bound for v in tail) and tail[0] <= tail[1] <= tail[2]


def _jump_persists(floats: Sequence[float], jumps: Sequence[float], cfg: LadderConfig) -> bool:
    """A jump |F(t_k) - F(x)| that stays away from zero while the quotient grows.

    A trace with a finite limit has jumps shrinking like the step, i.e. by
    ratio^3 across a 4-rung window; a jump keeping more than sqrt of that is
    not vanishing.
    """
    tail = jumps[-WINDOW:]
    if len(tail) < WINDOW or min(tail) <= cfg.tol_abs:
        return False
    keep = float(cfg.ratio) ** ((WINDOW - 1) / 2)
    if min(tail) < keep * max(tail):
        return False
    mags = [abs(v) for v in floats[-WINDOW:]]
    return all(a < b for a, b in zip(mags, mags[1:]))


def _oscillates(floats: Sequence[float], cfg: LadderConfig) -> bool:
    tail = floats[-2 * WINDOW:]
    if any(abs(v) > cfg.divergence_bound for v in tail):
        return False
    diffs = [b - a for a, b in zip(tail, tail[1:])]
    if len(diffs) < 4:
        return False
    changes = sum(1 for a, b in zip(diffs, diffs[1:]) if a * b < 0)
    half = len(diffs) // 2
    early = max(abs(d) for d in diffs[:half])
    late = max(abs(d) for d in diffs[half:])
    return changes >= 2 and late >= 0.5 * early and late > cfg.tolerance(max(abs(v) for v in tail))


def _plateau(values: Sequence[Scalar], floats: Sequence[float]):
    """The 4-rung window with the smallest spread, as (spread, value, index)."""
    best = None
    for i in range(len(floats) - WINDOW + 1):
        spread = _spread(floats[i:i + WINDOW])
        if best is None or spread < best[0]:
            best = (spread, values[i + WINDOW - 1], i)
    return best


def analyze(values: Sequence[Scalar], cfg: LadderConfig, jumps: Optional[Sequence[Scalar]] = None) -> TraceVerdict:
    """Judge one trace of quotient values ordered from coarse to fine rungs.

    Args:
        values: Quotient values along a ladder
        cfg: Ladder configuration (tolerances, bound, mode)
        jumps: Optional |F(t_k) - F(x)| per rung for the jump criterion

    Returns:
        Verdict, limiting value when it exists, and a one-line reason
    """
    if len(values) < WINDOW:
        return TraceVerdict(Verdict.INCONCLUSIVE, None, f"only {len(values)} rungs")
    floats = [scalar_to_float(v) for v in values]
    tail = values[-WINDOW:]
    if _exactly_constant(tail):
        return TraceVerdict(Verdict.EXISTS, tail[-1], f"exactly constant over the last {WINDOW} rungs", settled=True)
    if _diverges_beyond_bound(floats, cfg):
        return TraceVerdict(
            Verdict.NOT_EXISTS_DIVERGENT, None,
            f"magnitude above {cfg.divergence_bound:g} on the last 3 rungs",
            settled=True,
        )
    if jumps is not None and _jump_persists(floats, [scalar_to_float(j) for j in jumps], cfg):
        return TraceVerdict(
            Verdict.NOT_EXISTS_DIVERGENT, None,
            f"jump of about {scalar_to_float(jumps[-1]):.6g} does not shrink while the quotient grows",
            settled=True,
        )
    if cfg.mode is Mode.EXACT:
        spread = _spread(floats[-WINDOW:])
        if spread <= cfg.tolerance(floats[-1]):
            return TraceVerdict(
                Verdict.EXISTS, tail[-1], f"last {WINDOW} rungs within {spread:.3g}", approximate=True
            )
    else:
        spread, value, index = _plateau(values, floats)
        if spread <= cfg.tolerance(scalar_to_float(value)):
            return TraceVerdict(
                Verdict.EXISTS, value, f"rungs {index}..{index + WINDOW - 1} within {spread:.3g}",
                approximate=True,
            )
    if _oscillates(floats, cfg):
        return TraceVerdict(Verdict.NOT_EXISTS_OSCILLATING, None, "bounded trace keeps changing direction")
    return TraceVerdict(Verdict.INCONCLUSIVE, None, f"no convergence within {len(values)} rungs")


def combine(verdicts: List[Verdict]) -> Verdict:
    """Merge endpoint or flavor verdicts: refutations win, then inconclusive."""
    if Verdict.NOT_EXISTS_DIVERGENT in verdicts:
        return Verdict.NOT_EXISTS_DIVERGENT
    if Verdict.NOT_EXISTS_OSCILLATING in verdicts:
        return Verdict.NOT_EXISTS_OSCILLATING
    if Verdict.INCONCLUSIVE in verdicts:
        return Verdict.INCONCLUSIVE
    return Verdict.EXISTS
