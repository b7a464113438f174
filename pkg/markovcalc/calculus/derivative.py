"""Difference quotients, one-sided derivatives and Markov's derivative.

Every limit is taken along four ladders per point: rational and irrational
points on each side. A side's limit exists when both flavors settle on the
same value; the two-sided derivative exists when both sides do and agree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..core.interval import (
    Interval,
    Scalar,
    hausdorff_dist,
    markov_diff,
    scalar_to_float,
    scalar_to_text,
    scale_div,
)
from ..core.quadnum import QuadNum
from ..errors import OutOfDomain, PreconditionFailed
from ..expr.evaluator import EXACT, FLOAT, evaluate_with
from ..expr.function import Domain, IntervalFunction
from ..expr.nodes import Expr
from .convergence import TraceVerdict, Verdict, analyze, combine
from .ladder import Flavor, LadderConfig, Mode, Side, ladder_points

logger = logging.getLogger(__name__)

EVIDENCE_NOTE = (
    "verdicts rest on finitely many points of Q(sqrt2) on rational and irrational "
    "ladders; they are evidence, not proof"
)

FLAVORS = (Flavor.RATIONAL, Flavor.IRRATIONAL)
SIDES = (Side.LEFT, Side.RIGHT)


def _arith(cfg: LadderConfig):
    return EXACT if cfg.mode is Mode.EXACT else FLOAT


def _step(t: QuadNum, x: QuadNum, cfg: LadderConfig) -> Scalar:
    step = t - x
    return step if cfg.mode is Mode.EXACT else step.to_float()


# Result types

@dataclass
class LadderTrace:
    """Quotients of one ladder with the verdict reached on it."""

    side: Side
    flavor: Flavor
    points: List[Tuple[QuadNum, Any]]
    verdict: Verdict
    value: Any
    reason: str
    approximate: bool = False

    def to_dict(self) -> Dict[str, Any]:
        rows = []
        for t, q in self.points:
            if isinstance(q, Interval):
                rows.append({"t": t.to_text(), "lo": scalar_to_text(q.lo), "hi": scalar_to_text(q.hi)})
            else:
                rows.append({"t": t.to_text(), "value": scalar_to_text(q)})
        return {
            "side": self.side.value,
            "flavor": self.flavor.value,
            "verdict": self.verdict.value,
            "reason": self.reason,
            "trace": rows,
        }


@dataclass
class ScalarDerivative:
    """A one-sided derivative of a single endpoint expression."""

    side: Side
    verdict: Verdict
    value: Optional[Scalar]
    traces: List[LadderTrace] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    approximate: bool = False

    @property
    def exists(self) -> bool:
        return self.verdict is Verdict.EXISTS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "side": self.side.value,
            "verdict": self.verdict.value,
            "value": None if self.value is None else scalar_to_text(self.value),
            "approximate": self.approximate,
            "notes": list(self.notes),
        }


@dataclass
class OneSidedDerivatives:
    """f'-(x), f'+(x), g'-(x) and g'+(x), each with its own verdict."""

    f_minus: ScalarDerivative
    f_plus: ScalarDerivative
    g_minus: ScalarDerivative
    g_plus: ScalarDerivative

    def items(self) -> List[Tuple[str, ScalarDerivative]]:
        return [
            ("f_minus", self.f_minus),
            ("f_plus", self.f_plus),
            ("g_minus", self.g_minus),
            ("g_plus", self.g_plus),
        ]

    @property
    def all_exist(self) -> bool:
        return all(d.exists for _, d in self.items())

    @property
    def any_refuted(self) -> bool:
        return any(d.verdict.refuted for _, d in self.items())

    def side(self, side: Side) -> Tuple[ScalarDerivative, ScalarDerivative]:
        """(f', g') on the given side."""
        if side is Side.LEFT:
            return self.f_minus, self.g_minus
        return self.f_plus, self.g_plus

    def to_dict(self) -> Dict[str, Any]:
        return {name: d.to_dict() for name, d in self.items()}


@dataclass
class DerivativeResult:
    """Markov derivative (two-sided or one-sided) with the evidence behind it."""

    verdict: Verdict
    value: Optional[Interval] = None
    left: Optional[Interval] = None
    right: Optional[Interval] = None
    ladders: List[LadderTrace] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    approximate: bool = False

    @property
    def exists(self) -> bool:
        return self.verdict is Verdict.EXISTS

    def to_dict(self, traces: bool = True) -> Dict[str, Any]:
        payload = {
            "verdict": self.verdict.value,
            "value": None if self.value is None else self.value.to_dict(),
            "approximate": self.approximate,
            "left": None if self.left is None else self.left.to_dict(),
            "right": None if self.right is None else self.right.to_dict(),
            "notes": list(self.notes),
        }
        if traces:
            payload["ladders"] = [lad.to_dict() for lad in self.ladders]
        return payload


# Quotients

def difference_quotient(F: IntervalFunction, x: QuadNum, t: QuadNum, mode: Mode = Mode.EXACT) -> Interval:
    """(F(t) (-) F(x)) / (t - x).

    Args:
        F: Interval function
        x: Base point
        t: Sample point, different from x
        mode: EXACT keeps everything in Q(sqrt 2); FLOAT rounds endpoint values

    Returns:
        The quotient interval

    Raises:
        PreconditionFailed: t == x
        OutOfDomain: x or t outside the domain
    """
    x = QuadNum.coerce(x)
    t = QuadNum.coerce(t)
    if t == x:
        raise PreconditionFailed("difference quotient needs t != x")
    arith = EXACT if mode is Mode.EXACT else FLOAT
    step = t - x if mode is Mode.EXACT else (t - x).to_float()
    return scale_div(markov_diff(F.evaluate(t, arith), F.evaluate(x, arith)), step)


def _require_interior(omega: Optional[Domain], x: QuadNum) -> None:
    if omega is not None and not (omega[0] < x < omega[1]):
        raise OutOfDomain(f"x = {x} is not interior to ({omega[0]}, {omega[1]})")


def _follow(
    x: QuadNum,
    side: Side,
    flavor: Flavor,
    cfg: LadderConfig,
    omega: Optional[Domain],
    sample: Callable[[QuadNum], Tuple[Any, Sequence[Scalar], Scalar]],
) -> Tuple[List[Tuple[QuadNum, Any]], List[TraceVerdict]]:
    """Walk a ladder, extending it in exact mode until the verdict settles.

    `sample(t)` returns (reported value, components to judge, jump).
    """
    rows = [(t, sample(t)) for t in ladder_points(x, side, flavor, cfg, omega)]

    def judge():
        jumps = [r[2] for _, r in rows]
        width = len(rows[0][1][1]) if rows else 0
        return [analyze([r[1][i] for _, r in rows], cfg, jumps) for i in range(width)]

    verdicts = judge()
    if cfg.mode is Mode.EXACT and cfg.max_depth > cfg.depth and not all(v.settled for v in verdicts):
        more = ladder_points(x, side, flavor, cfg, omega, count=cfg.max_depth, start=cfg.depth)
        rows.extend((t, sample(t)) for t in more)
        verdicts = judge()
    return [(t, r[0]) for t, r in rows], verdicts


def _agree(a, b, cfg: LadderConfig) -> bool:
    if isinstance(a, Interval):
        gap = scalar_to_float(hausdorff_dist(a, b))
        scale = max(abs(scalar_to_float(a.lo)), abs(scalar_to_float(a.hi)))
    else:
        gap = abs(scalar_to_float(a - b))
        scale = abs(scalar_to_float(a))
    return gap <= cfg.tolerance(scale)


def _merge_flavors(
    traces: List[LadderTrace], cfg: LadderConfig, what: str
) -> Tuple[Verdict, Any, bool, List[str]]:
    """Combine the rational and irrational ladders of one side.

    Returns:
        (verdict, value, approximate, notes)
    """
    notes = []
    verdict = combine([tr.verdict for tr in traces])
    value = None
    approximate = False
    if verdict is Verdict.EXISTS:
        first, second = traces
        if _agree(first.value, second.value, cfg):
            value = first.value
            approximate = first.approximate
        else:
            verdict = Verdict.NOT_EXISTS_OSCILLATING
            notes.append(
                f"{what}: {first.flavor.value} ladder tends to {_text(first.value)}, "
                f"{second.flavor.value} ladder to {_text(second.value)}"
            )
    for tr in traces:
        if tr.verdict is not Verdict.EXISTS:
            notes.append(f"{what}: {tr.flavor.value} ladder {tr.verdict.value} ({tr.reason})")
    return verdict, value, approximate, notes


def _text(value) -> str:
    return str(value) if isinstance(value, Interval) else scalar_to_text(value)


# Scalar one-sided derivatives

def one_sided_scalar_derivative(
    e: Expr,
    x: QuadNum,
    side: Side,
    cfg: LadderConfig,
    omega: Optional[Domain] = None,
    label: str = "e",
) -> ScalarDerivative:
    """e'+(x) or e'-(x) as the limit of (e(t) - e(x)) / (t - x).

    Args:
        e: Endpoint expression
        x: Interior point
        side: LEFT or RIGHT
        cfg: Ladder configuration
        omega: Domain used to size and truncate the ladders
        label: Name used in notes

    Returns:
        The derivative with its verdict; EXISTS only when both flavors agree
    """
    x = QuadNum.coerce(x)
    _require_interior(omega, x)
    arith = _arith(cfg)
    base = evaluate_with(e, x, arith)

    def sample(t):
        delta = evaluate_with(e, t, arith) - base
        q = delta / _step(t, x, cfg)
        return q, (q,), abs(delta)

    traces = []
    for flavor in FLAVORS:
        rows, (tv,) = _follow(x, side, flavor, cfg, omega, sample)
        traces.append(LadderTrace(side, flavor, rows, tv.verdict, tv.value, tv.reason, tv.approximate))
    what = f"{label}'{side.symbol}({x})"
    verdict, value, approximate, notes = _merge_flavors(traces, cfg, what)
    logger.debug("%s: %s %s", what, verdict.value, "" if value is None else scalar_to_text(value))
    return ScalarDerivative(side, verdict, value, traces, notes, approximate)


def one_sided_all(F: IntervalFunction, x: QuadNum, cfg: LadderConfig) -> OneSidedDerivatives:
    """All four one-sided endpoint derivatives of F at x."""
    found = {}
    for label, expr in (("f", F.f), ("g", F.g)):
        for side in SIDES:
            found[(label, side)] = one_sided_scalar_derivative(expr, x, side, cfg, F.omega, label)
    return OneSidedDerivatives(
        f_minus=found[("f", Side.LEFT)],
        f_plus=found[("f", Side.RIGHT)],
        g_minus=found[("g", Side.LEFT)],
        g_plus=found[("g", Side.RIGHT)],
    )


# Markov derivative

def _side_traces(F: IntervalFunction, x: QuadNum, side: Side, cfg: LadderConfig) -> List[LadderTrace]:
    arith = _arith(cfg)
    base = F.evaluate(x, arith)

    def sample(t):
        value = F.evaluate(t, arith)
        q = scale_div(markov_diff(value, base), _step(t, x, cfg))
        return q, (q.lo, q.hi), hausdorff_dist(value, base)

    traces = []
    for flavor in FLAVORS:
        rows, (lo, hi) = _follow(x, side, flavor, cfg, F.omega, sample)
        verdict = combine([lo.verdict, hi.verdict])
        value = None
        if verdict is Verdict.EXISTS:
            value = Interval(min(lo.value, hi.value), max(lo.value, hi.value))
        reason = f"lo: {lo.reason}; hi: {hi.reason}"
        approximate = verdict is Verdict.EXISTS and (lo.approximate or hi.approximate)
        traces.append(LadderTrace(side, flavor, rows, verdict, value, reason, approximate))
    return traces


def one_sided_markov_derivative(F: IntervalFunction, x: QuadNum, side: Side, cfg: LadderConfig) -> DerivativeResult:
    """dF+(x) or dF-(x): the one-sided limit of the Markov quotient.

    Returns:
        Result with `right` (or `left`) and `value` set when the limit exists
    """
    x = QuadNum.coerce(x)
    _require_interior(F.omega, x)
    traces = _side_traces(F, x, side, cfg)
    what = f"d{F.name}{side.symbol}({x})"
    verdict, value, approximate, notes = _merge_flavors(traces, cfg, what)
    result = DerivativeResult(
        verdict, value, ladders=traces, notes=notes + [EVIDENCE_NOTE], approximate=approximate
    )
    if side is Side.LEFT:
        result.left = value
    else:
        result.right = value
    logger.debug("%s: %s %s", what, verdict.value, value)
    return result


def markov_derivative(F: IntervalFunction, x: QuadNum, cfg: LadderConfig) -> DerivativeResult:
    """Markov's derivative dF(x) = lim (F(t) (-) F(x)) / (t - x) as t -> x.

    Args:
        F: Interval function
        x: Interior point
        cfg: Ladder configuration

    Returns:
        EXISTS with the common interval when both one-sided limits exist and
        coincide; NOT_EXISTS_DIVERGENT when a quotient blows up (a jump of F
        at x); NOT_EXISTS_OSCILLATING when ladders or sides disagree;
        INCONCLUSIVE otherwise
    """
    left = one_sided_markov_derivative(F, x, Side.LEFT, cfg)
    right = one_sided_markov_derivative(F, x, Side.RIGHT, cfg)
    notes = [n for n in left.notes + right.notes if n != EVIDENCE_NOTE]
    verdict = combine([left.verdict, right.verdict])
    value = None
    approximate = False
    if verdict is Verdict.EXISTS:
        if _agree(left.value, right.value, cfg):
            value = right.value
            approximate = right.approximate
        else:
            verdict = Verdict.NOT_EXISTS_OSCILLATING
            notes.append(f"one-sided limits differ: left {left.value}, right {right.value}")
    notes.append(EVIDENCE_NOTE)
    logger.debug("d%s(%s): %s %s", F.name, x, verdict.value, value)
    return DerivativeResult(
        verdict,
        value,
        left=left.value,
        right=right.value,
        ladders=left.ladders + right.ladders,
        notes=notes,
        approximate=approximate,
    )


# Continuity

@dataclass(frozen=True)
class ContinuityCheck:
    continuous: bool
    reason: str


def continuity_at(
    e: Expr,
    x: QuadNum,
    cfg: LadderConfig,
    omega: Optional[Domain] = None,
    sides: Sequence[Side] = SIDES,
    tol: Optional[float] = None,
) -> ContinuityCheck:
    """Check that e(t) -> e(x) along both flavors of the requested sides."""
    x = QuadNum.coerce(x)
    arith = _arith(cfg)
    base = evaluate_with(e, x, arith)
    base_f = scalar_to_float(base)
    limit_tol = cfg.tolerance(base_f) if tol is None else tol

    def sample(t):
        value = evaluate_with(e, t, arith)
        return value, (value,), abs(value - base)

    for side in sides:
        for flavor in FLAVORS:
            _, (tv,) = _follow(x, side, flavor, cfg, omega, sample)
            where = f"{flavor.value} {side.value} ladder at {x}"
            if tv.verdict is not Verdict.EXISTS:
                return ContinuityCheck(False, f"{where}: values do not settle ({tv.reason})")
            gap = abs(scalar_to_float(tv.value) - base_f)
            if tv.value != base and gap > limit_tol:
                return ContinuityCheck(
                    False, f"{where}: values tend to {scalar_to_text(tv.value)}, not {scalar_to_text(base)}"
                )
    return ContinuityCheck(True, f"continuous at {x}")


def is_continuous_at(
    e: Expr,
    x: QuadNum,
    cfg: LadderConfig,
    omega: Optional[Domain] = None,
    sides: Sequence[Side] = SIDES,
) -> bool:
    return continuity_at(e, x, cfg, omega, sides).continuous
