"""Case split of interval-function differentiability.

The valid direction of the classical characterization: Markov's derivative
exists when f and g are both differentiable (case A) or when the crossed
one-sided equalities f'-(x) = g'+(x), g'-(x) = f'+(x) hold (case B). The
converse fails: case C collects points where dF(x) exists although some
one-sided endpoint derivative does not.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

from ..core.interval import Interval, Scalar, scalar_to_float, within
from ..core.quadnum import QuadNum
from ..errors import MissingOneSided, PreconditionFailed, WitnessNotContinuous
from ..expr.function import IntervalFunction
from ..expr.nodes import Expr
from ..settings import settings
from .convergence import Verdict
from .derivative import (
    SIDES,
    DerivativeResult,
    OneSidedDerivatives,
    continuity_at,
    markov_derivative,
    one_sided_all,
    one_sided_markov_derivative,
)
from .ladder import LadderConfig, Side
from .witness import witness_continuity

logger = logging.getLogger(__name__)


class Case(Enum):
    CASE_A_BOTH_DIFFERENTIABLE = "CASE_A_BOTH_DIFFERENTIABLE"
    CASE_B_CROSSED_DERIVATIVES = "CASE_B_CROSSED_DERIVATIVES"
    CASE_C_BEYOND_THEOREM1 = "CASE_C_BEYOND_THEOREM1"
    NOT_DIFFERENTIABLE = "NOT_DIFFERENTIABLE"
    INCONCLUSIVE = "INCONCLUSIVE"


class Witness(Enum):
    """Which continuous expression licenses the one-sided conclusion."""
    F_CONT = "f"
    G_CONT = "g"
    LENGTH_CONT = "g-f"

    @classmethod
    def from_str(cls, value: str) -> "Witness":
        aliases = {"f": cls.F_CONT, "g": cls.G_CONT, "g-f": cls.LENGTH_CONT, "length": cls.LENGTH_CONT}
        try:
            return aliases[value.lower()]
        except KeyError:
            try:
                return cls[value.upper()]
            except KeyError:
                raise PreconditionFailed(f"unknown witness {value!r}") from None

    def expression(self, F: IntervalFunction) -> Expr:
        if self is Witness.F_CONT:
            return F.f
        if self is Witness.G_CONT:
            return F.g
        return F.length()


@dataclass
class ClassificationReport:
    case: Case
    markov: DerivativeResult
    one_sided: OneSidedDerivatives
    dpm_holds: Optional[bool] = None
    ufa_checked: Optional[bool] = None
    evidence: List[str] = field(default_factory=list)

    def to_dict(self, traces: bool = False) -> Dict[str, Any]:
        return {
            "case": self.case.value,
            "markov": self.markov.to_dict(traces),
            "one_sided": self.one_sided.to_dict(),
            "dpm_holds": self.dpm_holds,
            "ufa_checked": self.ufa_checked,
            "evidence": "\n".join(self.evidence),
        }


def _values(d: OneSidedDerivatives):
    if not d.all_exist:
        missing = [name for name, s in d.items() if not s.exists]
        raise MissingOneSided(f"one-sided derivatives missing: {', '.join(missing)}")
    return d.f_minus.value, d.f_plus.value, d.g_minus.value, d.g_plus.value


def _close(a: Scalar, b: Scalar, tol: float) -> bool:
    return abs(scalar_to_float(a) - scalar_to_float(b)) <= tol


def min_max(a: Scalar, b: Scalar) -> Interval:
    """[min(a, b), max(a, b)]."""
    return Interval(a, b) if a <= b else Interval(b, a)


def check_dpm(d: OneSidedDerivatives, tol: float) -> bool:
    """f'-(x) = g'+(x) and g'-(x) = f'+(x) within tol.

    Raises:
        MissingOneSided: if any of the four values is missing
    """
    f_minus, f_plus, g_minus, g_plus = _values(d)
    return _close(f_minus, g_plus, tol) and _close(g_minus, f_plus, tol)


def one_sided_formula(d: OneSidedDerivatives, side: Side) -> Interval:
    """[min(f', g'), max(f', g')] from the one-sided slopes on a side."""
    f_side, g_side = d.side(side)
    if not (f_side.exists and g_side.exists):
        raise MissingOneSided(f"one-sided derivatives of f and g on the {side.value} side are missing")
    return min_max(f_side.value, g_side.value)


def _classifier_tol(tol: Optional[float]) -> float:
    return float(settings.get("classifier_tol")) if tol is None else tol


def classify(F: IntervalFunction, x: QuadNum, cfg: LadderConfig, tol: Optional[float] = None) -> ClassificationReport:
    """Place F at x in the case split.

    Args:
        F: Interval function
        x: Interior point
        cfg: Ladder configuration
        tol: Tolerance for the one-sided equalities; defaults to classifier_tol

    Returns:
        The report; case A, B or C only when dF(x) exists
    """
    tol = _classifier_tol(tol)
    markov = markov_derivative(F, x, cfg)
    one_sided = one_sided_all(F, x, cfg)
    evidence: List[str] = []

    if not markov.exists:
        case = Case.NOT_DIFFERENTIABLE if markov.verdict.refuted else Case.INCONCLUSIVE
        evidence.append(f"dF({x}) is {markov.verdict.value}")
        evidence.extend(markov.notes[:-1])
        return ClassificationReport(case, markov, one_sided, evidence=evidence)

    dpm = None
    ufa = None
    if one_sided.all_exist:
        f_minus, f_plus, g_minus, g_plus = _values(one_sided)
        dpm = check_dpm(one_sided, tol)
        ufa = all(within(one_sided_formula(one_sided, side), markov.value, tol) for side in SIDES)
        if _close(f_minus, f_plus, tol) and _close(g_minus, g_plus, tol):
            case = Case.CASE_A_BOTH_DIFFERENTIABLE
            evidence.append(f"f'({x}) = {f_plus} and g'({x}) = {g_plus}")
        elif dpm:
            case = Case.CASE_B_CROSSED_DERIVATIVES
            evidence.append(f"f'-({x}) = g'+({x}) = {f_minus} and g'-({x}) = f'+({x}) = {g_minus}")
        else:
            case = Case.INCONCLUSIVE
            evidence.append("all one-sided derivatives exist but neither case A nor case B applies")
    elif one_sided.any_refuted:
        case = Case.CASE_C_BEYOND_THEOREM1
        for name, s in one_sided.items():
            if s.verdict.refuted:
                evidence.append(f"{name} is {s.verdict.value}")
                evidence.extend(s.notes)
    else:
        case = Case.INCONCLUSIVE
        evidence.append("some one-sided derivatives are inconclusive")
    evidence.insert(0, f"dF({x}) = {markov.value}")
    logger.info("classified %s at %s as %s", F.name, x, case.value)
    return ClassificationReport(case, markov, one_sided, dpm, ufa, evidence)


def verify_theorem2(F: IntervalFunction, x: QuadNum, cfg: LadderConfig, side: Optional[Side] = None,
                    tol: Optional[float] = None) -> bool:
    """The one-sided Markov derivative equals [min, max] of the one-sided endpoint slopes.

    Args:
        side: Side to check; both when None

    Raises:
        MissingOneSided: the endpoint slopes on a checked side do not exist
    """
    tol = _classifier_tol(tol)
    d = one_sided_all(F, x, cfg)
    for s in (SIDES if side is None else (side,)):
        expected = one_sided_formula(d, s)
        measured = one_sided_markov_derivative(F, x, s, cfg)
        if not measured.exists or not within(expected, measured.value, tol):
            logger.info("one-sided formula fails %s of %s: expected %s, measured %s (%s)",
                        s.value, x, expected, measured.value, measured.verdict.value)
            return False
    return True


def verify_corollary_ufa(F: IntervalFunction, x: QuadNum, witness: Witness, cfg: LadderConfig,
                         tol: Optional[float] = None, probes: Optional[int] = None) -> bool:
    """Check that dF(x) equals the [min, max] slope interval on both sides.

    The named witness must be continuous at x and at probe points on each
    side; the conclusion is then licensed.

    Raises:
        PreconditionFailed: dF(x) does not exist
        WitnessNotContinuous: the witness fails its continuity check
    """
    tol = _classifier_tol(tol)
    probes = int(settings.get("probe_count")) if probes is None else probes
    x = QuadNum.coerce(x)
    markov = markov_derivative(F, x, cfg)
    if not markov.exists:
        raise PreconditionFailed(f"dF({x}) is {markov.verdict.value}")
    expr = witness.expression(F)
    at_x = continuity_at(expr, x, cfg, F.omega)
    if not at_x.continuous:
        raise WitnessNotContinuous(f"witness {witness.value}: {at_x.reason}")
    for side in SIDES:
        ok, reason = witness_continuity(expr, x, F.omega, side, cfg, probes)
        if not ok:
            raise WitnessNotContinuous(f"witness {witness.value}: {reason}")
    d = one_sided_all(F, x, cfg)
    if not d.all_exist:
        logger.info("one-sided derivatives of %s at %s are missing", F.name, x)
        return False
    return all(within(one_sided_formula(d, side), markov.value, tol) for side in SIDES)


@dataclass
class ScanReport:
    """Classification of many points; `consistent` is the slope identity over all of them."""

    reports: List[ClassificationReport]
    points: List[QuadNum]

    @property
    def consistent(self) -> bool:
        """Every point with an existing dF has all four slopes and the [min, max] identity."""
        return all(r.ufa_checked for r in self.reports if r.markov.exists)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "consistent": self.consistent,
            "points": [
                {"x": str(p), "case": r.case.value, "ufa_checked": r.ufa_checked}
                for p, r in zip(self.points, self.reports)
            ],
        }


def scan_points(F: IntervalFunction, points: Sequence[QuadNum], cfg: LadderConfig,
                workers: Optional[int] = None) -> ScanReport:
    """Classify F at every point in a thread pool."""
    points = [QuadNum.coerce(p) for p in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(lambda p: classify(F, p, cfg), points))
    if not all(r.markov.verdict is Verdict.EXISTS for r in reports):
        logger.info("dF does not exist at every scanned point of %s", F.name)
    return ScanReport(reports, points)
