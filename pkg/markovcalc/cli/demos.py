"""Scripted reproductions of the worked examples.

Each demo returns its output lines and raises AssertionError when a computed
value differs from the expected one.
"""

from fractions import Fraction
from typing import Callable, Dict, List

from ..calculus.classifier import classify, one_sided_formula, verify_theorem2
from ..calculus.convergence import Verdict
from ..calculus.derivative import (
    SIDES,
    continuity_at,
    difference_quotient,
    markov_derivative,
    one_sided_all,
    one_sided_markov_derivative,
)
from ..calculus.ladder import LadderConfig
from ..catalog import Named, get_function
from ..core.interval import Interval, within
from ..core.quadnum import SQRT2, QuadNum
from .render import render_derivative, render_one_sided, render_report

ZERO = QuadNum(0)


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


def demo_lemma1(cfg: LadderConfig) -> List[str]:
    """The four sign/rationality cases of the quotient at 0, then the one-sided failure."""
    F = get_function(Named.LEMMA1)
    unit = Interval(QuadNum(0), QuadNum(1))
    cases = [
        ("t > 0 rational", QuadNum(Fraction(1, 2))),
        ("t > 0 irrational", SQRT2 / 4),
        ("t < 0 rational", QuadNum(Fraction(-1, 2))),
        ("t < 0 irrational", -SQRT2 / 4),
    ]
    lines = [f"F(t) = [f(t), g(t)] with {F.to_source().strip().replace(chr(10), '; ')}"]
    for label, t in cases:
        q = difference_quotient(F, ZERO, t)
        lines.append(f"{label:<17} t = {str(t):<12} (F(t) (-) F(0)) / t = {q}")
        _check(q == unit, f"{label}: expected {unit}, got {q}")
    d = one_sided_all(F, ZERO, cfg)
    lines.extend(render_one_sided(d))
    _check(all(s.verdict.refuted for _, s in d.items()), "a one-sided endpoint derivative exists")
    lines.append("dF(0) = [0, 1] although none of f'-(0), f'+(0), g'-(0), g'+(0) exists")
    return lines


def demo_theorem2(cfg: LadderConfig) -> List[str]:
    """One-sided Markov derivatives of [t, t^2 + 1] against the [min, max] slope formula."""
    F = get_function(Named.SMOOTH_PAIR)
    d = one_sided_all(F, ZERO, cfg)
    lines = render_one_sided(d)
    for side in SIDES:
        expected = one_sided_formula(d, side)
        measured = one_sided_markov_derivative(F, ZERO, side, cfg)
        lines.append(f"{side.value:<5} formula {expected.to_float()}  measured {_shown(measured.value)}")
        _check(measured.exists and within(expected, measured.value, 1e-6), f"{side.value} side disagrees")
    _check(verify_theorem2(F, ZERO, cfg), "slope formula does not match the measured derivative")
    return lines


def demo_dpm(cfg: LadderConfig) -> List[str]:
    """[-|t|, |t|] at 0: differentiable through the crossed one-sided equalities."""
    F = get_function(Named.ABS_PAIR)
    report = classify(F, ZERO, cfg)
    lines = render_report(report, f"{F.name} at 0")
    expected = Interval(-1.0, 1.0)
    _check(report.markov.exists and within(report.markov.value.to_float(), expected, 1e-9), "dF(0) != [-1, 1]")
    _check(report.dpm_holds, "crossed equalities fail")
    return lines


def demo_lemcont(cfg: LadderConfig) -> List[str]:
    """A jump of the endpoints rules out Markov's derivative."""
    F = get_function(Named.UNIT_JUMP)
    result = markov_derivative(F, ZERO, cfg)
    lines = render_derivative(result, f"d{F.name}(0)")
    check = continuity_at(F.f, ZERO, cfg, F.omega)
    lines.append(f"f continuous at 0: {'yes' if check.continuous else 'no'} ({check.reason})")
    _check(result.verdict is Verdict.NOT_EXISTS_DIVERGENT, f"expected divergence, got {result.verdict.value}")
    _check(not check.continuous, "f reported continuous across the jump")
    return lines


def _shown(value) -> str:
    return "-" if value is None else str(value.to_float())


DEMOS: Dict[str, Callable[[LadderConfig], List[str]]] = {
    "lemma1": demo_lemma1,
    "theorem2": demo_theorem2,
    "dpm": demo_dpm,
    "lemcont": demo_lemcont,
}
