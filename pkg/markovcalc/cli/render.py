"""Text and JSON rendering of results for the command line."""

import json
from typing import Any, Dict, List, Optional

from ..calculus.classifier import ClassificationReport, ScanReport
from ..calculus.derivative import DerivativeResult, LadderTrace, OneSidedDerivatives
from ..core.interval import Interval, scalar_to_text


def dump_json(payload: Dict[str, Any]) -> str:
    """Stable JSON: sorted keys, fixed indentation."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def interval_lines(value: Interval, label: str) -> List[str]:
    return [f"{label} = {value}", f"{' ' * len(label)} ~ {value.to_float()}"]


def _optional(value: Optional[Interval]) -> str:
    return "-" if value is None else str(value)


def _last_rung(trace: LadderTrace) -> str:
    if not trace.points:
        return "-"
    t, q = trace.points[-1]
    return f"t = {t} -> {q if isinstance(q, Interval) else scalar_to_text(q)}"


def render_derivative(result: DerivativeResult, title: str) -> List[str]:
    lines = [f"{title}: {result.verdict.value}"]
    if result.value is not None:
        lines.extend(interval_lines(result.value, "  value"))
        if result.approximate:
            lines.append("  (approximate: last quotient within tolerance, not a settled limit)")
    lines.append(f"  left  = {_optional(result.left)}")
    lines.append(f"  right = {_optional(result.right)}")
    if result.ladders:
        lines.append("  ladders:")
        for trace in result.ladders:
            lines.append(
                f"    {trace.side.value:<5} {trace.flavor.value:<10} {trace.verdict.value:<22} "
                f"{len(trace.points):>2} rungs, last {_last_rung(trace)}"
            )
    for note in result.notes:
        lines.append(f"  note: {note}")
    return lines


def render_one_sided(d: OneSidedDerivatives) -> List[str]:
    labels = {"f_minus": "f'-", "f_plus": "f'+", "g_minus": "g'-", "g_plus": "g'+"}
    lines = ["one-sided endpoint derivatives:"]
    for name, s in d.items():
        value = "-" if s.value is None else scalar_to_text(s.value)
        if s.approximate:
            value += " (approximate)"
        lines.append(f"  {labels[name]:<4} {s.verdict.value:<22} {value}")
    return lines


def render_report(report: ClassificationReport, title: str) -> List[str]:
    lines = [f"{title}: {report.case.value}"]
    lines.extend(render_derivative(report.markov, "  dF"))
    lines.extend("  " + line for line in render_one_sided(report.one_sided))
    lines.append(f"  crossed equalities hold: {_flag(report.dpm_holds)}")
    lines.append(f"  [min, max] slope identity: {_flag(report.ufa_checked)}")
    lines.extend(f"  evidence: {line}" for line in report.evidence)
    return lines


def render_scan(scan: ScanReport) -> List[str]:
    lines = [f"{'x':>24}  case"]
    for p, r in zip(scan.points, scan.reports):
        lines.append(f"{str(p):>24}  {r.case.value}")
    lines.append(f"every differentiable point satisfies the slope identity: {_flag(scan.consistent)}")
    return lines


def render_witness(results: Dict[str, List[str]]) -> List[str]:
    lines = []
    for side, failures in results.items():
        if failures:
            lines.append(f"{side}: rejected")
            lines.extend(f"  {failure}" for failure in failures)
        else:
            lines.append(f"{side}: accepted")
    return lines


def _flag(value: Optional[bool]) -> str:
    return "n/a" if value is None else ("yes" if value else "no")
