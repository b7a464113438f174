"""Subcommand implementations. Each returns the process exit code."""

import logging
from argparse import Namespace
from fractions import Fraction
from typing import List

from ..calculus.classifier import Witness, classify, scan_points, verify_corollary_ufa
from ..calculus.derivative import SIDES, markov_derivative, one_sided_all, one_sided_markov_derivative
from ..calculus.ladder import LadderConfig, Mode, Side
from ..calculus.witness import explain_linear_relation, load_witness
from ..core.interval import scalar_to_float
from ..core.quadnum import QuadNum
from ..errors import ParseError, WitnessNotContinuous
from ..expr.function import eval_interval, load_function
from ..expr.parser import parse_constant
from ..oracle import agrees_with, brute_quotient_scan, write_csv
from ..settings import settings
from .demos import DEMOS
from .render import (
    dump_json,
    interval_lines,
    render_derivative,
    render_one_sided,
    render_report,
    render_scan,
    render_witness,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EVALUATION = 3
EXIT_INTERNAL = 4


def ladder_config(args: Namespace) -> LadderConfig:
    """Settings-backed configuration with the command-line overrides applied."""
    mode = Mode.from_str(args.mode) if getattr(args, "mode", None) else None
    cfg = LadderConfig.from_settings(mode)
    depth = getattr(args, "depth", None)
    if depth is not None:
        max_depth = max(depth, cfg.max_depth) if cfg.mode is Mode.EXACT else depth
        cfg = cfg.replace(depth=depth, max_depth=max_depth)
    tol = getattr(args, "tol", None)
    if tol is not None:
        cfg = cfg.replace(tol_abs=tol)
    return cfg


def point(text: str) -> QuadNum:
    """A point of Q(sqrt 2) from command-line text such as `1/2` or `sqrt2/4`."""
    return parse_constant(text)


def _emit(args: Namespace, payload, lines: List[str]) -> None:
    print(dump_json(payload) if getattr(args, "json", False) else "\n".join(lines))


def cmd_eval(args: Namespace) -> int:
    F = load_function(args.file)
    t = point(args.t)
    value = eval_interval(F, t)
    payload = {"function": F.name, "t": t.to_text(), "value": value.to_dict()}
    _emit(args, payload, interval_lines(value, f"{F.name}({t})"))
    return EXIT_OK


def cmd_diff(args: Namespace) -> int:
    F = load_function(args.file)
    x = point(args.x)
    cfg = ladder_config(args)
    if args.side == "both":
        result = markov_derivative(F, x, cfg)
    else:
        result = one_sided_markov_derivative(F, x, Side.from_str(args.side), cfg)
    one_sided = one_sided_all(F, x, cfg)
    payload = {
        "function": F.name,
        "x": x.to_text(),
        "mode": cfg.mode.value,
        "side": args.side,
        "derivative": result.to_dict(),
        "one_sided": one_sided.to_dict(),
    }
    lines = render_derivative(result, f"d{F.name}({x})") + render_one_sided(one_sided)

    code = EXIT_OK
    if args.verify or args.csv:
        rows = brute_quotient_scan(
            F, x, n=int(settings.get("oracle_points")), ratio=float(cfg.ratio), depth=cfg.max_depth
        )
        if args.csv:
            with open(args.csv, "w", encoding="utf-8", newline="") as stream:
                write_csv(rows, stream)
            logger.info("oracle trace written to %s", args.csv)
        if args.verify:
            scale = 0.0 if result.value is None else max(abs(scalar_to_float(result.value.lo)),
                                                         abs(scalar_to_float(result.value.hi)))
            agreed = agrees_with(result, rows, 10 * cfg.tolerance(scale))
            payload["oracle"] = {"points": len(rows), "agrees": agreed}
            lines.append(f"oracle: {'agrees' if agreed else 'DISAGREES'} ({len(rows)} points)")
            if not agreed:
                code = EXIT_INTERNAL
    _emit(args, payload, lines)
    return code


def cmd_classify(args: Namespace) -> int:
    F = load_function(args.file)
    x = point(args.x)
    cfg = ladder_config(args)
    report = classify(F, x, cfg)
    if args.witness:
        if report.markov.exists:
            try:
                report.ufa_checked = verify_corollary_ufa(F, x, Witness.from_str(args.witness), cfg)
            except WitnessNotContinuous as e:
                report.ufa_checked = False
                report.evidence.append(str(e))
        else:
            report.evidence.append("witness not checked: dF does not exist")
    payload = {"function": F.name, "x": x.to_text(), "mode": cfg.mode.value, "report": report.to_dict()}
    _emit(args, payload, render_report(report, f"{F.name} at {x}"))
    return EXIT_OK


def cmd_demo(args: Namespace) -> int:
    demo = DEMOS.get(args.name)
    if demo is None:
        raise ParseError(f"unknown demo {args.name!r}; known: {', '.join(sorted(DEMOS))}")
    print("\n".join(demo(ladder_config(args))))
    return EXIT_OK


def cmd_scan(args: Namespace) -> int:
    F = load_function(args.file)
    lo, hi = point(args.start), point(args.stop)
    if not lo < hi:
        raise ParseError(f"empty scan range ({lo}, {hi})")
    n = args.points
    if n < 1:
        raise ParseError("--points must be positive")
    points = [lo + (hi - lo) * Fraction(k, n + 1) for k in range(1, n + 1)]
    scan = scan_points(F, points, ladder_config(args))
    payload = {"function": F.name, "scan": scan.to_dict()}
    _emit(args, payload, render_scan(scan))
    return EXIT_OK


def cmd_witness(args: Namespace) -> int:
    F = load_function(args.file)
    w = load_witness(args.witness_file, F)
    x = point(args.x)
    cfg = ladder_config(args)
    sides = SIDES if args.side == "both" else (Side.from_str(args.side),)
    probes = int(settings.get("probe_count"))
    results = {side.value: explain_linear_relation(F, w, side, x, cfg, probes) for side in sides}
    payload = {
        "function": F.name,
        "x": x.to_text(),
        "accepted": {side: not failures for side, failures in results.items()},
        "failures": results,
    }
    _emit(args, payload, render_witness(results))
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "diff": cmd_diff,
    "classify": cmd_classify,
    "demo": cmd_demo,
    "scan": cmd_scan,
    "witness": cmd_witness,
}
