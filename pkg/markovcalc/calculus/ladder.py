"""Ladders: geometric sequences of sample points approaching x from one side."""

from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from ..core.quadnum import QuadNum
from ..errors import ConfigError, EmptyLadder
from ..settings import settings

logger = logging.getLogger(__name__)

_HALF_SQRT2 = QuadNum(0, Fraction(1, 2))


class Side(Enum):
    """Direction from which a ladder approaches x."""
    LEFT = "left"
    RIGHT = "right"

    @classmethod
    def from_str(cls, value: str) -> "Side":
        try:
            return cls(value.lower())
        except ValueError:
            raise ConfigError(f"unknown side {value!r} (expected left or right)") from None

    @property
    def sign(self) -> int:
        return 1 if self is Side.RIGHT else -1

    @property
    def symbol(self) -> str:
        return "+" if self is Side.RIGHT else "-"


class Flavor(Enum):
    """Rationality class of the ladder points."""
    RATIONAL = "rational"
    IRRATIONAL = "irrational"


class Mode(Enum):
    """Exact QuadNum arithmetic or float64 arithmetic for the quotient values."""
    EXACT = "exact"
    FLOAT = "float"

    @classmethod
    def from_str(cls, value: str) -> "Mode":
        try:
            return cls(value.lower())
        except ValueError:
            raise ConfigError(f"unknown mode {value!r} (expected exact or float)") from None


@dataclass(frozen=True)
class LadderConfig:
    """Knobs of the limit process.

    `h0` may be left unset; it is then taken as a quarter of the distance from
    x to the boundary of the domain when the ladder is built. Exact mode looks
    at `depth` rungs first and extends to `max_depth` only when the trace is
    neither exactly constant nor divergent.
    """

    h0: Optional[QuadNum] = None
    ratio: Fraction = Fraction(1, 2)
    depth: int = 12
    max_depth: int = 40
    tol_abs: float = 1e-9
    tol_rel: float = 1e-7
    divergence_bound: float = 1e12
    mode: Mode = Mode.EXACT

    def __post_init__(self):
        object.__setattr__(self, "ratio", Fraction(self.ratio))
        if self.h0 is not None:
            h0 = QuadNum.coerce(self.h0)
            if h0.sign() <= 0:
                raise ConfigError("h0 must be positive")
            object.__setattr__(self, "h0", h0)
        if not 0 < self.ratio < 1:
            raise ConfigError("ratio must lie in (0, 1)")
        if self.depth < 8:
            raise ConfigError("depth must be at least 8")
        if self.max_depth < self.depth:
            object.__setattr__(self, "max_depth", self.depth)
        if self.tol_abs < 0 or self.tol_rel < 0:
            raise ConfigError("tolerances must be nonnegative")
        if self.divergence_bound <= 0:
            raise ConfigError("divergence_bound must be positive")

    @classmethod
    def from_settings(cls, mode: Optional[Mode] = None, store=settings) -> "LadderConfig":
        """Build a configuration from the settings store.

        Args:
            mode: Arithmetic mode; defaults to the `mode` setting
            store: Settings object to read from

        Returns:
            The ladder configuration
        """
        if mode is None:
            mode = Mode.from_str(store.get("mode", "exact"))
        if mode is Mode.EXACT:
            depth = int(store.get("depth_exact"))
            max_depth = int(store.get("max_depth"))
        else:
            depth = int(store.get("depth_float"))
            max_depth = depth
        return cls(
            ratio=Fraction(str(store.get("ratio"))),
            depth=depth,
            max_depth=max_depth,
            tol_abs=float(store.get("tol_abs")),
            tol_rel=float(store.get("tol_rel")),
            divergence_bound=float(store.get("divergence_bound")),
            mode=mode,
        )

    def replace(self, **changes) -> "LadderConfig":
        return dataclasses.replace(self, **changes)

    def tolerance(self, magnitude: float) -> float:
        return self.tol_abs + self.tol_rel * abs(magnitude)

    def resolved(self, omega: Optional[Tuple[QuadNum, QuadNum]], x: QuadNum) -> "LadderConfig":
        """A copy with a concrete rational h0 for the point x."""
        if self.h0 is not None:
            return self if self.h0.is_rational() else self.replace(h0=dyadic_below(self.h0))
        if omega is None:
            raise ConfigError("h0 is unset and no domain was given to derive it from")
        distance = min(x - omega[0], omega[1] - x)
        if distance.sign() <= 0:
            raise EmptyLadder(f"x = {x} is not interior to ({omega[0]}, {omega[1]})")
        return self.replace(h0=dyadic_below(distance / 4))


def dyadic_below(h: QuadNum) -> QuadNum:
    """A rational in [h/2, h], equal to h when h is already rational."""
    if h.is_rational():
        return h
    m = 0
    while (h * (2 ** m)).floor() < 2:
        m += 1
    return QuadNum(Fraction((h * (2 ** m)).floor(), 2 ** m))


def _rational_near(target: QuadNum, step: Fraction, side: Side) -> QuadNum:
    """A dyadic rational within a quarter step of target, on x's side of it."""
    m = 0
    while step * (2 ** m) < 4:
        m += 1
    scaled = target * (2 ** m)
    # round toward x so the point never overshoots the rung
    n = scaled.floor() if side is Side.RIGHT else scaled.ceil()
    return QuadNum(Fraction(n, 2 ** m))


def rung(x: QuadNum, side: Side, flavor: Flavor, step: Fraction) -> QuadNum:
    """The ladder point at distance about `step` from x."""
    if x.is_rational():
        offset = QuadNum(step) if flavor is Flavor.RATIONAL else _HALF_SQRT2 * step
        return x + offset if side is Side.RIGHT else x - offset
    target = x + step if side is Side.RIGHT else x - step
    if flavor is Flavor.IRRATIONAL:
        return target
    return _rational_near(target, step, side)


def ladder_steps(cfg: LadderConfig, count: int, start: int = 0) -> List[Fraction]:
    if cfg.h0 is None or not cfg.h0.is_rational():
        raise ConfigError("ladder steps need a rational h0; call LadderConfig.resolved first")
    h0 = cfg.h0.a
    return [h0 * cfg.ratio ** k for k in range(start, count)]


def ladder_points(
    x: QuadNum,
    side: Side,
    flavor: Flavor,
    cfg: LadderConfig,
    omega: Optional[Tuple[QuadNum, QuadNum]] = None,
    count: Optional[int] = None,
    start: int = 0,
) -> List[QuadNum]:
    """Points x +- h0*ratio^k for k = start..count-1.

    The RATIONAL flavor yields points with b = 0 and the IRRATIONAL flavor
    points with b != 0. For rational x the irrational steps are h*sqrt(2)/2; for
    irrational x the rational points are dyadic rationals within a quarter
    step of x +- h.

    Args:
        x: Point the ladder approaches
        side: LEFT or RIGHT
        flavor: RATIONAL or IRRATIONAL
        cfg: Ladder configuration
        omega: Domain; points outside it are dropped
        count: Number of rungs, defaults to cfg.depth
        start: First rung index

    Returns:
        The ladder points, coarsest first

    Raises:
        EmptyLadder: if no point fits in omega
    """
    x = QuadNum.coerce(x)
    cfg = cfg.resolved(omega, x)
    count = cfg.depth if count is None else count
    points = [rung(x, side, flavor, step) for step in ladder_steps(cfg, count, start)]
    if omega is not None:
        kept = [p for p in points if omega[0] < p < omega[1]]
        if len(kept) < len(points):
            logger.debug("ladder truncated: %d of %d points outside the domain", len(points) - len(kept), len(points))
        if not kept and points:
            raise EmptyLadder(f"no {flavor.value} {side.value} ladder point of x = {x} lies in the domain")
        points = kept
    return points
