"""Intervals and the operators Markov's calculus is built on."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Union

from ..errors import DivisionByZero, IntervalOrderError
from .quadnum import QuadNum

Scalar = Union[QuadNum, float]


def scalar_to_float(value: Scalar) -> float:
    """Float image of an exact or float scalar."""
    if isinstance(value, QuadNum):
        return value.to_float()
    return float(value)


def scalar_to_text(value: Scalar) -> str:
    """Stable text of a scalar: the field form for exact values, repr for floats."""
    if isinstance(value, QuadNum):
        return value.to_text()
    return repr(float(value))


def _is_zero(value: Scalar) -> bool:
    return value == 0


@dataclass(frozen=True)
class Interval:
    """A closed interval [lo, hi] with lo <= hi.

    Both endpoints are QuadNum in exact mode or float in float mode; the two
    kinds are never mixed inside one interval.
    """

    lo: Scalar
    hi: Scalar

    def __post_init__(self):
        if isinstance(self.lo, QuadNum) != isinstance(self.hi, QuadNum):
            raise TypeError("interval endpoints must both be exact or both be float")
        if self.lo > self.hi:
            raise IntervalOrderError(
                f"interval lower endpoint {scalar_to_text(self.lo)} exceeds "
                f"upper endpoint {scalar_to_text(self.hi)}"
            )

    @classmethod
    def point(cls, value: Scalar) -> "Interval":
        return cls(value, value)

    @property
    def exact(self) -> bool:
        return isinstance(self.lo, QuadNum)

    def width(self) -> Scalar:
        return self.hi - self.lo

    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def to_float(self) -> "Interval":
        return Interval(scalar_to_float(self.lo), scalar_to_float(self.hi))

    def to_dict(self) -> Dict[str, Any]:
        return {"lo": scalar_to_text(self.lo), "hi": scalar_to_text(self.hi)}

    def __str__(self) -> str:
        return f"[{scalar_to_text(self.lo)}, {scalar_to_text(self.hi)}]"


def zero_like(a: Interval) -> Interval:
    """The interval [0, 0] of the same scalar kind as `a`."""
    zero = QuadNum(0) if a.exact else 0.0
    return Interval(zero, zero)


def markov_diff(a: Interval, b: Interval) -> Interval:
    """Markov's difference A (-) B.

    Args:
        a: Minuend
        b: Subtrahend

    Returns:
        [min(a.lo - b.lo, a.hi - b.hi), max(a.lo - b.lo, a.hi - b.hi)]
    """
    dl = a.lo - b.lo
    dh = a.hi - b.hi
    return Interval(dl, dh) if dl <= dh else Interval(dh, dl)


def hausdorff_dist(a: Interval, b: Interval) -> Scalar:
    """Hausdorff distance max(|a.lo - b.lo|, |a.hi - b.hi|)."""
    return max(abs(a.lo - b.lo), abs(a.hi - b.hi))


def scale_div(a: Interval, s: Scalar) -> Interval:
    """Divide both endpoints by a nonzero scalar, swapping them when s < 0.

    Raises:
        DivisionByZero: if s is zero
    """
    if _is_zero(s):
        raise DivisionByZero("interval divided by zero")
    lo = a.lo / s
    hi = a.hi / s
    return Interval(lo, hi) if s > 0 else Interval(hi, lo)


def negate(a: Interval) -> Interval:
    return Interval(-a.hi, -a.lo)


def within(a: Interval, b: Interval, tol: float) -> bool:
    """True when the Hausdorff distance between a and b is at most tol."""
    return scalar_to_float(hausdorff_dist(a, b)) <= tol
