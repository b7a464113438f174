"""Exact scalars and intervals."""

from .interval import (
    Interval,
    Scalar,
    hausdorff_dist,
    markov_diff,
    negate,
    scalar_to_float,
    scalar_to_text,
    scale_div,
    within,
    zero_like,
)
from .quadnum import ONE, SQRT2, ZERO, QuadNum

__all__ = [
    "Interval",
    "ONE",
    "QuadNum",
    "SQRT2",
    "Scalar",
    "ZERO",
    "hausdorff_dist",
    "markov_diff",
    "negate",
    "scalar_to_float",
    "scalar_to_text",
    "scale_div",
    "within",
    "zero_like",
]
