"""Named interval functions used by the demos, the tests and the functions/ files."""

from enum import Enum
from typing import Dict, List

from .errors import ParseError
from .expr.function import IntervalFunction, parse_definition


class Named(Enum):
    """Functions with a known derivative story at 0."""
    LEMMA1 = "lemma1"
    ABS_PAIR = "abs_pair"
    SMOOTH_PAIR = "smooth_pair"
    AFFINE_PAIR = "affine_pair"
    UNIT_JUMP = "unit_jump"
    DEGENERATE = "degenerate"


SOURCES: Dict[Named, str] = {
    # dF(0) = [0, 1] while no one-sided endpoint derivative exists
    Named.LEMMA1: (
        "f = piecewise(rational(t): t, else: 0)\n"
        "g = piecewise(rational(t): 1, else: t + 1)\n"
        "omega = (-1, 1)\n"
    ),
    Named.ABS_PAIR: (
        "f = -abs(t)\n"
        "g = abs(t)\n"
        "omega = (-1, 1)\n"
    ),
    Named.SMOOTH_PAIR: (
        "f = t\n"
        "g = t^2 + 1\n"
        "omega = (-1, 1)\n"
    ),
    Named.AFFINE_PAIR: (
        "f = t\n"
        "g = t + 1\n"
        "omega = (-1, 1)\n"
    ),
    Named.UNIT_JUMP: (
        "f = piecewise(t > 0: 1, else: 0)\n"
        "g = f + 1\n"
        "omega = (-1, 1)\n"
    ),
    Named.DEGENERATE: (
        "f = t\n"
        "g = t\n"
        "omega = (-10, 10)\n"
    ),
}


def available() -> List[str]:
    return [n.value for n in Named]


def get_function(name) -> IntervalFunction:
    """Parse a named function.

    Args:
        name: A `Named` member or its string value

    Raises:
        ParseError: for unknown names
    """
    try:
        named = name if isinstance(name, Named) else Named(name)
    except ValueError:
        raise ParseError(f"unknown function {name!r}; known: {', '.join(available())}") from None
    return parse_definition(SOURCES[named], named.value)
