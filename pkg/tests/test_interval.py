import random
from fractions import Fraction

import pytest

from markovcalc.core.interval import (
    Interval,
    hausdorff_dist,
    markov_diff,
    negate,
    scale_div,
    within,
    zero_like,
)
from markovcalc.core.quadnum import SQRT2, QuadNum
from markovcalc.errors import DivisionByZero, IntervalOrderError

ZERO = QuadNum(0)


def iv(lo, hi) -> Interval:
    return Interval(QuadNum.coerce(lo), QuadNum.coerce(hi))


def random_quad(rng: random.Random) -> QuadNum:
    a = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
    b = Fraction(rng.randint(-50, 50), rng.randint(1, 12)) if rng.random() < 0.5 else 0
    return QuadNum(a, b)


def random_interval(rng: random.Random) -> Interval:
    x, y = random_quad(rng), random_quad(rng)
    return Interval(min(x, y), max(x, y))


def test_construction_checks_order():
    with pytest.raises(IntervalOrderError):
        iv(1, 0)
    with pytest.raises(ValueError):
        iv(SQRT2, 1)


def test_mixed_kinds_are_rejected():
    with pytest.raises(TypeError):
        Interval(QuadNum(0), 1.0)


def test_basic_properties():
    a = iv(-1, 3)
    assert a.width() == 4
    assert not a.is_degenerate()
    assert iv(2, 2).is_degenerate()
    assert a.to_dict() == {"lo": "-1", "hi": "3"}
    assert str(iv(Fraction(1, 2), 1)) == "[1/2, 1]"
    assert a.to_float() == Interval(-1.0, 3.0)


def test_markov_diff_examples():
    # endpoint differences 1 - 0 and 2 - 3
    assert markov_diff(iv(1, 2), iv(0, 3)) == iv(-1, 1)
    assert markov_diff(iv(Fraction(1, 2), 1), iv(0, 1)) == iv(0, Fraction(1, 2))
    assert markov_diff(iv(2, 5), iv(2, 5)) == zero_like(iv(2, 5))


def test_markov_diff_is_not_minkowski():
    # Minkowski difference would give [-2, 2]
    assert markov_diff(iv(0, 1), iv(0, 1)) == iv(0, 0)


def test_scale_div_swaps_for_negative_divisors():
    assert scale_div(iv(-1, 2), QuadNum(2)) == iv(Fraction(-1, 2), 1)
    assert scale_div(iv(-1, 2), QuadNum(-1)) == iv(-2, 1)
    assert scale_div(iv(0, SQRT2), SQRT2) == iv(0, 1)
    with pytest.raises(DivisionByZero):
        scale_div(iv(0, 1), ZERO)


def test_float_intervals():
    a = Interval(0.5, 1.5)
    assert scale_div(a, -0.5) == Interval(-3.0, -1.0)
    assert hausdorff_dist(a, Interval(0.0, 1.0)) == 0.5
    assert zero_like(a) == Interval(0.0, 0.0)


def test_hausdorff_and_within():
    assert hausdorff_dist(iv(0, 1), iv(0, 3)) == 2
    assert within(iv(0, 1), iv(Fraction(1, 10**10), 1), 1e-9)
    assert not within(iv(0, 1), iv(0, 2), 0.5)


def test_algebra_on_ten_thousand_random_pairs():
    rng = random.Random(20240611)
    zero = iv(0, 0)
    for _ in range(10_000):
        a, b, c = random_interval(rng), random_interval(rng), random_interval(rng)
        assert markov_diff(a, a) == zero
        assert markov_diff(b, a) == negate(markov_diff(a, b))
        assert hausdorff_dist(markov_diff(a, b), zero) == hausdorff_dist(a, b)
        assert hausdorff_dist(a, c) <= hausdorff_dist(a, b) + hausdorff_dist(b, c)
