from fractions import Fraction

import pytest

from markovcalc.calculus.ladder import (
    Flavor,
    LadderConfig,
    Mode,
    Side,
    dyadic_below,
    ladder_points,
    rung,
)
from markovcalc.core.quadnum import SQRT2, QuadNum
from markovcalc.errors import ConfigError, EmptyLadder
from markovcalc.settings import Settings

ZERO = QuadNum(0)
HALF_CFG = LadderConfig(h0=Fraction(1, 2))


def test_rational_ladder_to_the_right():
    points = ladder_points(ZERO, Side.RIGHT, Flavor.RATIONAL, HALF_CFG, count=3)
    assert points == [QuadNum(Fraction(1, 2)), QuadNum(Fraction(1, 4)), QuadNum(Fraction(1, 8))]


def test_rational_ladder_to_the_left():
    points = ladder_points(ZERO, Side.LEFT, Flavor.RATIONAL, HALF_CFG, count=3)
    assert points == [QuadNum(Fraction(-1, 2)), QuadNum(Fraction(-1, 4)), QuadNum(Fraction(-1, 8))]


def test_irrational_ladder():
    points = ladder_points(ZERO, Side.RIGHT, Flavor.IRRATIONAL, HALF_CFG, count=3)
    assert points == [SQRT2 / 4, SQRT2 / 8, SQRT2 / 16]
    assert not any(p.is_rational() for p in points)


def test_default_depth_and_domain_derived_step():
    omega = (QuadNum(-1), QuadNum(1))
    points = ladder_points(QuadNum(Fraction(1, 2)), Side.RIGHT, Flavor.RATIONAL, LadderConfig(), omega)
    assert len(points) == 12
    # a quarter of the distance to 1
    assert points[0] == QuadNum(Fraction(1, 2) + Fraction(1, 8))


def test_extension_continues_the_sequence():
    cfg = LadderConfig(h0=Fraction(1, 2), depth=8)
    head = ladder_points(ZERO, Side.RIGHT, Flavor.RATIONAL, cfg, count=8)
    tail = ladder_points(ZERO, Side.RIGHT, Flavor.RATIONAL, cfg, count=10, start=8)
    assert tail[0] == head[-1] / 2
    assert len(tail) == 2


def test_points_outside_the_domain_are_dropped():
    omega = (QuadNum(-1), QuadNum(Fraction(1, 3)))
    points = ladder_points(ZERO, Side.RIGHT, Flavor.RATIONAL, HALF_CFG, omega, count=3)
    assert points == [QuadNum(Fraction(1, 4)), QuadNum(Fraction(1, 8))]


def test_empty_ladder():
    omega = (QuadNum(-1), QuadNum(Fraction(1, 100)))
    with pytest.raises(EmptyLadder):
        ladder_points(ZERO, Side.RIGHT, Flavor.RATIONAL, HALF_CFG, omega, count=3)
    with pytest.raises(EmptyLadder):
        ladder_points(QuadNum(1), Side.RIGHT, Flavor.RATIONAL, LadderConfig(), (QuadNum(-1), QuadNum(1)))


def test_missing_domain_and_step():
    with pytest.raises(ConfigError):
        ladder_points(ZERO, Side.RIGHT, Flavor.RATIONAL, LadderConfig())


@pytest.mark.parametrize("side", list(Side))
def test_irrational_base_point(side):
    x = SQRT2 / 2
    cfg = LadderConfig(h0=Fraction(1, 8))
    rational = ladder_points(x, side, Flavor.RATIONAL, cfg)
    irrational = ladder_points(x, side, Flavor.IRRATIONAL, cfg)
    assert all(p.is_rational() for p in rational)
    assert not any(p.is_rational() for p in irrational)
    for k, (p, r) in enumerate(zip(rational, irrational)):
        step = Fraction(1, 8) / 2 ** k
        assert side.sign * (p - x) > 0
        assert abs(p - r) <= QuadNum(step) / 4
        assert side.sign * (r - x) == step


def test_rung_is_on_the_requested_side():
    assert rung(ZERO, Side.LEFT, Flavor.IRRATIONAL, Fraction(1, 2)) == -SQRT2 / 4


def test_dyadic_below():
    h = SQRT2 / 3
    d = dyadic_below(h)
    assert d.is_rational()
    assert h / 2 <= d <= h
    assert dyadic_below(QuadNum(Fraction(1, 3))) == QuadNum(Fraction(1, 3))


def test_irrational_step_from_the_domain():
    omega = (QuadNum(-1), SQRT2)
    points = ladder_points(QuadNum(1), Side.RIGHT, Flavor.RATIONAL, LadderConfig(), omega)
    assert all(1 < p < SQRT2 for p in points)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"ratio": Fraction(1)},
        {"ratio": Fraction(0)},
        {"depth": 7},
        {"h0": -1},
        {"tol_abs": -1.0},
        {"divergence_bound": 0.0},
    ],
)
def test_invalid_configs(kwargs):
    with pytest.raises(ConfigError):
        LadderConfig(**kwargs)


def test_max_depth_never_below_depth():
    assert LadderConfig(depth=20, max_depth=10).max_depth == 20


def test_config_from_settings(tmp_path):
    store = Settings(config_dir=str(tmp_path))
    exact = LadderConfig.from_settings(store=store)
    assert (exact.mode, exact.depth, exact.max_depth) == (Mode.EXACT, 12, 40)
    assert exact.ratio == Fraction(1, 2)
    floating = LadderConfig.from_settings(Mode.FLOAT, store=store)
    assert (floating.depth, floating.max_depth) == (40, 40)
    store.set("ratio", "1/3")
    assert LadderConfig.from_settings(store=store).ratio == Fraction(1, 3)


def test_side_and_mode_parsing():
    assert Side.from_str("LEFT") is Side.LEFT
    assert Mode.from_str("float") is Mode.FLOAT
    with pytest.raises(ConfigError):
        Side.from_str("up")
    with pytest.raises(ConfigError):
        Mode.from_str("interval")
