"""Randomized checks of the derivative engine against closed forms and the oracle."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from markovcalc.calculus.classifier import Witness, verify_corollary_ufa
from markovcalc.calculus.derivative import markov_derivative, one_sided_markov_derivative
from markovcalc.calculus.ladder import LadderConfig, Side
from markovcalc.core.quadnum import QuadNum
from markovcalc.expr.function import parse_definition
from markovcalc.oracle import central_difference

CFG = LadderConfig()
ZERO = QuadNum(0)

coefficients = st.integers(min_value=-5, max_value=5)


def kinked(left_slope, left_curve, right_slope, right_curve) -> str:
    return (
        f"piecewise(t < 0: ({left_slope})*t + ({left_curve})*t^2, "
        f"else: ({right_slope})*t + ({right_curve})*t^2)"
    )


def kinked_pair(f_parts, g_parts):
    # |f| <= 10 and g >= 10 on (-1, 1)
    return parse_definition(f"f = {kinked(*f_parts)}\ng = {kinked(*g_parts)} + 20\nomega = (-1, 1)\n")


def close(interval, lo, hi, tol=1e-6) -> bool:
    value = interval.to_float()
    return abs(value.lo - lo) <= tol and abs(value.hi - hi) <= tol


@settings(max_examples=100)
@given(st.tuples(*[coefficients] * 4), st.tuples(*[coefficients] * 4))
def test_one_sided_derivative_is_the_slope_interval(f_parts, g_parts):
    F = kinked_pair(f_parts, g_parts)
    f_minus, _, f_plus, _ = f_parts
    g_minus, _, g_plus, _ = g_parts
    right = one_sided_markov_derivative(F, ZERO, Side.RIGHT, CFG)
    left = one_sided_markov_derivative(F, ZERO, Side.LEFT, CFG)
    assert right.exists and left.exists
    assert close(right.value, min(f_plus, g_plus), max(f_plus, g_plus))
    assert close(left.value, min(f_minus, g_minus), max(f_minus, g_minus))


@settings(max_examples=100)
@given(
    st.lists(st.integers(min_value=-3, max_value=3), min_size=4, max_size=4),
    st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=2),
    st.integers(min_value=-3, max_value=3),
)
def test_smooth_pairs_match_central_differences(f_coeffs, q_coeffs, k):
    c0, c1, c2, c3 = f_coeffs
    d0, d1 = q_coeffs
    f_src = f"({c0}) + ({c1})*t + ({c2})*t^2 + ({c3})*t^3"
    F = parse_definition(f"f = {f_src}\ng = f + 1 + t^2*(({d0}) + ({d1})*t)^2\nomega = (-1, 1)\n")
    x = QuadNum(Fraction(k, 8))
    h = QuadNum(Fraction(1, 2 ** 20))
    df = central_difference(F.f, x, h)
    dg = central_difference(F.g, x, h)
    result = markov_derivative(F, x, CFG)
    assert result.exists
    assert close(result.value, min(df, dg), max(df, dg))


@settings(max_examples=50)
@given(st.tuples(coefficients, coefficients, coefficients, coefficients), st.booleans())
def test_continuous_f_licenses_the_slope_formula(parts, crossed):
    slope_f, slope_g, curve_f, curve_g = parts
    # crossing the slopes keeps the left and right slope intervals equal
    right = (slope_g, slope_f) if crossed else (slope_f, slope_g)
    F = kinked_pair((slope_f, curve_f, right[0], curve_f), (slope_g, curve_g, right[1], curve_g))
    assert markov_derivative(F, ZERO, CFG).exists
    assert verify_corollary_ufa(F, ZERO, Witness.F_CONT, CFG)
