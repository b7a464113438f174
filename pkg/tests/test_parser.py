from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from markovcalc.catalog import SOURCES, Named
from markovcalc.core.quadnum import QuadNum
from markovcalc.errors import MalformedLiteral, ParseError, UnknownIdentifier
from markovcalc.expr.lexer import tokenize
from markovcalc.expr.nodes import (
    Abs,
    And,
    BinaryOp,
    BinOp,
    Compare,
    Const,
    IsRational,
    MinMax,
    Neg,
    Or,
    Piecewise,
    Pow,
    Relation,
    T,
    const,
)
from markovcalc.expr.parser import parse, parse_constant, parse_predicate
from markovcalc.expr.printer import predicate_source, to_source


def test_rational_literal_is_one_token():
    tokens = tokenize("1/2 + 3")
    assert [tok.kind for tok in tokens] == ["NUMBER", "SYMBOL", "NUMBER", "EOF"]
    assert tokens[0].value == Fraction(1, 2)


def test_spaced_slash_is_division():
    assert parse("1 / 2") == BinOp(BinaryOp.DIV, const(1), const(2))
    assert parse("1/2") == const(Fraction(1, 2))


def test_precedence_and_associativity():
    assert parse("1 + 2 * t") == BinOp(BinaryOp.ADD, const(1), BinOp(BinaryOp.MUL, const(2), T))
    assert parse("t - 1 - 2") == BinOp(BinaryOp.SUB, BinOp(BinaryOp.SUB, T, const(1)), const(2))
    assert parse("t^2 * 3") == BinOp(BinaryOp.MUL, Pow(T, 2), const(3))


def test_unary_minus():
    assert parse("-3") == const(-3)
    assert parse("-t") == Neg(T)
    assert parse("-2^2") == Neg(Pow(const(2), 2))
    assert parse("-abs(t)") == Neg(Abs(T))


def test_constants():
    assert parse("sqrt2") == Const(QuadNum(0, 1))
    assert parse("quad(1/2, -3)") == Const(QuadNum(Fraction(1, 2), -3))
    assert parse_constant("sqrt2/4") == QuadNum(0, Fraction(1, 4))
    assert parse_constant("(1 + sqrt2)^2") == QuadNum(3, 2)


def test_calls():
    assert parse("max(t, 0, 1)") == MinMax(True, (T, const(0), const(1)))
    assert parse("min(t, -t)") == MinMax(False, (T, Neg(T)))


def test_piecewise():
    e = parse("piecewise(rational(t): t, t < 0 and t > -1: 2, else: 0)")
    assert isinstance(e, Piecewise)
    assert e.branches[0] == (IsRational(T), T)
    assert e.branches[1][0] == And((Compare(Relation.LT, T, const(0)), Compare(Relation.GT, T, const(-1))))
    assert e.otherwise == const(0)


def test_predicate_grouping():
    p = parse_predicate("(t < 0 or t > 1) and rational(t)")
    assert p == And((Or((Compare(Relation.LT, T, const(0)), Compare(Relation.GT, T, const(1)))), IsRational(T)))
    # a parenthesised expression on the left of a comparison
    assert parse_predicate("(t + 1) * 2 <= 3") == Compare(
        Relation.LE, BinOp(BinaryOp.MUL, BinOp(BinaryOp.ADD, T, const(1)), const(2)), const(3)
    )


def test_names_are_inlined():
    f = parse("t + 1")
    assert parse("f * 2", {"f": f}) == BinOp(BinaryOp.MUL, f, const(2))


@pytest.mark.parametrize(
    "src, error, column",
    [
        ("1/0", MalformedLiteral, 1),
        ("t + 2.5", MalformedLiteral, 5),
        ("3t", MalformedLiteral, 1),
        ("t + foo", UnknownIdentifier, 5),
        ("t +", ParseError, 4),
        ("max(t)", ParseError, 1),
        ("piecewise(t < 0: 1)", ParseError, 19),
        ("t $ 1", ParseError, 3),
        ("t^t", ParseError, 3),
    ],
)
def test_errors_carry_positions(src, error, column):
    with pytest.raises(error) as info:
        parse(src)
    assert info.value.line == 1
    assert info.value.column == column


def test_constant_rejects_the_variable():
    with pytest.raises(ParseError):
        parse_constant("t + 1")


# Round trip

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)
constants = st.one_of(
    st.builds(lambda v: Const(QuadNum(v)), rationals),
    st.builds(lambda a, b: Const(QuadNum(a, b)), rationals, rationals.filter(bool)),
)
leaves = st.one_of(st.just(T), constants)


def _compound(children):
    return st.one_of(
        st.builds(Neg, children),
        st.builds(Abs, children),
        st.builds(BinOp, st.sampled_from(list(BinaryOp)), children, children),
        st.builds(MinMax, st.booleans(), st.lists(children, min_size=2, max_size=3).map(tuple)),
        st.builds(Pow, children, st.integers(min_value=0, max_value=4)),
        st.builds(
            lambda pred, branch, otherwise: Piecewise(((pred, branch),), otherwise),
            predicates(children),
            children,
            children,
        ),
    )


def predicates(exprs):
    atoms = st.one_of(
        st.builds(Compare, st.sampled_from(list(Relation)), exprs, exprs),
        st.builds(IsRational, exprs),
    )
    return st.one_of(
        atoms,
        st.builds(And, st.lists(atoms, min_size=2, max_size=3).map(tuple)),
        st.builds(Or, st.lists(atoms, min_size=2, max_size=3).map(tuple)),
    )


expressions = st.recursive(leaves, _compound, max_leaves=12)


@settings(max_examples=500)
@given(expressions)
def test_print_parse_round_trip(expr):
    text = to_source(expr)
    reparsed = parse(text)
    assert reparsed == expr, text
    assert to_source(reparsed) == text


@settings(max_examples=200)
@given(predicates(expressions))
def test_predicate_round_trip(pred):
    text = predicate_source(pred)
    assert parse_predicate(text) == pred, text


def test_nested_connectives_round_trip():
    a, b, c = (Compare(Relation.LT, T, const(n)) for n in (1, 2, 3))
    for pred in (Or((And((a, b)), c)), And((Or((a, b)), c)), Or((Or((a, b)), c)), And((And((a, b)), c))):
        assert parse_predicate(predicate_source(pred)) == pred


@pytest.mark.parametrize("named", list(Named))
def test_named_functions_round_trip(named):
    from markovcalc.expr.function import parse_bindings, parse_definition

    F = parse_definition(SOURCES[named])
    again = parse_definition(F.to_source())
    assert (again.f, again.g, again.omega) == (F.f, F.g, F.omega)
    assert set(parse_bindings(F.to_source())) == {"f", "g", "omega"}
