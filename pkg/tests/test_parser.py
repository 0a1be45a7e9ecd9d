from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from e36.algebra import NAMED
from e36.e510 import d, dp, x
from e36.parser import (
    InvalidElementError,
    ParseError,
    evaluate_lminus,
    evaluate_model,
    parse_element,
    parse_expression,
    to_text,
    tokenize,
)


def test_named_examples():
    assert parse_element("x3*d35") == NAMED["e0prime"]
    assert parse_element("x3*d25 - x2*d35 + 2*x5*d23") == NAMED["e0"]
    assert parse_element("e0prime") == NAMED["e0prime"]
    assert parse_element("2/3*x1*dp1 - 2/3*x2*dp2") == NAMED["h1"].scale(Fraction(2, 3))


def test_closedness_is_checked():
    with pytest.raises(InvalidElementError) as err:
        parse_element("x5*d23")
    assert "closed" in err.value.invariant


def test_divergence_is_checked():
    with pytest.raises(InvalidElementError):
        parse_element("x1*dp1")


@pytest.mark.parametrize("text,pos", [("x3*", 3), ("x3 d35", 3), ("d33", 0), ("2 x1", 2), ("(x1", 3)])
def test_syntax_errors_have_positions(text, pos):
    with pytest.raises(ParseError) as err:
        parse_element(text)
    assert err.value.position == pos


def test_unknown_name():
    with pytest.raises(ParseError):
        parse_element("frobnicate")


def test_powers_and_groups():
    assert parse_element("x1^2*d12") == d(1, 2, x(1) * x(1))
    assert parse_element("(x1 + x2)*d12") == d(1, 2, x(1) + x(2))
    assert parse_element("-dp3") == dp(3).scale(-1)


@given(st.sampled_from(sorted(NAMED)))
def test_named_elements_round_trip_through_strings(name):
    el = NAMED[name]
    assert parse_element(el.to_string()) == el


@given(st.sampled_from(sorted(NAMED)))
def test_parse_print_parse(name):
    text = to_text(parse_expression(NAMED[name].to_string()))
    assert to_text(parse_expression(text)) == text


def test_model_and_lminus_contexts():
    m = evaluate_model(parse_expression("dp1*x1"))
    assert str(m) == str(evaluate_model(parse_expression("-dp2*x2 - dp3*x3")))
    got = evaluate_lminus(parse_expression("dplus2*dminus1"))
    assert got == {((0, 0, 0), (1,), (2,)): -1, ((0, 0, 1), (), ()): 1}


def test_tokens():
    kinds = [t.kind for t in tokenize("2/3*x1^2")]
    assert kinds[0] != kinds[1]
