from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from e36.algebra import (
    G0_BASIS,
    NAMED,
    NotEigenvectorError,
    UnknownNameError,
    Weight,
    check_relation_suite,
    e36_membership,
    g0_decompose,
    g0_weight,
    graded_dimension,
    named_element,
    spanning_set,
)
from e36.e510 import consistent_degree, d, dp, super_bracket, x


def test_graded_dimensions():
    assert [graded_dimension(k) for k in (-2, -1, 0, 1)] == [3, 6, 12, 18]


def test_weights_of_generators():
    assert g0_weight(NAMED["f0"]) == Weight(1, 0, 1, Fraction(-1, 3))
    assert g0_weight(dp(3)) == Weight(0, 1, 0, Fraction(-2, 3))
    assert g0_weight(NAMED["e0prime"]) == Weight(0, -2, -1, Fraction(1, 3))
    assert str(g0_weight(NAMED["f0"])) == "(1,0;1;-1/3)"


def test_weight_of_non_eigenvector():
    with pytest.raises(NotEigenvectorError):
        g0_weight(dp(1) + dp(2))


def test_relation_suite_has_one_deviation():
    res = check_relation_suite()
    assert not [r for r in res if r.status == "fail"]
    devs = [r for r in res if r.status == "deviation"]
    assert [r.name for r in devs] == ["e1prime.dminus2"]
    assert devs[0].computed == NAMED["f12"]
    assert devs[0].expected == NAMED["f3"]


def test_key_relations():
    assert super_bracket(NAMED["e0prime"], NAMED["f0"]) == NAMED["f2"]
    assert super_bracket(NAMED["e0"], NAMED["f0"]) == NAMED["h0"]


def test_membership():
    assert e36_membership(d(1, 4))
    assert not e36_membership(d(1, 2))
    assert not e36_membership(dp(5))


def test_unknown_name():
    with pytest.raises(UnknownNameError):
        named_element("nope")


@given(st.dictionaries(st.sampled_from(G0_BASIS), st.fractions(-3, 3, max_denominator=4), max_size=6))
@settings(max_examples=60, deadline=None)
def test_g0_decomposition_round_trips(coords):
    el = NAMED["h1"].scale(0)
    for k, v in coords.items():
        el = el + NAMED[k].scale(v)
    assert g0_decompose(el) == {k: v for k, v in coords.items() if v}


def test_h0_coordinates():
    assert g0_decompose(NAMED["h0"]) == {"h1": Fraction(2, 3), "h2": Fraction(1, 3), "h3": -1, "Y": -1}


def test_hypercharge_scales_by_degree():
    Y = NAMED["Y"]
    for name, a in spanning_set():
        assert super_bracket(Y, a) == a.scale(Fraction(consistent_degree(a), 3)), name


def test_spanning_set_size_and_closure_in_e36():
    s = spanning_set()
    assert len(s) == 30
    assert all(e36_membership(a) for _, a in s)
