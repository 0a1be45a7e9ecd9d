from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from e36.algebra import NAMED, spanning_set
from e36.e510 import consistent_degree, super_bracket
from e36.induced import (
    ONE,
    InducedModule,
    component_project,
    mono_depth,
    monomials_at_depth,
    normal_order,
    reorder,
)
from e36.model import IrrepF

MODULE = InducedModule(IrrepF(1, 1, 1, Fraction(2, 3)))
SPAN = [a for _, a in spanning_set()]
KEYS = [k for depth in range(4) for k in MODULE.basis(depth)]


def test_normal_order_of_crossed_letters():
    got = normal_order([("+", 2), ("-", 1)], "-+")
    assert got == {((0, 0, 0), (1,), (2,)): -1, ((0, 0, 1), (), ()): 1}


def test_odd_letters_square_to_zero_in_group():
    assert normal_order([("-", 1), ("-", 1)]) == {}


def test_monomials_at_depth_counts():
    # depth 1 is one odd letter; depth 2 adds dhat_i and pairs of odd letters
    assert len(monomials_at_depth(1)) == 6
    assert len(monomials_at_depth(2)) == 3 + 15
    assert all(mono_depth(m) == 2 for m in monomials_at_depth(2))


def test_hand_computed_actions():
    F0 = InducedModule(IrrepF(0, 0, 0, 0))
    w = F0.element({(((0, 0, 1), (), ()), 0): 1})
    assert F0.act("e0prime", w) == F0.element({(((0, 0, 0), (3,), ()), 0): -1})
    M = InducedModule(IrrepF(0, 0, 0, Fraction(5)))
    w = M.element({(((0, 0, 0), (), (1,)), 0): 1})
    assert M.act("e0", w) == M.element({(ONE, 0): -5})


@given(st.sampled_from(SPAN), st.sampled_from(SPAN), st.sampled_from(KEYS))
@settings(max_examples=120, deadline=None)
def test_representation_property(a, b, key):
    w = MODULE.element({key: 1})
    pa, pb = consistent_degree(a) % 2, consistent_degree(b) % 2
    lhs = MODULE.act(a, MODULE.act(b, w)) - MODULE.act(b, MODULE.act(a, w)).scale((-1) ** (pa * pb))
    br = super_bracket(a, b)
    rhs = MODULE.act(br, w) if br else w.scale(0)
    assert lhs == rhs


@given(st.sampled_from(SPAN), st.sampled_from(KEYS))
@settings(max_examples=60, deadline=None)
def test_reorder_commutes_with_action(a, key):
    w = MODULE.element({key: 1})
    flipped = reorder(w, "+-")
    assert reorder(MODULE.act(a, flipped), "-+") == MODULE.act(a, w)
    assert reorder(flipped, "-+") == w


def test_component_projection_and_depths():
    w = MODULE.element({(((1, 0, 0), (2,), (3,)), 0): 2, (((0, 0, 0), (1,), ()), 1): 1})
    part = component_project(w, 1, 1, 1)
    assert part == MODULE.element({(((1, 0, 0), (2,), (3,)), 0): 2})
    assert w.depths() == {4, 1}
    with pytest.raises(ValueError):
        component_project(reorder(w, "+-"), 1, 1, 1)


def test_to_json_shape():
    w = MODULE.element({(((0, 1, 0), (1, 3), ()), 2): Fraction(-1, 2)})
    assert w.to_json() == [{"alpha": [0, 1, 0], "dminus": [1, 3], "dplus": [], "fIndex": 2, "coeff": "-1/2"}]
