import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from e36.algebra import NAMED
from e36.e510 import super_bracket
from e36.model import (
    P,
    SL3_MATRIX,
    IrrepF,
    ModelElement,
    bigraded_dimension,
    canonical_monomials,
    dvar,
    hwv_lines,
    hwv_test,
    model_act,
    weyl_dimension,
    xvar,
)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(5) for n in range(5)])
def test_multiplicity_one_and_dimension(m, n):
    lines = hwv_lines(m, n)
    assert len(lines) == 1
    assert str(lines[0]) == str(ModelElement.monomial((0, 0, n), (m, 0, 0)))
    assert len(canonical_monomials(m, n)) == weyl_dimension(m, n) == bigraded_dimension(m, n)


def test_relation_reduces_to_zero():
    assert ModelElement(P).is_zero()
    d1x1 = ModelElement(dvar(1) * xvar(1))
    assert d1x1 == ModelElement(-dvar(2) * xvar(2) - dvar(3) * xvar(3))


def test_sl3_kills_the_relation():
    for g in SL3_MATRIX:
        assert model_act(g, ModelElement(P)).is_zero()


names = sorted(n for n in ("h1", "h2", "h3", "Y", "e1", "e2", "e3", "f1", "f2", "f3", "e12", "f12"))


@given(st.sampled_from(names), st.sampled_from(names), st.integers(0, 2), st.integers(0, 2), st.integers(0, 1), st.data())
@settings(max_examples=60, deadline=None)
def test_irrep_is_a_representation(g, h, p, q, r, data):
    F = IrrepF(p, q, r, Fraction(2, 3))
    n = data.draw(st.integers(0, F.dim - 1))
    v = {n: 1}
    lhs = _sub(F.act(g, F.act(h, v)), F.act(h, F.act(g, v)))
    br = super_bracket(NAMED[g], NAMED[h])
    rhs = F.act(br, v) if br else {}
    assert lhs == rhs


def _sub(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def test_highest_weight_vector_of_irrep():
    F = IrrepF(2, 1, 1, Fraction(1, 2))
    v = {F.hwv: 1}
    assert hwv_test(v, F)
    w = F.weight(F.hwv)
    assert (w.a, w.b, w.r, w.y) == (2, 1, 1, Fraction(1, 2))
    other = next(n for n in range(F.dim) if n != F.hwv)
    assert not hwv_test({other: 1}, F)


def test_vector_of_rejects_wrong_bidegree():
    F = IrrepF(1, 1, 0, 0)
    with pytest.raises(ValueError):
        F.vector_of(ModelElement(xvar(1) * xvar(2)))
