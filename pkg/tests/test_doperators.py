from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from e36.doperators import (
    D_OPS,
    SM_ONE,
    SMElement,
    d2_shift,
    d_apply,
    d_power,
    dbar_apply,
    dbar_power,
    dpow_expand,
    expansion_base,
    ff,
    hat,
    hwv_decompose,
    hwv_vector,
    is_sl3_hwv,
    lht,
    power,
    reconstruct,
    sm_basis,
)
from e36.model import ModelElement


def sm(alpha, dexp=(0, 0, 0), xexp=(0, 0, 0)):
    return SMElement.monomial(alpha, dexp, xexp)


def test_dbar_on_one():
    assert dbar_apply(3, SM_ONE) == sm((0, 0, 1))
    assert str(dbar_apply(1, SM_ONE)) == str(sm((1, 0, 0), xexp=(1, 0, 0)) + sm((0, 1, 0), xexp=(0, 1, 0)) + sm((0, 0, 1), xexp=(0, 0, 1)))
    assert all(is_sl3_hwv(dbar_apply(i, SM_ONE)) for i in (1, 2, 3))


def test_lht_is_lexicographic():
    v = sm((1, 0, 0), xexp=(1, 0, 0)) + sm((0, 1, 0), xexp=(0, 1, 0))
    r = lht(v)
    assert r.sigma == (1, 0, 0)
    assert r.leading == ModelElement.monomial((0, 0, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        lht(SM_ONE.scale(0))


@pytest.mark.parametrize("p,q", [(p, q) for p in range(4) for q in range(4)])
def test_intertwining_on_hwv(p, q):
    m = hwv_vector(p, q)
    s = hat(3) * hat(3)
    want1 = dbar_apply(1, s * hwv_vector(p - 1, q)).scale(p * (p + q + 1)) if p else s.scale(0)
    want2 = dbar_apply(2, s * hwv_vector(p, q - 1)).scale(q) if q else s.scale(0)
    assert d_apply(1, s * m) == want1
    assert d_apply(2, s * m) == want2
    assert d_apply(3, s * m) == hat(3) * s * m


@given(st.integers(0, 3), st.integers(0, 3), st.data())
@settings(max_examples=40, deadline=None)
def test_d_operators_commute(p, q, data):
    v = data.draw(st.sampled_from(sm_basis(p, q, 2)))
    i, j = data.draw(st.sampled_from([(1, 2), (1, 3), (2, 3)]))
    assert d_apply(i, d_apply(j, v)) == d_apply(j, d_apply(i, v))


@pytest.mark.parametrize("which", ["D1", "D2", "A"])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_expansion_matches_iteration(which, k):
    lhs, rhs = dpow_expand(k, which), power(expansion_base(which), k)
    for v in sm_basis(2, 2, 1):
        assert lhs(v) == rhs(v)


def test_leading_term_of_powers():
    p, q = 3, 2
    m = hwv_vector(p, q)
    for alpha in [(1, 0, 0), (2, 1, 0), (1, 1, 1), (0, 2, 0)]:
        got = lht(d_power(alpha)(m))
        c = ff(p + q + 1, alpha[0]) * ff(p, alpha[0]) * ff(q, alpha[1])
        assert got.sigma == alpha
        assert got.leading == ModelElement.monomial((0, 0, q), (p, 0, 0)).scale(c)


def test_d2_shift_identity():
    for v in sm_basis(2, 1, 1):
        assert D_OPS[2](hat(2) * v) == hat(2) * d2_shift(-1)(v)
        assert D_OPS[2](hat(3) * v) == hat(3) * D_OPS[2](v)


def test_decompose_round_trip():
    p, q = 2, 2
    m0 = hwv_vector(p, q)
    assert hwv_decompose(m0, p, q) == {(0, 0, 0): 1}
    assert hwv_decompose(d_power((0, 0, 2))(m0), p, q) == {(0, 0, 2): 1}
    wbar = dbar_power((1, 1, 0))(SMElement.monomial((0, 0, 0), (0, 0, 1), (1, 0, 0)))
    coeffs = hwv_decompose(wbar, p, q)
    assert reconstruct(coeffs, p, q) == wbar
    with pytest.raises(ValueError):
        hwv_decompose(sm((0, 0, 0), xexp=(0, 1, 0)) * SM_ONE, 1, 0)


def test_falling_factorial():
    assert ff(5, 0) == 1
    assert ff(5, 2) == 20
    assert ff(2, 3) == 0
