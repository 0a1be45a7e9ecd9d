from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from e36.scalar import ExteriorMonomial, Polynomial, format_rational, perm_sign, sort_sign

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
exps = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda d: Polynomial(d, nvars=3))


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial.zero(3)


@given(polys, polys, st.integers(0, 2))
@settings(max_examples=60, deadline=None)
def test_partial_is_a_derivation(a, b, i):
    assert (a * b).partial(i) == a.partial(i) * b + a * b.partial(i)


def test_zero_terms_dropped():
    p = Polynomial({(1, 0, 0, 0, 0): 2, (0, 1, 0, 0, 0): 0})
    assert len(p) == 1
    assert (p - p).is_zero()


def test_format_rational_always_shows_denominator():
    assert format_rational(0) == "0/1"
    assert format_rational(Fraction(-4, 6)) == "-2/3"
    assert format_rational("3") == "3/1"


def test_to_string_texture():
    x1 = Polynomial.var(0)
    x3 = Polynomial.var(2)
    assert (x1 * x1 - x3.scale(Fraction(2, 3))).to_string() == "x1^2 - 2/3*x3"


def test_bad_slot():
    with pytest.raises(IndexError):
        Polynomial.var(5)
    with pytest.raises(ValueError):
        Polynomial({(1, 0): 1}, nvars=3)


@given(st.lists(st.integers(1, 6), max_size=6))
def test_sort_sign_matches_permutation_sign(seq):
    s, ordered = sort_sign(seq)
    assert s == perm_sign(seq)
    if s:
        assert list(ordered) == sorted(seq)


def test_exterior_monomial_product():
    a, b = ExteriorMonomial((2,)), ExteriorMonomial((1, 3))
    assert a * b == (-1, ExteriorMonomial((1, 2, 3)))
    assert a * a == (0, None)
    with pytest.raises(ValueError):
        ExteriorMonomial((3, 1))
