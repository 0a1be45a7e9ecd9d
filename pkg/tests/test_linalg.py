from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from e36 import linalg
from e36.linalg import UPoly

entries = st.integers(-3, 3)


@st.composite
def matrices(draw):
    r, c = draw(st.integers(1, 5)), draw(st.integers(1, 6))
    return [{j: draw(entries) for j in range(c)} for _ in range(r)], c


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_nullspace_is_kernel_of_full_dimension(mc):
    rows, n = mc
    K = linalg.nullspace(rows, n)
    for v in K:
        for row in rows:
            assert sum(c * v[j] for j, c in row.items()) == 0
    assert len(K) + linalg.rank(rows, n) == n
    assert linalg.rank([{i: x for i, x in enumerate(v) if x} for v in K], n) == len(K)


def test_solve_unique_inconsistent_dependent():
    assert linalg.solve([{"a": 1}, {"b": 2}], {"a": 3, "b": 1}) == [3, Fraction(1, 2)]
    assert linalg.solve([{"a": 1}], {"b": 1}) is None
    with pytest.raises(ValueError):
        linalg.solve([{"a": 1}, {"a": 2}], {"a": 1})


upolys = st.lists(st.fractions(-4, 4, max_denominator=3), min_size=1, max_size=4).map(UPoly)


@given(upolys, upolys)
@settings(max_examples=80, deadline=None)
def test_division_identity(a, b):
    if not b:
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert not r or r.degree() < b.degree()


def test_rational_roots_with_multiplicity():
    y = UPoly.y()
    p = (y - Fraction(2, 3)) * (y - Fraction(2, 3)) * (y + 4) * (y * y + 1)
    assert p.rational_roots() == [(Fraction(-4), 1), (Fraction(2, 3), 2)]
    assert str(y * 3 - 2) == "3*y - 2"


def test_pencil_condition_finds_singular_parameter():
    y = UPoly.y()
    rows = [{0: y - 1, 1: UPoly((2,))}, {1: y + 3}]
    cond = linalg.pencil_condition(rows, 2)
    assert cond == (y - 1) * (y + 3)
    assert linalg.pencil_condition([{0: y, 1: y}], 2) is None
    assert linalg.pencil_condition([{0: UPoly((5,))}], 1) == UPoly((1,))
