from fractions import Fraction

import pytest

from e36.algebra import NAMED, Weight
from e36.induced import InducedModule, is_singular, parametric_y_search, singular_search
from e36.linalg import UPoly
from e36.model import IrrepF, hwv_test


def test_forced_vector_on_trivial_module():
    found = singular_search(IrrepF(0, 0, 0, 0), 2)
    assert len(found) == 1
    sv = found[0]
    assert sv.depth == 1
    assert sv.weight == Weight(1, 0, 1, Fraction(-1, 3))
    assert sv.to_json()["terms"] == [{"alpha": [0, 0, 0], "dminus": [], "dplus": [1], "fIndex": 0, "coeff": "1/1"}]


def test_found_vectors_recheck_from_scratch():
    for F in (IrrepF(0, 0, 0, 0), IrrepF(1, 0, 0, Fraction(2, 3))):
        module = InducedModule(F)
        for sv in singular_search(F, 2):
            v = sv.vector
            for op in ("e1", "e2", "e3", "e0", "e0prime"):
                assert module.act(op, v).is_zero()
            assert is_singular(v)


def test_generic_y_gives_nothing():
    assert singular_search(IrrepF(0, 0, 0, Fraction(7, 5)), 2) == []


def test_parametric_trivial_module():
    conds = parametric_y_search(0, 0, 0, 1)
    assert len(conds) == 1
    c = conds[0]
    assert c.poly == UPoly.y()
    assert [r for r, _ in c.roots] == [0]
    assert c.to_json()["rational-roots"] == ["0/1"]


def test_boundary_row_condition():
    polys = [str(c.poly) for c in parametric_y_search(1, 0, 0, 1)]
    assert polys == ["y - 2/3"]


@pytest.mark.parametrize("p,q,r", [(1, 1, 0), (1, 1, 1), (2, 1, 0)])
def test_no_conditions_when_pq_nonzero(p, q, r):
    assert parametric_y_search(p, q, r, 2) == []


def test_depth_must_be_positive():
    with pytest.raises(ValueError):
        singular_search(IrrepF(0, 0, 0, 0), 0)
    with pytest.raises(ValueError):
        parametric_y_search(0, 0, 0, 0)


def test_monotone_in_depth():
    short = parametric_y_search(0, 1, 0, 1)
    long = parametric_y_search(0, 1, 0, 2)
    key = lambda c: (c.depth, c.weight, str(c.poly))
    assert {key(c) for c in short} <= {key(c) for c in long}
