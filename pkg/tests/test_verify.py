import pytest

from e36.verify import (
    UnknownLemmaError,
    enumerate_hwv_lambda,
    kernel_e0prime,
    lambda_weight_count,
    theorem41_scan,
    verify_lemma,
    weyl_multiplicities,
)

EXPECTED_T = {
    (3, 0): ["T0", "T1"],
    (0, 2): ["T0", "T2"],
    (2, 1): ["T0"],
    (0, 1): ["T0", "T2", "T3"],
    (0, 0): ["T0", "T1", "T4"],
}


@pytest.mark.parametrize("pq", sorted(EXPECTED_T))
@pytest.mark.parametrize("variant", ["e0prime", "e1prime"])
def test_t_tables(pq, variant):
    tags = sorted(l.tag for l in kernel_e0prime(*pq, variant))
    assert tags == EXPECTED_T[pq]


def test_lambda_families_generic():
    lines = enumerate_hwv_lambda(2, 2, "+")
    assert sorted(l.tag for l in lines) == sorted(["(00)'", "(+0)", "(-+)", "(0-)", "(0+)", "(-0)", "(+-)", "(00)''"])


def test_lambda_families_degenerate_are_matched():
    lines = enumerate_hwv_lambda(0, 0, "-")
    assert None not in [l.tag for l in lines]
    assert len(lines) == lambda_weight_count(0, 0) == 4


def test_weyl_multiplicities_of_tensor_square():
    xw = [(1, 0), (-1, 1), (0, -1)]
    sq = [(a[0] + b[0], a[1] + b[1]) for a in xw for b in xw]
    assert weyl_multiplicities(sq) == {(2, 0): 1, (0, 1): 1}


@pytest.mark.parametrize("lemma,params,status", [
    ("relations", {}, "deviation"),
    ("dims", {}, "pass"),
    ("3.1", {"mmax": 2}, "pass"),
    ("3.2", {"kmax": 1, "mmax": 1}, "pass"),
    ("3.3", {"pmax": 1}, "deviation"),
    ("3.4", {"pmax": 1}, "pass"),
    ("3.5", {"pmax": 1, "kmax": 2}, "pass"),
    ("3.6", {"pmax": 2}, "pass"),
    ("3.7", {"pmax": 1, "sdeg": 1}, "pass"),
    ("3.8", {"kmax": 2, "pmax": 1, "sdeg": 1}, "pass"),
    ("3.9", {"pmax": 1, "kmax": 2}, "pass"),
    ("3.10", {"pmax": 1}, "deviation"),
    ("3.11", {"samples": 15}, "deviation"),
    ("3.12", {"grid": [(1, 1)], "signs": ["+"]}, "pass"),
    ("3.13", {"pmax": 1}, "pass"),
    ("3.14", {"pmax": 1}, "pass"),
    ("4.1", {"pmax": 1, "qmax": 1, "r": "0", "maxDepth": 2}, "pass"),
    ("4.2-filtration", {"bound": 1}, "pass"),
    ("4.2-reorder", {}, "pass"),
    ("4.3-hypercharge", {"bound": 1}, "pass"),
    ("4.4", {"nmax": 2}, "pass"),
    ("4.6", {"grid": [(2, 2)]}, "pass"),
    ("4.7", {"grid": [(2, 2)]}, "deviation"),
    ("4.8", {"grid": [(2, 2)]}, "pass"),
])
def test_verify_lemma_status(lemma, params, status):
    rep = verify_lemma(lemma, params)
    assert rep.status == status, [r.as_dict() for r in rep.failures()]
    js = rep.to_json()
    assert js["lemma"] == lemma and js["status"] == status


def test_unknown_lemma():
    with pytest.raises(UnknownLemmaError):
        verify_lemma("9.99")


def test_verify_is_deterministic():
    assert verify_lemma("3.13", {"pmax": 1}).to_json() == verify_lemma("3.13", {"pmax": 1}).to_json()


def test_scan_rows_and_boundary():
    rows = theorem41_scan(1, 1, [0], 2)
    assert rows == [{"p": 1, "q": 1, "r": 0, "conditions": []}]
    rows = theorem41_scan(0, 0, [0], 1, pmin=0, qmin=0)
    assert [c["poly-in-y"] for c in rows[0]["conditions"]] == ["y"]
    with pytest.raises(ValueError):
        theorem41_scan(1, 1, [0], 0)


def test_scan_parallel_matches_serial():
    assert theorem41_scan(2, 1, [0, 1], 1, jobs=2) == theorem41_scan(2, 1, [0, 1], 1)
