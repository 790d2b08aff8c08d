"""Smoke tests for the python module built from the C++ core."""

import numpy as np
import pytest

import pschur

EXAMPLE1 = np.array([[1.0, -1.0, 1.0], [2.0, -2.0, 2.0], [-1.0, 1.0, 0.0]])
EXAMPLE1_STR = [["1", "-1", "1"], ["2", "-2", "2"], ["-1", "1", "0"]]
EXAMPLE2 = np.array(
    [
        [1.0, -1.0, 1.0, -2.0],
        [2.0, -2.0, 2.0, -4.0],
        [1.0, -1.0, 1.0, 1.0],
        [-1.0, 1.0, 0.0, 0.0],
    ]
)
EXAMPLE2_STR = [
    ["1", "-1", "1", "-2"],
    ["2", "-2", "2", "-4"],
    ["1", "-1", "1", "1"],
    ["-1", "1", "0", "0"],
]


def test_pinv_agrees_with_numpy():
    rng = np.random.default_rng(7)
    for _ in range(20):
        m = rng.standard_normal((rng.integers(1, 7), rng.integers(1, 7)))
        got = pschur.pinv(m)
        want = np.linalg.pinv(m)
        assert np.allclose(got, want, atol=1e-9)


def test_pinv_certificate():
    rng = np.random.default_rng(11)
    m = rng.standard_normal((5, 3))
    cert = pschur.certify_pinv(m, pschur.pinv(m))
    assert cert["ok"]
    # a wrong candidate fails
    bad = pschur.certify_pinv(m, np.ones((3, 5)))
    assert not bad["ok"]


def test_exact_rational_pinv():
    got = pschur.pinv_rational([["1", "-1"], ["2", "-2"]])
    assert got == [["1/10", "1/5"], ["-1/10", "-1/5"]]


def test_rank():
    assert pschur.rank(EXAMPLE1) == 2
    assert pschur.rank_rational(EXAMPLE1_STR) == 2
    assert pschur.rank(np.eye(4)) == 4


def test_range_inclusion():
    a = EXAMPLE1[:2, :2]
    b = EXAMPLE1[:2, 2:]
    assert pschur.range_included(b, a)["holds"]
    assert not pschur.range_included(np.array([[1.0], [0.0]]), a)["holds"]


def test_condition_report():
    rep = pschur.condition_report(EXAMPLE1, 2, 2)
    assert rep["incl_B_A"]["holds"]
    assert rep["incl_Ct_At"]["holds"]
    assert not rep["incl_C_D"]["holds"]
    assert rep["a_side"] and not rep["d_side"]


def test_pivot_transforms():
    h = pschur.pppt(EXAMPLE1, 2, 2)
    want_h = np.array([[0.1, 0.2, -0.5], [-0.1, -0.2, 0.5], [-0.2, -0.4, 1.0]])
    assert np.allclose(h, want_h, atol=1e-12)

    j = pschur.cpppt(EXAMPLE1, 2, 2)
    want_j = np.array([[1.0, -1.0, 0.0], [2.0, -2.0, 0.0], [0.0, 0.0, 0.0]])
    assert np.allclose(j, want_j, atol=1e-12)

    h_exact = pschur.pppt_rational(EXAMPLE1_STR, 2, 2)
    assert h_exact[0] == ["1/10", "1/5", "-1/2"]
    assert h_exact[2] == ["-1/5", "-2/5", "1"]


def test_counterexample_h_pinv_differs_from_j():
    cmp = pschur.pppt_vs_cpppt(EXAMPLE1, 2, 2)
    assert not cmp["equal"]
    assert not cmp["hypotheses_hold"]
    want = np.array([[1, -1, -2], [2, -2, -4], [-5, 5, 10]]) / 18.0
    assert np.allclose(cmp["h_pinv"], want, atol=1e-12)


def test_block_pinv_worked_example():
    r = pschur.block_pinv(EXAMPLE2, 2, 2, formula="f")
    assert r["sound"]
    assert r["certificate"]["ok"]
    want = np.array(
        [
            [0, 0, 0, -0.5],
            [0, 0, 0, 0.5],
            [1 / 15, 2 / 15, 2 / 3, 1.0],
            [-1 / 15, -2 / 15, 1 / 3, 0],
        ]
    )
    assert np.allclose(r["value"], want, atol=1e-12)
    assert np.allclose(r["value"], np.linalg.pinv(EXAMPLE2), atol=1e-9)

    exact = pschur.block_pinv_rational(EXAMPLE2_STR, 2, 2, formula="f")
    assert exact["value"][2] == ["1/15", "2/15", "2/3", "1"]
    assert exact["value"][3] == ["-1/15", "-2/15", "1/3", "0"]


def test_block_pinv_unsound_is_flagged():
    r = pschur.block_pinv(EXAMPLE1, 2, 2, formula="g")
    assert not r["sound"]
    assert "incl_C_D" in r["failed"]
    assert not r["certificate"]["ok"]


def test_pseudo_schur():
    r = pschur.pseudo_schur(EXAMPLE1, 2, 2)
    assert np.allclose(r["value"], [[1.0]], atol=1e-12)
    assert r["hyp_range"]["holds"]


def test_exchange():
    r = pschur.exchange_forward(EXAMPLE1, 2, 2, [1.0, 0.0], [1.0])
    assert r["verified"]
    assert np.allclose(r["y1"], [2.0, 4.0])
    assert np.allclose(r["y2"], [-1.0])


def test_generator_and_probe():
    inst = pschur.gen_block(m=2, n=2, s=2, p=2, required="a4", seed=5)
    rep = pschur.condition_report(inst["matrix"], inst["row_split"], inst["col_split"])
    assert rep["a_side"]

    again = pschur.gen_block(m=2, n=2, s=2, p=2, required="a4", seed=5)
    assert np.array_equal(inst["matrix"], again["matrix"])

    probe = pschur.invariance_probe(EXAMPLE1, 2, 2, samples=20, seed=3)
    assert probe["invariant"]

    violator = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]])
    vprobe = pschur.invariance_probe(violator, 2, 2, samples=20, seed=3)
    assert not vprobe["invariant"]
    assert vprobe["spread"] > 0.1


def test_quotient_identities_on_block_diagonal():
    m = np.zeros((4, 4))
    m[:2, :2] = np.array([[1.0, 2.0], [3.0, 4.0]])
    m[2:, 2:] = np.array([[5.0, 6.0], [7.0, 8.0]])
    q = pschur.quotient_identities(m, 2, 2)
    assert q["sound"] and q["ok"]


def test_verify_all():
    report = pschur.verify_all(trials=25, seed=1)
    assert report["all_passed"], [s for s in report["sections"] if s["passes"] != s["trials"]]
    names = {s["name"] for s in report["sections"]}
    assert "pppt_vs_cpppt" in names and "block_pinv_via_f" in names

    exact = pschur.verify_all(trials=5, seed=1, mode="rational")
    assert exact["all_passed"]
    assert exact["backend"] == "rational"


def test_bad_inputs_raise():
    with pytest.raises(ValueError):
        pschur.pinv(np.zeros((2, 2, 2)))
    with pytest.raises(Exception):
        pschur.condition_report(EXAMPLE1, 0, 2)
    with pytest.raises(ValueError):
        pschur.block_pinv(EXAMPLE1, 2, 2, formula="q")
