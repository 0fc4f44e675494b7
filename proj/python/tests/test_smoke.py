from fractions import Fraction
from math import comb

import pytest

import hdepth


def test_polynomial_ring():
    r = hdepth.qdepth("poly(4)")
    assert r["qdepth"] == 4
    assert r["certificate"] == [1, 0, 4, 8, 22]
    assert r["refutation"] is None


def test_refutation_is_negative():
    r = hdepth.qdepth("table(0:1, 1:3, 2:1)")
    assert r["qdepth"] == 1
    d, k, beta = r["refutation"]
    assert d == 2 and beta < 0


def test_big_values_are_python_ints():
    value = hdepth.evaluate("poly(64)", 200)
    assert value == comb(263, 63)
    assert value > 2**200


def test_beta_table_and_canonical_form():
    assert hdepth.beta_table("table(0:1, 1:1)", 1) == [1, 0]
    assert hdepth.canonical("ci(3; 3)") == hdepth.canonical("sum(ci(2), shift(ci(2), -1), shift(ci(2), -2))")


def test_squarefree():
    r = hdepth.sqf(2, "x1", "0")
    assert r["alpha"] == [0, 1, 1]
    assert r["qdepth_quotient"]["qdepth"] == r["qdepth_module"]["qdepth"] == 2
    assert hdepth.alpha_vector(3, "1", "0") == [1, 3, 3, 1]


def test_hypergeometric():
    assert [hdepth.gauss2f1(k, 3) for k in range(4)] == [1, 0, 1, -6]
    assert isinstance(hdepth.gauss2f1(2, 5), Fraction)
    assert hdepth.big_e(3, 2) == 6
    assert hdepth.big_e(3, 3) == 36


def test_verify_batteries():
    for name in hdepth.battery_names():
        report = hdepth.verify(name, max_n=4, trials=20)
        assert report["passed"], report
        assert report["cases_run"] > 0


def test_errors_raise():
    with pytest.raises(hdepth.HdepthError):
        hdepth.qdepth("poly(0)")
    with pytest.raises(ValueError):
        hdepth.sqf(2, "x2", "x1")
    with pytest.raises(hdepth.HdepthError):
        hdepth.verify("nope")
