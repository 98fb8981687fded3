"""Smoke tests for the Python bindings."""

import pytest

import pblab


def test_validate_triple():
    rep = pblab.validate_triple(2, "X0^2", "X1", "X2")
    assert rep["valid"] is True
    assert rep["chern"] == {"c1": 2, "c2": 2}
    assert rep["h0"] == 5


def test_validate_rejects_bad_degrees():
    rep = pblab.validate_triple(2, "X0^2", "X1^2", "X2")
    assert rep["valid"] is False
    assert rep["degrees_ok"] is False


def test_hypersurface_and_blowup():
    hyp = pblab.hypersurface(2, "X0^2", "X1", "X2")
    assert hyp["equation"] == "X0^2 + X1*U + X2*W"
    assert hyp["smoothness"]["is_smooth"] is True

    blow = pblab.blowup(3, "X0^3", "X1^2", "X2^2")
    assert blow["all_smooth"] is True
    assert blow["multiplicity"] == 2
    assert len(blow["charts"]) == 9


def test_chow():
    chow = pblab.chow(4)
    assert chow["chern"] == {"c1": 4, "c2": 12}
    assert chow["xi_top"] == 4
    assert chow["stability"]["verdict"] == "stable"


def test_sample_is_deterministic():
    a = pblab.sample(seed=11, n=2, bound=3, trials=8)
    b = pblab.sample(seed=11, n=2, bound=3, trials=8)
    assert a == b
    assert a["trials"] == 8


def test_groebner_basis():
    gb = pblab.groebner_basis(["X^2 - Y*Z", "X + Y"], ["X", "Y", "Z"])
    assert gb == ["X + Y", "Y^2 - Y*Z"]


def test_parse_error_surfaces_as_exception():
    with pytest.raises(Exception):
        pblab.validate_triple(2, "X0^^2", "X1", "X2")
