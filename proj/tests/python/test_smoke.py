"""Smoke tests for the python module (the C++ suites carry the real load)."""

import math

import pytest

import fracseries as fr


def test_mittag_leffler_matches_exp():
    assert fr.mittag_leffler(1.0, 1.0) == pytest.approx(math.e, rel=1e-12)
    assert fr.mittag_leffler(0.5, 1.0) == pytest.approx(5.008980080762283, rel=1e-11)


def test_rho_gamma_inverse_roundtrip():
    val = fr.rho(1.7, 0.4)
    assert fr.gamma_inverse(val, 0.4) == pytest.approx(1.7, abs=1e-9)
    assert fr.gamma_inverse(0.0, 0.4) == pytest.approx(-0.6)


def test_alpha_validation():
    with pytest.raises(ValueError):
        fr.rho(1.0, 1.5)


def test_solve_and_evaluate():
    u = fr.solve("caputo", 0.5, [1.0], 1.0, 150)
    value, tail = u.evaluate(1.0)
    assert value.real == pytest.approx(5.008980080762283, rel=1e-10)
    assert tail < 1e-30
    # quadrature oracle sees the eigenfunction property
    dv, _ = fr.caputo_derivative_quadrature(u, 0.5)
    uv, _ = u.evaluate(0.5)
    assert dv.real == pytest.approx(uv.real, rel=1e-7)


def test_gl_roundtrip():
    v = fr.AlphaSeries(0.4, 0.0, [1.0, 0.5 - 0.25j, -0.125j])
    back = fr.gl_integral(fr.gl_derivative(v))
    assert back.coeffs[0] == 0
    assert back.coeffs[1] == pytest.approx(v.coeffs[1])
    assert back.coeffs[2] == pytest.approx(v.coeffs[2])


def test_frobenius_scalar():
    sol = fr.frobenius_solve(0.5, [[[1.0]], [[1.0]]], 8)
    assert sol["exponents"][0] == pytest.approx(0.7211793494923750, abs=1e-10)
    assert sol["residual"] < 1e-12


def test_diophantine_golden():
    rep = fr.diophantine_analyze(fr.PreciseAlpha("golden"), 40)
    assert rep["verdict"] == "badly-approximable"
    assert all(t == 1 for t in rep["cf_terms"])


def test_irregular_resonance_refused():
    with pytest.raises(ValueError):
        fr.build_formal_solution(fr.PreciseAlpha("0.5"), 1.0, 1.0, 10)


def test_partial_sums_convergent():
    rep = fr.partial_sums(fr.PreciseAlpha("golden"), 1.0, 1.0, 1.0, [100, 200])
    assert rep["diagnosis"] == "convergent"
    assert abs(rep["sums"][1] - rep["sums"][0]) <= 1e-12


def test_model_scalar_verdicts():
    verdict, exponent = fr.model_scalar_exponent(0.0, 0.5, "rl")
    assert verdict == "power" and exponent == pytest.approx(-0.5)
    verdict, _ = fr.model_scalar_exponent(0.0, 0.5, "caputo")
    assert verdict == "constant"
    verdict, _ = fr.model_scalar_exponent(-1.0, 0.5, "caputo")
    assert verdict == "none"


def test_mollifier_demo_decreases():
    errs = fr.mollifier_convergence_demo(2, [1, 4], 0.5)
    assert errs[1] < errs[0]
