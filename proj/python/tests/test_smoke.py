import math

import numpy as np
import pytest

import specfact as sf


def density(n=sf.DEFAULT_GRID_SIZE):
    t = sf.grid(n)
    return np.exp(np.cos(t) + 0.5 * np.sin(2 * t))


def test_grid_and_integral():
    t = sf.grid(64)
    assert t[0] == -math.pi
    assert sf.integrate(np.ones(64)) == pytest.approx(2 * math.pi)
    with pytest.raises(sf.ParameterError):
        sf.grid(12)


def test_conjugate_of_cosine_is_sine():
    t = sf.grid(256)
    assert np.max(np.abs(sf.harmonic_conjugate(np.cos(t)) - np.sin(t))) < 1e-13


def test_boundary_factor_of_shifted_cosine():
    t = sf.grid()
    a = sf.factorize_boundary(1.25 - np.cos(t))
    assert a.method == "boundary"
    assert a[0].real == pytest.approx(1.0, rel=1e-13)
    assert abs(a[1] + 0.5) < 1e-13
    assert np.max(np.abs(a.coefficients[2:])) < 1e-13
    assert sf.outer_check(a, 1.25 - np.cos(t))["pass"]


def test_routes_agree():
    f = density()
    a = sf.factorize_boundary(f)
    z = [0.0, 0.3 + 0.4j, -0.7j]
    h = sf.factorize_herglotz(f, z)
    for zi, hi in zip(z, h):
        assert abs(a.evaluate(zi) - hi) < 1e-8 * abs(hi)
    fr = sf.fejer_riesz({-1: -0.5, 0: 1.25, 1: -0.5})
    assert np.allclose(fr.coefficients, [1.0, -0.5])


def test_errors_map_to_python():
    f = np.ones(64)
    f[3] = -1.0
    with pytest.raises(sf.DomainError, match="sample 3"):
        sf.factorize_boundary(f)
    assert sf.factorize_boundary(f, floor=0.5).floored_samples == 1
    with pytest.raises(sf.PrecisionBudgetError):
        sf.verify_theorem_1(50)
    with pytest.raises(ValueError):
        sf.corollary_constant(1.0)


def test_bounds_and_identity():
    f = density()
    g = f * np.exp(0.2 * np.sin(sf.grid()))
    terms = sf.h2_identity_terms(f, g)
    assert terms["relative_error"] < 1e-6
    for r in (sf.check_theorem_2(f, g), sf.check_corollary_p(f, g, 3.0), sf.check_theorem_main(f, g, 2.0)):
        assert r["pass"]
        assert r["lhs"] <= r["rhs"]


def test_constants():
    c = sf.constants()
    assert c["K"] == pytest.approx((math.pi**2 / 8) / c["catalan"])
    assert c["K0"] == pytest.approx(c["K"] / 2 * c["sine_integral_pi"])
    assert c["C2"] == pytest.approx(4 * math.sqrt(c["K0"]))


def test_counterexample_family():
    for n in (1, 2):
        r = sf.verify_theorem_1(n)
        assert r["pass"]
        m = sf.family_metrics(n)
        assert m["m1"] <= 1 / n
        assert m["m2"] <= 1 / n
        assert math.sqrt(m["m3"]) >= 2 - 1 / n


def test_orlicz_power_is_lp():
    t = sf.grid(1024)
    f = 1 + 0.5 * np.cos(t)
    lux = sf.luxemburg_norm(f, 2.0)
    assert lux == pytest.approx(sf.lp_norm(f, 2.0) / math.sqrt(2), rel=1e-8)
    assert sf.lambda_phi(3.0, 8.0) == pytest.approx(2.0, rel=1e-10)


def test_sweep_is_deterministic():
    a = sf.sweep_check("identity", 8, seed=7, jobs=1, n=1024)
    b = sf.sweep_check("identity", 8, seed=7, jobs=2, n=1024)
    assert a == b
    assert a["failures"] == 0
    assert "thm2" in sf.sweep_check_names()
