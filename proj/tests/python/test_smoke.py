import math

import pytest

import casimir_plates as cp


def test_version():
    assert cp.__version__ == "0.1.0"


def test_compute_zero_temperature_dict():
    r = cp.compute(3, 1.0, "dd")
    assert list(r.keys()) == [
        "engine",
        "n_dim",
        "bc",
        "d",
        "T",
        "energy_per_area",
        "free_energy_per_area",
        "entropy_per_area",
        "pressure",
        "error_bounds",
        "classical_ratio",
    ]
    assert r["engine"] == "closed_form"
    assert r["bc"] == "dd"
    assert r["n_dim"] == 3
    assert r["T"] == 0.0
    want = -math.pi**2 / 1440.0
    assert abs(r["energy_per_area"] - want) <= 1e-12 * abs(want)
    assert r["free_energy_per_area"] == r["energy_per_area"]
    assert r["entropy_per_area"] == 0.0
    assert r["pressure"] == pytest.approx(3.0 * want, rel=1e-12)
    assert set(r["error_bounds"]) == {
        "energy_per_area",
        "free_energy_per_area",
        "entropy_per_area",
        "pressure",
    }


def test_compute_finite_temperature_identity():
    r = cp.compute(3, 1.0, "dd", temperature=1.0)
    beta = 1.0
    s = beta * (r["energy_per_area"] - r["free_energy_per_area"])
    assert r["entropy_per_area"] == pytest.approx(s, rel=1e-12)
    assert r["classical_ratio"] == pytest.approx(1.0 / math.pi, rel=1e-14)


def test_compute_deep_quantum_routes_to_mode_sum():
    r = cp.compute(3, 1.0, "dd", temperature=0.005)
    assert r["engine"] == "mode_sum"
    # barely above absolute zero: energy sits just above the T = 0 value
    # (the thermal shift keeps a tiny blackbody piece, so it is small but
    # not zero)
    e0 = cp.energy_zero_t(3, 1.0, "dd")
    assert r["energy_per_area"] >= e0
    assert abs(r["energy_per_area"] - e0) < 1e-4 * abs(e0)


def test_zero_temperature_scalars():
    e = cp.energy_zero_t(2, 1.0, "dn")
    assert e == pytest.approx(0.01793562168896111, rel=1e-13)
    p = cp.pressure_zero_t(2, 1.0, "dn")
    assert p == pytest.approx(2.0 * e, rel=1e-13)


def test_finite_temperature_tuples():
    e, e_err = cp.energy_finite_t(3, 1.0, "dd", temperature=1.0)
    f, f_err = cp.free_energy_finite_t(3, 1.0, "dd", temperature=1.0)
    s, s_err = cp.entropy(3, 1.0, "dd", temperature=1.0)
    assert e_err >= 0.0 and f_err >= 0.0 and s_err >= 0.0
    assert s == pytest.approx(1.0 * (e - f), rel=1e-12)
    p, _ = cp.pressure_finite_t(3, 1.0, "dd", temperature=1.0)
    assert p < 0.0
    assert e == pytest.approx(-2.1911962116039489e-05, rel=1e-10)


def test_entropy_plateau():
    s = cp.entropy_high_t(3, 1.0, "dd")
    assert s == pytest.approx(0.023914162251948146, rel=1e-12)
    assert cp.entropy_high_t(1, 1.0, "dd") == 0.0
    assert cp.entropy_high_t(2, 1.0, "dn") < 0.0


def test_oracle_agrees_with_closed_form():
    got, err = cp.oracle_energy_zero_t(2, 1.0, "dd")
    want = cp.energy_zero_t(2, 1.0, "dd")
    assert abs(got - want) <= 1e-4 * abs(want)
    assert err >= 0.0


def test_optical_even_sum():
    got, err = cp.optical_even_energy(3, 1.0, "dd", n_max=10000)
    want = cp.energy_zero_t(3, 1.0, "dd")
    assert abs(got - want) <= err + 1e-15 * abs(want)


def test_validation_errors_map_to_value_error():
    with pytest.raises(ValueError):
        cp.compute(3, 1.0, "xy")
    with pytest.raises(ValueError):
        cp.compute(3, 1.0, "nn", temperature=1.0)
    with pytest.raises(ValueError):
        cp.compute(0, 1.0, "dd")
    with pytest.raises(ValueError):
        cp.compute(3, -1.0, "dd")
    assert issubclass(cp.ValidationError, ValueError)
    with pytest.raises(cp.ValidationError):
        cp.energy_finite_t(3, 1.0, "dd", temperature=0.0)


def test_convergence_error_maps_to_runtime_error():
    with pytest.raises(RuntimeError):
        cp.compute(2, 1.0, "dd", temperature=1.0 / 30.0, rel_tol=1e-16)
    assert issubclass(cp.ConvergenceError, RuntimeError)
