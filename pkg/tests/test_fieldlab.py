from __future__ import annotations

import math

import numpy as np
import pytest

from sedeon import fieldlab as fl
from sedeon.algebra import Sedeon, SedeonDomainError, a_unit, decompose, e_unit, mul, random_sedeon


def random_direction(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


# -- operator algebra --------------------------------------------------------

@pytest.mark.parametrize("convention", [1, -1])
def test_operator_squares_to_scalar(rng, convention):
    for mu in (0.0, 0.7, 2.0):
        p = fl.WaveOperatorParams(mu, c=1.5, convention=convention)
        omega, kvec = rng.uniform(-4, 4), rng.uniform(-2, 2, 3)
        o = fl.operator_sedeon(omega, kvec, p)
        expected = omega**2 / p.c**2 - kvec @ kvec - mu**2
        assert mul(o, o).allclose(Sedeon.scalar(expected), atol=1e-12)
        assert fl.klein_gordon_factor(omega, kvec, p) == pytest.approx(expected, abs=1e-12)


def test_double_application_vanishes_on_shell(rng):
    for mu in (0.0, 1.0):
        p = fl.WaveOperatorParams(mu)
        kvec = rng.uniform(-2, 2, 3)
        mode = fl.PlaneWaveField(random_sedeon(rng), fl.on_shell_omega(kvec, p), kvec)
        report = fl.second_order_residual(mode, Sedeon.zero(), p)
        assert report.passed, report.to_json()


def test_off_shell_residual_reports_the_factor():
    # mass 0, k = (1, 0, 0), omega = 2, unit amplitude: the square is 4 - 1 = 3
    p = fl.WaveOperatorParams(0.0)
    mode = fl.PlaneWaveField(Sedeon.scalar(1.0), 2.0, (1.0, 0.0, 0.0))
    report = fl.second_order_residual(mode, Sedeon.zero(), p)
    assert report["second_order"].max_residual == pytest.approx(3.0, abs=1e-12)
    assert not report.passed


def test_intensities_split_operator_output(rng):
    p = fl.WaveOperatorParams(0.4)
    mode = fl.PlaneWaveField(random_sedeon(rng), 1.3, rng.uniform(-1, 1, 3))
    fi = fl.field_intensities(mode, p)
    s, v = decompose(fl.apply_wave_operator(mode, p).amplitude)
    assert fi.scalar.amplitude.allclose(s, atol=1e-13)
    assert fi.vector.amplitude.allclose(v, atol=1e-13)
    assert fi.total.allclose(s + v, atol=1e-13)


def test_first_order_system_with_consistent_source(rng):
    p = fl.WaveOperatorParams(0.9)
    mode = fl.PlaneWaveField(random_sedeon(rng), -0.8, rng.uniform(-1, 1, 3))
    fi = fl.field_intensities(mode, p)
    source = mul(fl.operator_sedeon(mode.omega, mode.kvec, p), fi.total)
    assert fl.first_order_residual(fi, source, p).passed
    assert not fl.first_order_residual(fi, Sedeon.zero(), p).passed


def test_zero_amplitude_is_trivially_a_solution():
    p = fl.WaveOperatorParams(1.0)
    mode = fl.PlaneWaveField(Sedeon.zero(), 5.0, (1.0, 2.0, 3.0))
    assert fl.dirac_residual(mode, p)["dirac"].max_residual == 0.0


def test_report_json_shape():
    report = fl.dirac_residual(fl.PlaneWaveField(Sedeon.scalar(1.0), 1.0, (0, 0, 0)), fl.WaveOperatorParams())
    (entry,) = report.to_json()
    assert set(entry) == {"equation", "max_residual", "tolerance", "pass"}
    assert isinstance(entry["max_residual"], float)


def test_mode_phase_convention():
    mode = fl.PlaneWaveField(Sedeon.scalar(1.0), 2.0, (1.0, 0, 0))
    assert mode.phase(0.5, (0.25, 0, 0)) == pytest.approx(np.exp(1j * 0.75))
    assert mode.phase(0.5, (0.25, 0, 0), convention=-1) == pytest.approx(np.exp(-1j * 0.75))


@pytest.mark.parametrize("kwargs", [{"mass_coeff": -1.0}, {"c": 0.0}, {"convention": 2}])
def test_parameter_domain(kwargs):
    with pytest.raises(SedeonDomainError):
        fl.WaveOperatorParams(**kwargs)


def test_physical_parameters():
    p = fl.WaveOperatorParams.from_physical(2.0, c=3.0, hbar=0.5)
    assert p.mass_coeff == pytest.approx(12.0)


# -- Dirac kernel ------------------------------------------------------------

@pytest.mark.parametrize("mu", [0.0, 1.0])
def test_kernel_on_shell(rng, mu):
    p = fl.WaveOperatorParams(mu)
    kvec = rng.uniform(-2, 2, 3)
    w0 = fl.on_shell_omega(kvec, p)
    assert fl.operator_singular_values(w0, kvec, p)[-1] < 1e-10
    amp, sigma = fl.dirac_null_vector(w0, kvec, p)
    assert sigma < 1e-10
    assert fl.dirac_residual(fl.PlaneWaveField(amp, w0, kvec), p).passed


def test_smallest_singular_value_is_distance_to_shell(rng):
    for mu in (0.0, 1.0):
        p = fl.WaveOperatorParams(mu)
        kvec = rng.uniform(-2, 2, 3)
        w0 = fl.on_shell_omega(kvec, p)
        for omega in (0.0, 0.3 * w0, 2.5 * w0, -1.7 * w0):
            assert fl.operator_singular_values(omega, kvec, p)[-1] == pytest.approx(abs(abs(omega) - w0), abs=1e-12)


def test_superposition_of_on_shell_modes(rng):
    p = fl.WaveOperatorParams(0.5)
    modes = []
    for _ in range(3):
        kvec = rng.uniform(-1, 1, 3)
        w0 = fl.on_shell_omega(kvec, p)
        modes.append(fl.PlaneWaveField(fl.dirac_null_vector(w0, kvec, p)[0], w0, kvec))
    assert fl.dirac_residual(modes, p).passed


# -- electromagnetic limit ---------------------------------------------------

def transverse_mode(rng):
    kvec = rng.uniform(-2, 2, 3)
    kmag = float(np.linalg.norm(kvec))
    pol = np.cross(kvec, random_direction(rng))
    pol /= np.linalg.norm(pol)
    return fl.EMPotential(0.0, (0.3 - 0.8j) * pol, kmag, kvec)


def test_em_fields_match_textbook_derivatives():
    # A = A0 y exp(i(w t - k x)); E = -dA/dt, H = curl A
    a0, k = 0.7, 1.3
    pot = fl.EMPotential(0.0, (0.0, a0, 0.0), k, (k, 0.0, 0.0))
    e, h, gauge = fl.em_fields(pot)
    assert np.allclose(e, [0, -1j * k * a0, 0])
    assert np.allclose(h, [0, 0, -1j * k * a0])
    assert gauge == 0


def test_operator_output_is_em_intensity(rng):
    for _ in range(10):
        pot = transverse_mode(rng)
        e, h, _ = fl.em_fields(pot)
        out = fl.em_operator_output(pot)
        assert out.allclose(fl.em_intensity_sedeon(e, h), atol=1e-12)


def test_em_intensity_places_e_under_e3():
    out = fl.em_intensity_sedeon(np.array([1.0, 0, 0]), np.zeros(3))
    assert out == mul(e_unit(3), a_unit(1))


def test_vacuum_maxwell(rng):
    for _ in range(10):
        pot = transverse_mode(rng)
        e, h, _ = fl.em_fields(pot)
        direct = fl.maxwell_residuals(e, h, fl.EMSource(), pot.omega, pot.kvec)
        via, rest = fl.maxwell_residuals_sedeon(e, h, fl.EMSource(), pot.omega, pot.kvec)
        assert direct.passed and via.passed
        assert rest < 1e-12
        for a, b in zip(direct, via):
            assert a.equation == b.equation
            assert a.max_residual == pytest.approx(b.max_residual, abs=1e-12)


def test_off_shell_potential_breaks_only_ampere(rng):
    pot = transverse_mode(rng)
    pot = fl.EMPotential(pot.phi, pot.avec, 2 * pot.omega, pot.kvec)
    e, h, _ = fl.em_fields(pot)
    report = fl.maxwell_residuals(e, h, fl.EMSource(), pot.omega, pot.kvec)
    # fields derived from potentials satisfy the homogeneous pair identically
    assert report["time_vector"].passed and report["space_scalar"].passed
    assert report["time_scalar"].passed
    assert not report["space_vector"].passed


def test_source_terms_balance(rng):
    # an off-shell potential is a solution once the matching current is supplied
    pot = transverse_mode(rng)
    pot = fl.EMPotential(pot.phi, pot.avec, 1.5 * pot.omega, pot.kvec)
    e, h, _ = fl.em_fields(pot)
    dt, grad = 1j * pot.omega, -1j * pot.kvec
    # solve the Ampere equation for j directly
    curl_h = 1j * np.cross(grad, h)
    jvec = (curl_h - 1j * dt * e) / (1j * 4 * math.pi)
    report = fl.maxwell_residuals(e, h, fl.EMSource(0.0, jvec), pot.omega, pot.kvec)
    assert report.passed


# -- grids -------------------------------------------------------------------

def test_grid_order_and_extrapolation(rng):
    mode = fl.PlaneWaveField(random_sedeon(rng), 1.0, (1.0, 0.0, 0.0))
    study = fl.grid_convergence(mode, fl.WaveOperatorParams(0.0))
    assert all(abs(o - 2.0) <= 0.2 for o in study.orders)
    assert study.extrapolation_error <= 1e-8


def test_grid_residual_of_sampled_solution(rng):
    p = fl.WaveOperatorParams(0.5)
    kvec = (1.2, 0.0, 0.0)
    w0 = fl.on_shell_omega(kvec, p)
    mode = fl.PlaneWaveField(fl.dirac_null_vector(w0, kvec, p)[0], w0, kvec)
    coarse = fl.grid_first_order_residual(fl.sample_mode(mode, 0.0, 0.01, 50, p), p)
    fine = fl.grid_first_order_residual(fl.sample_mode(mode, 0.0, 0.005, 100, p), p)
    ratio = coarse["grid_first_order"].max_residual / fine["grid_first_order"].max_residual
    assert ratio == pytest.approx(4.0, rel=0.05)


def test_richardson_removes_leading_error():
    # f(h) = 1 + h^2 + h^4 extrapolates to 1 exactly with two levels
    vals = [np.array(1 + h**2 + h**4) for h in (0.4, 0.2, 0.1)]
    assert fl.richardson(vals) == pytest.approx(1.0, abs=1e-14)


def test_grid_requires_enough_points():
    with pytest.raises(SedeonDomainError):
        fl.GridField1D(0.0, 0.1, [Sedeon.zero()] * 4)
