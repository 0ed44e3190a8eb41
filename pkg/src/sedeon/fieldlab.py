"""Sedeonic wave operators applied to plane waves and sampled grids.

A plane-wave mode is ``A exp(i s (omega t - k.r))`` with ``s = +1`` by
default (``WaveOperatorParams.convention``). On such a mode the time
derivative becomes multiplication by ``i s omega`` and the gradient becomes
``-i s k``, so the first-order operator

    i e_1 (1/c) d/dt - e_2 grad - i e_3 mu

reduces to left multiplication of the amplitude by a fixed sedeon.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .algebra import (
    Sedeon,
    SedeonDomainError,
    absolute_vector,
    basis_element,
    decompose,
    e_unit,
    mul,
    scalar_product,
    vector_product,
)
from .representation import left_regular_matrix

ANALYTIC_TOL = 1e-12
GRID_TOL = 1e-8


@dataclass(frozen=True)
class WaveOperatorParams:
    """Mass enters only through ``mass_coeff = m c / hbar`` (inverse length)."""

    mass_coeff: float = 0.0
    c: float = 1.0
    convention: int = 1

    def __post_init__(self):
        if not self.mass_coeff >= 0:
            raise SedeonDomainError("mass coefficient must be non-negative")
        if not self.c > 0:
            raise SedeonDomainError("speed of light must be positive")
        if self.convention not in (1, -1):
            raise SedeonDomainError("mode convention must be +1 or -1")

    @classmethod
    def from_physical(cls, mass: float, c: float = 1.0, hbar: float = 1.0, convention: int = 1):
        return cls(mass * c / hbar, c, convention)


def _vec3(v: Sequence[complex], dtype=float) -> np.ndarray:
    arr = np.asarray(v, dtype=dtype)
    if arr.shape != (3,) or not np.all(np.isfinite(arr)):
        raise SedeonDomainError("expected a finite 3-vector")
    return arr


@dataclass(frozen=True)
class PlaneWaveField:
    amplitude: Sedeon
    omega: float
    kvec: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        if not math.isfinite(self.omega):
            raise SedeonDomainError("omega must be finite")
        object.__setattr__(self, "kvec", _vec3(self.kvec))

    def phase(self, t: float, r: Sequence[float], convention: int = 1) -> complex:
        return complex(np.exp(1j * convention * (self.omega * t - self.kvec @ np.asarray(r, float))))


@dataclass(frozen=True)
class FieldIntensities:
    scalar: PlaneWaveField
    vector: PlaneWaveField

    def __post_init__(self):
        if not self.scalar.amplitude.is_scalar():
            raise SedeonDomainError("scalar intensity has vector components")
        if not self.vector.amplitude.is_vector():
            raise SedeonDomainError("vector intensity has scalar components")

    @property
    def total(self) -> Sedeon:
        return self.scalar.amplitude + self.vector.amplitude


# -- operator pieces ---------------------------------------------------------

def _symbols(omega: float, kvec: np.ndarray, p: WaveOperatorParams) -> tuple[complex, np.ndarray]:
    s = p.convention
    return 1j * s * omega, -1j * s * np.asarray(kvec, float)


def time_operator(omega: float, p: WaveOperatorParams) -> Sedeon:
    """``i d_t = i e_1 (1/c) d/dt`` on the mode."""
    dt, _ = _symbols(omega, np.zeros(3), p)
    return (1j * dt / p.c) * e_unit(1)


def gradient_operator(kvec: Sequence[float], p: WaveOperatorParams) -> Sedeon:
    """``grad_r = e_2 (a_1 d/dx + a_2 d/dy + a_3 d/dz)`` on the mode."""
    _, grad = _symbols(0.0, _vec3(kvec), p)
    return mul(e_unit(2), absolute_vector(grad))


def mass_operator(p: WaveOperatorParams) -> Sedeon:
    """``m_tr = e_3 mu``."""
    return p.mass_coeff * e_unit(3)


def operator_sedeon(omega: float, kvec: Sequence[float], p: WaveOperatorParams) -> Sedeon:
    """The first-order operator ``i d_t - grad_r - i m_tr`` as one sedeon."""
    return time_operator(omega, p) - gradient_operator(kvec, p) - 1j * mass_operator(p)


def operator_matrix(omega: float, kvec: Sequence[float], p: WaveOperatorParams) -> np.ndarray:
    return left_regular_matrix(operator_sedeon(omega, kvec, p))


def klein_gordon_factor(omega: float, kvec: Sequence[float], p: WaveOperatorParams) -> float:
    """Scalar the squared operator reduces to: ``omega^2/c^2 - k^2 - mu^2``."""
    k = _vec3(kvec)
    return omega**2 / p.c**2 - float(k @ k) - p.mass_coeff**2


def on_shell_omega(kvec: Sequence[float], p: WaveOperatorParams) -> float:
    k = _vec3(kvec)
    return p.c * math.sqrt(float(k @ k) + p.mass_coeff**2)


def apply_wave_operator(f: PlaneWaveField, p: WaveOperatorParams) -> PlaneWaveField:
    return PlaneWaveField(mul(operator_sedeon(f.omega, f.kvec, p), f.amplitude), f.omega, f.kvec)


# -- reports -----------------------------------------------------------------

@dataclass(frozen=True)
class ResidualEntry:
    equation: str
    max_residual: float
    tolerance: float

    def __post_init__(self):
        if not math.isfinite(self.max_residual):
            raise ValueError(f"residual for {self.equation!r} is not finite")

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance

    def to_json(self) -> dict:
        return {
            "equation": self.equation,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class ResidualReport:
    entries: tuple[ResidualEntry, ...]

    def __iter__(self) -> Iterator[ResidualEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, label: str) -> ResidualEntry:
        for e in self.entries:
            if e.equation == label:
                return e
        raise KeyError(label)

    def __add__(self, other: ResidualReport) -> ResidualReport:
        return ResidualReport(self.entries + other.entries)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def _entry(label: str, residual, tol: float) -> ResidualEntry:
    if isinstance(residual, Sedeon):
        size = residual.max_abs()
    else:
        size = float(np.max(np.abs(np.atleast_1d(residual))))
    return ResidualEntry(label, size, tol)


# -- first-order structure ---------------------------------------------------

def _split_operator(x0: Sedeon, xv: Sedeon, omega, kvec, p) -> tuple[Sedeon, Sedeon]:
    """Scalar and vector parts of the operator applied to ``x0 + xv``, term by term."""
    t = time_operator(omega, p)
    g = gradient_operator(kvec, p)
    m = mass_operator(p)
    scalar = mul(t, x0) - scalar_product(g, xv) - 1j * mul(m, x0)
    vector = mul(t, xv) - mul(g, x0) - 1j * mul(m, xv) - vector_product(g, xv)
    return scalar, vector


def field_intensities(w: PlaneWaveField, p: WaveOperatorParams) -> FieldIntensities:
    w0, wv = decompose(w.amplitude)
    e0, ev = _split_operator(w0, wv, w.omega, w.kvec, p)
    return FieldIntensities(PlaneWaveField(e0, w.omega, w.kvec), PlaneWaveField(ev, w.omega, w.kvec))


def first_order_residual(
    fi: FieldIntensities, j: Sedeon, p: WaveOperatorParams, tol: float = ANALYTIC_TOL
) -> ResidualReport:
    """Residuals of the first-order system for the intensities with source ``j``."""
    j0, jv = decompose(j)
    omega, kvec = fi.scalar.omega, fi.scalar.kvec
    t = time_operator(omega, p)
    g = gradient_operator(kvec, p)
    m = mass_operator(p)
    e0, ev = fi.scalar.amplitude, fi.vector.amplitude
    r_scalar = mul(t, e0) - scalar_product(g, ev) - 1j * mul(m, e0) - j0
    r_vector = mul(t, ev) - vector_product(g, ev) - mul(g, e0) - 1j * mul(m, ev) - jv
    return ResidualReport((_entry("first_order_scalar", r_scalar, tol), _entry("first_order_vector", r_vector, tol)))


def first_order_residual_sedeons(fi: FieldIntensities, j: Sedeon, p: WaveOperatorParams) -> tuple[Sedeon, Sedeon]:
    j0, jv = decompose(j)
    s, v = _split_operator(fi.scalar.amplitude, fi.vector.amplitude, fi.scalar.omega, fi.scalar.kvec, p)
    return s - j0, v - jv


def second_order_residual(
    w: PlaneWaveField, j: Sedeon, p: WaveOperatorParams, tol: float = ANALYTIC_TOL
) -> ResidualReport:
    """Residual of the double application against ``j``, plus the split source side.

    The two extra entries compare the squared operator acting on each
    intensity with the operator applied to the source, separated into its
    scalar and vector parts.
    """
    once = apply_wave_operator(w, p)
    twice = apply_wave_operator(once, p)
    fi = field_intensities(w, p)
    kg = klein_gordon_factor(w.omega, w.kvec, p)
    src_scalar, src_vector = _split_operator(*decompose(j), w.omega, w.kvec, p)
    # squared operator is the scalar kg, so acting on each intensity is a rescale
    return ResidualReport(
        (
            _entry("second_order", twice.amplitude - j, tol),
            _entry("intensity_wave_scalar", kg * fi.scalar.amplitude - src_scalar, tol),
            _entry("intensity_wave_vector", kg * fi.vector.amplitude - src_vector, tol),
        )
    )


def dirac_residual(
    w: PlaneWaveField | Sequence[PlaneWaveField], p: WaveOperatorParams, tol: float = ANALYTIC_TOL
) -> ResidualReport:
    """Single application of the operator; zero for solutions of the first-order equation.

    A sequence of modes is treated as a superposition and the per-mode
    residual magnitudes are summed.
    """
    modes = [w] if isinstance(w, PlaneWaveField) else list(w)
    total = sum(apply_wave_operator(m, p).amplitude.max_abs() for m in modes)
    return ResidualReport((ResidualEntry("dirac", float(total), tol),))


def operator_singular_values(omega: float, kvec: Sequence[float], p: WaveOperatorParams) -> np.ndarray:
    return np.linalg.svd(operator_matrix(omega, kvec, p), compute_uv=False)


def dirac_null_vector(omega: float, kvec: Sequence[float], p: WaveOperatorParams) -> tuple[Sedeon, float]:
    """Right singular vector of the smallest singular value, as a sedeon amplitude."""
    _, s, vh = np.linalg.svd(operator_matrix(omega, kvec, p))
    return Sedeon(np.conj(vh[-1])), float(s[-1])


# -- electromagnetic specialization -----------------------------------------

@dataclass(frozen=True)
class EMPotential:
    phi: complex
    avec: np.ndarray
    omega: float
    kvec: np.ndarray
    c: float = 1.0
    convention: int = 1

    def __post_init__(self):
        object.__setattr__(self, "avec", _vec3(self.avec, complex))
        object.__setattr__(self, "kvec", _vec3(self.kvec))
        if not (math.isfinite(self.omega) and np.isfinite(self.phi)):
            raise SedeonDomainError("potential parameters must be finite")

    @property
    def params(self) -> WaveOperatorParams:
        return WaveOperatorParams(0.0, self.c, self.convention)


@dataclass(frozen=True)
class EMSource:
    rho: complex = 0.0
    jvec: np.ndarray = field(default_factory=lambda: np.zeros(3, complex))

    def __post_init__(self):
        object.__setattr__(self, "jvec", _vec3(self.jvec, complex))


def em_potential_sedeon(pot: EMPotential) -> Sedeon:
    """``i e_1 phi + e_2 A``."""
    return 1j * pot.phi * e_unit(1) + mul(e_unit(2), absolute_vector(pot.avec))


def em_source_sedeon(src: EMSource, c: float = 1.0) -> Sedeon:
    """``-i e_1 4 pi rho - e_2 (4 pi / c) j``, Gaussian units."""
    return -4j * math.pi * src.rho * e_unit(1) - (4 * math.pi / c) * mul(e_unit(2), absolute_vector(src.jvec))


def _gibbs_cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.cross(a, b)


def em_fields(pot: EMPotential) -> tuple[np.ndarray, np.ndarray, complex]:
    """Electric field, magnetic field and Lorentz-gauge residual of a potential mode.

    ``H = -i [grad x A]`` uses the sedeonic cross product, which carries a
    factor ``i``, so ``H`` equals the ordinary curl of ``A``.
    """
    dt, grad = _symbols(pot.omega, pot.kvec, pot.params)
    e = -(dt / pot.c) * pot.avec - grad * pot.phi
    h = -1j * (1j * _gibbs_cross(grad, pot.avec))
    gauge = (dt / pot.c) * pot.phi + grad @ pot.avec
    return e, h, complex(gauge)


def em_intensity_sedeon(e: np.ndarray, h: np.ndarray, e_slot: int = 3) -> Sedeon:
    """``e_n E - i H``; the operator output places ``E`` under ``e_3``."""
    return mul(e_unit(e_slot), absolute_vector(e)) - 1j * absolute_vector(h)


def em_operator_output(pot: EMPotential) -> Sedeon:
    """Massless operator applied to the potential sedeon."""
    return mul(operator_sedeon(pot.omega, pot.kvec, pot.params), em_potential_sedeon(pot))


def maxwell_residuals(
    e: np.ndarray,
    h: np.ndarray,
    src: EMSource,
    omega: float,
    kvec: Sequence[float],
    c: float = 1.0,
    convention: int = 1,
    tol: float = ANALYTIC_TOL,
) -> ResidualReport:
    """The four Maxwell equations evaluated directly on the mode.

    Cross products are sedeonic (``[grad x X] = i grad x_Gibbs X``).
    """
    p = WaveOperatorParams(0.0, c, convention)
    dt, grad = _symbols(omega, _vec3(kvec), p)
    e = np.asarray(e, complex)
    h = np.asarray(h, complex)

    def curl(x):
        return 1j * _gibbs_cross(grad, x)

    gauss = grad @ e - 4 * math.pi * src.rho
    ampere = curl(h) - 1j * (dt / c) * e - 1j * (4 * math.pi / c) * src.jvec
    faraday = curl(e) + 1j * (dt / c) * h
    monopole = grad @ h
    return ResidualReport(
        (
            _entry("time_scalar", gauss, tol),
            _entry("space_vector", ampere, tol),
            _entry("time_vector", faraday, tol),
            _entry("space_scalar", monopole, tol),
        )
    )


def maxwell_residuals_sedeon(
    e: np.ndarray,
    h: np.ndarray,
    src: EMSource,
    omega: float,
    kvec: Sequence[float],
    c: float = 1.0,
    convention: int = 1,
    tol: float = ANALYTIC_TOL,
) -> tuple[ResidualReport, float]:
    """Same four equations read off ``O (e_3 E - i H) - J`` component by component.

    Also returns the largest component of that residual lying outside the
    four Maxwell slots, which must vanish identically.
    """
    p = WaveOperatorParams(0.0, c, convention)
    r = mul(operator_sedeon(omega, kvec, p), em_intensity_sedeon(e, h)) - em_source_sedeon(src, c)
    comp = r.components
    report = ResidualReport(
        (
            _entry("time_scalar", 1j * comp[1, 0], tol),
            _entry("space_vector", -1j * comp[2, 1:], tol),
            _entry("time_vector", 1j * comp[1, 1:], tol),
            _entry("space_scalar", -1j * comp[2, 0], tol),
        )
    )
    rest = np.array(comp)
    rest[1:3, :] = 0
    return report, float(np.max(np.abs(rest)))


# -- finite-difference grids -------------------------------------------------

@dataclass(frozen=True)
class GridField1D:
    """Time-harmonic field sampled along x: ``W(x, t) = sample(x) exp(i s omega t)``."""

    x0: float
    h: float
    samples: tuple[Sedeon, ...]
    omega: float = 0.0

    def __post_init__(self):
        if not self.h > 0:
            raise SedeonDomainError("grid spacing must be positive")
        object.__setattr__(self, "samples", tuple(self.samples))
        if len(self.samples) < 5:
            raise SedeonDomainError("a grid field needs at least 5 samples")

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.h * np.arange(len(self.samples))


def sample_mode(mode: PlaneWaveField, x0: float, h: float, count: int, p: WaveOperatorParams) -> GridField1D:
    """Sample a plane wave at ``t = 0`` on points ``(x0 + j h, 0, 0)``."""
    samples = [mode.phase(0.0, (x, 0.0, 0.0), p.convention) * mode.amplitude for x in x0 + h * np.arange(count)]
    return GridField1D(x0, h, samples, mode.omega)


def grid_apply_wave_operator(g: GridField1D, p: WaveOperatorParams) -> np.ndarray:
    """Operator output at interior points, shape ``(len(samples) - 2, 4, 4)``.

    The x derivative uses the 3-point central difference; the time
    derivative is applied analytically.
    """
    w = np.stack([s.flat for s in g.samples])
    dw = (w[2:] - w[:-2]) / (2.0 * g.h)
    t = left_regular_matrix(time_operator(g.omega, p))
    ddx = left_regular_matrix(mul(e_unit(2), basis_element(0, 1)))
    m = left_regular_matrix(mass_operator(p))
    out = w[1:-1] @ t.T - dw @ ddx.T - 1j * (w[1:-1] @ m.T)
    return out.reshape(-1, 4, 4)


def _analytic_at(mode: PlaneWaveField, xs: np.ndarray, p: WaveOperatorParams) -> np.ndarray:
    amp = apply_wave_operator(mode, p).amplitude.components
    return np.stack([mode.phase(0.0, (x, 0.0, 0.0), p.convention) * amp for x in xs])


def grid_first_order_residual(
    g: GridField1D,
    p: WaveOperatorParams,
    reference: PlaneWaveField | None = None,
    tol: float = GRID_TOL,
) -> ResidualReport:
    """Max over interior points of the discrete operator output.

    With ``reference`` (the mode ``g`` was sampled from) the analytic operator
    output is subtracted first, leaving the discretization error.
    """
    out = grid_apply_wave_operator(g, p)
    if reference is not None:
        out = out - _analytic_at(reference, g.x[1:-1], p)
    return ResidualReport((_entry("grid_first_order", out, tol),))


def richardson(values: Sequence[np.ndarray], ratio: float = 2.0, order: int = 2, step: int = 2) -> np.ndarray:
    """Richardson tableau over successively refined estimates, finest last."""
    level = [np.asarray(v) for v in values]
    p = order
    while len(level) > 1:
        f = ratio**p
        level = [(f * fine - coarse) / (f - 1.0) for coarse, fine in zip(level, level[1:])]
        p += step
    return level[0]


@dataclass(frozen=True)
class ConvergenceStudy:
    spacings: tuple[float, ...]
    errors: tuple[float, ...]
    orders: tuple[float, ...]
    extrapolation_error: float


def grid_convergence(
    mode: PlaneWaveField,
    p: WaveOperatorParams,
    spacings: Sequence[float] = (0.1, 0.05, 0.025),
    x0: float = 0.0,
    length: float = 1.0,
) -> ConvergenceStudy:
    """Errors of the discrete operator on successively halved grids.

    Errors are measured at the interior points of the coarsest grid, which
    every finer grid also contains.
    """
    spacings = tuple(float(h) for h in spacings)
    coarse = spacings[0]
    n_coarse = int(round(length / coarse))
    xs = x0 + coarse * np.arange(1, n_coarse)
    exact = _analytic_at(mode, xs, p)
    estimates = []
    for h in spacings:
        stride = int(round(coarse / h))
        count = n_coarse * stride + 1
        out = grid_apply_wave_operator(sample_mode(mode, x0, h, count, p), p)
        # interior index j corresponds to sample j + 1
        estimates.append(out[stride - 1 :: stride][: len(xs)])
    errors = tuple(float(np.max(np.abs(e - exact))) for e in estimates)
    orders = tuple(math.log2(a / b) for a, b in zip(errors, errors[1:]))
    extrap = float(np.max(np.abs(richardson(estimates) - exact)))
    return ConvergenceStudy(spacings, errors, orders, extrap)
