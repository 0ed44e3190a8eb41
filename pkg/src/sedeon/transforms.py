"""Rotations, space-time inversions and Lorentz boosts as sandwich products.

The sandwich products are the normative definitions. The closed-form
expansions (rotation formula, inversion sign patterns, textbook boost
formulas, and the component-wise boost table) are provided separately as
cross-check evaluators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .algebra import (
    Sedeon,
    SedeonContractError,
    SedeonDomainError,
    absolute_vector,
    decompose,
    e_unit,
    mul,
    product,
    scalar_product,
    vector_product,
)

AXIS_TOLERANCE = 1e-9

InversionMode = Literal["time", "space", "spacetime"]

# sandwich unit and the sign applied to each e_n block
INVERSIONS: dict[str, tuple[int, tuple[int, int, int, int]]] = {
    "time": (2, (1, -1, 1, -1)),
    "space": (1, (1, 1, -1, -1)),
    "spacetime": (3, (1, -1, -1, 1)),
}


def _unit_vector(v: Sequence[float], what: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,) or not np.all(np.isfinite(arr)):
        raise SedeonDomainError(f"{what} must be a finite real 3-vector")
    norm = float(np.linalg.norm(arr))
    if abs(norm - 1.0) > AXIS_TOLERANCE:
        raise SedeonDomainError(f"{what} must have unit length, |{what}| = {norm!r}")
    return arr / norm


@dataclass(frozen=True)
class Rotor:
    theta: float
    axis: np.ndarray = field(default_factory=lambda: np.array([0.0, 0.0, 1.0]))

    def __post_init__(self):
        object.__setattr__(self, "axis", _unit_vector(self.axis, "axis"))


@dataclass(frozen=True)
class Boost:
    """Boost with rapidity ``theta`` (``tanh(2 theta) = v/c``) along ``direction``."""

    rapidity: float
    direction: np.ndarray = field(default_factory=lambda: np.array([1.0, 0.0, 0.0]))

    def __post_init__(self):
        if not np.isfinite(self.rapidity):
            raise SedeonDomainError("rapidity must be finite")
        object.__setattr__(self, "direction", _unit_vector(self.direction, "direction"))

    @classmethod
    def from_velocity(cls, beta: float, direction: Sequence[float] = (1.0, 0.0, 0.0)) -> Boost:
        """Boost for velocity ratio ``beta = v/c``; requires ``|beta| < 1``."""
        if not abs(beta) < 1.0:
            raise SedeonDomainError(f"|v/c| must be below 1, got {beta!r}")
        return cls(float(np.arctanh(beta) / 2.0), np.asarray(direction, dtype=float))

    @property
    def beta(self) -> float:
        return float(np.tanh(2.0 * self.rapidity))


@dataclass(frozen=True)
class EventVector:
    t: float
    r: np.ndarray
    c: float = 1.0

    def __post_init__(self):
        if not self.c > 0:
            raise SedeonDomainError("speed of light must be positive")
        r = np.asarray(self.r, dtype=float)
        if r.shape != (3,):
            raise SedeonDomainError("event position must be a 3-vector")
        object.__setattr__(self, "r", r)


def rotor_sedeon(rotor: Rotor) -> tuple[Sedeon, Sedeon]:
    """Return ``(U, U*)`` with ``U = cos(theta/2) + i sin(theta/2) n``."""
    half = rotor.theta / 2.0
    u = Sedeon.scalar(np.cos(half)) + (1j * np.sin(half)) * absolute_vector(rotor.axis)
    return u, u.conj()


def rotate(v: Sedeon, rotor: Rotor) -> Sedeon:
    u, u_conj = rotor_sedeon(rotor)
    return mul(mul(u_conj, v), u)


def rotate_closed_form(v: Sedeon, rotor: Rotor) -> Sedeon:
    """``V_0 + V cos t + (1 - cos t)(n.V) n - i sin t [n x V]``."""
    v0, vv = decompose(v)
    n = absolute_vector(rotor.axis)
    ct, st = np.cos(rotor.theta), np.sin(rotor.theta)
    return (
        v0
        + ct * vv
        + (1.0 - ct) * mul(scalar_product(n, vv), n)
        - (1j * st) * vector_product(n, vv)
    )


def invert(v: Sedeon, mode: InversionMode) -> Sedeon:
    """Time, space or space-time inversion as the sandwich ``e V e``."""
    try:
        unit, _ = INVERSIONS[mode]
    except KeyError:
        raise SedeonDomainError(f"unknown inversion mode {mode!r}") from None
    e = e_unit(unit)
    return mul(mul(e, v), e)


def invert_sign_pattern(v: Sedeon, mode: InversionMode) -> Sedeon:
    try:
        _, signs = INVERSIONS[mode]
    except KeyError:
        raise SedeonDomainError(f"unknown inversion mode {mode!r}") from None
    return Sedeon(np.asarray(signs, dtype=float)[:, None] * v.components)


def boost_sedeon(boost: Boost) -> tuple[Sedeon, Sedeon]:
    """Return ``(L, L*)`` with ``L = ch t - e_3 m sh t`` and ``L* = ch t + e_3 m sh t``."""
    ch, sh = np.cosh(boost.rapidity), np.sinh(boost.rapidity)
    e3m = mul(e_unit(3), absolute_vector(boost.direction))
    one = Sedeon.scalar(ch)
    return one - sh * e3m, one + sh * e3m


def lorentz_transform(v: Sedeon, boost: Boost) -> Sedeon:
    lo, lo_conj = boost_sedeon(boost)
    return mul(mul(lo_conj, v), lo)


def event_sedeon(event: EventVector) -> Sedeon:
    """``S = i e_1 c t + e_2 r``."""
    blocks = {(1, 0): 1j * event.c * event.t}
    blocks.update({(2, k + 1): event.r[k] for k in range(3)})
    return Sedeon.from_blocks(blocks)


_EVENT_MASK = np.zeros((4, 4), dtype=bool)
_EVENT_MASK[1, 0] = True
_EVENT_MASK[2, 1:] = True


def check_event_shape(s: Sedeon, rtol: float = 1e-12) -> None:
    c = s.components
    scale = max(float(np.max(np.abs(c))), 1.0)
    stray = float(np.max(np.abs(c[~_EVENT_MASK])))
    if stray > rtol * scale:
        raise SedeonContractError(
            f"not an event four-vector: off-shape component of size {stray:.3g}"
        )


def interval(s: Sedeon) -> complex:
    """Scalar part of ``S S``, i.e. ``-c^2 t^2 + x^2 + y^2 + z^2``."""
    check_event_shape(s)
    return mul(s, s)[0, 0]


def boost_event(event: EventVector, boost: Boost) -> tuple[float, np.ndarray]:
    """Boost an event by the sandwich product and read back ``(t', r')``."""
    s = lorentz_transform(event_sedeon(event), boost)
    c = s.components
    t_new = (c[1, 0] / (1j * event.c)).real
    return float(t_new), c[2, 1:].real.copy()


def boost_event_textbook(event: EventVector, beta: float, direction: Sequence[float]) -> tuple[float, np.ndarray]:
    """Standard Lorentz formulas, with ``x`` the coordinate along ``direction``."""
    m = _unit_vector(direction, "direction")
    c = event.c
    gamma = 1.0 / np.sqrt(1.0 - beta**2)
    x = float(m @ event.r)
    v = beta * c
    t_new = gamma * (event.t - x * v / c**2)
    x_new = gamma * (x - event.t * v)
    return float(t_new), event.r + (x_new - x) * m


# ---------------------------------------------------------------------------
# component table of the boosted sedeon, audited against the sandwich product

GROUPS: dict[str, tuple[int, tuple[int, ...]]] = {
    "V'": (0, (0,)),
    "V'_tr": (3, (0,)),
    "V'_r": (2, (0,)),
    "V'_t": (1, (0,)),
    "vec V'": (0, (1, 2, 3)),
    "vec V'_tr": (3, (1, 2, 3)),
    "vec V'_r": (2, (1, 2, 3)),
    "vec V'_t": (1, (1, 2, 3)),
}


def component_group(v: Sedeon, label: str) -> Sedeon:
    n, ks = GROUPS[label]
    c = np.zeros((4, 4), dtype=complex)
    for k in ks:
        c[n, k] = v.components[n, k]
    return Sedeon(c)


def boost_table_lines(v: Sedeon, boost: Boost) -> dict[str, Sedeon]:
    """Right-hand sides of the closed-form component table, evaluated term by term."""
    th = boost.rapidity
    ch2, sh2, shsq = np.cosh(2 * th), np.sinh(2 * th), np.sinh(th) ** 2
    m = absolute_vector(boost.direction)
    e3 = e_unit(3)
    g = {label: component_group(v, label) for label in GROUPS}
    s0, s_tr, s_r, s_t = g["V'"], g["V'_tr"], g["V'_r"], g["V'_t"]
    v0, v_tr, v_r, v_t = g["vec V'"], g["vec V'_tr"], g["vec V'_r"], g["vec V'_t"]

    def dot_m(x: Sedeon) -> Sedeon:
        return scalar_product(m, x)

    return {
        "V'": s0,
        "V'_tr": s_tr,
        "V'_r": ch2 * s_r + sh2 * mul(e3, dot_m(v_t)),
        "V'_t": ch2 * s_t + sh2 * mul(e3, dot_m(v_r)),
        "vec V'": ch2 * v0 - 2 * shsq * mul(dot_m(v0), m) + sh2 * mul(e3, vector_product(m, v_tr)),
        "vec V'_tr": ch2 * v_tr - 2 * shsq * mul(dot_m(v_tr), m) + sh2 * mul(e3, vector_product(m, v0)),
        "vec V'_r": v_r + 2 * shsq * mul(dot_m(v_r), m) + sh2 * product(e3, s_t, m),
        "vec V'_t": v_t + 2 * shsq * mul(dot_m(v_t), m) + sh2 * product(e3, s_r, m),
    }


@dataclass
class TableLineVerdict:
    line: str
    agrees: bool
    max_discrepancy: float


def audit_boost_table(
    samples: Sequence[tuple[Sedeon, Boost]], rtol: float = 1e-12
) -> list[TableLineVerdict]:
    """Compare every closed-form line with the same group of the sandwich product.

    A line agrees when, on every sample, its right-hand side matches
    the corresponding component group of ``L* V L`` (and has no content
    outside that group) to ``rtol`` relative to the input size.
    """
    worst = {label: 0.0 for label in GROUPS}
    for v, boost in samples:
        exact = lorentz_transform(v, boost)
        lines = boost_table_lines(v, boost)
        scale = max(v.max_abs(), 1.0) * np.cosh(2 * boost.rapidity)
        for label, rhs in lines.items():
            diff = (rhs - component_group(exact, label)).max_abs() / scale
            worst[label] = max(worst[label], diff)
    return [TableLineVerdict(label, bool(worst[label] <= rtol), float(worst[label])) for label in GROUPS]
