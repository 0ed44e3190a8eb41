from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import sedeons
from sedeon.algebra import Sedeon, SedeonContractError, SedeonDomainError, a_unit, basis_element, e_unit, mul, random_sedeon
from sedeon.transforms import (
    GROUPS,
    Boost,
    EventVector,
    Rotor,
    audit_boost_table,
    boost_event,
    boost_sedeon,
    event_sedeon,
    interval,
    invert,
    invert_sign_pattern,
    lorentz_transform,
    rotate,
    rotate_closed_form,
)


def unit(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def rodrigues(v: np.ndarray, axis: np.ndarray, theta: float) -> np.ndarray:
    """Textbook active rotation of a real 3-vector."""
    return v * math.cos(theta) + np.cross(axis, v) * math.sin(theta) + axis * (axis @ v) * (1 - math.cos(theta))


# -- rotations ---------------------------------------------------------------

def test_quarter_turn_takes_a1_to_a2():
    out = rotate(a_unit(1), Rotor(math.pi / 2, np.array([0.0, 0.0, 1.0])))
    assert out.allclose(a_unit(2), atol=1e-12)


def test_rotation_matches_rodrigues_on_real_vectors(rng):
    for _ in range(50):
        v, axis, theta = rng.normal(size=3), unit(rng), rng.uniform(-math.pi, math.pi)
        out = rotate(Sedeon.from_blocks({(0, k + 1): v[k] for k in range(3)}), Rotor(theta, axis))
        assert np.allclose(out.components[0, 1:], rodrigues(v, axis, theta), atol=1e-12)
        assert np.max(np.abs(out.components[1:, :])) < 1e-12


def test_sandwich_equals_closed_form(rng):
    for _ in range(100):
        v, rotor = random_sedeon(rng), Rotor(rng.uniform(-2 * math.pi, 2 * math.pi), unit(rng))
        assert rotate(v, rotor).allclose(rotate_closed_form(v, rotor), atol=1e-12)


def test_rotation_leaves_scalar_parts_alone(rng):
    v = random_sedeon(rng)
    out = rotate(v, Rotor(1.1, unit(rng)))
    assert np.allclose(out.components[:, 0], v.components[:, 0], atol=1e-15, rtol=0)


def test_rotor_axis_must_be_unit():
    with pytest.raises(SedeonDomainError):
        Rotor(0.3, np.array([1.0, 1.0, 0.0]))


# -- inversions --------------------------------------------------------------

# sign applied to the e_0..e_3 blocks
SIGNS = {"time": (1, -1, 1, -1), "space": (1, 1, -1, -1), "spacetime": (1, -1, -1, 1)}


@pytest.mark.parametrize("mode", sorted(SIGNS))
def test_inversion_sign_patterns(mode):
    for n in range(4):
        for k in range(4):
            b = basis_element(n, k)
            assert invert(b, mode) == SIGNS[mode][n] * b
            assert invert_sign_pattern(b, mode) == invert(b, mode)


@settings(max_examples=30, deadline=None)
@given(sedeons, st.sampled_from(sorted(SIGNS)))
def test_inversions_are_involutions(v, mode):
    assert invert(invert(v, mode), mode) == v


def test_unknown_inversion():
    with pytest.raises(SedeonDomainError):
        invert(a_unit(1), "parity")


# -- boosts ------------------------------------------------------------------

def textbook(t: float, x: float, beta: float) -> tuple[float, float]:
    g = 1 / math.sqrt(1 - beta**2)
    return g * (t - beta * x), g * (x - beta * t)


def test_boost_is_unimodular(rng):
    for _ in range(20):
        lo, lo_conj = boost_sedeon(Boost(rng.uniform(-2, 2), unit(rng)))
        assert mul(lo_conj, lo).allclose(Sedeon.scalar(1.0), atol=1e-12)


def test_rapidities_add():
    m = np.array([0.0, 1.0, 0.0])
    a, b = boost_sedeon(Boost(0.3, m))[0], boost_sedeon(Boost(0.5, m))[0]
    assert mul(a, b).allclose(boost_sedeon(Boost(0.8, m))[0], atol=1e-15)


def test_time_unit_boosted_along_a1():
    th = 0.4
    out = lorentz_transform(e_unit(1), Boost(th))
    expected = math.cosh(2 * th) * e_unit(1) + 1j * math.sinh(2 * th) * basis_element(2, 1)
    assert out.allclose(expected, atol=1e-15)


@pytest.mark.parametrize("beta", [0.2, -0.2, 0.6, -0.6, 0.9, -0.9])
def test_event_boost_matches_lorentz_formulas(beta):
    t, x = 1.3, -0.7
    t_new, r_new = boost_event(EventVector(t, np.array([x, 2.0, -1.0])), Boost.from_velocity(beta))
    t_ref, x_ref = textbook(t, x, beta)
    assert t_new == pytest.approx(t_ref, abs=1e-12)
    assert np.allclose(r_new, [x_ref, 2.0, -1.0], atol=1e-12, rtol=0)


def test_worked_event_example():
    t_new, r_new = boost_event(EventVector(1.0, np.array([1.0, 0, 0])), Boost.from_velocity(0.6))
    assert t_new == pytest.approx(0.5, abs=1e-12)
    assert r_new[0] == pytest.approx(0.5, abs=1e-12)


def test_event_boost_with_units_of_c():
    c = 3.0
    ev = EventVector(2.0, np.array([1.0, 0, 0]), c)
    t_new, r_new = boost_event(ev, Boost.from_velocity(0.5))
    g = 1 / math.sqrt(0.75)
    assert t_new == pytest.approx(g * (2.0 - 0.5 * 1.0 / c), abs=1e-12)
    assert r_new[0] == pytest.approx(g * (1.0 - 0.5 * c * 2.0), abs=1e-12)


def test_interval_invariant(rng):
    for _ in range(50):
        ev = EventVector(rng.normal(), rng.normal(size=3), rng.uniform(0.5, 3))
        s = event_sedeon(ev)
        expected = -(ev.c * ev.t) ** 2 + ev.r @ ev.r
        assert interval(s) == pytest.approx(expected, abs=1e-12)
        after = lorentz_transform(s, Boost(rng.uniform(-1.5, 1.5), unit(rng)))
        assert abs(interval(after) - expected) <= 1e-12 * max(1.0, abs(ev.c * ev.t) ** 2 + ev.r @ ev.r) * 10


def test_interval_rejects_non_events():
    with pytest.raises(SedeonContractError):
        interval(e_unit(1) + e_unit(3))


@pytest.mark.parametrize("beta", [1.0, -1.2, math.nan])
def test_superluminal_boost_rejected(beta):
    with pytest.raises(SedeonDomainError):
        Boost.from_velocity(beta)


def test_beta_roundtrip():
    assert Boost.from_velocity(-0.35).beta == pytest.approx(-0.35, abs=1e-15)


# -- component table audit ---------------------------------------------------

def test_audit_reports_every_line(rng):
    samples = [(random_sedeon(rng), Boost(rng.uniform(-1, 1), unit(rng))) for _ in range(20)]
    verdicts = audit_boost_table(samples)
    assert [v.line for v in verdicts] == list(GROUPS)
    for v in verdicts:
        assert isinstance(v.agrees, bool) and math.isfinite(v.max_discrepancy)
    # every closed-form line agrees with the product on these inputs
    assert all(v.agrees for v in verdicts)
