"""Invariant suites run by ``sedeon verify``.

Each suite returns a list of :class:`Check` rows. Rows marked ``audit`` are
documented findings (e.g. whether a closed form agrees with the
normative product); they are reported but never fail the run.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import algebra as alg
from . import fieldlab as fl
from . import representation as rep
from . import transforms as tr

SUITES = ("tables", "algebra", "transforms", "representation", "field")
REL_TOL = 1e-12


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    measured: float
    tolerance: float
    detail: str = ""
    audit: bool = False

    @property
    def passed(self) -> bool:
        return bool(self.audit or self.measured <= self.tolerance)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "check": self.name,
            "measured": float(self.measured),
            "tolerance": float(self.tolerance),
            "pass": self.passed,
            "audit": self.audit,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "all"
    seed: int = 0
    sample_count: int = 100
    output_format: str = "json"

    def __post_init__(self):
        if self.suite not in SUITES + ("all",):
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.sample_count < 1:
            raise ValueError("sample_count must be at least 1")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")


# ---------------------------------------------------------------------------
# reference multiplication table: row unit times column unit

_REFERENCE = {
    ("1", "1"): (1, "0"), ("1", "2"): (1j, "3"), ("1", "3"): (-1j, "2"),
    ("2", "1"): (-1j, "3"), ("2", "2"): (1, "0"), ("2", "3"): (1j, "1"),
    ("3", "1"): (1j, "2"), ("3", "2"): (-1j, "1"), ("3", "3"): (1, "0"),
}

GENERATORS = ("e1", "e2", "e3", "a1", "a2", "a3")


def generator(name: str) -> alg.Sedeon:
    idx = int(name[1])
    return alg.e_unit(idx) if name[0] == "e" else alg.a_unit(idx)


def expected_generator_product(x: str, y: str) -> alg.Sedeon:
    """Product of two generators from the reference table and e/a commutation."""
    if x[0] == y[0]:
        coeff, r = _REFERENCE[(x[1], y[1])]
        if r == "0":
            return alg.Sedeon.scalar(coeff)
        return coeff * generator(x[0] + r)
    e, a = (x, y) if x[0] == "e" else (y, x)
    return alg.basis_element(int(e[1]), int(a[1]))


def table_products() -> list[tuple[str, str, alg.Sedeon, alg.Sedeon]]:
    rows = []
    for x, y in itertools.product(GENERATORS, repeat=2):
        rows.append((x, y, alg.mul(generator(x), generator(y)), expected_generator_product(x, y)))
    return rows


def describe(s: alg.Sedeon) -> str:
    """Compact text form such as ``i e3`` or ``-e3a3``."""
    terms = []
    for n in range(4):
        for k in range(4):
            z = complex(s.components[n, k])
            if z == 0:
                continue
            unit = alg._monomial_name(n, k)
            coeff = {1: "", -1: "-", 1j: "i ", -1j: "-i "}.get(z, f"({z:g}) ")
            if unit == "1":
                terms.append(coeff.strip() if coeff.strip() not in ("", "-") else coeff + "1")
            else:
                terms.append(coeff + unit)
    return " + ".join(terms) if terms else "0"


def suite_tables(rng: np.random.Generator, samples: int) -> list[Check]:
    checks = []
    for x, y, got, want in table_products():
        mismatch = 0.0 if got == want else max((got - want).max_abs(), 1.0)
        checks.append(Check("tables", f"{x}*{y}", mismatch, 0.0, f"{x}{y} = {describe(got)}"))
    return checks


# ---------------------------------------------------------------------------

def _rel(diff: alg.Sedeon, scale: float) -> float:
    return diff.max_abs() / max(scale, 1e-300)


def suite_algebra(rng: np.random.Generator, samples: int) -> list[Check]:
    rand = lambda: alg.random_sedeon(rng)  # noqa: E731
    assoc = bilin = decomp = 0.0
    for _ in range(samples):
        a, b, c = rand(), rand(), rand()
        scale = a.max_abs() * b.max_abs() * c.max_abs()
        assoc = max(assoc, _rel(alg.mul(alg.mul(a, b), c) - alg.mul(a, alg.mul(b, c)), scale))
        z1, z2 = complex(*rng.uniform(-1, 1, 2)), complex(*rng.uniform(-1, 1, 2))
        lhs = alg.mul(a, alg.linear_combine(z1, b, z2, c))
        rhs = alg.linear_combine(z1, alg.mul(a, b), z2, alg.mul(a, c))
        bilin = max(bilin, _rel(lhs - rhs, scale))
        decomp = max(decomp, _rel(alg.mul(a, b) - decomposed_product(a, b), a.max_abs() * b.max_abs()))

    basis_fail = 0
    for i in range(16):
        for j in range(16):
            x = alg.basis_element(*divmod(i, 4))
            y = alg.basis_element(*divmod(j, 4))
            via_matrix = alg.Sedeon(rep.left_regular_matrix(x) @ y.flat)
            basis_fail += alg.mul(x, y) != via_matrix

    triple = 0.0
    vecs = [alg.a_unit(k) for k in (1, 2, 3)]
    for a, b, c in itertools.product(vecs, repeat=3):
        triple = max(triple, (triple_product(a, b, c) - triple_closed_form(a, b, c)).max_abs())

    a1a2, a2a1 = alg.mul(vecs[0], vecs[1]), alg.mul(vecs[1], vecs[0])
    witness = 0.0 if (a1a2 == 1j * vecs[2] and a2a1 == -1j * vecs[2]) else 1.0
    return [
        Check("algebra", "associativity", assoc, REL_TOL, f"{samples} random triples, relative"),
        Check("algebra", "basis_products_vs_matrix", float(basis_fail), 0.0, "256 basis pairs, exact"),
        Check("algebra", "noncommutativity_witness", witness, 0.0, "a1a2 = i a3, a2a1 = -i a3"),
        Check("algebra", "product_decomposition", decomp, REL_TOL, "A0B0 + A0B + AB0 + (A.B) + [AxB]"),
        Check("algebra", "triple_product_identity", triple, 0.0, "all 27 basis-vector triples, exact"),
        Check("algebra", "bilinearity", bilin, REL_TOL, f"{samples} random samples"),
    ]


def decomposed_product(a: alg.Sedeon, b: alg.Sedeon) -> alg.Sedeon:
    a0, av = alg.decompose(a)
    b0, bv = alg.decompose(b)
    return (
        alg.mul(a0, b0) + alg.mul(a0, bv) + alg.mul(av, b0)
        + alg.scalar_product(av, bv) + alg.vector_product(av, bv)
    )


def triple_product(a: alg.Sedeon, b: alg.Sedeon, c: alg.Sedeon) -> alg.Sedeon:
    return alg.vector_product(a, alg.vector_product(b, c))


def triple_closed_form(a: alg.Sedeon, b: alg.Sedeon, c: alg.Sedeon) -> alg.Sedeon:
    """``-B (A.C) + C (A.B)``."""
    return alg.mul(b, alg.scalar_product(a, c)) * -1 + alg.mul(c, alg.scalar_product(a, b))


# ---------------------------------------------------------------------------

def random_axis(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def suite_transforms(rng: np.random.Generator, samples: int) -> list[Check]:
    unit = alg.Sedeon.scalar(1.0)
    rot_unit = rot_closed = rot_scalar = compose = 0.0
    for _ in range(samples):
        v = alg.random_sedeon(rng)
        r = tr.Rotor(rng.uniform(-2 * np.pi, 2 * np.pi), random_axis(rng))
        u, uc = tr.rotor_sedeon(r)
        rot_unit = max(rot_unit, (alg.mul(uc, u) - unit).max_abs(), (alg.mul(u, uc) - unit).max_abs())
        out = tr.rotate(v, r)
        rot_closed = max(rot_closed, _rel(out - tr.rotate_closed_form(v, r), v.max_abs()))
        rot_scalar = max(rot_scalar, float(np.max(np.abs(out.components[:, 0] - v.components[:, 0]))) / v.max_abs())
        t2 = rng.uniform(-np.pi, np.pi)
        twice = tr.rotate(tr.rotate(v, r), tr.Rotor(t2, r.axis))
        compose = max(compose, _rel(twice - tr.rotate(v, tr.Rotor(r.theta + t2, r.axis)), v.max_abs()))

    inv_pattern = inv_involution = 0.0
    for n, k in itertools.product(range(4), repeat=2):
        b = alg.basis_element(n, k)
        for mode in tr.INVERSIONS:
            inv_pattern = max(inv_pattern, float(tr.invert(b, mode) != tr.invert_sign_pattern(b, mode)))
            inv_involution = max(inv_involution, float(tr.invert(tr.invert(b, mode), mode) != b))

    norm = interval_dev = 0.0
    for _ in range(samples):
        boost = tr.Boost(rng.uniform(-1.5, 1.5), random_axis(rng))
        lo, lc = tr.boost_sedeon(boost)
        norm = max(norm, (alg.mul(lc, lo) - unit).max_abs(), (alg.mul(lo, lc) - unit).max_abs())
        ev = tr.EventVector(rng.uniform(-2, 2), rng.uniform(-2, 2, 3))
        s = tr.event_sedeon(ev)
        before = tr.interval(s)
        after = tr.interval(tr.lorentz_transform(s, boost))
        scale = ev.c**2 * ev.t**2 + float(ev.r @ ev.r)
        interval_dev = max(interval_dev, abs(after - before) / scale)

    event_dev = 0.0
    for beta in (0.0, 0.2, -0.2, 0.6, -0.6, 0.9, -0.9):
        for _ in range(max(1, samples // 10)):
            ev = tr.EventVector(rng.uniform(-2, 2), rng.uniform(-2, 2, 3))
            axis = random_axis(rng)
            t1, r1 = tr.boost_event(ev, tr.Boost.from_velocity(beta, axis))
            t2, r2 = tr.boost_event_textbook(ev, beta, axis)
            scale = max(abs(t2), float(np.max(np.abs(r2))), 1e-300)
            event_dev = max(event_dev, abs(t1 - t2) / scale, float(np.max(np.abs(r1 - r2))) / scale)

    checks = [
        Check("transforms", "rotor_unitarity", rot_unit, REL_TOL),
        Check("transforms", "rotation_closed_form", rot_closed, REL_TOL, f"{samples} random (V, theta, n)"),
        Check("transforms", "rotation_scalar_part_invariant", rot_scalar, REL_TOL),
        Check("transforms", "rotation_composition", compose, REL_TOL),
        Check("transforms", "inversion_sign_patterns", inv_pattern, 0.0, "16 basis elements x 3 modes"),
        Check("transforms", "inversion_involution", inv_involution, 0.0),
        Check("transforms", "boost_normalization", norm, REL_TOL),
        Check("transforms", "interval_invariance", interval_dev, REL_TOL),
        Check("transforms", "boost_event_vs_textbook", event_dev, REL_TOL, "v/c in {0, +-0.2, +-0.6, +-0.9}"),
    ]
    pairs = [(alg.random_sedeon(rng), tr.Boost(rng.uniform(-1.5, 1.5), random_axis(rng))) for _ in range(samples)]
    for verdict in tr.audit_boost_table(pairs):
        status = "agrees" if verdict.agrees else "disagrees"
        checks.append(
            Check("transforms", f"boost_table[{verdict.line}]", verdict.max_discrepancy, REL_TOL,
                  f"closed-form line {status} with sandwich product", audit=True)
        )
    return checks


# ---------------------------------------------------------------------------

def suite_representation(rng: np.random.Generator, samples: int) -> list[Check]:
    hom = act = 0.0
    for _ in range(samples):
        a, b = alg.random_sedeon(rng), alg.random_sedeon(rng)
        ma, mb = rep.left_regular_matrix(a), rep.left_regular_matrix(b)
        scale = a.max_abs() * b.max_abs()
        hom = max(hom, float(np.max(np.abs(rep.left_regular_matrix(alg.mul(a, b)) - ma @ mb))) / scale)
        act = max(act, float(np.max(np.abs(ma @ b.flat - alg.mul(a, b).flat))) / scale)

    stack = np.stack([rep.left_regular_matrix(alg.basis_element(n, k)).ravel() for n in range(4) for k in range(4)])
    rank = np.linalg.matrix_rank(stack)

    table_dev = 0.0
    for units, kind in ((rep.E_MATRICES, "e"), (rep.A_MATRICES, "a")):
        for m in range(1, 4):
            for n in range(1, 4):
                coeff, r = alg.STRUCTURE.e_rule[(m, n)]
                table_dev = max(table_dev, float(np.max(np.abs(units[m] @ units[n] - coeff * units[r]))))

    perm = rep.shuffle_permutation()
    a = alg.random_sedeon(rng)
    similar = float(np.max(np.abs(perm @ rep.left_regular_matrix(a) @ perm.T - rep.left_regular_matrix_a_major(a))))

    sig_dev = 0.0
    for j in (1, 2, 3):
        s = rep.sigma_matrix(j)
        sig_dev = max(sig_dev, float(np.max(np.abs(s - s.conj().T))), float(np.max(np.abs(s @ s - np.eye(4)))))
    sig12 = float(np.max(np.abs(rep.sigma_matrix(1) @ rep.sigma_matrix(2) - 1j * rep.sigma_matrix(3))))

    roundtrip = 0.0
    for _ in range(samples):
        v = alg.random_sedeon(rng)
        roundtrip = max(roundtrip, (rep.dirac_reassemble(rep.dirac_project(v)) - v).max_abs())

    return [
        Check("representation", "homomorphism", hom, REL_TOL, f"{samples} random pairs"),
        Check("representation", "action_consistency", act, REL_TOL, f"{samples} random pairs"),
        Check("representation", "faithfulness_rank_deficit", float(16 - rank), 0.0, "16 basis matrices"),
        Check("representation", "unit_matrix_tables", table_dev, 0.0, "e- and a-matrices, exact"),
        Check("representation", "a_major_similarity", similar, 0.0),
        Check("representation", "sigma_hermitian_involutive", sig_dev, 0.0),
        Check("representation", "sigma1_sigma2_eq_i_sigma3", sig12, 0.0),
        Check("representation", "dirac_roundtrip", roundtrip, 1e-15),
    ]


# ---------------------------------------------------------------------------

def kg_grid():
    """Grid of ``(omega, |k|, mu)`` values, plus the on-shell frequencies."""
    return (
        (0.0, 0.5, 1.0, 2.0, 3.7),
        (0.0, 0.3, 1.0, 2.5, 4.0),
        (0.0, 0.5, 1.0),
    )


def suite_field(rng: np.random.Generator, samples: int) -> list[Check]:
    omegas, kmags, mus = kg_grid()
    kg = on_shell = 0.0
    for mu in mus:
        p = fl.WaveOperatorParams(mu)
        for kmag in kmags:
            kvec = kmag * random_axis(rng)
            for omega in omegas + (fl.on_shell_omega(kvec, p),):
                amp = alg.random_sedeon(rng)
                mode = fl.PlaneWaveField(amp, omega, kvec)
                twice = fl.apply_wave_operator(fl.apply_wave_operator(mode, p), p).amplitude
                factor = fl.klein_gordon_factor(omega, kvec, p)
                scale = (omega**2 + kmag**2 + mu**2) * amp.max_abs()
                kg = max(kg, (twice - factor * amp).max_abs() / max(scale, 1.0))
            on = fl.PlaneWaveField(alg.random_sedeon(rng), fl.on_shell_omega(kvec, p), kvec)
            on_shell = max(on_shell, fl.second_order_residual(on, alg.Sedeon.zero(), p)["second_order"].max_residual)

    eq45 = eq46 = 0.0
    for _ in range(samples):
        p = fl.WaveOperatorParams(rng.uniform(0, 2))
        mode = fl.PlaneWaveField(alg.random_sedeon(rng), rng.uniform(-3, 3), rng.uniform(-2, 2, 3))
        fi = fl.field_intensities(mode, p)
        once = fl.apply_wave_operator(mode, p).amplitude
        s0, sv = alg.decompose(once)
        eq45 = max(eq45, (fi.scalar.amplitude - s0).max_abs(), (fi.vector.amplitude - sv).max_abs())
        j = alg.random_sedeon(rng)
        rs, rv = fl.first_order_residual_sedeons(fi, j, p)
        direct = alg.mul(fl.operator_sedeon(mode.omega, mode.kvec, p), fi.total) - j
        d0, dv = alg.decompose(direct)
        eq46 = max(eq46, (rs - d0).max_abs(), (rv - dv).max_abs())

    em = em57 = maxwell = maxwell_match = e2_form = 0.0
    for _ in range(max(1, samples // 10)):
        kvec = rng.uniform(-2, 2, 3)
        kmag = float(np.linalg.norm(kvec))
        khat = kvec / kmag
        pol = np.cross(khat, random_axis(rng))
        pol /= np.linalg.norm(pol)
        amp = complex(*rng.uniform(-1, 1, 2))
        pot = fl.EMPotential(0.0, amp * pol, kmag, kvec)
        e, h, gauge = fl.em_fields(pot)
        out = fl.em_operator_output(pot)
        em = max(em, abs(gauge))
        em57 = max(em57, (out - fl.em_intensity_sedeon(e, h)).max_abs())
        e2_form = max(e2_form, (out - fl.em_intensity_sedeon(e, h, e_slot=2)).max_abs())
        direct = fl.maxwell_residuals(e, h, fl.EMSource(), pot.omega, kvec)
        via, rest = fl.maxwell_residuals_sedeon(e, h, fl.EMSource(), pot.omega, kvec)
        maxwell = max(maxwell, max(x.max_residual for x in direct))
        maxwell_match = max(maxwell_match, rest, *(abs(a.max_residual - b.max_residual) for a, b in zip(direct, via)))

    sv_on = 0.0
    sv_off = math.inf
    for mu in (0.0, 1.0):
        p = fl.WaveOperatorParams(mu)
        for kmag in (0.5, 1.0, 2.0):
            kvec = kmag * random_axis(rng)
            w0 = fl.on_shell_omega(kvec, p)
            for w in (w0, -w0):
                sv_on = max(sv_on, fl.operator_singular_values(w, kvec, p)[-1])
            for w in off_shell_omegas(w0, kmag):
                sv_off = min(sv_off, fl.operator_singular_values(w, kvec, p)[-1] / kmag)

    study = fl.grid_convergence(
        fl.PlaneWaveField(alg.random_sedeon(rng), 1.0, (1.0, 0.0, 0.0)), fl.WaveOperatorParams(0.0)
    )
    order_dev = max(abs(o - 2.0) for o in study.orders)

    return [
        Check("field", "klein_gordon_factorization", kg, REL_TOL, "square = (w^2/c^2 - k^2 - mu^2) on 5x5x3 grid"),
        Check("field", "klein_gordon_on_shell", on_shell, REL_TOL),
        Check("field", "intensities_eq_decomposed_operator", eq45, REL_TOL),
        Check("field", "first_order_system_equivalence", eq46, REL_TOL),
        Check("field", "em_lorentz_gauge", em, REL_TOL),
        Check("field", "em_intensity_identity", em57, REL_TOL, "O(i e1 phi + e2 A) = e3 E - i H"),
        Check("field", "em_intensity_identity_e2_form", e2_form, REL_TOL,
              "e2 E - i H form; E sits under e3 in this algebra", audit=True),
        Check("field", "maxwell_vacuum_residuals", maxwell, REL_TOL),
        Check("field", "maxwell_sedeon_vs_direct", maxwell_match, REL_TOL),
        Check("field", "dirac_kernel_on_shell", sv_on, 1e-10, "smallest singular value"),
        Check("field", "dirac_off_shell_conditioning", 0.1 - sv_off, 0.0, f"min sigma/|k| = {sv_off:.4g} > 0.1"),
        Check("field", "grid_convergence_order", order_dev, 0.2, f"orders {', '.join(f'{o:.4f}' for o in study.orders)}"),
        Check("field", "grid_richardson", study.extrapolation_error, fl.GRID_TOL),
    ]


def off_shell_omegas(w0: float, kmag: float) -> tuple[float, ...]:
    """Frequencies at least ``0.5 |k|`` away from both on-shell branches ``+-w0``."""
    candidates = (w0 + 0.5 * kmag, w0 + kmag, w0 + 2 * kmag, w0 - 0.5 * kmag, w0 - kmag)
    return tuple(w for w in candidates if min(abs(w - w0), abs(w + w0)) >= 0.5 * kmag - 1e-12)


_RUNNERS: dict[str, Callable[[np.random.Generator, int], list[Check]]] = {
    "tables": suite_tables,
    "algebra": suite_algebra,
    "transforms": suite_transforms,
    "representation": suite_representation,
    "field": suite_field,
}


def run_suite(cfg: SuiteConfig) -> list[Check]:
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    rng = np.random.default_rng(cfg.seed)
    checks: list[Check] = []
    for name in names:
        checks.extend(_RUNNERS[name](rng, cfg.sample_count))
    return checks
