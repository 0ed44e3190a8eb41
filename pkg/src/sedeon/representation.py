"""Matrix representations of sedeons.

The 4x4 unit matrices are the left-multiplication matrices of the units
acting on ``(X_0, X_1, X_2, X_3)`` coefficient columns. A full sedeon acts on
its sixteen components through a 16x16 block matrix: the outer 4x4 pattern
runs over the e-units and each block is the same pattern over the
a-components (or the other way round for the a-major vectorization).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Sedeon, SedeonDomainError, a_unit, mul

_I = 1j

E_MATRICES = (
    np.eye(4, dtype=complex),
    np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -_I], [0, 0, _I, 0]]),
    np.array([[0, 0, 1, 0], [0, 0, 0, _I], [1, 0, 0, 0], [0, -_I, 0, 0]]),
    np.array([[0, 0, 0, 1], [0, 0, -_I, 0], [0, _I, 0, 0], [1, 0, 0, 0]]),
)

A_MATRICES = (
    np.eye(4, dtype=complex),
    np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -_I], [0, 0, _I, 0]]),
    np.array([[0, 0, 1, 0], [0, 0, 0, _I], [1, 0, 0, 0], [0, -_I, 0, 0]]),
    np.array([[0, 0, 0, 1], [0, 0, -_I, 0], [0, _I, 0, 0], [1, 0, 0, 0]]),
)

SIGMA_MATRICES = (
    np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex),
    np.array([[0, -_I, 0, 0], [_I, 0, 0, 0], [0, 0, 0, -_I], [0, 0, _I, 0]]),
    np.diag([1, -1, 1, -1]).astype(complex),
)

for _m in (*E_MATRICES, *A_MATRICES, *SIGMA_MATRICES):
    _m.setflags(write=False)

# entry (row, col) of the compact 4x4 form: coefficient times component index
PATTERN = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (1, 0), (-_I, 3), (_I, 2)),
    ((1, 2), (_I, 3), (1, 0), (-_I, 1)),
    ((1, 3), (-_I, 2), (_I, 1), (1, 0)),
)


def unit_matrix_e(n: int) -> np.ndarray:
    if n not in range(4):
        raise SedeonDomainError(f"e-unit index {n} out of range 0..3")
    return E_MATRICES[n].copy()


def unit_matrix_a(k: int) -> np.ndarray:
    if k not in range(4):
        raise SedeonDomainError(f"a-unit index {k} out of range 0..3")
    return A_MATRICES[k].copy()


def compact_matrix(values: np.ndarray) -> np.ndarray:
    """The 4x4 pattern filled with four (complex) coefficients."""
    out = np.empty((4, 4), dtype=complex)
    for r, row in enumerate(PATTERN):
        for c, (coeff, idx) in enumerate(row):
            out[r, c] = coeff * values[idx]
    return out


def left_regular_matrix(v: Sedeon) -> np.ndarray:
    """16x16 matrix ``M`` with ``M @ B.flat == (V B).flat`` (n-major order)."""
    comps = v.components
    blocks = [compact_matrix(comps[n, :]) for n in range(4)]
    out = np.empty((16, 16), dtype=complex)
    for r, row in enumerate(PATTERN):
        for c, (coeff, idx) in enumerate(row):
            out[4 * r : 4 * r + 4, 4 * c : 4 * c + 4] = coeff * blocks[idx]
    return out


def left_regular_matrix_a_major(v: Sedeon) -> np.ndarray:
    """Same operator on components listed a-major (index ``4*k + n``)."""
    comps = v.components
    blocks = [compact_matrix(comps[:, k]) for k in range(4)]
    out = np.empty((16, 16), dtype=complex)
    for r, row in enumerate(PATTERN):
        for c, (coeff, idx) in enumerate(row):
            out[4 * r : 4 * r + 4, 4 * c : 4 * c + 4] = coeff * blocks[idx]
    return out


def shuffle_permutation() -> np.ndarray:
    """Permutation ``P`` taking n-major vectors to a-major ones."""
    p = np.zeros((16, 16))
    for n in range(4):
        for k in range(4):
            p[4 * k + n, 4 * n + k] = 1.0
    return p


def vec(v: Sedeon) -> np.ndarray:
    return v.flat.copy()


def unvec(x: np.ndarray) -> Sedeon:
    return Sedeon(x)


@dataclass(frozen=True)
class DiracComponents:
    """Coefficients of a sedeon in the basis ``(1+a3), (a1-ia2), (a1+ia2), (1-a3)``.

    Each ``W`` is a sedeon-scalar, stored as its four e-coefficients.
    """

    w1: np.ndarray
    w2: np.ndarray
    w3: np.ndarray
    w4: np.ndarray

    def as_array(self) -> np.ndarray:
        """``(4, 4)`` array: row ``j`` holds the e-coefficients of ``W_{j+1}``."""
        return np.stack([self.w1, self.w2, self.w3, self.w4])

    @classmethod
    def from_array(cls, arr: np.ndarray) -> DiracComponents:
        arr = np.asarray(arr, dtype=complex)
        return cls(*(arr[j].copy() for j in range(4)))


def dirac_project(v: Sedeon) -> DiracComponents:
    c = v.components
    v0, v1, v2, v3 = (c[:, k] for k in range(4))
    return DiracComponents(
        0.5 * (v0 + v3), 0.5 * (v1 + _I * v2), 0.5 * (v1 - _I * v2), 0.5 * (v0 - v3)
    )


DIRAC_BASIS = (
    Sedeon.from_blocks({(0, 0): 1, (0, 3): 1}),
    Sedeon.from_blocks({(0, 1): 1, (0, 2): -_I}),
    Sedeon.from_blocks({(0, 1): 1, (0, 2): _I}),
    Sedeon.from_blocks({(0, 0): 1, (0, 3): -1}),
)


def dirac_reassemble(w: DiracComponents) -> Sedeon:
    """``W1(1+a3) + W2(a1-ia2) + W3(a1+ia2) + W4(1-a3)``, evaluated with ``mul``."""
    out = Sedeon.zero()
    for coeffs, unit in zip(w.as_array(), DIRAC_BASIS):
        scalar = np.zeros((4, 4), dtype=complex)
        scalar[:, 0] = coeffs
        out = out + mul(Sedeon(scalar), unit)
    return out


def dirac_action_matrix(j: int) -> np.ndarray:
    """Matrix of left multiplication by ``a_j`` on the ``(W1..W4)`` slots."""
    if j not in (1, 2, 3):
        raise SedeonDomainError(f"vector unit index {j} out of range 1..3")
    cols = []
    for slot in range(4):
        w = np.zeros((4, 4), dtype=complex)
        w[slot, 0] = 1.0
        image = dirac_project(mul(a_unit(j), dirac_reassemble(DiracComponents.from_array(w))))
        cols.append(image.as_array()[:, 0])
    return np.column_stack(cols)


def sigma_matrix(j: int) -> np.ndarray:
    if j not in (1, 2, 3):
        raise SedeonDomainError(f"sigma index {j} out of range 1..3")
    sigma = SIGMA_MATRICES[j - 1].copy()
    if not np.array_equal(dirac_action_matrix(j), sigma):
        raise AssertionError(f"a_{j} does not act as sigma_{j} on the eigenbasis")
    return sigma


def matrix_to_json(m: np.ndarray) -> list[list[list[float]]]:
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]
