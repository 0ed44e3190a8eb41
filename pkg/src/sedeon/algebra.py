"""Sixteen-component sedeons and their noncommutative product.

A sedeon is a complex linear combination of the sixteen monomials
``e_n a_k`` (``n, k`` in ``0..3``), where ``e_0 = a_0 = 1``, ``e_1, e_2, e_3``
are the time, space and space-time scalar units and ``a_1, a_2, a_3`` are the
absolute unit vectors. Components are stored n-major: flat index ``4*n + k``.

Both triples obey the same multiplication table::

    u_1 u_2 = i u_3,  u_2 u_3 = i u_1,  u_3 u_1 = i u_2,  u_j u_j = 1

with swapped arguments giving the opposite sign, and every ``e`` unit
commutes with every ``a`` unit.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

Number = Union[int, float, complex]

_CYCLIC = {(1, 2): 3, (2, 3): 1, (3, 1): 2}


class SedeonDomainError(ValueError):
    """Raised when an index or parameter lies outside its domain."""


class SedeonContractError(ValueError):
    """Raised when an operand violates an operation's precondition."""


def _unit_rule(m: int, n: int) -> tuple[complex, int]:
    if m == 0:
        return 1 + 0j, n
    if n == 0:
        return 1 + 0j, m
    if m == n:
        return 1 + 0j, 0
    if (m, n) in _CYCLIC:
        return 1j, _CYCLIC[(m, n)]
    return -1j, _CYCLIC[(n, m)]


@dataclass(frozen=True)
class StructureTable:
    """Product rules ``u_m u_n = coeff * u_result`` for one triple of units."""

    e_rule: dict[tuple[int, int], tuple[complex, int]]
    a_rule: dict[tuple[int, int], tuple[complex, int]]

    @classmethod
    def standard(cls) -> StructureTable:
        rule = {(m, n): _unit_rule(m, n) for m in range(4) for n in range(4)}
        return cls(e_rule=dict(rule), a_rule=dict(rule))


STRUCTURE = StructureTable.standard()


def _product_tables(table: StructureTable) -> tuple[np.ndarray, np.ndarray]:
    # (i, j) -> flat result index and coefficient for basis_i * basis_j
    index = np.empty((16, 16), dtype=np.intp)
    coeff = np.empty((16, 16), dtype=complex)
    for m in range(4):
        for k in range(4):
            for n in range(4):
                for l in range(4):
                    ce, r = table.e_rule[(m, n)]
                    ca, s = table.a_rule[(k, l)]
                    index[4 * m + k, 4 * n + l] = 4 * r + s
                    coeff[4 * m + k, 4 * n + l] = ce * ca
    return index, coeff


def _sign_matrix(index: np.ndarray, coeff: np.ndarray) -> np.ndarray:
    """Real ``(512, 32)`` map from ``[Re, Im]`` of the pairwise products to ``[Re, Im]`` of the result.

    Every entry is 0 or +-1, and each pairwise product feeds exactly one
    output slot, so products of basis monomials come out bit-exact.
    """
    t = np.zeros((512, 32))
    for p, (r, z) in enumerate(zip(index.ravel(), coeff.ravel())):
        if z.imag == 0:
            t[p, r] = z.real
            t[256 + p, 16 + r] = z.real
        else:
            # (x + iy) * (i s) = -s y + i s x
            t[256 + p, r] = -z.imag
            t[p, 16 + r] = z.imag
    return t


_RESULT_INDEX, _RESULT_COEFF = _product_tables(STRUCTURE)
_SIGNS = _sign_matrix(_RESULT_INDEX, _RESULT_COEFF)
for _arr in (_RESULT_INDEX, _RESULT_COEFF, _SIGNS):
    _arr.setflags(write=False)


class Sedeon:
    """Immutable sedeon with sixteen complex components ``V[n, k]``."""

    __slots__ = ("_c",)

    def __init__(self, components: Iterable[Number] | np.ndarray):
        arr = np.array(components, dtype=complex)
        if arr.size != 16:
            raise SedeonDomainError(f"a sedeon has 16 components, got {arr.size}")
        arr = arr.reshape(4, 4)
        if not np.all(np.isfinite(arr)):
            raise SedeonDomainError("sedeon components must be finite")
        arr.setflags(write=False)
        self._c = arr

    @classmethod
    def _trusted(cls, flat: np.ndarray) -> Sedeon:
        # fast path for freshly computed products of finite operands
        obj = object.__new__(cls)
        arr = flat.reshape(4, 4)
        arr.setflags(write=False)
        obj._c = arr
        return obj

    # construction helpers
    @classmethod
    def zero(cls) -> Sedeon:
        return cls(np.zeros(16))

    @classmethod
    def scalar(cls, value: Number = 1.0) -> Sedeon:
        c = np.zeros(16, dtype=complex)
        c[0] = value
        return cls(c)

    @classmethod
    def from_blocks(cls, blocks: dict[tuple[int, int], Number]) -> Sedeon:
        """Build from a sparse ``{(n, k): value}`` mapping."""
        c = np.zeros((4, 4), dtype=complex)
        for (n, k), value in blocks.items():
            _check_index(n, k)
            c[n, k] += value
        return cls(c)

    @classmethod
    def from_json(cls, data: list) -> Sedeon:
        if len(data) != 16:
            raise SedeonDomainError(f"expected 16 [re, im] pairs, got {len(data)}")
        values = []
        for pair in data:
            if len(pair) != 2:
                raise SedeonDomainError(f"malformed component {pair!r}")
            values.append(complex(float(pair[0]), float(pair[1])))
        return cls(values)

    def to_json(self) -> list[list[float]]:
        return [[float(z.real), float(z.imag)] for z in self.flat]

    # views
    @property
    def components(self) -> np.ndarray:
        """Read-only ``(4, 4)`` array indexed ``[n, k]``."""
        return self._c

    @property
    def flat(self) -> np.ndarray:
        return self._c.reshape(16)

    def __getitem__(self, nk: tuple[int, int]) -> complex:
        n, k = nk
        _check_index(n, k)
        return complex(self._c[n, k])

    def e_part(self, n: int) -> np.ndarray:
        """Coefficients of ``e_n`` in the a-basis (the barred vectors)."""
        return self._c[n, :]

    def a_part(self, k: int) -> np.ndarray:
        """Coefficients of ``a_k`` in the e-basis (the sedeon-scalars)."""
        return self._c[:, k]

    # arithmetic
    def __add__(self, other: Sedeon) -> Sedeon:
        if not isinstance(other, Sedeon):
            return NotImplemented
        return Sedeon(self._c + other._c)

    def __sub__(self, other: Sedeon) -> Sedeon:
        if not isinstance(other, Sedeon):
            return NotImplemented
        return Sedeon(self._c - other._c)

    def __neg__(self) -> Sedeon:
        return Sedeon(-self._c)

    def __mul__(self, other):
        if isinstance(other, Sedeon):
            return mul(self, other)
        if isinstance(other, (int, float, complex, np.number)):
            return Sedeon(self._c * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return Sedeon(self._c * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return Sedeon(self._c / other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Sedeon):
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    __hash__ = None

    def conj(self) -> Sedeon:
        return conj_complex(self)

    def max_abs(self) -> float:
        """Largest component magnitude; used as the test metric."""
        return float(np.max(np.abs(self._c)))

    def allclose(self, other: Sedeon, atol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self._c - other._c)) <= atol)

    def is_scalar(self) -> bool:
        return not np.any(self._c[:, 1:])

    def is_vector(self) -> bool:
        return not np.any(self._c[:, 0])

    def __repr__(self) -> str:
        terms = []
        for n in range(4):
            for k in range(4):
                z = self._c[n, k]
                if z != 0:
                    terms.append(f"({z:.6g}){_monomial_name(n, k)}")
        return "Sedeon(" + (" + ".join(terms) if terms else "0") + ")"


def _monomial_name(n: int, k: int) -> str:
    if n == 0 and k == 0:
        return "1"
    return (f"e{n}" if n else "") + (f"a{k}" if k else "")


def _check_index(n: int, k: int) -> None:
    if not (0 <= n <= 3 and 0 <= k <= 3):
        raise SedeonDomainError(f"sedeon index ({n}, {k}) out of range 0..3")


def basis_element(n: int, k: int) -> Sedeon:
    """The monomial ``e_n a_k`` with unit coefficient."""
    _check_index(n, k)
    c = np.zeros((4, 4), dtype=complex)
    c[n, k] = 1.0
    return Sedeon(c)


def linear_combine(c1: Number, a: Sedeon, c2: Number, b: Sedeon) -> Sedeon:
    return Sedeon(c1 * a.components + c2 * b.components)


def mul(a: Sedeon, b: Sedeon) -> Sedeon:
    """Sedeonic product ``a b``.

    Every pair of monomials maps to exactly one monomial with a coefficient
    in {1, -1, i, -i}; the pairwise products are routed to their result
    slots with the sign (and real/imaginary swap) that coefficient implies.
    """
    pairs = np.multiply.outer(a.flat, b.flat).ravel()
    out = np.concatenate((pairs.real, pairs.imag)) @ _SIGNS
    return Sedeon._trusted(out[:16] + 1j * out[16:])


def product(*factors: Sedeon) -> Sedeon:
    """Left-to-right product of any number of sedeons."""
    out = Sedeon.scalar(1.0)
    for f in factors:
        out = mul(out, f)
    return out


def _e_mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Product of two sedeon-scalars given by their four e-coefficients."""
    out = np.zeros(4, dtype=complex)
    for m in range(4):
        for n in range(4):
            coeff, r = STRUCTURE.e_rule[(m, n)]
            out[r] += coeff * x[m] * y[n]
    return out


def _require_vector(*operands: Sedeon) -> None:
    for s in operands:
        if not s.is_vector():
            raise SedeonContractError(
                "internal/external products are defined for sedeon-vectors only; "
                "operand has a nonzero scalar part"
            )


def scalar_product(a: Sedeon, b: Sedeon) -> Sedeon:
    """Internal product ``(A . B) = A_1 B_1 + A_2 B_2 + A_3 B_3``."""
    _require_vector(a, b)
    acc = np.zeros(4, dtype=complex)
    for j in (1, 2, 3):
        acc += _e_mul(a.a_part(j), b.a_part(j))
    c = np.zeros((4, 4), dtype=complex)
    c[:, 0] = acc
    return Sedeon(c)


def vector_product(a: Sedeon, b: Sedeon) -> Sedeon:
    """External product ``[A x B]``; note the explicit factor ``i``."""
    _require_vector(a, b)
    A = {j: a.a_part(j) for j in (1, 2, 3)}
    B = {j: b.a_part(j) for j in (1, 2, 3)}
    c = np.zeros((4, 4), dtype=complex)
    c[:, 1] = 1j * (_e_mul(A[2], B[3]) - _e_mul(A[3], B[2]))
    c[:, 2] = 1j * (_e_mul(A[3], B[1]) - _e_mul(A[1], B[3]))
    c[:, 3] = 1j * (_e_mul(A[1], B[2]) - _e_mul(A[2], B[1]))
    return Sedeon(c)


def decompose(a: Sedeon) -> tuple[Sedeon, Sedeon]:
    """Split into the sedeon-scalar (k = 0) and sedeon-vector (k > 0) parts."""
    s = np.zeros((4, 4), dtype=complex)
    v = np.array(a.components)
    s[:, 0] = v[:, 0]
    v[:, 0] = 0
    return Sedeon(s), Sedeon(v)


def conj_complex(a: Sedeon) -> Sedeon:
    return Sedeon(np.conj(a.components))


def e_unit(n: int) -> Sedeon:
    return basis_element(n, 0)


def a_unit(k: int) -> Sedeon:
    return basis_element(0, k)


def absolute_vector(v: Iterable[Number]) -> Sedeon:
    """Sedeon ``v_1 a_1 + v_2 a_2 + v_3 a_3`` from a 3-vector."""
    v = list(v)
    if len(v) != 3:
        raise SedeonDomainError("expected a 3-vector")
    return Sedeon.from_blocks({(0, k + 1): v[k] for k in range(3)})


def random_sedeon(rng: np.random.Generator) -> Sedeon:
    """Sixteen unit-magnitude components with independent uniform phases."""
    return Sedeon(np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, 16)))
