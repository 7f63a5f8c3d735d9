"""Matrix representations of complex numbers and biquaternion arithmetic.

Complex scalars are Python's builtin ``complex``.  This module supplies

* the 2x2 real-matrix representation  a + ib -> [[a, -b], [b, a]],
* two 4x4 permutation-matrix ("[0,1]-matrix") bases in which 1, i, -1, -i
  are the four powers of one cyclic generator, and
* a quaternion type stored as a pair of complex components (Cayley-Dickson
  form), x = c_e * e + c_j * j.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations

import numpy as np

DEFAULT_TOL = 1e-12


class RepKind(Enum):
    TWO_BY_TWO = "two_by_two"
    FOUR_BY_FOUR_E = "four_by_four_e"
    FOUR_BY_FOUR_EPRIME = "four_by_four_eprime"


@dataclass(frozen=True)
class MatrixRep:
    kind: RepKind
    entries: np.ndarray


def _cyclic_shift(n: int = 4) -> np.ndarray:
    p = np.zeros((n, n), dtype=float)
    for i in range(n):
        p[i, (i + 1) % n] = 1.0
    return p


# Basis "e": generator is the plain cyclic shift; e3, e4 are its powers.
_E2 = _cyclic_shift()
BASIS_E = (np.eye(4), _E2, _E2 @ _E2, _E2 @ _E2 @ _E2)

# Basis "e'": an alternative [0,1] basis with the same cyclic structure.
_EP2 = np.array([
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [0, 1, 0, 0],
    [1, 0, 0, 0],
], dtype=float)
BASIS_EPRIME = (np.eye(4), _EP2, _EP2 @ _EP2, _EP2 @ _EP2 @ _EP2)

_BASES = {
    RepKind.FOUR_BY_FOUR_E: BASIS_E,
    RepKind.FOUR_BY_FOUR_EPRIME: BASIS_EPRIME,
}


def complex_to_matrix(z: complex, kind: RepKind = RepKind.TWO_BY_TWO) -> MatrixRep:
    """Map a complex number onto its matrix representation.

    The 2x2 map is an exact ring isomorphism.  The 4x4 [0,1] bases encode
    -1 and -i as separate positive basis elements, so products there agree
    with complex products only after :func:`reduce_four_by_four`
    canonicalization (common positive parts subtracted).
    """
    z = complex(z)
    if kind is RepKind.TWO_BY_TWO:
        m = np.array([[z.real, -z.imag], [z.imag, z.real]])
        return MatrixRep(kind, m)
    e1, e2, e3, e4 = _BASES[kind]
    a_pos, a_neg = max(z.real, 0.0), max(-z.real, 0.0)
    b_pos, b_neg = max(z.imag, 0.0), max(-z.imag, 0.0)
    return MatrixRep(kind, a_pos * e1 + b_pos * e2 + a_neg * e3 + b_neg * e4)


def basis_coefficients(rep: MatrixRep) -> np.ndarray:
    """Coefficients (c1, c2, c3, c4) of a 4x4 rep in its [0,1] basis."""
    if rep.kind is RepKind.TWO_BY_TWO:
        raise ValueError("basis_coefficients applies to the 4x4 kinds only")
    basis = _BASES[rep.kind]
    # The four basis matrices have disjoint supports of 4 entries each.
    return np.array([np.sum(rep.entries * e) / 4.0 for e in basis])


def reduce_four_by_four(rep: MatrixRep) -> MatrixRep:
    """Canonicalize a 4x4 rep: remove the common (1, -1) and (i, -i) parts."""
    c = basis_coefficients(rep)
    real_common = min(c[0], c[2])
    imag_common = min(c[1], c[3])
    c = c - np.array([real_common, imag_common, real_common, imag_common])
    basis = _BASES[rep.kind]
    return MatrixRep(rep.kind, sum(ci * e for ci, e in zip(c, basis)))


def matrix_to_complex(rep: MatrixRep) -> complex:
    """Inverse of :func:`complex_to_matrix` (any 4x4 rep is reduced first)."""
    if rep.kind is RepKind.TWO_BY_TWO:
        m = rep.entries
        if not np.allclose([m[0, 0], m[1, 0]], [m[1, 1], -m[0, 1]], atol=0.0, rtol=1e-12):
            raise ValueError("matrix lacks the [[a,-b],[b,a]] structure")
        return complex(m[0, 0], m[1, 0])
    c = basis_coefficients(rep)
    return complex(c[0] - c[2], c[1] - c[3])


def rep_product(x: MatrixRep, y: MatrixRep) -> MatrixRep:
    if x.kind is not y.kind:
        raise ValueError("cannot multiply representations of different kinds")
    prod = MatrixRep(x.kind, x.entries @ y.entries)
    if x.kind is RepKind.TWO_BY_TWO:
        return prod
    return reduce_four_by_four(prod)


def verify_cyclic_recurrence(basis, tol: float = 0.0) -> bool:
    """Check that a 4x4 [0,1] basis obeys the power cycle of the imaginary unit.

    ``basis`` is either a :class:`RepKind` (one of the built-in 4x4 kinds)
    or an explicit sequence of four matrices (e1, e2, e3, e4).  Returns True
    iff e2^2 = e3, e2^3 = e4 and e2^4 = e1.
    """
    if isinstance(basis, RepKind):
        if basis is RepKind.TWO_BY_TWO:
            raise ValueError("cyclic recurrence is defined for the 4x4 bases only")
        basis = _BASES[basis]
    e1, e2, e3, e4 = (np.asarray(b, dtype=float) for b in basis)
    if e1.shape != (4, 4):
        raise ValueError("expected four 4x4 matrices")
    p2 = e2 @ e2
    p3 = p2 @ e2
    p4 = p3 @ e2
    return (np.max(np.abs(p2 - e3)) <= tol
            and np.max(np.abs(p3 - e4)) <= tol
            and np.max(np.abs(p4 - e1)) <= tol)


def find_basis_isomorphism() -> np.ndarray:
    """Permutation matrix S with S e_i S^T = e'_i for all four basis elements."""
    for perm in permutations(range(4)):
        s = np.zeros((4, 4))
        for i, j in enumerate(perm):
            s[i, j] = 1.0
        if all(np.array_equal(s @ e @ s.T, ep) for e, ep in zip(BASIS_E, BASIS_EPRIME)):
            return s
    raise RuntimeError("no permutation conjugates one basis onto the other")


@dataclass(frozen=True)
class Quaternion:
    """Quaternion as a pair of complex components: x = c_e + c_j * j.

    In terms of four reals, c_e = a1 + i a2 and c_j = a3 + i a4, with the
    basis products (ij) = k, (ji) = -k, (ki) = j, (ik) = -j.
    """

    c_e: complex
    c_j: complex

    @classmethod
    def from_components(cls, a1, a2, a3, a4) -> "Quaternion":
        return cls(complex(a1, a2), complex(a3, a4))

    @property
    def components(self):
        return (self.c_e.real, self.c_e.imag, self.c_j.real, self.c_j.imag)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.c_e + other.c_e, self.c_j + other.c_j)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.c_e - other.c_e, self.c_j - other.c_j)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.c_e, -self.c_j)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quaternion_mul(self, other)
        return Quaternion(self.c_e * other, self.c_j * other)

    def __rmul__(self, scalar):
        return Quaternion(scalar * self.c_e, scalar * self.c_j)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.c_e.conjugate(), -self.c_j)

    def norm(self) -> float:
        return float(np.sqrt(abs(self.c_e) ** 2 + abs(self.c_j) ** 2))

    def isclose(self, other: "Quaternion", tol: float = DEFAULT_TOL) -> bool:
        return (abs(self.c_e - other.c_e) <= tol
                and abs(self.c_j - other.c_j) <= tol)


QUAT_E = Quaternion(1 + 0j, 0j)
QUAT_I = Quaternion(1j, 0j)
QUAT_J = Quaternion(0j, 1 + 0j)
QUAT_K = Quaternion(0j, 1j)


def quaternion_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    """Cayley-Dickson product (a, b)(c, d) = (ac - d* b, da + b c*)."""
    a, b = x.c_e, x.c_j
    c, d = y.c_e, y.c_j
    return Quaternion(a * c - d.conjugate() * b, d * a + b * c.conjugate())
