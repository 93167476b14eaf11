"""Octonion arithmetic over a fixed Cayley-Dickson convention.

The multiplication convention is pinned by doubling the quaternions with
``(a, b)(c, d) = (ac - conj(d) b, da + b conj(c))`` and ``e4`` as the
doubling unit.  The resulting basis products are generated once at import
time into ``MUL_INDEX``/``MUL_SIGN`` (``e_i e_j = MUL_SIGN[i,j] *
e_{MUL_INDEX[i,j]}``) and the equivalent dense structure tensor
``STRUCTURE`` used for vectorized products.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Octonion",
    "MUL_INDEX",
    "MUL_SIGN",
    "STRUCTURE",
    "oct_mul",
    "oct_conj",
    "oct_norm",
    "oct_inverse",
    "basis_element",
    "mul_arrays",
    "conj_arrays",
]


def _cayley_dickson_tables(level: int):
    """Basis product tables for the 2**level dimensional Cayley-Dickson algebra.

    Returns (index, sign) integer arrays with e_i e_j = sign[i,j] * e_index[i,j].
    """
    if level == 0:
        return np.zeros((1, 1), dtype=np.int64), np.ones((1, 1), dtype=np.int64)
    sub_index, sub_sign = _cayley_dickson_tables(level - 1)
    h = 1 << (level - 1)
    n = 2 * h
    index = np.zeros((n, n), dtype=np.int64)
    sign = np.zeros((n, n), dtype=np.int64)
    # conj(e_j) = e_j for j == 0, -e_j otherwise
    conj_sign = lambda j: 1 if j == 0 else -1
    for i in range(n):
        for j in range(n):
            if i < h and j < h:
                # (a,0)(c,0) = (ac, 0)
                index[i, j] = sub_index[i, j]
                sign[i, j] = sub_sign[i, j]
            elif i < h and j >= h:
                # (a,0)(0,d) = (0, da)
                jj = j - h
                index[i, j] = sub_index[jj, i] + h
                sign[i, j] = sub_sign[jj, i]
            elif i >= h and j < h:
                # (0,b)(c,0) = (0, b conj(c))
                ii = i - h
                index[i, j] = sub_index[ii, j] + h
                sign[i, j] = sub_sign[ii, j] * conj_sign(j)
            else:
                # (0,b)(0,d) = (-conj(d) b, 0)
                ii, jj = i - h, j - h
                index[i, j] = sub_index[jj, ii]
                sign[i, j] = -sub_sign[jj, ii] * conj_sign(jj)
    return index, sign


MUL_INDEX, MUL_SIGN = _cayley_dickson_tables(3)

# STRUCTURE[i, j, k] = coefficient of e_k in e_i e_j
STRUCTURE = np.zeros((8, 8, 8))
for _i in range(8):
    for _j in range(8):
        STRUCTURE[_i, _j, MUL_INDEX[_i, _j]] = MUL_SIGN[_i, _j]

_CONJ_SIGNS = np.array([1.0, -1, -1, -1, -1, -1, -1, -1])


def mul_arrays(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Octonion product of coordinate arrays with trailing axis of length 8.

    Broadcasts over leading axes; used heavily by the Albert algebra where
    elements are (3, 3, 8) arrays.
    """
    return np.einsum("...p,...q,pqr->...r", x, y, STRUCTURE)


def conj_arrays(x: np.ndarray) -> np.ndarray:
    """Octonion conjugate of coordinate arrays (trailing axis 8)."""
    return x * _CONJ_SIGNS


@dataclass(frozen=True)
class Octonion:
    """An octonion as 8 real coordinates, index 0 being the real part."""

    coords: np.ndarray = field(default_factory=lambda: np.zeros(8))

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=float)
        if c.shape != (8,):
            raise ValueError(f"octonion needs 8 coordinates, got shape {c.shape}")
        object.__setattr__(self, "coords", c)

    @classmethod
    def from_real(cls, r: float) -> "Octonion":
        c = np.zeros(8)
        c[0] = r
        return cls(c)

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.coords + other.coords)

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.coords - other.coords)

    def __neg__(self) -> "Octonion":
        return Octonion(-self.coords)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        return Octonion(self.coords * float(other))

    __rmul__ = __mul__

    def __repr__(self):
        return f"Octonion({np.array2string(self.coords, separator=', ')})"


def basis_element(k: int) -> Octonion:
    """The basis octonion e_k, 0 <= k <= 7 (e_0 is the unit)."""
    c = np.zeros(8)
    c[k] = 1.0
    return Octonion(c)


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    """Product of two octonions under the fixed doubling convention."""
    return Octonion(mul_arrays(x.coords, y.coords))


def oct_conj(x: Octonion) -> Octonion:
    """Conjugate: negates the seven imaginary coordinates."""
    return Octonion(conj_arrays(x.coords))


def oct_norm(x: Octonion) -> float:
    """Euclidean norm of the coordinates; multiplicative under oct_mul."""
    return float(np.linalg.norm(x.coords))


def oct_inverse(x: Octonion) -> Octonion:
    """Inverse by conjugate, conj(x) / |x|^2."""
    n2 = float(np.dot(x.coords, x.coords))
    if n2 == 0.0:
        raise ZeroDivisionError("zero octonion has no inverse")
    return Octonion(conj_arrays(x.coords) / n2)
