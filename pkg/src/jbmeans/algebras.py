"""Euclidean Jordan algebras under one coordinate representation.

Four kinds are supported: real symmetric matrices, complex Hermitian
matrices, spin factors R + R^d, and the 27-dimensional algebra of 3x3
Hermitian octonion matrices.  Every element is a real coordinate vector in
a fixed basis per kind, which keeps serialization reproducible:

* real symmetric n x n: the n diagonal entries, then sqrt(2) * A_ij for
  i < j in row-major order (n(n+1)/2 coordinates);
* complex Hermitian n x n: the n (real) diagonal entries, then
  sqrt(2) * Re A_ij, sqrt(2) * Im A_ij for i < j (n^2 coordinates);
* spin factor of vector dimension d: (s, u_1, ..., u_d);
* Hermitian octonion 3 x 3: the 3 real diagonal entries, then the three
  strict upper entries A_01, A_02, A_12 as 8 octonion coordinates each
  (27 coordinates).

The scaled off-diagonal bases are orthonormal for the Frobenius inner
product, so coordinate extraction is a plain projection.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .octonions import STRUCTURE as _STRUCT
from .octonions import conj_arrays

__all__ = [
    "AlgebraKind",
    "AlgebraDescriptor",
    "AlgebraElement",
    "PositiveGenSpec",
    "real_symmetric",
    "complex_hermitian",
    "spin_factor",
    "albert",
    "identity",
    "zero",
    "from_matrix",
    "jordan_product",
    "quadratic_map",
    "associative_triple",
    "trace",
    "random_element",
    "random_invertible",
    "random_positive",
    "element_to_dict",
    "element_from_dict",
    "element_to_json",
    "element_from_json",
]

_SQRT2 = math.sqrt(2.0)


class AlgebraKind(enum.Enum):
    REAL_SYMMETRIC = "real_symmetric"
    COMPLEX_HERMITIAN = "complex_hermitian"
    SPIN_FACTOR = "spin_factor"
    ALBERT = "albert"


_MATRIX_KINDS = (AlgebraKind.REAL_SYMMETRIC, AlgebraKind.COMPLEX_HERMITIAN)


@dataclass(frozen=True)
class AlgebraDescriptor:
    """Which algebra an element lives in: a kind plus its size parameter.

    ``param`` is n for the matrix kinds, d for spin factors, and ignored
    for the octonion Hermitian algebra (fixed 3 x 3).
    """

    kind: AlgebraKind
    param: int = 0

    def __post_init__(self):
        if self.kind in _MATRIX_KINDS and self.param < 1:
            raise DomainError(f"matrix size must be >= 1, got {self.param}")
        if self.kind is AlgebraKind.SPIN_FACTOR and self.param < 1:
            raise DomainError(f"spin factor vector dimension must be >= 1, got {self.param}")

    @property
    def dimension(self) -> int:
        n = self.param
        if self.kind is AlgebraKind.REAL_SYMMETRIC:
            return n * (n + 1) // 2
        if self.kind is AlgebraKind.COMPLEX_HERMITIAN:
            return n * n
        if self.kind is AlgebraKind.SPIN_FACTOR:
            return n + 1
        return 27

    @property
    def rank(self) -> int:
        if self.kind in _MATRIX_KINDS:
            return self.param
        if self.kind is AlgebraKind.SPIN_FACTOR:
            return 2
        return 3

    def token(self) -> str:
        """Short text form used in reports and CLI arguments, e.g. sym3."""
        return {
            AlgebraKind.REAL_SYMMETRIC: f"sym{self.param}",
            AlgebraKind.COMPLEX_HERMITIAN: f"herm{self.param}",
            AlgebraKind.SPIN_FACTOR: f"spin{self.param}",
            AlgebraKind.ALBERT: "albert",
        }[self.kind]

    @staticmethod
    def from_token(token: str) -> "AlgebraDescriptor":
        t = token.strip().lower()
        if t == "albert":
            return albert()
        for prefix, factory in (("sym", real_symmetric), ("herm", complex_hermitian), ("spin", spin_factor)):
            if t.startswith(prefix):
                try:
                    return factory(int(t[len(prefix):]))
                except ValueError:
                    break
        raise DomainError(f"unrecognized algebra token {token!r} (want sym<n>, herm<n>, spin<d>, albert)")

    def __str__(self):
        return self.token()


def real_symmetric(n: int) -> AlgebraDescriptor:
    return AlgebraDescriptor(AlgebraKind.REAL_SYMMETRIC, n)


def complex_hermitian(n: int) -> AlgebraDescriptor:
    return AlgebraDescriptor(AlgebraKind.COMPLEX_HERMITIAN, n)


def spin_factor(d: int) -> AlgebraDescriptor:
    return AlgebraDescriptor(AlgebraKind.SPIN_FACTOR, d)


def albert() -> AlgebraDescriptor:
    return AlgebraDescriptor(AlgebraKind.ALBERT, 3)


@lru_cache(maxsize=None)
def _matrix_basis(kind: AlgebraKind, n: int) -> np.ndarray:
    """Orthonormal (dim, n, n) basis for the matrix kinds."""
    if kind is AlgebraKind.REAL_SYMMETRIC:
        dim = n * (n + 1) // 2
        basis = np.zeros((dim, n, n))
        for i in range(n):
            basis[i, i, i] = 1.0
        k = n
        for i in range(n):
            for j in range(i + 1, n):
                basis[k, i, j] = basis[k, j, i] = 1.0 / _SQRT2
                k += 1
        return basis
    dim = n * n
    basis = np.zeros((dim, n, n), dtype=complex)
    for i in range(n):
        basis[i, i, i] = 1.0
    k = n
    for i in range(n):
        for j in range(i + 1, n):
            basis[k, i, j] = basis[k, j, i] = 1.0 / _SQRT2
            basis[k + 1, i, j] = 1.0j / _SQRT2
            basis[k + 1, j, i] = -1.0j / _SQRT2
            k += 2
    return basis


def _rep_from_coords(desc: AlgebraDescriptor, coords: np.ndarray):
    kind = desc.kind
    if kind in _MATRIX_KINDS:
        return np.einsum("k,kij->ij", coords, _matrix_basis(kind, desc.param))
    if kind is AlgebraKind.ALBERT:
        rep = np.zeros((3, 3, 8))
        for i in range(3):
            rep[i, i, 0] = coords[i]
        offsets = {(0, 1): 3, (0, 2): 11, (1, 2): 19}
        for (i, j), o in offsets.items():
            rep[i, j] = coords[o:o + 8]
            rep[j, i] = conj_arrays(rep[i, j])
        return rep
    return None  # spin factors operate on coordinates directly


def _coords_from_rep(desc: AlgebraDescriptor, rep) -> np.ndarray:
    kind = desc.kind
    if kind is AlgebraKind.REAL_SYMMETRIC:
        return np.einsum("ij,kij->k", rep, _matrix_basis(kind, desc.param))
    if kind is AlgebraKind.COMPLEX_HERMITIAN:
        return np.einsum("ij,kij->k", rep, np.conj(_matrix_basis(kind, desc.param))).real
    if kind is AlgebraKind.ALBERT:
        coords = np.empty(27)
        coords[0], coords[1], coords[2] = rep[0, 0, 0], rep[1, 1, 0], rep[2, 2, 0]
        coords[3:11], coords[11:19], coords[19:27] = rep[0, 1], rep[0, 2], rep[1, 2]
        return coords
    raise DomainError("spin factors have no matrix representation")


@dataclass(frozen=True)
class AlgebraElement:
    """An element of one of the supported algebras, as coordinates.

    Immutable; the dense matrix (or octonion-matrix) representation is
    computed lazily and cached since every product needs it.
    """

    descriptor: AlgebraDescriptor
    coords: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=float)
        if c.shape != (self.descriptor.dimension,):
            raise DomainError(
                f"coordinate vector of length {c.shape} does not match "
                f"{self.descriptor} (dimension {self.descriptor.dimension})"
            )
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coords", c)
        object.__setattr__(self, "_rep", None)

    @property
    def rep(self):
        """Dense representation: (n, n) matrix, (3, 3, 8) array, or None."""
        if self._rep is None and self.descriptor.kind is not AlgebraKind.SPIN_FACTOR:
            object.__setattr__(self, "_rep", _rep_from_coords(self.descriptor, self.coords))
        return self._rep

    def _check_same(self, other: "AlgebraElement"):
        if self.descriptor != other.descriptor:
            raise DomainError(f"descriptor mismatch: {self.descriptor} vs {other.descriptor}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_same(other)
        return AlgebraElement(self.descriptor, self.coords + other.coords)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_same(other)
        return AlgebraElement(self.descriptor, self.coords - other.coords)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.descriptor, -self.coords)

    def __mul__(self, scalar) -> "AlgebraElement":
        return AlgebraElement(self.descriptor, self.coords * float(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "AlgebraElement":
        return AlgebraElement(self.descriptor, self.coords / float(scalar))

    def __repr__(self):
        return f"AlgebraElement({self.descriptor}, {np.array2string(self.coords, threshold=8)})"


def _element_from_rep(desc: AlgebraDescriptor, rep) -> AlgebraElement:
    return AlgebraElement(desc, _coords_from_rep(desc, rep))


def identity(desc: AlgebraDescriptor) -> AlgebraElement:
    coords = np.zeros(desc.dimension)
    if desc.kind in _MATRIX_KINDS:
        coords[: desc.param] = 1.0
    elif desc.kind is AlgebraKind.SPIN_FACTOR:
        coords[0] = 1.0
    else:
        coords[:3] = 1.0
    return AlgebraElement(desc, coords)


def zero(desc: AlgebraDescriptor) -> AlgebraElement:
    return AlgebraElement(desc, np.zeros(desc.dimension))


def from_matrix(desc: AlgebraDescriptor, matrix: np.ndarray) -> AlgebraElement:
    """Element from a dense symmetric/Hermitian matrix (matrix kinds only).

    The matrix is symmetrized before projection, so tiny asymmetries from
    upstream arithmetic are discarded rather than leaking into coordinates.
    """
    if desc.kind not in _MATRIX_KINDS:
        raise DomainError(f"from_matrix only applies to matrix kinds, not {desc}")
    m = np.asarray(matrix)
    m = 0.5 * (m + np.conj(m.T))
    return _element_from_rep(desc, m)


def jordan_product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """The commutative Jordan product of two elements of the same algebra.

    Matrix kinds use (AB + BA)/2; spin factors use
    (s, u) o (t, v) = (st + <u, v>, sv + tu); the octonion Hermitian kind
    uses entrywise-octonion (AB + BA)/2.
    """
    a._check_same(b)
    kind = a.descriptor.kind
    if kind in _MATRIX_KINDS:
        ma, mb = a.rep, b.rep
        return _element_from_rep(a.descriptor, 0.5 * (ma @ mb + mb @ ma))
    if kind is AlgebraKind.SPIN_FACTOR:
        s, u = a.coords[0], a.coords[1:]
        t, v = b.coords[0], b.coords[1:]
        return AlgebraElement(a.descriptor, np.concatenate(([s * t + u @ v], s * v + t * u)))
    ab = np.einsum("ijp,jkq,pqr->ikr", a.rep, b.rep, _STRUCT)
    ba = np.einsum("ijp,jkq,pqr->ikr", b.rep, a.rep, _STRUCT)
    return _element_from_rep(a.descriptor, 0.5 * (ab + ba))


def quadratic_map(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """The quadratic representation {ABA} = 2 (A o B) o A - A^2 o B."""
    a._check_same(b)
    ab = jordan_product(a, b)
    a2 = jordan_product(a, a)
    return 2.0 * jordan_product(ab, a) - jordan_product(a2, b)


def associative_triple(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Literal matrix product A B A, defined on the two matrix kinds only.

    Cross-validates quadratic_map, which must agree with it there.
    """
    a._check_same(b)
    if a.descriptor.kind not in _MATRIX_KINDS:
        raise DomainError(f"A B A is only meaningful for matrix kinds, not {a.descriptor}")
    return _element_from_rep(a.descriptor, a.rep @ b.rep @ a.rep)


def trace(a: AlgebraElement) -> float:
    """Generic trace: sum of eigenvalues with multiplicity."""
    kind = a.descriptor.kind
    if kind in _MATRIX_KINDS:
        return float(a.coords[: a.descriptor.param].sum())
    if kind is AlgebraKind.SPIN_FACTOR:
        return 2.0 * float(a.coords[0])
    return float(a.coords[:3].sum())


@dataclass(frozen=True)
class PositiveGenSpec:
    """Recipe for a random positive element with spectrum in [low, high]."""

    spectrum_low: float
    spectrum_high: float
    seed: int = 0

    def __post_init__(self):
        if not (0.0 < self.spectrum_low <= self.spectrum_high):
            raise DomainError(
                f"need 0 < spectrum_low <= spectrum_high, got [{self.spectrum_low}, {self.spectrum_high}]"
            )


def _as_rng(seed_or_rng) -> np.random.Generator:
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


def random_element(desc: AlgebraDescriptor, seed_or_rng=0) -> AlgebraElement:
    """Element with independent standard-normal coordinates."""
    rng = _as_rng(seed_or_rng)
    return AlgebraElement(desc, rng.standard_normal(desc.dimension))


def _random_frame(desc: AlgebraDescriptor, rng: np.random.Generator):
    """A complete orthogonal idempotent frame from a generic random element."""
    from .spectral import spectral_decompose  # deferred: spectral builds on this module

    probe = random_element(desc, rng)
    return spectral_decompose(probe).idempotents


def random_positive(desc: AlgebraDescriptor, spec: PositiveGenSpec) -> AlgebraElement:
    """Positive invertible element, deterministic in the seed.

    Built as sum(lambda_i e_i) over a random frame with the lambda_i
    log-uniform in [spectrum_low, spectrum_high].
    """
    rng = np.random.default_rng(spec.seed)
    return _random_positive_rng(desc, rng, spec.spectrum_low, spec.spectrum_high)


def _random_positive_rng(desc, rng, low, high) -> AlgebraElement:
    frame = _random_frame(desc, rng)
    lam = np.exp(rng.uniform(math.log(low), math.log(high), size=len(frame)))
    out = zero(desc)
    for lam_i, e_i in zip(lam, frame):
        out = out + lam_i * e_i
    return out


def random_invertible(desc: AlgebraDescriptor, seed_or_rng, low: float = 0.25, high: float = 4.0) -> AlgebraElement:
    """Invertible (possibly indefinite) element: random frame, random-sign eigenvalues."""
    rng = _as_rng(seed_or_rng)
    frame = _random_frame(desc, rng)
    lam = np.exp(rng.uniform(math.log(low), math.log(high), size=len(frame)))
    lam *= rng.integers(0, 2, size=len(frame)) * 2 - 1
    out = zero(desc)
    for lam_i, e_i in zip(lam, frame):
        out = out + lam_i * e_i
    return out


_KIND_TOKENS = {k.value: k for k in AlgebraKind}


def element_to_dict(a: AlgebraElement) -> dict:
    """Flat serialization object {kind, n_or_d, coords}."""
    desc = a.descriptor
    return {
        "kind": desc.kind.value,
        "n_or_d": None if desc.kind is AlgebraKind.ALBERT else desc.param,
        "coords": [float(c) for c in a.coords],
    }


def element_from_dict(obj: dict) -> AlgebraElement:
    try:
        kind = _KIND_TOKENS[obj["kind"]]
        n_or_d = obj.get("n_or_d")
        coords = obj["coords"]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed element object: {exc}") from exc
    if kind is AlgebraKind.ALBERT:
        desc = albert()
    else:
        if n_or_d is None:
            raise DomainError(f"element of kind {kind.value} needs n_or_d")
        desc = AlgebraDescriptor(kind, int(n_or_d))
    return AlgebraElement(desc, np.asarray(coords, dtype=float))


def element_to_json(a: AlgebraElement) -> str:
    from .serialize import canonical_json

    return canonical_json(element_to_dict(a))


def element_from_json(text: str) -> AlgebraElement:
    return element_from_dict(json.loads(text))
