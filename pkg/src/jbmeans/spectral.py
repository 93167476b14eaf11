"""Spectral decomposition, functional calculus and the Loewner order.

Every element of the supported algebras has a real spectrum and a complete
orthogonal idempotent frame.  Matrix kinds get theirs from a symmetric /
Hermitian eigendecomposition; spin factors have a two-point closed form;
the octonion Hermitian kind solves its characteristic cubic (coefficients
from the generic trace and the Freudenthal determinant) and interpolates
the frame from Jordan powers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebras import (
    AlgebraDescriptor,
    AlgebraElement,
    AlgebraKind,
    identity,
    jordan_product,
    trace,
)
from .errors import DomainError, SpectrumDomainError
from .octonions import conj_arrays, mul_arrays

__all__ = [
    "DEFAULT_CLUSTER_TOL",
    "ScalarFunction",
    "SpectralDecomposition",
    "LoewnerVerdict",
    "LoewnerReport",
    "spectral_decompose",
    "eigenvalues_only",
    "apply_function",
    "spectral_norm",
    "is_positive",
    "loewner_leq",
]

# Relative gap under which eigenvalues are merged into one cluster; Lagrange
# interpolation of idempotents blows up as eigenvalues coalesce, merging
# bounds the denominators.
DEFAULT_CLUSTER_TOL = 1e-8

# Relative floor under which a spectrum counts as violating positivity /
# invertibility requirements of a scalar function.  No regularization: the
# caller gets an error, not a silently shifted spectrum.
_DOMAIN_FLOOR = 1e-13


@dataclass(frozen=True)
class ScalarFunction:
    """A scalar function applicable to elements through their spectrum.

    ``domain`` is one of ``"all"``, ``"positive"`` (strictly positive
    spectrum), ``"invertible"`` (spectrum bounded away from zero) or
    ``"nonnegative"`` (tiny negative eigenvalues are clamped to zero).
    """

    name: str
    fn: Callable[[np.ndarray], np.ndarray]
    domain: str = "all"

    def __call__(self, x) -> np.ndarray:
        return np.asarray(self.fn(np.asarray(x, dtype=float)), dtype=float)

    def __repr__(self):
        return f"ScalarFunction({self.name})"

    @staticmethod
    def power(exponent: float) -> "ScalarFunction":
        lam = float(exponent)
        if lam == int(lam):
            k = int(lam)
            domain = "all" if k >= 0 else "invertible"
            return ScalarFunction(f"power({k})", lambda x: x.astype(float) ** k, domain)
        return ScalarFunction(f"power({lam:g})", lambda x: np.power(x, lam), "positive")

    @staticmethod
    def log() -> "ScalarFunction":
        return ScalarFunction("log", np.log, "positive")

    @staticmethod
    def inverse() -> "ScalarFunction":
        return ScalarFunction("inverse", lambda x: 1.0 / x, "invertible")

    @staticmethod
    def sqrt() -> "ScalarFunction":
        return ScalarFunction("sqrt", lambda x: np.sqrt(np.maximum(x, 0.0)), "nonnegative")

    @staticmethod
    def affine(a: float, b: float) -> "ScalarFunction":
        return ScalarFunction(f"affine({a:g},{b:g})", lambda x: a + b * x, "all")

    @staticmethod
    def harmonic_profile(lam: float) -> "ScalarFunction":
        """x -> ((1 - lam) + lam / x)^(-1), the harmonic-mean profile."""
        if not 0.0 <= lam <= 1.0:
            raise DomainError(f"harmonic profile weight must be in [0, 1], got {lam}")
        return ScalarFunction(
            f"harmonic_profile({lam:g})",
            lambda x: 1.0 / ((1.0 - lam) + lam / x),
            "positive",
        )

    @staticmethod
    def custom(fn: Callable[[np.ndarray], np.ndarray], name: str = "custom", domain: str = "all") -> "ScalarFunction":
        return ScalarFunction(name, fn, domain)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Clustered spectral resolution A = sum(eigenvalues[i] * idempotents[i]).

    Eigenvalues are distinct cluster representatives in descending order;
    multiplicities add up to the algebra rank.
    """

    descriptor: AlgebraDescriptor
    eigenvalues: np.ndarray
    idempotents: list[AlgebraElement]
    multiplicities: list[int]

    @property
    def norm(self) -> float:
        """Spectral norm max |eigenvalue| (the JB norm of the element)."""
        return float(np.max(np.abs(self.eigenvalues))) if self.eigenvalues.size else 0.0

    def reconstruct(self) -> AlgebraElement:
        coords = self._frame_coords().T @ self.eigenvalues
        return AlgebraElement(self.descriptor, coords)

    def _frame_coords(self) -> np.ndarray:
        return np.stack([e.coords for e in self.idempotents])

    def apply(self, f: ScalarFunction) -> AlgebraElement:
        """f(A) = sum f(eigenvalue_i) * idempotent_i, with domain checks."""
        vals = self.eigenvalues
        floor = _DOMAIN_FLOOR * max(1.0, self.norm)
        if f.domain == "positive" and vals.min(initial=np.inf) <= floor:
            raise SpectrumDomainError(f"{f.name} needs a strictly positive spectrum", float(vals.min()))
        if f.domain == "invertible" and np.min(np.abs(vals), initial=np.inf) <= floor:
            offender = vals[np.argmin(np.abs(vals))]
            raise SpectrumDomainError(f"{f.name} needs an invertible argument", float(offender))
        if f.domain == "nonnegative" and vals.min(initial=np.inf) < -floor:
            raise SpectrumDomainError(f"{f.name} needs a nonnegative spectrum", float(vals.min()))
        coords = self._frame_coords().T @ f(vals)
        return AlgebraElement(self.descriptor, coords)


def _cluster(values_desc: np.ndarray, tol_abs: float):
    """Group descending eigenvalues whose neighbours are within tol_abs."""
    clusters = []
    start = 0
    for i in range(1, len(values_desc) + 1):
        if i == len(values_desc) or values_desc[i - 1] - values_desc[i] > tol_abs:
            clusters.append((start, i))
            start = i
    return clusters


def _decompose_matrix(a: AlgebraElement, cluster_tol: float) -> SpectralDecomposition:
    from .algebras import _element_from_rep  # shared coordinate projection

    w, v = np.linalg.eigh(a.rep)
    w = w[::-1]
    v = v[:, ::-1]
    norm = float(np.max(np.abs(w))) if w.size else 0.0
    reps, frames, mults = [], [], []
    for lo, hi in _cluster(w, cluster_tol * norm):
        reps.append(float(np.mean(w[lo:hi])))
        block = v[:, lo:hi]
        proj = block @ np.conj(block.T)
        frames.append(_element_from_rep(a.descriptor, proj))
        mults.append(hi - lo)
    return SpectralDecomposition(a.descriptor, np.array(reps), frames, mults)


def _decompose_spin(a: AlgebraElement, cluster_tol: float) -> SpectralDecomposition:
    s, u = float(a.coords[0]), a.coords[1:]
    r = float(np.linalg.norm(u))
    scale = abs(s) + r
    if r <= cluster_tol * scale or r == 0.0:
        return SpectralDecomposition(a.descriptor, np.array([s]), [identity(a.descriptor)], [2])
    unit = u / r
    up = AlgebraElement(a.descriptor, 0.5 * np.concatenate(([1.0], unit)))
    dn = AlgebraElement(a.descriptor, 0.5 * np.concatenate(([1.0], -unit)))
    return SpectralDecomposition(a.descriptor, np.array([s + r, s - r]), [up, dn], [1, 1])


def _freudenthal_det(a: AlgebraElement) -> float:
    """Determinant of a 3x3 Hermitian octonion matrix."""
    rep = a.rep
    d0, d1, d2 = rep[0, 0, 0], rep[1, 1, 0], rep[2, 2, 0]
    x, y, z = rep[0, 1], rep[0, 2], rep[1, 2]
    nx = float(x @ x)
    ny = float(y @ y)
    nz = float(z @ z)
    cross = mul_arrays(mul_arrays(z, conj_arrays(y)), x)[0]
    return float(d0 * d1 * d2 - d0 * nz - d1 * ny - d2 * nx + 2.0 * cross)


def _albert_eigenvalues(a: AlgebraElement) -> np.ndarray:
    """Roots of l^3 - T l^2 + S l - N, descending; always real here."""
    t = trace(a)
    a2 = jordan_product(a, a)
    p2 = trace(a2)
    s = 0.5 * (t * t - p2)
    det = _freudenthal_det(a)
    # depressed cubic for the trace-free part: w^3 - j w - b = 0
    j = t * t / 3.0 - s
    b = det - t * s / 3.0 + 2.0 * t ** 3 / 27.0
    scale = 1.0 + math.sqrt(max(p2, 0.0))
    p = 2.0 * math.sqrt(max(j, 0.0) / 3.0)
    if p <= 1e-14 * scale:
        return np.full(3, t / 3.0)
    r = np.clip(4.0 * b / p ** 3, -1.0, 1.0)
    phi = math.acos(r) / 3.0
    q = t / 3.0
    vals = np.array([
        q + p * math.cos(phi),
        q + p * math.cos(phi + 4.0 * math.pi / 3.0),
        q + p * math.cos(phi + 2.0 * math.pi / 3.0),
    ])
    return np.sort(vals)[::-1]


def _decompose_albert(a: AlgebraElement, cluster_tol: float) -> SpectralDecomposition:
    vals = _albert_eigenvalues(a)
    norm = float(np.max(np.abs(vals)))
    clusters = _cluster(vals, cluster_tol * norm)
    reps = [float(np.mean(vals[lo:hi])) for lo, hi in clusters]
    mults = [hi - lo for lo, hi in clusters]
    one = identity(a.descriptor)
    if len(reps) == 1:
        frames = [one]
    elif len(reps) == 2:
        l0, l1 = reps
        e0 = (a - l1 * one) / (l0 - l1)
        e1 = (a - l0 * one) / (l1 - l0)
        frames = [e0, e1]
    else:
        frames = []
        for i in range(3):
            jdx = [k for k in range(3) if k != i]
            num = jordan_product(a - reps[jdx[0]] * one, a - reps[jdx[1]] * one)
            den = (reps[i] - reps[jdx[0]]) * (reps[i] - reps[jdx[1]])
            frames.append(num / den)
    return SpectralDecomposition(a.descriptor, np.array(reps), frames, mults)


def spectral_decompose(a: AlgebraElement, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> SpectralDecomposition:
    """Clustered spectral decomposition of any element.

    ``cluster_tol`` is relative: eigenvalues within cluster_tol * |A| of
    their neighbour are merged and share one idempotent.
    """
    kind = a.descriptor.kind
    if kind is AlgebraKind.SPIN_FACTOR:
        return _decompose_spin(a, cluster_tol)
    if kind is AlgebraKind.ALBERT:
        return _decompose_albert(a, cluster_tol)
    return _decompose_matrix(a, cluster_tol)


def eigenvalues_only(a: AlgebraElement) -> np.ndarray:
    """Descending eigenvalues with multiplicity, skipping idempotents."""
    kind = a.descriptor.kind
    if kind is AlgebraKind.SPIN_FACTOR:
        s, u = float(a.coords[0]), a.coords[1:]
        r = float(np.linalg.norm(u))
        return np.array([s + r, s - r])
    if kind is AlgebraKind.ALBERT:
        return _albert_eigenvalues(a)
    return np.linalg.eigvalsh(a.rep)[::-1]


def apply_function(a: AlgebraElement, f: ScalarFunction, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> AlgebraElement:
    """Functional calculus f(A) through the spectral decomposition."""
    return spectral_decompose(a, cluster_tol).apply(f)


def spectral_norm(a: AlgebraElement) -> float:
    """The JB norm: max |eigenvalue|."""
    vals = eigenvalues_only(a)
    return float(np.max(np.abs(vals))) if vals.size else 0.0


def is_positive(a: AlgebraElement, tol: float = 0.0) -> bool:
    """Whether the spectrum is nonnegative up to -tol * max(1, |A|)."""
    vals = eigenvalues_only(a)
    norm = float(np.max(np.abs(vals))) if vals.size else 0.0
    return bool(vals.min() >= -tol * max(1.0, norm))


class LoewnerVerdict(enum.Enum):
    HOLDS = "holds"
    MARGINAL = "marginal"
    FAILS = "fails"


@dataclass(frozen=True)
class LoewnerReport:
    """Outcome of an A <= B test on the difference B - A.

    ``min_eig_of_difference >= 0`` certifies the order outright (HOLDS);
    within ``-tolerance * scale`` it is accepted but flagged MARGINAL;
    below that it FAILS.  ``holds`` collapses the first two.
    """

    min_eig_of_difference: float
    scale: float
    tolerance: float
    verdict: LoewnerVerdict

    @property
    def holds(self) -> bool:
        return self.verdict is not LoewnerVerdict.FAILS

    @property
    def margin(self) -> float:
        """Minimum eigenvalue of the difference, scaled by |A| + |B|."""
        if self.scale == 0.0:
            return self.min_eig_of_difference
        return self.min_eig_of_difference / self.scale


def loewner_leq(a: AlgebraElement, b: AlgebraElement, tol: float = 1e-9) -> LoewnerReport:
    """Test A <= B in the Loewner order, with a scaled tolerance band."""
    a._check_same(b)
    diff_vals = eigenvalues_only(b - a)
    min_eig = float(diff_vals.min())
    scale = spectral_norm(a) + spectral_norm(b)
    if min_eig >= 0.0:
        verdict = LoewnerVerdict.HOLDS
    elif min_eig >= -tol * scale:
        verdict = LoewnerVerdict.MARGINAL
    else:
        verdict = LoewnerVerdict.FAILS
    return LoewnerReport(min_eig, scale, tol, verdict)
