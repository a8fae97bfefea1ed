"""Spectral functional calculus and Schatten/weighted quasi-norms on finite
Hermitian matrices.

All operands carry a cached eigendecomposition (descending eigenvalues) and a
``trace_weight`` scaling the trace, so ``norm_p(x)^p = weight * sum(s_i^p)``.
Eigenvalues closer than ``GROUP_RTOL`` times the spectral radius are merged
into one spectral projection: divided-difference symbols are singular across
spuriously split eigenvalues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "SchattenIndex",
    "SignedPowerFunction",
    "HermitianOperand",
    "spectral_decompose",
    "apply_calculus",
    "schatten_norm",
    "p_triangle_defect",
]

HERMITIAN_RTOL = 1e-12     # asymmetry tolerance relative to max entry magnitude
RECONSTRUCT_RTOL = 1e-10   # U diag U* reconstruction tolerance vs spectral radius
GROUP_RTOL = 1e-8          # eigenvalue merge threshold relative to spectral radius


class SchattenIndex:
    """Exponent of a Schatten quasi-norm, p in (0, inf].

    Infinity (the operator norm) is a distinguished state, not a float that
    participates in 1/p arithmetic. ``SchattenIndex.INF`` is the canonical
    instance.
    """

    __slots__ = ("_value",)

    INF: "SchattenIndex"

    def __init__(self, p):
        if isinstance(p, SchattenIndex):
            self._value = p._value
            return
        p = float(p)
        if math.isnan(p) or p <= 0.0:
            raise ValueError(f"Schatten index must be positive, got {p}")
        self._value = None if math.isinf(p) else p

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def value(self) -> float:
        if self._value is None:
            raise ValueError("the operator-norm index has no finite exponent")
        return self._value

    @property
    def triangle_constant(self) -> float:
        """Quasi-norm constant: 2^(1/p - 1) for p < 1, else 1."""
        if self._value is None or self._value >= 1.0:
            return 1.0
        return 2.0 ** (1.0 / self._value - 1.0)

    def __truediv__(self, theta: float) -> "SchattenIndex":
        theta = float(theta)
        if theta <= 0:
            raise ValueError("can only divide a Schatten index by a positive number")
        if self._value is None:
            return SchattenIndex.INF
        return SchattenIndex(self._value / theta)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchattenIndex):
            try:
                other = SchattenIndex(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self._value == other._value

    def __lt__(self, other) -> bool:
        other = as_index(other)
        if self._value is None:
            return False
        if other._value is None:
            return True
        return self._value < other._value

    def __hash__(self):
        return hash(("SchattenIndex", self._value))

    def __repr__(self):
        return "SchattenIndex(inf)" if self._value is None else f"SchattenIndex({self._value!r})"


SchattenIndex.INF = SchattenIndex(math.inf)


def as_index(p) -> SchattenIndex:
    return p if isinstance(p, SchattenIndex) else SchattenIndex(p)


@dataclass(frozen=True)
class SignedPowerFunction:
    """The homogeneous maps t -> |t|^theta (unsigned) or sgn(t)|t|^theta."""

    theta: float
    signed: bool = False

    def __post_init__(self):
        if not 0.0 < self.theta < 1.0:
            raise ValueError(f"theta must lie strictly inside (0, 1), got {self.theta}")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        v = np.abs(t) ** self.theta
        if self.signed:
            v = np.sign(t) * v
        return v if v.ndim else float(v)


@dataclass(eq=False)
class HermitianOperand:
    """A finite Hermitian matrix with cached spectral decomposition.

    ``eigenvalues`` are descending; ``eigenvectors`` hold the matching
    orthonormal columns; ``trace_weight`` scales the trace functional.
    """

    dim: int
    entries: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    trace_weight: float = 1.0
    _groups: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=complex)
        self.eigenvalues = np.asarray(self.eigenvalues, dtype=float)
        self.eigenvectors = np.asarray(self.eigenvectors, dtype=complex)
        if self.trace_weight <= 0:
            raise ValueError("trace_weight must be positive")
        self._validate()
        if not self._groups:
            self._groups = _group_eigenvalues(self.eigenvalues)

    def _validate(self):
        a = self.entries
        n = self.dim
        if a.shape != (n, n):
            raise ValueError(f"entries shape {a.shape} does not match dim {n}")
        scale = max(np.abs(a).max(), 1e-300)
        asym = np.abs(a - a.conj().T).max()
        if asym > HERMITIAN_RTOL * scale:
            raise ValueError(f"matrix is not Hermitian: max asymmetry {asym:.3e}")
        if np.any(np.diff(self.eigenvalues) > 0):
            raise ValueError("eigenvalues must be sorted descending")
        u = self.eigenvectors
        gram = u.conj().T @ u
        if np.abs(gram - np.eye(n)).max() > RECONSTRUCT_RTOL * 10:
            raise ValueError("eigenvectors are not orthonormal")
        radius = max(np.abs(self.eigenvalues).max(initial=0.0), 1e-300)
        recon = (u * self.eigenvalues) @ u.conj().T
        if np.abs(recon - a).max() > RECONSTRUCT_RTOL * radius:
            raise ValueError("spectral reconstruction does not match entries")

    @property
    def spectral_radius(self) -> float:
        return float(np.abs(self.eigenvalues).max(initial=0.0))

    @property
    def distinct_eigenvalues(self) -> np.ndarray:
        """Representative eigenvalue per merged group, descending."""
        return np.array([self.eigenvalues[g].mean() for g in self._groups])

    @property
    def group_index(self) -> np.ndarray:
        """Group id of each eigenvector column."""
        idx = np.empty(self.dim, dtype=int)
        for gi, g in enumerate(self._groups):
            idx[g] = gi
        return idx

    def projections(self) -> list[np.ndarray]:
        """Spectral projections, one per distinct eigenvalue."""
        u = self.eigenvectors
        return [u[:, g] @ u[:, g].conj().T for g in self._groups]

    def trace(self) -> float:
        return self.trace_weight * float(np.sum(self.eigenvalues))


def _group_eigenvalues(eigenvalues: np.ndarray) -> list[slice]:
    radius = max(np.abs(eigenvalues).max(initial=0.0), 1e-300)
    thresh = GROUP_RTOL * radius
    groups = []
    start = 0
    for i in range(1, eigenvalues.size):
        if eigenvalues[start] - eigenvalues[i] > thresh:
            groups.append(slice(start, i))
            start = i
    groups.append(slice(start, eigenvalues.size))
    return groups


def spectral_decompose(matrix, trace_weight: float = 1.0) -> HermitianOperand:
    """Eigen-decompose a Hermitian matrix into a validated operand.

    Rejects non-Hermitian input (reporting the worst asymmetry) and
    non-finite entries.
    """
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix has non-finite entries")
    scale = max(np.abs(a).max(), 1e-300)
    asym = np.abs(a - a.conj().T).max()
    if asym > HERMITIAN_RTOL * scale:
        raise ValueError(
            f"matrix is not Hermitian within tolerance: max asymmetry {asym:.6e} "
            f"exceeds {HERMITIAN_RTOL:.0e} * {scale:.6e}"
        )
    h = 0.5 * (a + a.conj().T)
    vals, vecs = np.linalg.eigh(h)
    order = np.argsort(vals)[::-1]
    return HermitianOperand(
        dim=a.shape[0],
        entries=a,
        eigenvalues=vals[order],
        eigenvectors=vecs[:, order],
        trace_weight=float(trace_weight),
    )


def apply_calculus(x: HermitianOperand, f: SignedPowerFunction) -> HermitianOperand:
    """U diag(f(x_i)) U*: apply the power map in the eigenbasis of x.

    The result commutes with x and reuses x's eigenvectors, so no second
    eigensolve is needed; eigenvalues are re-sorted descending.
    """
    vals = np.asarray(f(x.eigenvalues), dtype=float)
    order = np.argsort(vals)[::-1]
    u = x.eigenvectors[:, order]
    entries = (u * vals[order]) @ u.conj().T
    entries = 0.5 * (entries + entries.conj().T)
    return HermitianOperand(
        dim=x.dim,
        entries=entries,
        eigenvalues=vals[order],
        eigenvectors=u,
        trace_weight=x.trace_weight,
    )


def singular_values(a) -> np.ndarray:
    """Descending singular values; rejects non-finite entries."""
    a = np.asarray(a, dtype=complex)
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix has non-finite entries")
    return np.linalg.svd(a, compute_uv=False)


SV_NOISE_RTOL = 1e-13  # sub-roundoff singular values are noise; p < 1 amplifies them


def schatten_norm(a, p, trace_weight: float = 1.0) -> float:
    """(weight * sum s_i^p)^(1/p); the operator norm max(s_i) at p = inf.

    ``a`` may be a matrix or a HermitianOperand (which supplies its own
    trace weight). Singular values below SV_NOISE_RTOL times the largest are
    treated as exact zeros.
    """
    if isinstance(a, HermitianOperand):
        trace_weight = a.trace_weight
        s = np.abs(a.eigenvalues)
    else:
        s = singular_values(a)
    q = as_index(p)
    if s.size == 0:
        return 0.0
    top = float(s.max())
    if q.is_infinite:
        return top
    s = s[s > SV_NOISE_RTOL * top]
    return float((trace_weight * np.sum(s ** q.value)) ** (1.0 / q.value))


def p_triangle_defect(parts, p, trace_weight: float = 1.0) -> float:
    """sum_k ||a_k||_p^p - ||sum_k a_k||_p^p  (nonnegative for p <= 1)."""
    q = as_index(p)
    if q.is_infinite or q.value > 1.0:
        raise ValueError("the p-triangle inequality requires p <= 1")
    mats = [np.asarray(m, dtype=complex) for m in parts]
    if not mats:
        raise ValueError("need at least one part")
    shape = mats[0].shape
    for m in mats:
        if m.shape != shape:
            raise ValueError(f"shape mismatch: {m.shape} vs {shape}")
    pw = q.value
    total = sum(schatten_norm(m, q, trace_weight) ** pw for m in mats)
    whole = schatten_norm(sum(mats), q, trace_weight) ** pw
    return float(total - whole)
