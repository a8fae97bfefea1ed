"""Empirical ratio experiments for the Hölder functional-calculus bounds.

Each operation evaluates one candidate ratio numerator/denominator whose
supremum is the constant under study; searches maximize the ratio over random
ensembles with deterministic per-trial seeding (seed, dim, trial), so serial
and parallel runs agree exactly. Degenerate denominators are flagged and
excluded from maxima rather than divided.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .operators import (
    HermitianOperand,
    SchattenIndex,
    SignedPowerFunction,
    apply_calculus,
    as_index,
    schatten_norm,
    spectral_decompose,
)

__all__ = [
    "RatioSample",
    "SearchReport",
    "ando_ratio",
    "bks_check",
    "estimate_constant",
    "commutator_ratio",
    "anticommutator_ratio",
    "mazur_ratio",
    "random_hermitian",
    "random_pair",
    "random_psd",
]

DEGENERATE_FLOOR = 1e-300
PSD_TOL = 1e-10
HILL_CLIMB_ROUNDS = 100
HILL_CLIMB_MIN_SCALE = 1e-8


def index_label(p) -> object:
    q = as_index(p)
    return "inf" if q.is_infinite else q.value


def _digest(*arrays) -> str:
    h = hashlib.sha256()
    for a in arrays:
        a = np.ascontiguousarray(np.asarray(a, dtype=complex))
        h.update(str(a.shape).encode())
        h.update(a.tobytes())
    return h.hexdigest()


@dataclass(frozen=True)
class RatioSample:
    """One evaluated ratio with enough metadata to reproduce it."""

    numerator: float
    denominator: float
    ratio: float
    degenerate: bool
    inputs_digest: str
    parameters: dict

    @classmethod
    def build(cls, numerator: float, denominator: float, digest: str,
              parameters: dict) -> "RatioSample":
        degenerate = denominator <= DEGENERATE_FLOOR
        ratio = 0.0 if degenerate else numerator / denominator
        return cls(float(numerator), float(denominator), float(ratio),
                   degenerate, digest, parameters)


@dataclass
class SearchReport:
    """Outcome of a seeded ratio search: maxima, trajectory, witnesses."""

    best: RatioSample
    trials: int
    seed: int
    dims_swept: list
    history: list = field(default_factory=list)  # (trial counter, best so far)
    witness_x: np.ndarray | None = None
    witness_y: np.ndarray | None = None
    per_dim: dict = field(default_factory=dict)


def _as_operand(x) -> HermitianOperand:
    return x if isinstance(x, HermitianOperand) else spectral_decompose(x)


def ando_ratio(x, y, p, theta: float, signed: bool) -> RatioSample:
    """||f(x) - f(y)||_{p/theta} / ||x - y||_p^theta for the power map f."""
    x = _as_operand(x)
    y = _as_operand(y)
    if x.dim != y.dim:
        raise ValueError("operands must share a dimension")
    if x.trace_weight != y.trace_weight:
        raise ValueError("operands must share a trace weight")
    q = as_index(p)
    f = SignedPowerFunction(theta, signed)
    fx = apply_calculus(x, f)
    fy = apply_calculus(y, f)
    num = schatten_norm(fx.entries - fy.entries, q / theta, x.trace_weight)
    base = schatten_norm(x.entries - y.entries, q, x.trace_weight)
    den = base**theta if base > 0 else 0.0
    params = {"p": index_label(q), "theta": theta, "signed": signed, "dim": x.dim}
    return RatioSample.build(num, den, _digest(x.entries, y.entries), params)


def bks_check(x, y, p, theta: float) -> RatioSample:
    """Positive-operator ratio; the classical inequality makes it <= 1 for p >= theta."""
    x = _as_operand(x)
    y = _as_operand(y)
    q = as_index(p)
    if not q.is_infinite and q.value < theta:
        raise ValueError("the constant-1 inequality needs p >= theta")
    for name, op in (("x", x), ("y", y)):
        floor = -PSD_TOL * max(1.0, op.spectral_radius)
        if op.eigenvalues.min(initial=0.0) < floor:
            raise ValueError(
                f"{name} is not positive semidefinite: min eigenvalue "
                f"{op.eigenvalues.min():.3e}"
            )
    return ando_ratio(x, y, q, theta, signed=False)


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return 0.5 * (g + g.conj().T)


def random_psd(dim: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (g @ g.conj().T) / dim


def _random_projection(dim: int, rng: np.random.Generator) -> np.ndarray:
    rank = int(rng.integers(1, dim + 1))
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    qmat, _ = np.linalg.qr(g)
    return qmat[:, :rank] @ qmat[:, :rank].conj().T


def random_pair(dim: int, rng: np.random.Generator, kind: int) -> tuple[np.ndarray, np.ndarray]:
    """Ensembles probing the divided-difference blow-up regimes.

    kind 0: independent Gaussian Hermitian pair; kind 1: projection shift
    x, x + t q; kind 2: near-degenerate spectrum (eigengaps 1e-3) plus a tiny
    perturbation; kind 3: near-commuting diagonals with a small rotation.
    """
    kind = kind % 4
    if kind == 0:
        return random_hermitian(dim, rng), random_hermitian(dim, rng)
    if kind == 1:
        x = random_hermitian(dim, rng)
        t = float(rng.standard_normal()) or 1.0
        return x, x + t * _random_projection(dim, rng)
    if kind == 2:
        # near-degenerate spectra; a zero center makes the spectrum straddle
        # the sign crossing, where the signed power map is least regular
        center = 0.0 if rng.integers(2) else float(rng.standard_normal())
        lams = center + 1e-3 * rng.standard_normal(dim)
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        u, _ = np.linalg.qr(g)
        x = (u * lams) @ u.conj().T
        x = 0.5 * (x + x.conj().T)
        eps = 10.0 ** rng.uniform(-4, 0)
        return x, x + eps * random_hermitian(dim, rng)
    d1 = np.diag(rng.standard_normal(dim))
    d2 = np.diag(rng.standard_normal(dim))
    eps = 10.0 ** rng.uniform(-6, -1)
    rot = _unitary_from(eps * random_hermitian(dim, rng))
    return d1, rot @ d2 @ rot.conj().T


def _unitary_from(h: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eigh(0.5 * (h + h.conj().T))
    return (vecs * np.exp(1j * vals)) @ vecs.conj().T


def _hill_climb(x: np.ndarray, y: np.ndarray, objective, rng: np.random.Generator,
                rounds: int = HILL_CLIMB_ROUNDS):
    """Greedy Hermitian coordinate perturbations, scale halved on failure."""
    best_x, best_y = x.copy(), y.copy()
    best = objective(best_x, best_y)
    scale = 0.25 * max(np.abs(x).max(), np.abs(y).max(), 1e-6)
    dim = x.shape[0]
    for _ in range(rounds):
        if scale < HILL_CLIMB_MIN_SCALE:
            break
        i = int(rng.integers(dim))
        j = int(rng.integers(dim))
        which = int(rng.integers(2))
        direction = np.zeros((dim, dim), dtype=complex)
        if i == j:
            direction[i, i] = 1.0
        elif rng.integers(2):
            direction[i, j] = direction[j, i] = 1.0
        else:
            direction[i, j] = 1.0j
            direction[j, i] = -1.0j
        step = scale * (1.0 if rng.integers(2) else -1.0) * direction
        cand_x = best_x + (step if which == 0 else 0.0)
        cand_y = best_y + (step if which == 1 else 0.0)
        val = objective(cand_x, cand_y)
        if val > best:
            best, best_x, best_y = val, cand_x, cand_y
        else:
            scale *= 0.5
    return best_x, best_y, best


def estimate_constant(p, theta: float, signed: bool, dims, trials: int,
                      seed: int = 0, checkpoint_every: int | None = None,
                      checkpoint_cb=None, resume: dict | None = None) -> SearchReport:
    """Maximize the power-map ratio over seeded random pairs and refinement.

    The deterministic witness (diag(1, 0, ...), 0) opens every dimension, so
    the best ratio is always >= 1 up to rounding; per-dimension maxima are
    recorded in ``per_dim``. Per-trial seeds derive from (seed, dim, trial),
    so a run resumed from a checkpoint state reproduces the uninterrupted
    result exactly; ``checkpoint_cb`` receives a serializable state dict
    every ``checkpoint_every`` trials.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    q = as_index(p)
    dims = [int(d) for d in dims]

    from . import serialize

    state = resume if resume is not None else {
        "counter": 0, "history": [], "per_dim": {},
        "best_ratio": -1.0, "best_x": None, "best_y": None,
        "position": [0, -1],
    }
    counter = int(state["counter"])
    history = [tuple(h) for h in state["history"]]
    per_dim = {int(k): float(v) for k, v in state["per_dim"].items()}
    best_ratio = float(state["best_ratio"])
    best_pair = (
        None if state["best_x"] is None else serialize.matrix_from_json(state["best_x"]),
        None if state["best_y"] is None else serialize.matrix_from_json(state["best_y"]),
    )
    start_dim, start_trial = state["position"]

    def consider(sample: RatioSample, pair, dim):
        nonlocal best_ratio, best_pair
        if sample.degenerate:
            return
        if sample.ratio > per_dim.get(dim, 0.0):
            per_dim[dim] = sample.ratio
        if sample.ratio > best_ratio:
            best_ratio = sample.ratio
            best_pair = (np.asarray(pair[0], dtype=complex), np.asarray(pair[1], dtype=complex))
            history.append((counter, sample.ratio))

    def snapshot(position):
        return {
            "counter": counter,
            "history": [list(h) for h in history],
            "per_dim": {str(k): v for k, v in per_dim.items()},
            "best_ratio": best_ratio,
            "best_x": None if best_pair[0] is None else serialize.matrix_to_json(best_pair[0]),
            "best_y": None if best_pair[1] is None else serialize.matrix_to_json(best_pair[1]),
            "position": list(position),
        }

    def objective(a, b):
        s = ando_ratio(a, b, q, theta, signed)
        return 0.0 if s.degenerate else s.ratio

    for di in range(start_dim, len(dims)):
        dim = dims[di]
        first_trial = start_trial + 1 if di == start_dim else 0
        if first_trial == 0:
            e = np.zeros((dim, dim), dtype=complex)
            e[0, 0] = 1.0
            consider(ando_ratio(e, np.zeros((dim, dim), dtype=complex), q, theta, signed),
                     (e, np.zeros((dim, dim), dtype=complex)), dim)
        dim_best = -1.0
        dim_best_pair = None
        for trial in range(int(trials)):
            rng = np.random.default_rng(np.random.SeedSequence([int(seed), dim, trial]))
            x, y = random_pair(dim, rng, kind=trial)
            if trial < first_trial:
                # replay only the cheap bookkeeping needed by the refinement
                sample = ando_ratio(x, y, q, theta, signed)
                if not sample.degenerate and sample.ratio >= dim_best:
                    dim_best, dim_best_pair = sample.ratio, (x, y)
                continue
            counter += 1
            sample = ando_ratio(x, y, q, theta, signed)
            consider(sample, (x, y), dim)
            if not sample.degenerate and sample.ratio >= dim_best:
                dim_best, dim_best_pair = sample.ratio, (x, y)
            if checkpoint_every and checkpoint_cb and counter % int(checkpoint_every) == 0:
                checkpoint_cb(snapshot((di, trial)))
        if dim_best_pair is None:
            e = np.zeros((dim, dim), dtype=complex)
            e[0, 0] = 1.0
            dim_best_pair = (e, np.zeros((dim, dim), dtype=complex))
        rng = np.random.default_rng(np.random.SeedSequence([int(seed), dim, 1 << 30]))
        rx, ry, _ = _hill_climb(np.asarray(dim_best_pair[0], dtype=complex),
                                np.asarray(dim_best_pair[1], dtype=complex),
                                objective, rng)
        counter += 1
        consider(ando_ratio(rx, ry, q, theta, signed), (rx, ry), dim)

    best_sample = ando_ratio(best_pair[0], best_pair[1], q, theta, signed)
    return SearchReport(
        best=best_sample, trials=int(trials), seed=int(seed), dims_swept=dims,
        history=history, witness_x=best_pair[0], witness_y=best_pair[1],
        per_dim=per_dim,
    )


def commutator_ratio(x, b, p, theta: float, signed: bool) -> RatioSample:
    """||[f(x), b]||_{p/theta} / (||[x, b]||_p^theta ||b||^(1-theta))."""
    x = _as_operand(x)
    b = np.asarray(b, dtype=complex)
    if not np.any(b):
        raise ValueError("b must be nonzero")
    q = as_index(p)
    f = SignedPowerFunction(theta, signed)
    fx = apply_calculus(x, f)
    xb = x.entries @ b - b @ x.entries
    fb = fx.entries @ b - b @ fx.entries
    bound = schatten_norm(b, SchattenIndex.INF)
    num = schatten_norm(fb, q / theta, x.trace_weight)
    base = schatten_norm(xb, q, x.trace_weight)
    den = base**theta * bound ** (1.0 - theta) if base > 0 else 0.0
    params = {"p": index_label(q), "theta": theta, "signed": signed, "dim": x.dim}
    return RatioSample.build(num, den, _digest(x.entries, b), params)


def anticommutator_ratio(x, y, b, p, theta: float, sign: int) -> RatioSample:
    """||b x^theta +/- y^theta b||_{p/theta} / (||b x +/- y b||_p^theta ||b||^(1-theta))."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    x = _as_operand(x)
    y = _as_operand(y)
    b = np.asarray(b, dtype=complex)
    q = as_index(p)
    for name, op in (("x", x), ("y", y)):
        if op.eigenvalues.min(initial=0.0) < -PSD_TOL * max(1.0, op.spectral_radius):
            raise ValueError(f"{name} must be positive semidefinite")
    f = SignedPowerFunction(theta, signed=False)
    fx = apply_calculus(x, f)
    fy = apply_calculus(y, f)
    top = b @ fx.entries + sign * fy.entries @ b
    bottom = b @ x.entries + sign * y.entries @ b
    bound = schatten_norm(b, SchattenIndex.INF)
    num = schatten_norm(top, q / theta, x.trace_weight)
    base = schatten_norm(bottom, q, x.trace_weight)
    den = base**theta * bound ** (1.0 - theta) if base > 0 else 0.0
    params = {"p": index_label(q), "theta": theta, "sign": sign, "dim": x.dim}
    return RatioSample.build(num, den, _digest(x.entries, y.entries, b), params)


def _power_map(a: np.ndarray, exponent: float) -> np.ndarray:
    """u |a|^exponent through the SVD (partial isometry on the support)."""
    u, s, vh = np.linalg.svd(np.asarray(a, dtype=complex))
    return (u * s**exponent) @ vh


def mazur_ratio(x, y, p: float, q: float) -> RatioSample:
    """Hölder ratio of the norm-homogenizing map between index p and q > p."""
    p = float(p)
    q = float(q)
    if not (0.0 < p < q):
        raise ValueError("need q > p > 0")
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    if x.shape != y.shape:
        raise ValueError("shape mismatch")
    theta = p / q
    num = schatten_norm(_power_map(x, theta) - _power_map(y, theta), q)
    base = schatten_norm(x - y, p)
    den = base**theta if base > 0 else 0.0
    params = {"p": p, "q": q, "theta": theta, "dim": x.shape[0]}
    return RatioSample.build(num, den, _digest(x, y), params)
