"""Batch experiment runner.

Every run is reproducible from its serialized config: reports embed the
config, seed, and artifact version in a canonical (sorted-key, 17-digit
float) body, while the wall-clock timestamp and duration live in a separate
header so repeated runs produce byte-identical bodies. Exit status: 0 on
success, 1 on input errors, 2 when a verified invariant is violated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

import numpy as np

from . import __version__, serialize
from .expkernel import (
    analytic_eigenvalues,
    eigenfunction_residual,
    nystrom_spectrum,
    schatten_partial_sums,
)
from .experiments import (
    bks_check,
    commutator_ratio,
    estimate_constant,
    index_label,
    mazur_ratio,
    random_hermitian,
    random_pair,
    random_psd,
)
from .factorization import build_factorization, certified_pcb_bound, get_catalog_kernel, kernel_catalog
from .interpolation import kfonc_check, weak_lp_check
from .multipliers import SymbolMatrix, divided_difference_symbol, multiplier_norm_lower, schur_apply
from .operators import SchattenIndex, SignedPowerFunction, apply_calculus, schatten_norm, spectral_decompose

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2

COMMANDS = (
    "verify-ando", "estimate-constant", "bks", "multiplier-bound", "factorize",
    "kernel-spectrum", "kfunctional", "weak-lp", "commutator", "mazur",
)


class InputError(Exception):
    pass


class VerificationError(Exception):
    def __init__(self, message, results):
        super().__init__(message)
        self.results = results


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; spec wants 1
        raise InputError(message)


def _parse_p(text: str):
    if text in ("inf", "infinity"):
        return SchattenIndex.INF
    try:
        value = float(text)
    except ValueError as exc:
        raise InputError(f"bad Schatten index {text!r}") from exc
    if value <= 0:
        raise InputError(f"Schatten index must be positive, got {value}")
    return SchattenIndex(value)


def _parse_dims(text: str) -> list[int]:
    try:
        dims = [int(v) for v in text.split(",") if v]
    except ValueError as exc:
        raise InputError(f"bad dimension list {text!r}") from exc
    if not dims or any(d < 1 for d in dims):
        raise InputError(f"dimensions must be positive integers, got {text!r}")
    return dims


def _parse_floats(text: str) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",") if v]
    except ValueError as exc:
        raise InputError(f"bad float list {text!r}") from exc
    if not vals:
        raise InputError("empty list")
    return vals


def _require(cond, message):
    if not cond:
        raise InputError(message)


def _map(fn, items, threads: int):
    if threads <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# ----------------------------------------------------------------------------
# command implementations (each returns a results dict, raising
# VerificationError when the run itself proves an invariant violation)
# ----------------------------------------------------------------------------

def _run_verify_ando(ns) -> dict:
    dims = _parse_dims(ns.dims)
    thetas = _parse_floats(ns.thetas)
    _require(ns.trials >= 1, "trials must be >= 1")
    _require(all(0 < t < 1 for t in thetas), "theta values must lie in (0,1)")

    def one(args):
        idx, dim = args
        rng = np.random.default_rng(np.random.SeedSequence([ns.seed, idx]))
        x = spectral_decompose(random_hermitian(dim, rng))
        y = spectral_decompose(random_hermitian(dim, rng))
        worst = 0.0
        radius = max(x.spectral_radius, y.spectral_radius, 1e-300)
        for theta in thetas:
            scale = radius**theta
            for signed in (False, True):
                f = SignedPowerFunction(theta, signed)
                sym = divided_difference_symbol(
                    x.distinct_eigenvalues, y.distinct_eigenvalues, f)
                lhs = apply_calculus(x, f).entries - apply_calculus(y, f).entries
                rhs = schur_apply(sym, x, y, x.entries - y.entries)
                worst = max(worst, np.abs(lhs - rhs).max() / scale)
        return worst

    jobs = [(i, dims[i % len(dims)]) for i in range(ns.trials)]
    defects = _map(one, jobs, ns.threads)
    worst = float(np.max(defects))
    results = {
        "trials": ns.trials,
        "dims": dims,
        "thetas": thetas,
        "max_relative_defect": worst,
        "tolerance": 1e-9,
        "pass": worst <= 1e-9,
    }
    if worst > 1e-9:
        raise VerificationError(
            f"divided-difference identity defect {worst:.3e} exceeds 1e-9", results)
    return results


def _run_bks(ns) -> dict:
    dims = _parse_dims(ns.dims)
    _require(ns.trials >= 1, "trials must be >= 1")
    _require(0 < ns.theta < 1, "theta must lie in (0,1)")
    p = _parse_p(ns.p)
    if not p.is_infinite:
        _require(p.value >= ns.theta, "need p >= theta for the constant-1 inequality")

    def draw(idx, dim):
        rng = np.random.default_rng(np.random.SeedSequence([ns.seed, idx]))
        return random_psd(dim, rng), random_psd(dim, rng)

    def one(args):
        idx, dim = args
        sample = bks_check(*draw(idx, dim), p, ns.theta)
        return 0.0 if sample.degenerate else sample.ratio

    jobs = [(i, dims[i % len(dims)]) for i in range(ns.trials)]
    ratios = _map(one, jobs, ns.threads)
    best = int(np.argmax(ratios))
    worst = float(ratios[best])
    wx, wy = draw(*jobs[best])
    results = {
        "trials": ns.trials,
        "dims": dims,
        "p": index_label(p),
        "theta": ns.theta,
        "max_ratio": worst,
        "bound": 1.0,
        "tolerance": 1e-9,
        "pass": worst <= 1.0 + 1e-9,
        "witness_x": serialize.matrix_to_json(wx),
        "witness_y": serialize.matrix_to_json(wy),
    }
    if worst > 1.0 + 1e-9:
        raise VerificationError(f"positive-operator ratio {worst!r} exceeds 1", results)
    return results


def _run_estimate_constant(ns, out_path: str) -> dict:
    dims = _parse_dims(ns.dims)
    _require(ns.trials >= 1, "trials must be >= 1")
    p_list = [_parse_p(v) for v in str(ns.p).split(",") if v]
    theta_list = _parse_floats(str(ns.theta))
    _require(all(0 < t < 1 for t in theta_list), "theta must lie in (0,1)")
    if len(p_list) > 1 or len(theta_list) > 1:
        # (p, theta) sweep grid: one summary row per combination
        _require(not ns.resume, "--resume only supports a single (p, theta) pair")
        rows = []
        for p in p_list:
            for theta in theta_list:
                rep = estimate_constant(p, theta, ns.signed, dims, ns.trials,
                                        seed=ns.seed)
                rows.append({"p": index_label(p), "theta": theta,
                             "best_ratio": rep.best.ratio, "trials": ns.trials,
                             "seed": ns.seed})
        return {"dims": dims, "trials": ns.trials, "signed": ns.signed,
                "table": rows}
    p = p_list[0]
    ns.theta = theta_list[0]
    ckpt_path = out_path + ".ckpt.json"
    resume = None
    if ns.resume:
        _require(os.path.exists(ckpt_path), f"no checkpoint at {ckpt_path}")
        with open(ckpt_path, encoding="utf-8") as fh:
            resume = json.load(fh)

    def save_ckpt(state):
        with open(ckpt_path, "w", encoding="utf-8") as fh:
            fh.write(serialize.dumps_canonical(state))

    report = estimate_constant(
        p, ns.theta, ns.signed, dims, ns.trials, seed=ns.seed,
        checkpoint_every=ns.checkpoint_every, checkpoint_cb=save_ckpt, resume=resume,
    )
    if os.path.exists(ckpt_path):
        os.remove(ckpt_path)
    return {
        "p": index_label(p),
        "theta": ns.theta,
        "signed": ns.signed,
        "dims": dims,
        "trials": ns.trials,
        "best_ratio": report.best.ratio,
        "per_dim": {str(k): v for k, v in sorted(report.per_dim.items())},
        "history": [[int(i), float(r)] for i, r in report.history],
        "witness_x": serialize.matrix_to_json(report.witness_x),
        "witness_y": serialize.matrix_to_json(report.witness_y),
    }


def _run_multiplier_bound(ns) -> dict:
    _require(ns.kernel in kernel_catalog(), f"unknown kernel {ns.kernel!r}")
    p = _parse_p(ns.p)
    _require(not p.is_infinite and p.value <= 1, "certified bounds need p <= 1")
    d = ns.d if ns.d is not None else int(np.ceil(1.0 / p.value)) + 1
    _require(d * p.value > 1, f"need d > 1/p (d={d}, 1/p={1 / p.value})")
    kernel = get_catalog_kernel(ns.kernel, theta=ns.theta, a=ns.a)
    upper = certified_pcb_bound(kernel, d, p)
    rng = np.random.default_rng(np.random.SeedSequence([ns.seed, 0]))
    xs = np.sort(rng.uniform(0.0, 2.0 * np.pi, ns.samples))
    ys = np.sort(rng.uniform(0.0, 2.0 * np.pi, ns.samples))
    values = np.real(np.asarray(kernel.evaluator(xs[:, None], ys[None, :])))
    sym = SymbolMatrix(xs, ys, values)
    estimate = multiplier_norm_lower(sym, p, trials=ns.trials, seed=ns.seed).with_upper(upper)
    results = {
        "kernel": ns.kernel,
        "p": index_label(p),
        "d": d,
        "samples": ns.samples,
        "trials": ns.trials,
        "lower": estimate.lower,
        "upper": upper,
        "lower_scope": estimate.lower_scope,
        "pass": estimate.lower <= upper + 1e-9,
        "witness": serialize.matrix_to_json(estimate.witness),
        "symbol": sym.to_json(),
    }
    if estimate.lower > upper + 1e-9:
        raise VerificationError("empirical lower bound exceeds the certificate", results)
    return results


def _run_factorize(ns) -> dict:
    _require(ns.kernel in kernel_catalog(), f"unknown kernel {ns.kernel!r}")
    p = _parse_p(ns.p)
    _require(not p.is_infinite and p.value <= 1, "factorized certificates need p <= 1")
    d = ns.d if ns.d is not None else int(np.ceil(1.0 / p.value)) + 1
    kernel = get_catalog_kernel(ns.kernel, theta=ns.theta, a=ns.a)
    fact = build_factorization(kernel, d, p, mode_cutoff=ns.cutoff)
    recon_err = float(np.abs(fact.reconstruct() - kernel.samples()).max())
    payload = fact.to_json()
    payload["reconstruction_error"] = recon_err
    payload["kernel"] = ns.kernel
    payload["p"] = index_label(p)
    return payload


def _run_kernel_spectrum(ns) -> dict:
    _require(ns.kmax >= 1, "kmax must be >= 1")
    _require(ns.nystrom >= 64, "nystrom size must be >= 64")
    _require(ns.sums_kmax >= 10, "sums-kmax must be >= 10")
    spec = analytic_eigenvalues(ns.kmax)
    grid_eigs = nystrom_spectrum(ns.nystrom)
    rows = []
    for i in range(ns.kmax):
        lam = spec.lambdas[i]
        approx = float(grid_eigs[i]) if i < grid_eigs.size else float("nan")
        rows.append({
            "k": i + 1,
            "theta": float(spec.thetas[i]),
            "lambda": float(lam),
            "nystrom_lambda": approx,
            "rel_err": abs(approx - lam) / lam,
        })
    residuals = {str(k): eigenfunction_residual(k, ns.quadrature)
                 for k in range(1, min(ns.kmax, 10) + 1)}
    # partial-sum curves on a log-spaced K grid, one series per exponent
    k_grid, curves = [], {}
    ps = _parse_floats(ns.sums_p)
    k_grid = sorted({int(v) for v in np.logspace(1, np.log10(ns.sums_kmax), 12)})
    for p in ps:
        curves[serialize.float17(p)] = [float(v)
                                        for v in schatten_partial_sums(p, k_grid)]
    return {
        "kmax": ns.kmax,
        "nystrom": ns.nystrom,
        "quadrature": ns.quadrature,
        "table": rows,
        "eigenfunction_residuals": residuals,
        "partial_sums": {"K": k_grid, "series": curves},
    }


def _run_kfunctional(ns) -> dict:
    _require(ns.trials >= 1, "trials must be >= 1")
    p0 = _parse_p(ns.p0)
    p1 = _parse_p(ns.p1)
    _require(p0 < p1, "need p0 < p1")
    ts = _parse_floats(ns.t)
    rows = []
    for trial in range(ns.trials):
        rng = np.random.default_rng(np.random.SeedSequence([ns.seed, trial]))
        x, y = random_pair(ns.dim, rng, kind=trial)
        for t in ts:
            sample = kfonc_check(x, y, p0, p1, ns.theta, ns.signed, t, grid=ns.grid)
            rows.append({
                "t": t, "p0": index_label(p0), "p1": index_label(p1),
                "theta": ns.theta, "trial": trial,
                "ratio": sample.ratio, "degenerate": sample.degenerate,
            })
    finite = [r["ratio"] for r in rows if not r["degenerate"]]
    return {
        "dim": ns.dim, "trials": ns.trials, "grid": ns.grid, "theta": ns.theta,
        "signed": ns.signed, "table": rows,
        "max_ratio": float(np.max(finite)) if finite else 0.0,
    }


def _run_weak_lp(ns) -> dict:
    _require(ns.trials >= 1, "trials must be >= 1")
    _require(ns.p > 0, "p must be positive")
    qs = [SchattenIndex.INF if v == "inf" else SchattenIndex(float(v))
          for v in ns.q.split(",") if v]
    rows = []
    for trial in range(ns.trials):
        rng = np.random.default_rng(np.random.SeedSequence([ns.seed, trial]))
        x, y = random_pair(ns.dim, rng, kind=trial)
        for q in qs:
            sample = weak_lp_check(x, y, ns.p, q, ns.theta, ns.signed)
            rows.append({
                "p": ns.p, "q": index_label(q), "theta": ns.theta, "trial": trial,
                "ratio": sample.ratio, "degenerate": sample.degenerate,
            })
    finite = [r["ratio"] for r in rows if not r["degenerate"]]
    return {
        "dim": ns.dim, "trials": ns.trials, "theta": ns.theta, "signed": ns.signed,
        "table": rows, "max_ratio": float(np.max(finite)) if finite else 0.0,
    }


def _run_commutator(ns) -> dict:
    _require(ns.trials >= 1, "trials must be >= 1")
    p = _parse_p(ns.p)
    best = 0.0
    witness = None
    rows = []
    for trial in range(ns.trials):
        rng = np.random.default_rng(np.random.SeedSequence([ns.seed, trial]))
        x = random_hermitian(ns.dim, rng)
        b = rng.standard_normal((ns.dim, ns.dim)) + 1j * rng.standard_normal((ns.dim, ns.dim))
        b /= max(schatten_norm(b, SchattenIndex.INF), 1e-300)
        sample = commutator_ratio(x, b, p, ns.theta, ns.signed)
        rows.append({"trial": trial, "ratio": sample.ratio, "degenerate": sample.degenerate})
        if not sample.degenerate and sample.ratio >= best:
            best, witness = sample.ratio, (x, b)
    results = {
        "dim": ns.dim, "trials": ns.trials, "p": index_label(p), "theta": ns.theta,
        "signed": ns.signed, "max_ratio": best, "table": rows,
    }
    if witness is not None:
        results["witness_x"] = serialize.matrix_to_json(witness[0])
        results["witness_b"] = serialize.matrix_to_json(witness[1])
    return results


def _run_mazur(ns) -> dict:
    _require(ns.trials >= 1, "trials must be >= 1")
    _require(0 < ns.p < ns.q, "need q > p > 0")
    best = 0.0
    witness = None
    rows = []
    for trial in range(ns.trials):
        rng = np.random.default_rng(np.random.SeedSequence([ns.seed, trial]))
        x = rng.standard_normal((ns.dim, ns.dim)) + 1j * rng.standard_normal((ns.dim, ns.dim))
        y = rng.standard_normal((ns.dim, ns.dim)) + 1j * rng.standard_normal((ns.dim, ns.dim))
        sample = mazur_ratio(x, y, ns.p, ns.q)
        rows.append({"trial": trial, "ratio": sample.ratio, "degenerate": sample.degenerate})
        if not sample.degenerate and sample.ratio >= best:
            best, witness = sample.ratio, (x, y)
    results = {
        "dim": ns.dim, "trials": ns.trials, "p": ns.p, "q": ns.q,
        "max_ratio": best, "table": rows,
    }
    if witness is not None:
        results["witness_x"] = serialize.matrix_to_json(witness[0])
        results["witness_y"] = serialize.matrix_to_json(witness[1])
    return results


# ----------------------------------------------------------------------------
# wiring
# ----------------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="schurlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, trials_default=100):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", default=None, help="report path (default: $SCHURLAB_OUTDIR)")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--threads", type=int, default=1,
                        help="worker cap for trial sweeps; results are identical "
                             "at any setting (checkpointed searches stay serial)")
        sp.add_argument("--trials", type=int, default=trials_default)

    sp = sub.add_parser("verify-ando", help="divided-difference identity sweep")
    common(sp, 200)
    sp.add_argument("--dims", default="2,4,6,8")
    sp.add_argument("--thetas", default="0.25,0.5,0.75")

    sp = sub.add_parser("estimate-constant", help="ratio maximization search")
    common(sp, 1000)
    sp.add_argument("--p", required=True, help="index, or comma list for a sweep grid")
    sp.add_argument("--theta", required=True, help="exponent, or comma list for a sweep grid")
    sp.add_argument("--signed", action="store_true")
    sp.add_argument("--dims", default="2,3,4")
    sp.add_argument("--checkpoint-every", type=int, default=10000)
    sp.add_argument("--resume", action="store_true")

    sp = sub.add_parser("bks", help="positive-operator constant-1 sweep")
    common(sp, 1000)
    sp.add_argument("--p", required=True)
    sp.add_argument("--theta", type=float, required=True)
    sp.add_argument("--dims", default="2,4,6")

    sp = sub.add_parser("multiplier-bound", help="certified upper vs witnessed lower bound")
    common(sp, 8)
    sp.add_argument("--kernel", required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--theta", type=float, default=0.5)
    sp.add_argument("--a", type=float, default=1.0)
    sp.add_argument("--samples", type=int, default=24)

    sp = sub.add_parser("factorize", help="export a truncated rank-one factorization")
    common(sp, 1)
    sp.add_argument("--kernel", required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--theta", type=float, default=0.5)
    sp.add_argument("--a", type=float, default=1.0)
    sp.add_argument("--cutoff", type=int, default=256)

    sp = sub.add_parser("kernel-spectrum", help="analytic vs discretized spectrum")
    common(sp, 1)
    sp.add_argument("--kmax", type=int, default=10)
    sp.add_argument("--nystrom", type=int, default=2000)
    sp.add_argument("--quadrature", type=int, default=2048)
    sp.add_argument("--sums-p", default="0.5,0.6,1,2")
    sp.add_argument("--sums-kmax", type=int, default=100000)

    sp = sub.add_parser("kfunctional", help="interpolation-functional ratio sweep")
    common(sp, 20)
    sp.add_argument("--p0", required=True)
    sp.add_argument("--p1", required=True)
    sp.add_argument("--theta", type=float, default=0.5)
    sp.add_argument("--signed", action="store_true")
    sp.add_argument("--t", default="0.1,1,10")
    sp.add_argument("--dim", type=int, default=4)
    sp.add_argument("--grid", type=int, default=64)

    sp = sub.add_parser("weak-lp", help="Lorentz-norm ratio sweep")
    common(sp, 20)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--q", default="0.5,1,inf")
    sp.add_argument("--theta", type=float, default=0.5)
    sp.add_argument("--signed", action="store_true")
    sp.add_argument("--dim", type=int, default=5)

    sp = sub.add_parser("commutator", help="commutator ratio sweep")
    common(sp, 200)
    sp.add_argument("--p", required=True)
    sp.add_argument("--theta", type=float, required=True)
    sp.add_argument("--signed", action="store_true")
    sp.add_argument("--dim", type=int, default=4)

    sp = sub.add_parser("mazur", help="norm-homogenizing map ratio sweep")
    common(sp, 200)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--q", type=float, required=True)
    sp.add_argument("--dim", type=int, default=4)

    return parser


def _default_out(command: str, fmt: str) -> str:
    outdir = os.environ.get("SCHURLAB_OUTDIR", ".")
    os.makedirs(outdir, exist_ok=True)
    return os.path.join(outdir, f"{command}-report.{fmt}")


def _flatten_for_csv(results: dict) -> tuple[list[str], list[list]]:
    table = results.get("table")
    if table:
        cols = list(table[0].keys())
        return cols, [[row[c] for c in cols] for row in table]
    cols = [k for k, v in results.items() if isinstance(v, (int, float, str, bool))]
    return cols, [[results[c] for c in cols]]


def _write_report(path: str, fmt: str, command: str, config: dict, results: dict,
                  started: float) -> None:
    header = {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "duration_seconds": time.time() - started,
    }
    body = {
        "command": command,
        "config": config,
        "seed": config.get("seed", 0),
        "version": __version__,
        "results": results,
    }
    if fmt == "json":
        text = ('{"header":' + serialize.dumps_canonical(header)
                + ',"body":' + serialize.dumps_canonical(body) + "}")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        return
    cols, rows = _flatten_for_csv(results)
    lines = [f"# timestamp: {header['timestamp']}",
             f"# duration_seconds: {header['duration_seconds']!r}",
             f"# config: {serialize.dumps_canonical(config)}",
             f"# version: {__version__}",
             ",".join(cols)]
    for row in rows:
        cells = []
        for v in row:
            if isinstance(v, float):
                cells.append(serialize.float17(v))
            else:
                cells.append(str(v))
        lines.append(",".join(cells))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def _config_dict(ns) -> dict:
    skip = {"command", "out", "func"}
    cfg = {k: v for k, v in vars(ns).items() if k not in skip and v is not None}
    return cfg


RUNNERS = {
    "verify-ando": lambda ns, out: _run_verify_ando(ns),
    "estimate-constant": _run_estimate_constant,
    "bks": lambda ns, out: _run_bks(ns),
    "multiplier-bound": lambda ns, out: _run_multiplier_bound(ns),
    "factorize": lambda ns, out: _run_factorize(ns),
    "kernel-spectrum": lambda ns, out: _run_kernel_spectrum(ns),
    "kfunctional": lambda ns, out: _run_kfunctional(ns),
    "weak-lp": lambda ns, out: _run_weak_lp(ns),
    "commutator": lambda ns, out: _run_commutator(ns),
    "mazur": lambda ns, out: _run_mazur(ns),
}


def main(argv=None) -> int:
    parser = build_parser()
    started = time.time()
    try:
        ns = parser.parse_args(argv)
        out = ns.out or _default_out(ns.command, ns.format)
        try:
            results = RUNNERS[ns.command](ns, out)
        except VerificationError as exc:
            _write_report(out, ns.format, ns.command, _config_dict(ns), exc.results, started)
            print(f"VIOLATION: {exc}", file=sys.stderr)
            print(f"report: {out}")
            return EXIT_VIOLATION
        _write_report(out, ns.format, ns.command, _config_dict(ns), results, started)
        print(f"report: {out}")
        return EXIT_OK
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
