"""Execution of the approximate odd-order transform on concrete states.

The chain is: embed L normalized copies of the input into a length-M
vector, apply the radix-2 transform of order M, then reindex with the
division map onto an N x (2*alpha + 1) grid whose rows are the output
indices.  The first two register steps of the textbook circuit (spread
|0> into a uniform superposition, then interleave) are algebraically the
same as writing u_i / sqrt(L) at positions i + j*N, which is how
``embed_copies`` realizes them.

The ideal reference is (exact transform of u) tensor psi, where psi is
the unit vector carrying the i = 0 comb-transform coefficients on the
symmetric remainder range.  ``run_trials`` measures the distance between
the two grids over seeded random states, together with the induced
total-variation distance over measurement outcomes.
"""

from __future__ import annotations

import json
import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bounds import main_bound
from .numerics import derive_seed, random_unit_state, require_state
from .partition import DeltaDecomposition, GroupParams, amplitude_vector, build_decomposition
from .transforms import FORWARD, dft, fft_pow2

__all__ = [
    "MAX_UNGUARDED_M",
    "OutputGrid",
    "TrialResult",
    "TrialSummary",
    "embed_copies",
    "approximate_qft",
    "reference_state",
    "trace_error",
    "induced_tv",
    "run_trials",
    "save_state",
    "load_state",
]

# Refuse larger transforms unless explicitly overridden (a length-2^24
# complex vector is 256 MB of scratch once intermediates are counted).
MAX_UNGUARDED_M = 2**24

_WORKERS_ENV = "ODDQFT_WORKERS"


@dataclass(frozen=True)
class OutputGrid:
    """Amplitudes laid out on the (index, remainder + alpha) grid."""

    N: int
    width: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.amplitudes.shape != (self.N, self.width):
            raise ValueError(
                f"grid shape {self.amplitudes.shape} != ({self.N}, {self.width})"
            )
        self.amplitudes.setflags(write=False)

    @property
    def squared_norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def ravel(self) -> np.ndarray:
        """Row-major flattening (index varies slowest)."""
        return self.amplitudes.ravel()


def _check_same_shape(a: OutputGrid, b: OutputGrid) -> None:
    if (a.N, a.width) != (b.N, b.width):
        raise ValueError(f"grid shape mismatch: ({a.N}, {a.width}) vs ({b.N}, {b.width})")


def embed_copies(u: np.ndarray, params: GroupParams) -> np.ndarray:
    """L normalized copies of u in a length-M vector: u_i/sqrt(L) at i + j*N."""
    u = require_state(u)
    if u.shape[0] != params.N:
        raise ValueError(f"input dimension {u.shape[0]} != N = {params.N}")
    out = np.zeros(params.M, dtype=np.complex128)
    out[: params.L * params.N].reshape(params.L, params.N)[:] = u / math.sqrt(params.L)
    return out


def approximate_qft(u: np.ndarray, params: GroupParams) -> OutputGrid:
    """Run the algorithm: embed copies, order-M transform, division reindex."""
    dec = build_decomposition(params.M, params.N)
    big = fft_pow2(embed_copies(u, params), FORWARD)
    grid = np.zeros(params.N * dec.width, dtype=np.complex128)
    grid[dec.grid_indices()] = big
    return OutputGrid(N=params.N, width=dec.width, amplitudes=grid.reshape(params.N, dec.width))


def _psi_vector(params: GroupParams, dec: DeltaDecomposition, normalized: bool) -> np.ndarray:
    a0 = amplitude_vector(0, params)
    psi = np.zeros(dec.width, dtype=np.complex128)
    psi[dec.lambda_set + dec.alpha] = a0[dec.lambda_set % params.M]
    if normalized:
        psi /= np.linalg.norm(psi)
    return psi


def _reference_grid(u_hat: np.ndarray, psi: np.ndarray, N: int, width: int) -> OutputGrid:
    return OutputGrid(N=N, width=width, amplitudes=np.outer(u_hat, psi))


def reference_state(u: np.ndarray, params: GroupParams, normalized: bool = True) -> OutputGrid:
    """Ideal grid: (exact transform of u) tensor the second-register vector.

    The first factor comes from the naive transform (the exact oracle);
    the second carries the i = 0 comb-transform coefficients over the
    symmetric remainder range, normalized to unit length by default.
    With ``normalized=False`` the raw, slightly-short vector is used,
    which is the object the pre-normalization error estimate bounds.
    """
    u = require_state(u)
    if u.shape[0] != params.N:
        raise ValueError(f"input dimension {u.shape[0]} != N = {params.N}")
    dec = build_decomposition(params.M, params.N)
    psi = _psi_vector(params, dec, normalized)
    return _reference_grid(dft(u, FORWARD), psi, params.N, dec.width)


def trace_error(v: OutputGrid, ref: OutputGrid) -> float:
    """Frobenius norm of the entrywise grid difference."""
    _check_same_shape(v, ref)
    return float(np.linalg.norm(v.amplitudes - ref.amplitudes))


def induced_tv(v: OutputGrid, ref: OutputGrid) -> float:
    """Total variation distance between the induced outcome distributions:
    sum over grid cells of | |v|^2 - |ref|^2 |."""
    _check_same_shape(v, ref)
    return float(np.abs(np.abs(v.amplitudes) ** 2 - np.abs(ref.amplitudes) ** 2).sum())


@dataclass(frozen=True)
class TrialResult:
    trial: int
    seed: int
    error: float
    bound: float
    tv: float


@dataclass(frozen=True)
class TrialSummary:
    params: GroupParams
    trials: int
    max_error: float
    mean_error: float
    max_tv: float
    bound: float
    bound_violations: int


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get(_WORKERS_ENV, "1"))
    return max(1, workers)


def run_trials(
    params: GroupParams,
    trials: int,
    seed: int,
    *,
    allow_large: bool = False,
    workers: int | None = None,
) -> tuple[list[TrialResult], TrialSummary]:
    """Measure error and TV distance over seeded random input states.

    Trial r draws its state from a seed derived from (seed, r), so the
    results are identical no matter how trials are scheduled; the worker
    count (default from ODDQFT_WORKERS, else 1) only affects wall time.
    ``bound`` is sqrt(2) times the tail-plus-shift estimate, the distance
    the main theorem guarantees against the unit-length reference.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if params.M > MAX_UNGUARDED_M and not allow_large:
        raise ValueError(
            f"M = {params.M} exceeds the memory guard 2^24; pass allow_large=True to override"
        )
    dec = build_decomposition(params.M, params.N)
    psi = _psi_vector(params, dec, normalized=True)
    bound = math.sqrt(2) * main_bound(params.N, params.M, params.L).main

    def one(r: int) -> TrialResult:
        trial_seed = derive_seed(seed, r)
        u = random_unit_state(params.N, trial_seed)
        v = approximate_qft(u, params)
        ref = _reference_grid(dft(u, FORWARD), psi, params.N, dec.width)
        err = trace_error(v, ref)
        return TrialResult(trial=r, seed=trial_seed, error=err, bound=bound, tv=induced_tv(v, ref))

    nworkers = _resolve_workers(workers)
    if nworkers == 1:
        results = [one(r) for r in range(trials)]
    else:
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            results = list(pool.map(one, range(trials)))
    errors = [r.error for r in results]
    summary = TrialSummary(
        params=params,
        trials=trials,
        max_error=max(errors),
        mean_error=sum(errors) / trials,
        max_tv=max(r.tv for r in results),
        bound=bound,
        bound_violations=sum(1 for r in results if r.error > r.bound),
    )
    return results, summary


def save_state(path: str, v: np.ndarray) -> None:
    """Write a state file: {"n": dim, "amplitudes": [[re, im], ...]}."""
    v = np.asarray(v, dtype=np.complex128).ravel()
    doc = {"n": int(v.size), "amplitudes": [[float(z.real), float(z.imag)] for z in v]}
    with open(path, "w", encoding="ascii") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_state(path: str, *, norm_tol: float = 1e-6) -> np.ndarray:
    """Read a state file, validate its norm, and return it renormalized.

    A norm deviating from 1 by more than ``norm_tol`` triggers a warning
    (the state is renormalized and used anyway); a vector of negligible
    norm is rejected.
    """
    with open(path, encoding="ascii") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or "n" not in doc or "amplitudes" not in doc:
        raise ValueError(f"{path}: not a state file (need keys 'n' and 'amplitudes')")
    n = doc["n"]
    amps = doc["amplitudes"]
    if not isinstance(n, int) or n < 1 or len(amps) != n:
        raise ValueError(f"{path}: 'amplitudes' length {len(amps)} != n = {n}")
    try:
        v = np.array([complex(re, im) for re, im in amps], dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{path}: malformed amplitude entry ({exc})") from exc
    nrm = np.linalg.norm(v)
    if nrm < 1e-12:
        raise ValueError(f"{path}: state has (near-)zero norm")
    if abs(nrm - 1.0) > norm_tol:
        warnings.warn(f"{path}: norm {nrm!r} deviates from 1; renormalizing", stacklevel=2)
    return v / nrm
