"""Scalar and vector primitives shared by every other module.

One rounding convention is fixed package-wide (nearest integer, ties
toward +infinity), distances on the index circle are measured with a
period-M sawtooth, and random quantum states are drawn uniformly from
the complex unit sphere with fully deterministic seeding.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

__all__ = [
    "STATE_ATOL",
    "round_half_up",
    "sawtooth_abs",
    "root_power",
    "random_unit_state",
    "l2_distance",
    "require_state",
    "derive_seed",
]

# Unit-norm tolerance for vectors treated as quantum states.
STATE_ATOL = 1e-10

_MASK64 = (1 << 64) - 1


def round_half_up(x: float) -> int:
    """Nearest integer to ``x``, ties rounded toward +infinity.

    Equals floor(x + 1/2) evaluated exactly, so the result r always
    satisfies x - 1/2 <= r <= x + 1/2.  Written without literally adding
    0.5 because that addition can round in binary and push values just
    below a tie (e.g. 0.49999999999999994) over it.
    """
    if not math.isfinite(x):
        raise ValueError(f"round_half_up needs a finite value, got {x!r}")
    f = math.floor(x)
    return f + 1 if x - f >= 0.5 else f


def sawtooth_abs(x, M):
    """Distance from ``x`` to the nearest multiple of ``M``, in [0, M/2].

    Periodic with period M and even in x.  Accepts scalars or arrays.
    """
    if M < 1:
        raise ValueError(f"period must be a positive integer, got {M}")
    r = np.mod(x, M)
    out = np.where(r <= M / 2, r, M - r)
    return float(out) if np.isscalar(x) else out


def root_power(n: int, e: float) -> complex:
    """exp(2*pi*sqrt(-1)*e/n): the order-n root of unity raised to ``e``."""
    if n < 1:
        raise ValueError(f"order must be a positive integer, got {n}")
    return cmath.exp(2j * math.pi * e / n)


def random_unit_state(dim: int, seed: int) -> np.ndarray:
    """Unit vector drawn uniformly from the complex sphere in dimension ``dim``.

    Real and imaginary parts are independent standard normals before
    normalization, which makes the law rotation invariant.  The same
    (dim, seed) pair always yields the same vector: the generator is
    created locally and never touches global state.
    """
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    rng = np.random.Generator(np.random.PCG64(seed))
    while True:
        z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        nrm = np.linalg.norm(z)
        if nrm > 0.0:
            return z / nrm


def l2_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Euclidean norm of a - b; rejects mismatched dimensions."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def require_state(v: np.ndarray, *, atol: float = STATE_ATOL) -> np.ndarray:
    """Validate that ``v`` is a unit-norm complex vector and return it."""
    v = np.asarray(v, dtype=np.complex128)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("a state must be a nonempty 1-d complex vector")
    nrm = np.linalg.norm(v)
    if abs(nrm - 1.0) > atol:
        raise ValueError(f"state norm {nrm!r} deviates from 1 by more than {atol}")
    return v


def derive_seed(seed: int, index: int) -> int:
    """Stable 64-bit per-index seed: base seed xor a mixed index.

    The index goes through a splitmix-style finalizer so consecutive
    indices give unrelated streams; the map depends only on (seed, index),
    never on call order, which keeps trial batches reproducible under any
    execution schedule.
    """
    z = (index + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return (seed ^ z) & _MASK64
