"""Unitary discrete Fourier transforms.

Two implementations with the same convention: the forward kernel is
exp(+2*pi*i*j*k/n) and both directions carry the 1/sqrt(n) factor, so
forward and inverse are exact unitary inverses of each other.

``dft`` evaluates the defining O(n^2) sum for any order; it serves as the
exact reference for small orders and as the accuracy oracle for the fast
transform.  ``fft_pow2`` is an iterative radix-2 transform (bit-reversal
permutation, then in-place butterflies with precomputed twiddle tables)
for power-of-two orders up to the multi-million range.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = ["FORWARD", "INVERSE", "dft", "fft_pow2"]

FORWARD = +1
INVERSE = -1

# Row-block size for the naive transform: bounds scratch memory at
# roughly block * n complex entries.
_DFT_BLOCK = 512


def _check_direction(direction: int) -> int:
    if direction not in (FORWARD, INVERSE):
        raise ValueError(f"direction must be FORWARD (+1) or INVERSE (-1), got {direction}")
    return direction


def dft(v: np.ndarray, direction: int = FORWARD) -> np.ndarray:
    """Unitary Fourier transform by direct summation, O(n^2).

    Entry s of the forward result is (1/sqrt(n)) * sum_j v_j exp(2*pi*i*j*s/n).
    Exponents are reduced mod n before exponentiation so the phase error
    stays at the last-bit level even for large n.
    """
    _check_direction(direction)
    v = np.asarray(v, dtype=np.complex128)
    n = v.shape[0]
    if v.ndim != 1 or n == 0:
        raise ValueError("dft needs a nonempty 1-d vector")
    out = np.empty(n, dtype=np.complex128)
    cols = np.arange(n, dtype=np.int64)
    for start in range(0, n, _DFT_BLOCK):
        rows = np.arange(start, min(start + _DFT_BLOCK, n), dtype=np.int64)
        phase = np.exp(direction * 2j * np.pi / n * ((rows[:, None] * cols) % n))
        out[rows] = phase @ v
    return out / np.sqrt(n)


@lru_cache(maxsize=64)
def _bit_reverse(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n, dtype=np.int64)
    rev = np.zeros(n, dtype=np.int64)
    for _ in range(bits):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    rev.setflags(write=False)
    return rev


@lru_cache(maxsize=64)
def _twiddles(n: int, direction: int) -> np.ndarray:
    # Half-size table: entry k is exp(direction * 2*pi*i*k/n), k < n/2.
    tw = np.exp(direction * 2j * np.pi * np.arange(n // 2) / n)
    tw.setflags(write=False)
    return tw


def fft_pow2(v: np.ndarray, direction: int = FORWARD) -> np.ndarray:
    """Radix-2 unitary Fourier transform for power-of-two lengths.

    Matches ``dft`` entrywise (same normalization and sign convention)
    and runs in O(n log n).  Non-power-of-two lengths are rejected.
    """
    _check_direction(direction)
    v = np.asarray(v, dtype=np.complex128)
    n = v.shape[0]
    if v.ndim != 1 or n == 0 or n & (n - 1):
        raise ValueError(f"fft_pow2 needs a power-of-two length, got shape {v.shape}")
    if n == 1:
        return v.copy()
    work = v[_bit_reverse(n)]
    tw = _twiddles(n, direction)
    size = 2
    while size <= n:
        half = size // 2
        w = tw[:: n // size][:half]
        work = work.reshape(-1, size)
        odd = work[:, half:] * w
        work[:, half:] = work[:, :half] - odd
        work[:, :half] += odd
        work = work.reshape(-1)
        size *= 2
    work /= np.sqrt(n)
    return work
