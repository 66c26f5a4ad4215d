"""Index combinatorics for folding an odd-order transform into a
power-of-two transform.

Fix an odd N >= 3 and powers of two L >= 2 and M >= L*N (so gcd(M, N) = 1
automatically).  The residues 0..M-1 split into N disjoint, equally sized
windows, one per output index i, centered at i' = round(M*i/N).  A
division-with-remainder map sends each k to a quotient/remainder pair
(s, t) with

    k' = round(k*N/M),   t = k - round(k'*M/N),   s = k' mod N,

and |t| <= alpha = floor(M/(2N) + 1/2).  The remainder sets C_s actually
attained for each s are sandwiched between {-beta..beta} and
{-alpha..alpha}, where beta = ceil(M/(2N) - 3/2) = alpha - 1.

The second half of the module builds the vector family behind all the
error estimates: the exact power-of-two transform of a comb state aligned
with index i, its restriction to window i (the bump), the rest (the
tail), and the window-i translate of the i = 0 bump.

All integer quantities here are computed with exact integer arithmetic;
round(p/q) with ties up is (2p + q) // (2q), so no float rounding can
shift a window by one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "GroupParams",
    "DeltaDecomposition",
    "VectorFamily",
    "nearest_index",
    "interval_set",
    "interval_half_width",
    "delta_map",
    "build_decomposition",
    "a_coefficient",
    "amplitude_vector",
    "vector_family",
]


def _is_pow2(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


@dataclass(frozen=True)
class GroupParams:
    """The (N, L, M) triple the algorithm runs on.

    N odd >= 3 is the order being transformed; L >= 2 and M >= L*N are
    powers of two.  M even and N odd give gcd(M, N) = 1, which several
    constructions rely on (the division map is a bijection onto its
    image, and the comb-transform coefficient degenerates only at
    i = k = 0).
    """

    N: int
    L: int
    M: int

    def __post_init__(self):
        if self.N < 3 or self.N % 2 == 0:
            raise ValueError(f"N must be an odd integer >= 3, got {self.N}")
        if not _is_pow2(self.L) or self.L < 2:
            raise ValueError(f"L must be a power of two >= 2, got {self.L}")
        if not _is_pow2(self.M) or self.M < self.L * self.N:
            raise ValueError(
                f"M must be a power of two >= L*N = {self.L * self.N}, got {self.M}"
            )

    @classmethod
    def from_exponents(cls, N: int, m: int, l: int) -> "GroupParams":
        return cls(N=N, L=2**l, M=2**m)

    @property
    def m(self) -> int:
        return self.M.bit_length() - 1

    @property
    def l(self) -> int:
        return self.L.bit_length() - 1


def _round_half_up_ratio(p: int, q: int) -> int:
    # round(p/q) with ties toward +infinity, exact for integers, q > 0.
    return (2 * p + q) // (2 * q)


def nearest_index(i: int, M: int, N: int) -> tuple[int, float]:
    """Nearest integer i' to M*i/N and the rounding offset i' - M*i/N.

    The offset is always in [-1/2, 1/2]; ties cannot occur for i > 0
    because gcd(M, N) = 1 keeps M*i/N away from half-integers.
    """
    if not 0 <= i <= N - 1:
        raise ValueError(f"index must be in 0..{N - 1}, got {i}")
    i_prime = _round_half_up_ratio(M * i, N)
    return i_prime, float(i_prime - M * i / N)


def interval_half_width(M: int, N: int) -> int:
    """Number of integers on each side of i' inside the open window
    (i' - M/2N + 1/2, i' + M/2N - 1/2)."""
    return (M - N - 1) // (2 * N)


def interval_set(i: int, M: int, N: int) -> np.ndarray:
    """Sorted residues mod M strictly inside the window around i'.

    An integer n lies in the open interval iff 2N*|n - i'| < M - N, an
    exact integer test, so the window is symmetric around i' with
    half-width (M - N - 1) // (2N).  All N windows therefore have the
    same cardinality, and they are pairwise disjoint.
    """
    if M < 2 * N:
        raise ValueError(f"need M >= 2N, got M={M}, N={N}")
    i_prime, _ = nearest_index(i, M, N)
    h = interval_half_width(M, N)
    return np.sort((i_prime + np.arange(-h, h + 1)) % M)


def delta_map(k: int, M: int, N: int) -> tuple[int, int]:
    """Quotient/remainder pair (s, t) for index k.

    k' = round(k*N/M) is the nearest multiple count, t the signed offset
    of k from round(k'*M/N), and s = k' mod N.  Exact integer arithmetic
    throughout.
    """
    if not 0 <= k <= M - 1:
        raise ValueError(f"index must be in 0..{M - 1}, got {k}")
    k_prime = _round_half_up_ratio(k * N, M)
    t = k - _round_half_up_ratio(k_prime * M, N)
    return k_prime % N, t


@dataclass(frozen=True)
class DeltaDecomposition:
    """The full division map for one (M, N) pair.

    ``s_of_k`` / ``t_of_k`` tabulate the map over k = 0..M-1 (so it can be
    applied to length-M amplitude vectors in O(M)); ``c_sets[s]`` is the
    sorted remainder set attained at quotient s; ``lambda_set`` is the
    symmetric remainder range [-floor(M/2N - 1/2), +floor(M/2N - 1/2)],
    computed from that closed-interval definition (it is not always equal
    to c_sets[0], which may also contain +-alpha).
    """

    M: int
    N: int
    alpha: int
    beta: int
    s_of_k: np.ndarray
    t_of_k: np.ndarray
    c_sets: tuple[np.ndarray, ...]
    lambda_set: np.ndarray

    @property
    def width(self) -> int:
        """Remainder-axis size 2*alpha + 1 of the (s, t + alpha) grid."""
        return 2 * self.alpha + 1

    def grid_indices(self) -> np.ndarray:
        """Flat row-major position of each k on the N x (2*alpha+1) grid."""
        return self.s_of_k * self.width + self.t_of_k + self.alpha


@lru_cache(maxsize=8)
def _build_decomposition_cached(M: int, N: int) -> DeltaDecomposition:
    k = np.arange(M, dtype=np.int64)
    k_prime = (2 * k * N + M) // (2 * M)
    t = k - (2 * k_prime * M + N) // (2 * N)
    s = (k_prime % N).astype(np.int64)
    alpha = (M + N) // (2 * N)
    beta = -((3 * N - M) // (2 * N))  # ceil((M - 3N) / 2N)
    lam = (M - N) // (2 * N)  # floor(M/2N - 1/2)
    c_sets = tuple(np.sort(t[s == q]) for q in range(N))
    dec = DeltaDecomposition(
        M=M,
        N=N,
        alpha=int(alpha),
        beta=int(beta),
        s_of_k=s,
        t_of_k=t,
        c_sets=c_sets,
        lambda_set=np.arange(-lam, lam + 1, dtype=np.int64),
    )
    # Cheap structural sanity: the map must be injective and alpha = beta + 1.
    flat = dec.grid_indices()
    if np.unique(flat).size != M:
        raise AssertionError(f"division map not injective at M={M}, N={N}")
    if dec.alpha != dec.beta + 1:
        raise AssertionError(f"alpha != beta + 1 at M={M}, N={N}")
    for arr in (dec.s_of_k, dec.t_of_k, dec.lambda_set, *dec.c_sets):
        arr.setflags(write=False)
    return dec


def build_decomposition(M: int, N: int) -> DeltaDecomposition:
    """Materialize the division map, remainder sets and symmetric range."""
    if N < 3 or N % 2 == 0:
        raise ValueError(f"N must be an odd integer >= 3, got {N}")
    if not _is_pow2(M) or M < 2 * N:
        raise ValueError(f"M must be a power of two >= 2N, got M={M}, N={N}")
    return _build_decomposition_cached(M, N)


def _amplitude_at(i: int, k: np.ndarray, params: GroupParams) -> np.ndarray:
    """Comb-transform coefficients at arbitrary indices k (vectorized).

    The coefficient is the geometric sum
    (1/sqrt(LMN)) * sum_{a<LN} exp(2*pi*i*a*(k - M*i/N)/M)
    evaluated in closed form.  Writing 1 - e^{i*theta} as
    -2i*sin(theta/2)*e^{i*theta/2} turns the ratio into
    sin/sin times a unit phase, which keeps full precision even when the
    denominator angle is tiny.  Both angles are reduced with exact
    integer arithmetic first.  The ratio degenerates only at i = k = 0
    (gcd(M, N) = 1), where the sum is LN/sqrt(LMN) directly.
    """
    N, L, M = params.N, params.L, params.M
    k = np.asarray(k, dtype=np.int64)
    num_red = (L * N * k) % M  # in [0, M)
    den_red = (k * N - M * i) % (M * N)  # in [0, MN)
    den_red = np.where(den_red > M * N // 2, den_red - M * N, den_red)
    th_num = 2 * np.pi * num_red / M
    th_den = 2 * np.pi * den_red / (M * N)
    degenerate = den_red == 0  # only (i, k) = (0, 0)
    th_den_safe = np.where(degenerate, 1.0, th_den)
    ratio = np.sin(th_num / 2) / np.sin(th_den_safe / 2)
    out = ratio * np.exp(0.5j * (th_num - th_den)) / math.sqrt(L * M * N)
    return np.where(degenerate, math.sqrt(L * N / M), out)


def a_coefficient(i: int, k: int, params: GroupParams) -> complex:
    """Coefficient k of the exact order-M transform of the comb state
    carrying index i (L normalized copies spaced N apart, transformed).

    Closed form of the geometric series; equals the direct double sum.
    The i = k = 0 case returns the degenerate value sqrt(LN/M).
    """
    if not 0 <= i <= params.N - 1:
        raise ValueError(f"index i must be in 0..{params.N - 1}, got {i}")
    if not 0 <= k <= params.M - 1:
        raise ValueError(f"index k must be in 0..{params.M - 1}, got {k}")
    return complex(_amplitude_at(i, np.array([k]), params)[0])


def amplitude_vector(i: int, params: GroupParams) -> np.ndarray:
    """All M coefficients of the transformed comb state for index i."""
    if not 0 <= i <= params.N - 1:
        raise ValueError(f"index i must be in 0..{params.N - 1}, got {i}")
    return _amplitude_at(i, np.arange(params.M, dtype=np.int64), params)


@dataclass(frozen=True)
class VectorFamily:
    """Window split of the transformed comb state for one index i.

    ``full`` is the exact unit vector; ``bump`` its restriction to window
    i; ``tail`` the rest (full = bump + tail with disjoint supports); and
    ``shifted`` places the i = 0 bump's coefficients at the window-i
    positions, so bump and shifted share the same support.
    """

    i: int
    i_prime: int
    delta: float
    full: np.ndarray
    bump: np.ndarray
    tail: np.ndarray
    shifted: np.ndarray
    support: np.ndarray

    def __post_init__(self):
        for arr in (self.full, self.bump, self.tail, self.shifted, self.support):
            arr.setflags(write=False)


def vector_family(i: int, params: GroupParams) -> VectorFamily:
    """Build the full/bump/tail/shifted family for index i."""
    N, M = params.N, params.M
    full = amplitude_vector(i, params)
    support = interval_set(i, M, N)
    bump = np.zeros(M, dtype=np.complex128)
    bump[support] = full[support]
    tail = full - bump
    i_prime, delta = nearest_index(i, M, N)
    base = interval_set(0, M, N)
    a0 = full if i == 0 else amplitude_vector(0, params)
    shifted = np.zeros(M, dtype=np.complex128)
    shifted[(base + i_prime) % M] = a0[base]
    return VectorFamily(
        i=i,
        i_prime=i_prime,
        delta=delta,
        full=full,
        bump=bump,
        tail=tail,
        shifted=shifted,
        support=support,
    )
