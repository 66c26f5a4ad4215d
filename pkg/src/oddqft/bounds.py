"""Closed-form error bounds and parameter selection.

The guaranteed output error splits into a tail contribution

    tail(N, M, L) = (2/pi) * sqrt(22 ln^2 N / L + 32 N^2 / (L M))

and a window-shift contribution

    shift(N, M, L) = pi * L * N / (M * sqrt(3)),

whose sum must stay below epsilon/sqrt(2) for the final guarantee
||output - ideal|| <= epsilon.  Natural logs appear in the bound
formulas; base-2 logs only in qubit counts.

Closed-form feasible sizes are L = c1 * sqrt(N)/eps^2 and
M = c2 * N^(3/2)/eps^3 with c1 in [65, 130) and c2 in [735, 1470);
each half-open constant window of ratio 2 pins a unique power of two,
so the exponents are ceil(log2(...)) of the lower-constant values.
``minimal_exponents`` instead searches for the smallest workable M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "C1_RANGE",
    "C2_RANGE",
    "Hypotheses",
    "BoundReport",
    "ParameterChoice",
    "tail_bound",
    "shift_bound",
    "main_bound",
    "closed_form_exponents",
    "minimal_exponents",
    "qubit_count",
    "qubit_estimate",
    "tv_bound",
    "denominator_sum_bound",
    "weighted_sum_bound",
    "choose_parameters",
]

C1_RANGE = (65, 130)
C2_RANGE = (735, 1470)

_SQRT2 = math.sqrt(2)


@dataclass(frozen=True)
class Hypotheses:
    """Which of the main theorem's parameter hypotheses hold."""

    n_ge_13_odd: bool
    l_ge_16: bool
    m_ge_ln: bool
    m_ge_16n: bool

    @property
    def all_ok(self) -> bool:
        return self.n_ge_13_odd and self.l_ge_16 and self.m_ge_ln and self.m_ge_16n


@dataclass(frozen=True)
class BoundReport:
    """Evaluated tail/shift/main bounds for one (N, M, L) triple."""

    N: int
    M: int
    L: int
    tail: float
    shift: float
    main: float
    target: float | None
    hypotheses: Hypotheses

    @property
    def meets_target(self) -> bool | None:
        if self.target is None:
            return None
        return self.main <= self.target


@dataclass(frozen=True)
class ParameterChoice:
    """Closed-form and minimal exponents for a requested (N, epsilon)."""

    N: int
    epsilon: float
    g: int
    l_closed_form: int
    m: int
    l: int
    qubits: int
    qubit_upper_estimate: int
    c1_range: tuple[int, int] = C1_RANGE
    c2_range: tuple[int, int] = C2_RANGE


def _check_positive(N: int, M: int, L: int) -> None:
    if N < 1 or M < 1 or L < 1:
        raise ValueError(f"N, M, L must be positive, got {(N, M, L)}")


def tail_bound(N: int, M: int, L: int) -> float:
    """(2/pi) * sqrt(22 ln^2 N / L + 32 N^2 / (L M))."""
    _check_positive(N, M, L)
    return (2 / math.pi) * math.sqrt(22 * math.log(N) ** 2 / L + 32 * N * N / (L * M))


def shift_bound(N: int, M: int, L: int) -> float:
    """pi * L * N / (M * sqrt(3))."""
    _check_positive(N, M, L)
    return math.pi * L * N / (M * math.sqrt(3))


def _hypotheses(N: int, M: int, L: int) -> Hypotheses:
    return Hypotheses(
        n_ge_13_odd=N >= 13 and N % 2 == 1,
        l_ge_16=L >= 16,
        m_ge_ln=M >= L * N,
        m_ge_16n=M >= 16 * N,
    )


def main_bound(N: int, M: int, L: int, epsilon: float | None = None) -> BoundReport:
    """Tail plus shift, with hypothesis flags and the eps/sqrt(2) target."""
    tail = tail_bound(N, M, L)
    shift = shift_bound(N, M, L)
    return BoundReport(
        N=N,
        M=M,
        L=L,
        tail=tail,
        shift=shift,
        main=tail + shift,
        target=None if epsilon is None else epsilon / _SQRT2,
        hypotheses=_hypotheses(N, M, L),
    )


def _check_n_eps(N: int, epsilon: float) -> None:
    if N < 13 or N % 2 == 0:
        raise ValueError(f"N must be an odd integer >= 13, got {N}")
    if not 0 < epsilon <= _SQRT2:
        raise ValueError(f"epsilon must be in (0, sqrt(2)], got {epsilon}")


def closed_form_exponents(N: int, epsilon: float) -> tuple[int, int]:
    """Exponents (g, l) of the closed-form sizes M = 2^g and L = 2^l.

    g = ceil(log2(735 * N^(3/2) / eps^3)) puts the constant c2 = 2^g * eps^3
    / N^(3/2) in [735, 1470); likewise l for c1 in [65, 130).
    """
    _check_n_eps(N, epsilon)
    g = math.ceil(math.log2(C2_RANGE[0] * N ** 1.5 / epsilon**3))
    l_cf = math.ceil(math.log2(C1_RANGE[0] * math.sqrt(N) / epsilon**2))
    return g, l_cf


def minimal_exponents(N: int, epsilon: float) -> tuple[int, int]:
    """Smallest exponent m (then smallest l) meeting the error target.

    Searches m upward for an l with 2^l >= 16 and 2^l * N <= 2^m such
    that tail + shift <= eps/sqrt(2); the closed-form g caps the search
    since that size is guaranteed feasible.
    """
    _check_n_eps(N, epsilon)
    g, _ = closed_form_exponents(N, epsilon)
    target = epsilon / _SQRT2
    for m in range(4, g + 1):
        M = 2**m
        l = 4
        while 2**l * N <= M:
            if tail_bound(N, M, 2**l) + shift_bound(N, M, 2**l) <= target:
                return m, l
            l += 1
    raise ArithmeticError(
        f"no feasible (m, l) up to the closed form g={g} for N={N}, eps={epsilon}; "
        "this contradicts the guaranteed feasibility of the closed-form sizes"
    )


def qubit_count(M: int) -> int:
    """log2(M) + 2 qubits for a power-of-two M."""
    if M < 2 or M & (M - 1):
        raise ValueError(f"M must be a power of two >= 2, got {M}")
    return M.bit_length() - 1 + 2


def qubit_estimate(N: int, epsilon: float) -> int:
    """ceil(12.53 + 3 * log2(sqrt(N)/eps)): upper estimate on qubits needed.

    The constant 12.53 is used verbatim (it is a hair above
    2 + log2(1470) ~ 12.52, keeping the estimate an upper bound).
    """
    _check_n_eps(N, epsilon)
    return math.ceil(12.53 + 3 * math.log2(math.sqrt(N) / epsilon))


def tv_bound(epsilon: float) -> float:
    """2*eps + eps^2: total-variation bound between eps-close unit states."""
    if epsilon < 0:
        raise ValueError(f"epsilon must be >= 0, got {epsilon}")
    return 2 * epsilon + epsilon * epsilon


def denominator_sum_bound(N: int, M: int, general: bool = False) -> float:
    """Upper bound on sum over off-window indices i of 1/|k - M*i/N|_M.

    Corollary form (default): 4 N ln N / M, valid for odd N >= 13 and
    M >= 16N.  General form: (2N/M) * (1/gamma + ln((N-1)/(2*gamma) + 1))
    with gamma = 1/2 - N/M, valid for odd N > 2 and M > 2N.
    """
    if general:
        if N <= 2 or N % 2 == 0:
            raise ValueError(f"general form needs odd N > 2, got N={N}")
        if M <= 2 * N:
            raise ValueError(f"general form needs M > 2N, got M={M}, N={N}")
        gamma = 0.5 - N / M
        return (2 * N / M) * (1 / gamma + math.log(abs((N - 1) / (2 * gamma) + 1)))
    if N < 13 or N % 2 == 0:
        raise ValueError(f"corollary form needs odd N >= 13, got N={N}")
    if M < 16 * N:
        raise ValueError(f"corollary form needs M >= 16N, got M={M}, N={N}")
    return 4 * N * math.log(N) / M


def weighted_sum_bound(N: int, M: int) -> float:
    """22 N ln^2 N / M + 32 N^3 / M^2, for odd N >= 13 and M >= 16N."""
    if N < 13 or N % 2 == 0:
        raise ValueError(f"needs odd N >= 13, got N={N}")
    if M < 16 * N:
        raise ValueError(f"needs M >= 16N, got M={M}, N={N}")
    return 22 * N * math.log(N) ** 2 / M + 32 * N**3 / M**2


def choose_parameters(N: int, epsilon: float) -> ParameterChoice:
    """Closed-form and minimal exponents plus qubit accounting."""
    g, l_cf = closed_form_exponents(N, epsilon)
    m, l = minimal_exponents(N, epsilon)
    return ParameterChoice(
        N=N,
        epsilon=epsilon,
        g=g,
        l_closed_form=l_cf,
        m=m,
        l=l,
        qubits=qubit_count(2**m),
        qubit_upper_estimate=qubit_estimate(N, epsilon),
    )
