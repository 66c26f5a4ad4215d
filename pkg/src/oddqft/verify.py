"""Brute-force numerical verification of the inequalities behind the
error analysis.

Each named check enumerates (or, above a size threshold, deterministically
samples) the instances of one inequality and reports every violation
beyond a 1e-9 absolute slack, together with the tightest margin seen.
Checks whose hypotheses a grid point does not meet are reported as
inapplicable rather than failed.

Structural facts (window disjointness, the division map being a bijection
onto its image, the remainder-set sandwich) are checked exactly in integer
arithmetic; the analytic inequalities use exact integer phase reduction so
float round-off stays far below the slack tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .bounds import (
    denominator_sum_bound,
    shift_bound,
    tail_bound,
    weighted_sum_bound,
)
from .numerics import derive_seed, random_unit_state
from .partition import (
    GroupParams,
    _amplitude_at,
    amplitude_vector,
    build_decomposition,
    interval_set,
    nearest_index,
)
from .pipeline import approximate_qft, reference_state, trace_error
from .transforms import FORWARD, dft

__all__ = [
    "SLACK_TOL",
    "EXHAUSTIVE_LIMIT",
    "SWEEP_LEMMAS",
    "CheckReport",
    "SweepSummary",
    "check_lemma",
    "sweep",
    "denominator_sums",
    "default_m_exponents",
]

SLACK_TOL = 1e-9

# Above this many elementary instances a check switches to deterministic
# seeded sampling and says so in its notes.
EXHAUSTIVE_LIMIT = 10**8

SWEEP_LEMMAS = (
    "set_properties",
    "delta_properties",
    "distance_lower_bound",
    "amplitude_bound",
    "denominator_sum",
    "weighted_sum",
    "tail_norm",
    "shift_norm",
    "delta_ket",
)

_L_INDEPENDENT = {
    "set_properties",
    "delta_properties",
    "distance_lower_bound",
    "denominator_sum",
    "weighted_sum",
}


@dataclass
class CheckReport:
    """Outcome of one check at one parameter point.

    ``max_slack`` is the tightest margin observed (bound minus measured
    value at the closest instance); it is nonnegative whenever the check
    passes cleanly.  ``violations`` lists witness tuples for instances
    breaking the inequality by more than the slack tolerance.
    """

    lemma_id: str
    params: dict
    status: str  # "pass" | "fail" | "inapplicable"
    instances_checked: int
    violations: list = field(default_factory=list)
    max_slack: float | None = None
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def oneline(self) -> str:
        head = f"{self.status.upper():>12}  {self.lemma_id:<22}"
        ps = " ".join(f"{k}={v}" for k, v in self.params.items() if v is not None)
        tail = f"checked={self.instances_checked}"
        if self.max_slack is not None:
            tail += f" tightest_margin={self.max_slack:.3e}"
        if self.status == "inapplicable" and "reason" in self.notes:
            tail += f" ({self.notes['reason']})"
        if self.violations:
            tail += f" violations={len(self.violations)}"
        return f"{head} {ps:<28} {tail}"


@dataclass(frozen=True)
class SweepSummary:
    total: int
    passed: int
    failed: int
    inapplicable: int

    @property
    def all_ok(self) -> bool:
        return self.failed == 0


def _is_pow2(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


class _PointData:
    """Shared per-(M, N) precomputation for the matrix-style checks.

    ``resid[k, i]`` is the exact integer (k*N - M*i) mod (M*N) folded to
    (-MN/2, MN/2]; dividing by N gives the signed circle offset k - M*i/N,
    whose absolute value is the sawtooth distance.  ``ks`` is the row
    subset actually enumerated (all rows unless sampling kicked in).
    """

    def __init__(self, M: int, N: int, *, limit: int = EXHAUSTIVE_LIMIT, seed: int = 0):
        self.M = M
        self.N = N
        self.sampled = M * N > limit
        if self.sampled:
            rows = max(1, limit // N)
            rng = np.random.Generator(np.random.PCG64(derive_seed(seed, 0xA11)))
            self.ks = np.sort(rng.choice(M, size=rows, replace=False))
        else:
            self.ks = np.arange(M, dtype=np.int64)

    @cached_property
    def decomposition(self):
        return build_decomposition(self.M, self.N)

    @cached_property
    def resid(self) -> np.ndarray:
        M, N = self.M, self.N
        i = np.arange(N, dtype=np.int64)[None, :]
        r = (self.ks[:, None] * N - M * i) % (M * N)
        return np.where(r > M * N // 2, r - M * N, r)

    @cached_property
    def dist(self) -> np.ndarray:
        """Sawtooth distance |k - M*i/N|_M on the enumerated rows."""
        return np.abs(self.resid) / self.N

    @cached_property
    def member(self) -> np.ndarray:
        """member[row, i] is True iff ks[row] lies in window i.

        Built from the window definition itself (2N*|k - i'| < M - N on
        the circle), independent of the division map.
        """
        M, N = self.M, self.N
        out = np.zeros((self.ks.size, N), dtype=bool)
        pos = np.full(M, -1, dtype=np.int64)
        pos[self.ks] = np.arange(self.ks.size)
        for i in range(N):
            rows = pos[interval_set(i, M, N)]
            out[rows[rows >= 0], i] = True
        return out

    @cached_property
    def inv_dist_off_window(self) -> np.ndarray:
        """1/dist where k is outside window i, else 0."""
        d = np.where(self.member, 1.0, self.dist)  # member cells never divide
        with np.errstate(divide="ignore"):
            w = 1.0 / d
        w[self.member] = 0.0
        return w

    @cached_property
    def _den_part(self) -> np.ndarray:
        # L-independent factor of the comb-transform coefficients:
        # exp(-i*th/2)/sin(th/2) with th the exact denominator angle.
        th = 2 * np.pi * self.resid / (self.M * self.N)
        degenerate = self.resid == 0
        th_safe = np.where(degenerate, 1.0, th)
        part = np.exp(-0.5j * th) / np.sin(th_safe / 2)
        part[degenerate] = 0.0  # patched per-L in amplitude_matrix
        return part

    def amplitude_matrix(self, L: int) -> np.ndarray:
        """A[row, i]: coefficient ks[row] of the transformed index-i comb."""
        M, N = self.M, self.N
        th_num = 2 * np.pi * ((L * N * self.ks) % M) / M
        numfac = np.sin(th_num / 2) * np.exp(0.5j * th_num)
        A = numfac[:, None] * self._den_part / math.sqrt(L * M * N)
        A[self.resid == 0] = math.sqrt(L * N / M)  # only (k, i) = (0, 0)
        return A


def denominator_sums(M: int, N: int) -> np.ndarray:
    """For every k: sum over windows not containing k of 1/|k - M*i/N|_M."""
    point = _PointData(M, N)
    return point.inv_dist_off_window.sum(axis=1)


# ---------------------------------------------------------------------------
# individual checks


def _report(lemma_id, params, instances, violations, slack, notes) -> CheckReport:
    status = "pass" if not violations else "fail"
    return CheckReport(
        lemma_id=lemma_id,
        params=params,
        status=status,
        instances_checked=instances,
        violations=violations,
        max_slack=slack,
        notes=notes,
    )


def _check_set_properties(point: _PointData, params: dict) -> CheckReport:
    M, N = point.M, point.N
    sets = [interval_set(i, M, N) for i in range(N)]
    violations = []
    sizes = {len(s) for s in sets}
    if len(sizes) != 1:
        violations.append(("unequal_cardinalities", sorted(sizes)))
    combined = np.concatenate(sets)
    if np.unique(combined).size != combined.size:
        vals, counts = np.unique(combined, return_counts=True)
        violations.append(("overlap", vals[counts > 1][:10].tolist()))
    if np.any(combined < 0) or np.any(combined >= M):
        violations.append(("residue_out_of_range",))
    notes = {"cardinality": len(sets[0])}
    if M > 3 * N:
        wrap = {0, M - 1} <= set(sets[0].tolist())
        notes["window_zero_wraps"] = bool(wrap)
        if not wrap:
            violations.append(("window_zero_missing_wraparound",))
    return _report("set_properties", params, N + combined.size, violations, 0.0, notes)


def _check_delta_properties(point: _PointData, params: dict) -> CheckReport:
    M, N = point.M, point.N
    dec = point.decomposition
    violations = []
    s, t = dec.s_of_k, dec.t_of_k
    if np.any((s < 0) | (s >= N)):
        violations.append(("quotient_out_of_range",))
    if np.any(np.abs(t) > dec.alpha):
        bad = np.nonzero(np.abs(t) > dec.alpha)[0]
        violations.append(("remainder_out_of_range", bad[:10].tolist()))
    if np.unique(dec.grid_indices()).size != M:
        violations.append(("not_injective",))
    if dec.alpha != dec.beta + 1:
        violations.append(("alpha_beta_gap", dec.alpha, dec.beta))
    if sum(len(c) for c in dec.c_sets) != M:
        violations.append(("image_size", sum(len(c) for c in dec.c_sets)))
    inner = np.arange(-dec.beta, dec.beta + 1)
    for q in range(N):
        cs = set(dec.c_sets[q].tolist())
        if not set(inner.tolist()) <= cs:
            violations.append(("inner_range_missing", q))
        if not cs <= set(range(-dec.alpha, dec.alpha + 1)):
            violations.append(("outer_range_exceeded", q))
    # window/quotient consistency: every k inside window i maps to
    # quotient i.  (The converse is false: the N windows cover only
    # M - 1 - ((M - N - 1) mod 2N) indices, and the leftover k's carry
    # quotient s with remainder +-alpha while lying in no window.)
    member_from_map = s[point.ks][:, None] == np.arange(N)[None, :]
    if np.any(point.member & ~member_from_map):
        violations.append(("window_quotient_mismatch",))
    leftovers = int((~point.member.any(axis=1)).sum())
    return _report("delta_properties", params, M + N, violations, 0.0, {"uncovered": leftovers})


def _check_distance_lower_bound(point: _PointData, params: dict) -> CheckReport:
    M, N = point.M, point.N
    margins = point.dist - (M / (2 * N) - 1)
    margins = np.where(point.member, np.inf, margins)
    flat = np.argmin(margins)
    row, i_min = np.unravel_index(flat, margins.shape)
    min_margin = float(margins[row, i_min])
    violations = []
    if min_margin < -SLACK_TOL:
        bad = np.argwhere(margins < -SLACK_TOL)
        violations = [
            (int(point.ks[r]), int(i), float(margins[r, i])) for r, i in bad[:10]
        ]
    instances = int((~point.member).sum())
    notes = {"argmin": (int(i_min), int(point.ks[row]))}
    if point.sampled:
        notes["sampled"] = True
    return _report("distance_lower_bound", params, instances, violations, min_margin, notes)


def _check_amplitude_bound(point: _PointData, L: int, params: dict) -> CheckReport:
    M, N = point.M, point.N
    A = point.amplitude_matrix(L)
    with np.errstate(divide="ignore"):
        rhs = math.sqrt(M / (L * N)) * 2 / (np.pi * point.dist)
    margins = rhs - np.abs(A)
    degenerate = point.resid == 0  # skip (0, 0)
    margins = np.where(degenerate, np.inf, margins)
    min_margin = float(margins.min())
    violations = []
    if min_margin < -SLACK_TOL:
        bad = np.argwhere(margins < -SLACK_TOL)
        violations = [
            (int(i), int(point.ks[r]), float(margins[r, i])) for r, i in bad[:10]
        ]
    instances = int(margins.size - degenerate.sum())
    notes = {"sampled": True} if point.sampled else {}
    return _report("amplitude_bound", params, instances, violations, min_margin, notes)


def _check_denominator_sum(point: _PointData, params: dict) -> CheckReport:
    M, N = point.M, point.N
    sums = point.inv_dist_off_window.sum(axis=1)
    forms = []
    if N >= 13 and N % 2 == 1 and M >= 16 * N:
        forms.append(("corollary", denominator_sum_bound(N, M)))
    forms.append(("general", denominator_sum_bound(N, M, general=True)))
    violations = []
    min_margin = math.inf
    for name, bound in forms:
        margins = bound - sums
        worst = float(margins.min())
        min_margin = min(min_margin, worst)
        if worst < -SLACK_TOL:
            bad = np.nonzero(margins < -SLACK_TOL)[0]
            violations.extend(
                (name, int(point.ks[r]), float(margins[r])) for r in bad[:10]
            )
    k_max = int(np.argmax(sums))
    halved = 2 * N * math.log(N) / M
    over_halved = np.nonzero(sums > halved)[0]
    notes = {
        "forms": [name for name, _ in forms],
        "max_sum": float(sums[k_max]),
        "argmax_k": int(point.ks[k_max]),
        "halved_corollary_violated": bool(over_halved.size),
        "halved_witnesses": [int(point.ks[r]) for r in over_halved[:10]],
    }
    if point.sampled:
        notes["sampled"] = True
    return _report(
        "denominator_sum", params, len(forms) * sums.size, violations, min_margin, notes
    )


def _check_weighted_sum(point: _PointData, params: dict, vectors: int, seed: int) -> CheckReport:
    M, N = point.M, point.N
    bound = weighted_sum_bound(N, M)
    # The all-equal vector maximizes the unshifted circulant comparison
    # matrix, so it stresses the bound; the rest are random directions.
    X = np.empty((N, vectors + 1))
    X[:, 0] = 1.0 / math.sqrt(N)
    rng = np.random.Generator(np.random.PCG64(derive_seed(seed, 0x45)))
    R = rng.standard_normal((N, vectors))
    X[:, 1:] = R / np.linalg.norm(R, axis=0)
    lhs = (point.inv_dist_off_window @ X) ** 2
    lhs = lhs.sum(axis=0)
    margins = bound - lhs
    min_margin = float(margins.min())
    violations = []
    if min_margin < -SLACK_TOL:
        bad = np.nonzero(margins < -SLACK_TOL)[0]
        violations = [(int(j), float(margins[j])) for j in bad[:10]]
    notes = {"vectors": vectors + 1, "seed": seed}
    if point.sampled:
        notes["sampled"] = True
    return _report("weighted_sum", params, lhs.size, violations, min_margin, notes)


def _check_tail_norm(point: _PointData, L: int, params: dict, vectors: int, seed: int) -> CheckReport:
    M, N = point.M, point.N
    A = point.amplitude_matrix(L)
    B = np.where(point.member, A, 0.0)
    T = np.where(point.member, 0.0, A)
    U = np.empty((N, vectors), dtype=np.complex128)
    for j in range(vectors):
        U[:, j] = dft(random_unit_state(N, derive_seed(seed, j)), FORWARD)
    lhs_tail = np.linalg.norm(T @ U, axis=0)
    lhs_split = np.linalg.norm(A @ U - B @ U, axis=0)
    bound = tail_bound(N, M, L)
    margins = bound - lhs_tail
    min_margin = float(margins.min())
    violations = []
    if min_margin < -SLACK_TOL:
        bad = np.nonzero(margins < -SLACK_TOL)[0]
        violations = [(int(j), float(margins[j])) for j in bad[:10]]
    agreement = float(np.abs(lhs_tail - lhs_split).max())
    if agreement > SLACK_TOL:
        violations.append(("route_disagreement", agreement))
    notes = {"vectors": vectors, "seed": seed, "route_agreement": agreement}
    if point.sampled:
        notes["sampled"] = True
    return _report("tail_norm", params, vectors, violations, min_margin, notes)


def _check_shift_norm(M: int, N: int, L: int, params: dict) -> CheckReport:
    gp = GroupParams(N=N, L=L, M=M)
    bound = shift_bound(N, M, L)
    base = interval_set(0, M, N)
    a0_vals = amplitude_vector(0, gp)[base]
    margins = np.empty(N)
    for i in range(N):
        i_prime, _ = nearest_index(i, M, N)
        idx = (base + i_prime) % M
        bump_vals = _amplitude_at(i, idx, gp)
        margins[i] = bound - float(np.linalg.norm(a0_vals - bump_vals))
    min_margin = float(margins.min())
    violations = []
    if min_margin < -SLACK_TOL:
        bad = np.nonzero(margins < -SLACK_TOL)[0]
        violations = [(int(i), float(margins[i])) for i in bad]
    return _report("shift_norm", params, N, violations, min_margin, {})


def _check_delta_ket(M: int, N: int, L: int, params: dict) -> CheckReport:
    # The shifted bump for index i carries coefficient A0[t mod M] at
    # position (t + i') mod M for t in the symmetric range; mapping those
    # positions must give row i and remainder t exactly.  Row/remainder
    # agreement moves identical floats, so it proves entrywise equality
    # with the reference row |i> (x) sum_t A0_t |t + alpha>.
    dec = build_decomposition(M, N)
    lam = dec.lambda_set
    violations = []
    for i in range(N):
        i_prime, _ = nearest_index(i, M, N)
        pos = (lam + i_prime) % M
        rows = dec.s_of_k[pos]
        cols = dec.t_of_k[pos]
        if np.any(rows != i):
            violations.append(("wrong_row", i, np.unique(rows[rows != i])[:5].tolist()))
        elif not np.array_equal(cols, lam):
            violations.append(("wrong_remainder", i))
    return _report(
        "delta_ket", params, N * lam.size, violations, 0.0, {"lambda_size": int(lam.size)}
    )


def _check_unit_triangle(trials: int, seed: int, params: dict) -> CheckReport:
    rng = np.random.Generator(np.random.PCG64(derive_seed(seed, 0x5E)))
    violations = []
    min_margin = math.inf
    sqrt2 = math.sqrt(2)
    for j in range(trials):
        dim = int(rng.integers(1, 33))
        a = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        a /= np.linalg.norm(a)
        eps = 1.0 - rng.random()  # in (0, 1]
        d = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        d /= np.linalg.norm(d)
        b = a + eps * d
        nb = np.linalg.norm(b)
        if nb < 1e-12:
            continue
        margin = eps * sqrt2 - np.linalg.norm(a - b / nb)
        min_margin = min(min_margin, margin)
        if margin < -SLACK_TOL:
            violations.append((j, dim, eps, float(margin)))
    return _report("unit_triangle", params, trials, violations, float(min_margin), {"seed": seed})


def _check_raw_output_bound(N: int, M: int, L: int, trials: int, seed: int, params: dict) -> CheckReport:
    gp = GroupParams(N=N, L=L, M=M)
    raw_bound = tail_bound(N, M, L) + shift_bound(N, M, L)
    violations = []
    min_margin = math.inf
    unit_margin = math.inf
    for r in range(trials):
        u = random_unit_state(N, derive_seed(seed, r))
        v = approximate_qft(u, gp)
        raw_err = trace_error(v, reference_state(u, gp, normalized=False))
        margin = raw_bound - raw_err
        min_margin = min(min_margin, margin)
        if margin < -SLACK_TOL:
            violations.append((r, float(raw_err), float(margin)))
        unit_err = trace_error(v, reference_state(u, gp, normalized=True))
        unit_margin = min(unit_margin, math.sqrt(2) * raw_bound - unit_err)
    notes = {"seed": seed, "unit_reference_margin": float(unit_margin)}
    return _report("raw_output_bound", params, trials, violations, float(min_margin), notes)


# ---------------------------------------------------------------------------
# hypothesis gates and dispatch

_NEEDS_L = {"amplitude_bound", "tail_norm", "shift_norm", "delta_ket", "raw_output_bound"}
_STANDALONE = {"unit_triangle"}


def _gate(lemma_id: str, N, M, L) -> str | None:
    """Reason the check does not apply at this point, or None if it does."""
    if lemma_id in _STANDALONE:
        return None
    if N is None or M is None:
        return "needs N and M"
    if N < 3 or N % 2 == 0:
        return "N must be odd >= 3"
    if not _is_pow2(M):
        return "M must be a power of two"
    if lemma_id in _NEEDS_L:
        if L is None:
            return "needs L"
        if not _is_pow2(L) or L < 2:
            return "L must be a power of two >= 2"
        if M < L * N:
            return "M < L*N"
    if M < 2 * N:
        return "M < 2N"
    if lemma_id == "denominator_sum" and M <= 2 * N:
        return "M <= 2N"
    if lemma_id in ("weighted_sum", "tail_norm") and (N < 13 or M < 16 * N):
        return "needs N >= 13 and M >= 16N"
    if lemma_id == "raw_output_bound" and (N < 13 or L < 16):
        return "needs N >= 13 and L >= 16"
    return None


def check_lemma(
    lemma_id: str,
    *,
    N: int | None = None,
    M: int | None = None,
    L: int | None = None,
    trials: int | None = None,
    vectors: int = 100,
    seed: int = 0,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> CheckReport:
    """Run one named check; see SWEEP_LEMMAS plus the two sampled checks
    "unit_triangle" and "raw_output_bound"."""
    known = set(SWEEP_LEMMAS) | _STANDALONE | {"raw_output_bound"}
    if lemma_id not in known:
        raise ValueError(f"unknown lemma id {lemma_id!r}; known: {sorted(known)}")
    params = {"N": N, "M": M, "L": L if lemma_id in _NEEDS_L else None}
    reason = _gate(lemma_id, N, M, L)
    if reason is not None:
        return CheckReport(
            lemma_id=lemma_id,
            params=params,
            status="inapplicable",
            instances_checked=0,
            notes={"reason": reason},
        )
    if lemma_id == "unit_triangle":
        return _check_unit_triangle(trials or 10_000, seed, {})
    if lemma_id == "raw_output_bound":
        return _check_raw_output_bound(N, M, L, trials or 20, seed, params)
    if lemma_id == "shift_norm":
        return _check_shift_norm(M, N, L, params)
    if lemma_id == "delta_ket":
        return _check_delta_ket(M, N, L, params)
    point = _PointData(M, N, limit=exhaustive_limit, seed=seed)
    if lemma_id == "set_properties":
        return _check_set_properties(point, params)
    if lemma_id == "delta_properties":
        return _check_delta_properties(point, params)
    if lemma_id == "distance_lower_bound":
        return _check_distance_lower_bound(point, params)
    if lemma_id == "amplitude_bound":
        return _check_amplitude_bound(point, L, params)
    if lemma_id == "denominator_sum":
        return _check_denominator_sum(point, params)
    if lemma_id == "weighted_sum":
        return _check_weighted_sum(point, params, vectors, seed)
    return _check_tail_norm(point, L, params, vectors, seed)


def default_m_exponents(N: int, m_max: int = 16) -> range:
    """Exponent range from the smallest power of two >= 16N up to 2^m_max."""
    lo = (16 * N - 1).bit_length()
    return range(lo, m_max + 1)


def sweep(
    Ns,
    *,
    m_min: int | None = None,
    m_max: int = 16,
    l_exponents=(4, 5),
    lemmas=SWEEP_LEMMAS,
    vectors: int = 100,
    trials: int | None = None,
    seed: int = 0,
) -> tuple[list[CheckReport], SweepSummary]:
    """Run the named checks over a grid of (N, 2^m, 2^l) points.

    With m_min=None each N starts at the smallest power of two >= 16N.
    Checks that do not involve L run once per (N, M); L-dependent checks
    run per (N, M, L) and are inapplicable where M < L*N.  Per-point
    seeds are derived from the grid coordinates, so the outcome does not
    depend on traversal order.
    """
    Ns = list(Ns)
    if not Ns:
        raise ValueError("empty N grid")
    unknown = [lem for lem in lemmas if lem not in set(SWEEP_LEMMAS) | {"raw_output_bound"}]
    if unknown:
        raise ValueError(f"unknown lemma ids in sweep: {unknown}")
    reports: list[CheckReport] = []
    for N in Ns:
        exps = range(m_min, m_max + 1) if m_min is not None else default_m_exponents(N, m_max)
        for m in exps:
            M = 2**m
            point_seed = derive_seed(seed, (N << 20) ^ (m << 8))
            for lemma_id in lemmas:
                if lemma_id in _L_INDEPENDENT:
                    reports.append(
                        check_lemma(
                            lemma_id, N=N, M=M, vectors=vectors, trials=trials, seed=point_seed
                        )
                    )
                else:
                    for l in l_exponents:
                        reports.append(
                            check_lemma(
                                lemma_id,
                                N=N,
                                M=M,
                                L=2**l,
                                vectors=vectors,
                                trials=trials,
                                seed=derive_seed(point_seed, l),
                            )
                        )
    counts = {"pass": 0, "fail": 0, "inapplicable": 0}
    for rep in reports:
        counts[rep.status] += 1
    summary = SweepSummary(
        total=len(reports),
        passed=counts["pass"],
        failed=counts["fail"],
        inapplicable=counts["inapplicable"],
    )
    return reports, summary
