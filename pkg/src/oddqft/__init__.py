"""Approximate quantum Fourier transform over odd cyclic groups:
desk-scale simulation, closed-form error bounds, parameter selection,
and brute-force verification of the supporting inequalities."""

from .bounds import (
    BoundReport,
    ParameterChoice,
    choose_parameters,
    closed_form_exponents,
    denominator_sum_bound,
    main_bound,
    minimal_exponents,
    qubit_count,
    qubit_estimate,
    shift_bound,
    tail_bound,
    tv_bound,
    weighted_sum_bound,
)
from .numerics import (
    derive_seed,
    l2_distance,
    random_unit_state,
    root_power,
    round_half_up,
    sawtooth_abs,
)
from .partition import (
    DeltaDecomposition,
    GroupParams,
    VectorFamily,
    a_coefficient,
    amplitude_vector,
    build_decomposition,
    delta_map,
    interval_set,
    nearest_index,
    vector_family,
)
from .pipeline import (
    OutputGrid,
    TrialResult,
    TrialSummary,
    approximate_qft,
    embed_copies,
    induced_tv,
    load_state,
    reference_state,
    run_trials,
    save_state,
    trace_error,
)
from .transforms import FORWARD, INVERSE, dft, fft_pow2
from .verify import CheckReport, SweepSummary, check_lemma, denominator_sums, sweep

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CheckReport",
    "DeltaDecomposition",
    "FORWARD",
    "GroupParams",
    "INVERSE",
    "OutputGrid",
    "ParameterChoice",
    "SweepSummary",
    "TrialResult",
    "TrialSummary",
    "VectorFamily",
    "a_coefficient",
    "amplitude_vector",
    "approximate_qft",
    "build_decomposition",
    "check_lemma",
    "choose_parameters",
    "closed_form_exponents",
    "delta_map",
    "denominator_sum_bound",
    "denominator_sums",
    "derive_seed",
    "dft",
    "embed_copies",
    "fft_pow2",
    "induced_tv",
    "interval_set",
    "l2_distance",
    "load_state",
    "main_bound",
    "minimal_exponents",
    "nearest_index",
    "qubit_count",
    "qubit_estimate",
    "random_unit_state",
    "reference_state",
    "root_power",
    "round_half_up",
    "run_trials",
    "save_state",
    "sawtooth_abs",
    "shift_bound",
    "sweep",
    "tail_bound",
    "trace_error",
    "tv_bound",
    "vector_family",
    "weighted_sum_bound",
]
