"""Command-line surface: parameter advice, simulation runs, table
reproduction, inequality verification, and single-state transforms.

Exit codes: 0 success, 1 a checked property or bound was violated,
2 usage or validation error.  All output is deterministic given the
flags and seed; CSV uses '.' decimals, 6 significant digits for bound
values and full round-trip precision for measured errors.  The
ODDQFT_WORKERS environment variable sets the default worker count for
trial batches (results do not depend on it).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import bounds, pipeline, verify
from .partition import GroupParams

__all__ = ["main"]

_TABLE1_EPSILONS = (0.001, 0.01, 0.05, 0.10, 0.20, 0.30, 0.40)
_TABLE1_NS = (13, 25, 51, 101, 251, 501)

# The six (N, epsilon) rows simulated at desk scale.
_TABLE2_ROWS = ((13, 0.4), (13, 0.3), (13, 0.2), (25, 0.4), (25, 0.3), (51, 0.4))

_FORCE_LARGE_EXP = 24


def _f6(x: float) -> str:
    return f"{x:.6g}"


def _full(x: float) -> str:
    return repr(float(x))


def _write_lines(out_path: str | None, lines: list[str]) -> None:
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail_usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _cmd_params(args) -> int:
    try:
        choice = bounds.choose_parameters(args.n, args.epsilon)
    except ValueError as exc:
        return _fail_usage(str(exc))
    rep = bounds.main_bound(choice.N, 2**choice.m, 2**choice.l, epsilon=choice.epsilon)
    lines = [
        f"N={choice.N} epsilon={_f6(choice.epsilon)}",
        f"closed-form exponents: g={choice.g} (M=2^{choice.g}), l={choice.l_closed_form}",
        f"minimal exponents:     m={choice.m} (M=2^{choice.m}), l={choice.l} (L=2^{choice.l})",
        f"qubits at minimal M:   {choice.qubits} (upper estimate {choice.qubit_upper_estimate})",
        f"bound at minimal:      main={_f6(rep.main)} (tail={_f6(rep.tail)} shift={_f6(rep.shift)})"
        f" <= target={_f6(rep.target)}: {rep.meets_target}",
    ]
    _write_lines(args.out, lines)
    return 0


def _cmd_simulate(args) -> int:
    if args.m > _FORCE_LARGE_EXP and not args.force_large:
        return _fail_usage(
            f"m={args.m} exceeds 2^{_FORCE_LARGE_EXP} memory guard; pass --force-large to override"
        )
    try:
        params = GroupParams.from_exponents(args.n, args.m, args.l)
        results, summary = pipeline.run_trials(
            params, args.trials, args.seed, allow_large=args.force_large
        )
    except ValueError as exc:
        return _fail_usage(str(exc))
    if args.out:
        lines = ["trial,error,bound,tv"]
        lines += [
            f"{r.trial},{_full(r.error)},{_f6(r.bound)},{_full(r.tv)}" for r in results
        ]
        _write_lines(args.out, lines)
    print(
        f"N={args.n} M=2^{args.m} L=2^{args.l} trials={summary.trials} "
        f"max_error={_full(summary.max_error)} mean_error={_f6(summary.mean_error)} "
        f"max_tv={_full(summary.max_tv)} bound={_f6(summary.bound)} "
        f"violations={summary.bound_violations}"
    )
    return 1 if summary.bound_violations else 0


def _cmd_table1(args) -> int:
    lines = ["N,epsilon,g,m,l"]
    for eps in _TABLE1_EPSILONS:
        for N in _TABLE1_NS:
            g, _ = bounds.closed_form_exponents(N, eps)
            m, l = bounds.minimal_exponents(N, eps)
            lines.append(f"{N},{_f6(eps)},{g},{m},{l}")
    _write_lines(args.out, lines)
    return 0


def _search_best(N: int, eps: float, trials: int, seed: int) -> tuple[int, int, float]:
    """Smallest M (then smallest L) whose observed max error over the
    requested trials stays within eps."""
    m_cap, _ = bounds.minimal_exponents(N, eps)
    m = (16 * N - 1).bit_length()
    while m <= m_cap:
        l = 4
        while 2**l * N <= 2**m:
            params = GroupParams.from_exponents(N, m, l)
            _, summary = pipeline.run_trials(params, trials, seed)
            if summary.max_error <= eps:
                return m, l, summary.max_error
            l += 1
        m += 1
    raise AssertionError("search cannot pass the guaranteed minimal exponents")


def _cmd_table2(args) -> int:
    lines = ["N,epsilon,m,l,observed_max_error,best_m,best_l,best_observed"]
    for N, eps in _TABLE2_ROWS:
        m, l = bounds.minimal_exponents(N, eps)
        observed = best = ""
        best_m = best_l = ""
        if args.mode in ("theorem", "both"):
            params = GroupParams.from_exponents(N, m, l)
            _, summary = pipeline.run_trials(params, args.trials, args.seed)
            observed = _full(summary.max_error)
        if args.mode in ("search", "both"):
            bm, bl, bo = _search_best(N, eps, args.search_trials, args.seed)
            best_m, best_l, best = str(bm), str(bl), _full(bo)
        lines.append(f"{N},{_f6(eps)},{m},{l},{observed},{best_m},{best_l},{best}")
    _write_lines(args.out, lines)
    return 0


def _parse_grid(spec: str) -> dict:
    """Parse "N=13..51,m=auto..16,l=4..5" into grid pieces."""
    out: dict = {}
    for clause in spec.split(","):
        key, sep, rng = clause.partition("=")
        key = key.strip()
        if not sep or key not in ("N", "m", "l"):
            raise ValueError(f"bad grid clause {clause!r} (want N=, m= or l=)")
        lo, dots, hi = rng.partition("..")
        lo = lo.strip()
        hi = hi.strip() if dots else lo
        if key == "m":
            out["m"] = (None if lo == "auto" else int(lo), int(hi))
        elif key == "N":
            nlo, nhi = int(lo), int(hi)
            out["N"] = [n for n in range(nlo, nhi + 1) if n % 2 == 1]
        else:
            out["l"] = list(range(int(lo), int(hi) + 1))
    return out


def _cmd_verify(args) -> int:
    lemmas = args.lemma or list(verify.SWEEP_LEMMAS)
    reports = []
    try:
        if args.N is not None or args.M is not None or args.lemma == ["unit_triangle"]:
            for lemma_id in lemmas:
                reports.append(
                    verify.check_lemma(
                        lemma_id,
                        N=args.N,
                        M=args.M,
                        L=args.L,
                        trials=args.trials,
                        vectors=args.vectors,
                        seed=args.seed,
                    )
                )
        else:
            grid = _parse_grid(args.grid) if args.grid else {}
            Ns = grid.get("N", [n for n in range(13, 52) if n % 2 == 1])
            if not Ns:
                return _fail_usage("empty N grid")
            m_min, m_max = grid.get("m", (None, 16))
            l_exps = grid.get("l", [4, 5])
            reports, _ = verify.sweep(
                Ns,
                m_min=m_min,
                m_max=m_max,
                l_exponents=l_exps,
                lemmas=lemmas,
                vectors=args.vectors,
                trials=args.trials,
                seed=args.seed,
            )
    except ValueError as exc:
        return _fail_usage(str(exc))
    for rep in reports:
        print(rep.oneline())
    failed = sum(1 for r in reports if r.status == "fail")
    passed = sum(1 for r in reports if r.status == "pass")
    inapp = sum(1 for r in reports if r.status == "inapplicable")
    print(f"summary: pass={passed} fail={failed} inapplicable={inapp}")
    if args.out:
        lines = ["lemma,N,M,L,status,instances,violations,max_slack"]
        for r in reports:
            slack = "" if r.max_slack is None else _full(r.max_slack)
            lines.append(
                f"{r.lemma_id},{r.params.get('N', '')},{r.params.get('M', '')},"
                f"{r.params.get('L') or ''},{r.status},{r.instances_checked},"
                f"{len(r.violations)},{slack}"
            )
        _write_lines(args.out, lines)
    return 1 if failed else 0


def _cmd_transform(args) -> int:
    try:
        u = pipeline.load_state(args.input)
        params = GroupParams.from_exponents(len(u), args.m, args.l)
        if params.M > 2**_FORCE_LARGE_EXP and not args.force_large:
            return _fail_usage("M exceeds the 2^24 memory guard; pass --force-large")
        grid = pipeline.approximate_qft(u, params)
        ref = pipeline.reference_state(u, params)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        return _fail_usage(str(exc))
    error = pipeline.trace_error(grid, ref)
    bound = math.sqrt(2) * bounds.main_bound(params.N, params.M, params.L).main
    tv = pipeline.induced_tv(grid, ref)
    pipeline.save_state(args.out, grid.ravel())
    report = {
        "error": error,
        "bound": bound,
        "tv": tv,
        "tv_bound": bounds.tv_bound(error),
    }
    report_path = args.report or args.out + ".report.json"
    with open(report_path, "w", encoding="ascii") as fh:
        json.dump(report, fh, sort_keys=True)
        fh.write("\n")
    print(
        f"N={params.N} M=2^{args.m} L=2^{args.l} error={_full(error)} "
        f"bound={_f6(bound)} tv={_full(tv)} -> {args.out}"
    )
    return 1 if error > bound else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddqft",
        description="Approximate Fourier transform over odd cyclic groups: "
        "simulation, error bounds, and inequality verification.",
        epilog="ODDQFT_WORKERS sets the default worker count for trial batches.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="parameter advice for a target error")
    p.add_argument("--n", type=int, required=True, help="odd order N >= 13")
    p.add_argument("--epsilon", type=float, required=True, help="target error in (0, sqrt(2)]")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser("simulate", help="run seeded random-state trials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="exponent of M = 2^m")
    p.add_argument("--l", type=int, required=True, help="exponent of L = 2^l")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="per-trial CSV path")
    p.add_argument("--force-large", action="store_true", help="allow m > 24")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("table1", help="closed-form and minimal exponents, 42 rows")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("table2", help="observed errors at the desk-scale rows")
    p.add_argument("--mode", choices=("theorem", "search", "both"), default="both")
    p.add_argument("--trials", type=int, default=100, help="trials at the minimal exponents")
    p.add_argument("--search-trials", type=int, default=1000, help="trials per search candidate")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_table2)

    p = sub.add_parser("verify", help="check the error-analysis inequalities")
    p.add_argument("--lemma", action="append", default=None, help="check name (repeatable)")
    p.add_argument("--grid", default=None, help='grid spec, e.g. "N=13..51,m=auto..16,l=4..5"')
    p.add_argument("--N", type=int, default=None, help="single-point N")
    p.add_argument("--M", type=int, default=None, help="single-point M (a power of two)")
    p.add_argument("--L", type=int, default=None, help="single-point L (a power of two)")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--vectors", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="report CSV path")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("transform", help="transform a state file and report its error")
    p.add_argument("input", help="input state file (JSON)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--out", required=True, help="output grid state file")
    p.add_argument("--report", default=None, help="JSON report path (default <out>.report.json)")
    p.add_argument("--force-large", action="store_true")
    p.set_defaults(func=_cmd_transform)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    np.seterr(over="raise")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
