"""
Command-line entry point.

    python -m jet_schemes.main hilbert --n 3 --method recursive --qmax 5 --tmax 3
    python -m jet_schemes.main groebner --n 12 --reduced --census
    python -m jet_schemes.main verify --n-range 0..8

Exit codes: 0 pass, 1 verification mismatch, 2 usage, 3 resource cap.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Optional, Sequence, TextIO, Tuple

from pydantic import ValidationError

from jet_schemes.betti import (
    alternating_sum_check,
    betti_closed_form,
    betti_graded_infinity,
    betti_table,
    graded_recursion_holds,
)
from jet_schemes.checks import CAP, SUITE_KEYS
from jet_schemes.concurrent_processor import BatchProcessor
from jet_schemes.config import LOG_FORMAT, LOG_LEVEL, Command, OutputFormat, RunConfig, parse_range
from jet_schemes.exceptions import ResourceCapExceeded
from jet_schemes.graph import build_graph, build_parallel_graph
from jet_schemes.groebner import buchberger
from jet_schemes.hilbert import (
    ALL_METHODS,
    HilbertMethod,
    compare_methods,
    compute,
)
from jet_schemes.jet import census, generators, recursive_gb, reduced_gb
from jet_schemes.limit import (
    Specialization,
    gb_stabilization_check,
    hilbert_infinity_bosonic,
    hilbert_infinity_fermionic,
    rr_specialize,
    stabilization_check,
)
from jet_schemes.planner import VerificationPlanner
from jet_schemes.report_generator import ReportGenerator
from jet_schemes.schemas import (
    BettiOutput,
    BettiRow,
    CensusRow,
    GroebnerOutput,
    HilbertOutput,
    LimitOutput,
    RRRow,
    SeriesModel,
    SliceRow,
    SuiteResult,
    SyzygyOutput,
    VerifyReport,
)
from jet_schemes.syzygy import generation_report

LOGGER = logging.getLogger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3


# -- argument parsing ----------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser, needs_n: bool = True):
    if needs_n:
        group = parser.add_mutually_exclusive_group()
        group.add_argument("--n", type=int, help="Number of variables")
        group.add_argument("--n-range", type=parse_range, help="Inclusive range A..B")
    parser.add_argument("--qmax", type=int, default=10)
    parser.add_argument("--tmax", type=int, default=5)
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TABLE.value)
    parser.add_argument("--out", help="Write output to this file instead of stdout")
    parser.add_argument("--max-slice-dim", type=int)
    parser.add_argument("--max-basis-size", type=int)
    parser.add_argument("--workers", type=int)
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, default=LOG_LEVEL)


def _add_oracle_window(parser: argparse.ArgumentParser):
    parser.add_argument("--oracle-q", type=int, default=15, help="q-degree window of the linear oracle")
    parser.add_argument("--oracle-t", type=int, default=6, help="t-degree window of the linear oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jet_schemes", description="Jet schemes of the double point")
    sub = parser.add_subparsers(dest="command", required=True)

    hilbert = sub.add_parser(Command.HILBERT.value, help="Bigraded Hilbert series H_n")
    _add_common(hilbert)
    hilbert.add_argument("--method", choices=[m.value for m in HilbertMethod], default=HilbertMethod.RECURSIVE.value)
    hilbert.add_argument("--verify", action="store_true", help="Compare all methods")
    _add_oracle_window(hilbert)

    groebner = sub.add_parser(Command.GROEBNER.value, help="Groebner bases of I_n")
    _add_common(groebner)
    groebner.add_argument("--reduced", action="store_true")
    groebner.add_argument("--recursive", action="store_true")
    groebner.add_argument("--census", action="store_true")

    betti = sub.add_parser(Command.BETTI.value, help="Betti numbers of R_n/I_n")
    _add_common(betti)
    betti.add_argument("--graded", action="store_true")
    betti.add_argument("--check", action="store_true")

    syzygy = sub.add_parser(Command.SYZYGY_CHECK.value, help="Syzygy generation oracle")
    _add_common(syzygy)
    syzygy.add_argument("--max-q", type=int, default=20)
    syzygy.add_argument("--max-t", type=int, default=6)
    syzygy.add_argument("--drop-nu12", action="store_true")

    limit = sub.add_parser(Command.LIMIT.value, help="The n -> infinity limit")
    _add_common(limit, needs_n=False)
    limit.add_argument("--rr", action="store_true")
    limit.add_argument("--gb-window", type=int)
    limit.add_argument("--betti", dest="betti_index", type=int)

    verify = sub.add_parser(Command.VERIFY.value, help="Full consistency suite")
    _add_common(verify)
    verify.add_argument("--max-q", type=int, default=20)
    verify.add_argument("--max-t", type=int, default=6)
    verify.add_argument("--parallel", action="store_true")
    _add_oracle_window(verify)
    return parser


_CONFIG_FIELDS = set(RunConfig.model_fields)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if k in _CONFIG_FIELDS and v is not None}
    return RunConfig(**values)


# -- commands ------------------------------------------------------------------

def _batch(config: RunConfig, func: Callable[[int], object]) -> list:
    processor = BatchProcessor(max_concurrent=config.workers)
    results = processor.process_batch(config.n_values(), func)
    LOGGER.debug("Batch timings: %s", processor.get_timing_summary())
    return results


def run_hilbert(config: RunConfig, report: ReportGenerator) -> Tuple[str, int]:
    method = HilbertMethod(config.method)

    def one(n: int) -> HilbertOutput:
        mismatch = None
        if config.verify:
            mismatch = compare_methods(
                n,
                config.qmax,
                config.tmax,
                ALL_METHODS,
                config.oracle_window(),
                config.max_basis_size,
                config.max_slice_dim,
            )
        result = compute(n, config.qmax, config.tmax, method, config.max_basis_size, config.max_slice_dim)
        return HilbertOutput(
            n=n, method=result.method.value, series=SeriesModel.from_series(result.series), mismatch=mismatch
        )

    outputs = _batch(config, one)
    code = EXIT_MISMATCH if any(o.mismatch is not None for o in outputs) else EXIT_PASS
    return report.hilbert(outputs), code


def run_groebner(config: RunConfig, report: ReportGenerator) -> Tuple[str, int]:
    def one(n: int) -> GroebnerOutput:
        if config.recursive:
            gens = recursive_gb(n).polys()
        elif config.reduced or n < 1:
            gens = reduced_gb(n, config.max_basis_size).gens
        else:
            gens = buchberger(generators(n), config.max_basis_size).gens
        rows = []
        if config.census and n >= 1:
            rows = [CensusRow(degree=k, actual=a, predicted=p) for k, (a, p) in census(n, config.max_basis_size).items()]
        return GroebnerOutput(
            n=n, reduced=config.reduced, recursive=config.recursive, gens=[str(g) for g in gens], census=rows
        )

    outputs = _batch(config, one)
    ok = all(row.actual == row.predicted for out in outputs for row in out.census)
    return report.groebner(outputs), EXIT_PASS if ok else EXIT_MISMATCH


def run_betti(config: RunConfig, report: ReportGenerator) -> Tuple[str, int]:
    def one(n: int) -> BettiOutput:
        table = betti_table(n, config.graded)
        checks = {}
        if config.check:
            top = table.projective_dimension
            checks["closed_form"] = all(table.ranks[i] == betti_closed_form(i, n) for i in table.ranks)
            checks["graded_recursion"] = all(graded_recursion_holds(i, n) for i in range(top + 2))
            checks["alternating_sum"] = alternating_sum_check(n, config.qmax, config.tmax)
            if n >= 1:
                checks["projective_dimension"] = top == -(-2 * n // 3)
        rows = [BettiRow(i=i, rank=r, graded=g) for i, r, g in table.rows()]
        return BettiOutput(n=n, projective_dimension=table.projective_dimension, rows=rows, checks=checks)

    outputs = _batch(config, one)
    ok = all(all(out.checks.values()) for out in outputs)
    return report.betti(outputs), EXIT_PASS if ok else EXIT_MISMATCH


def run_syzygy(config: RunConfig, report: ReportGenerator) -> Tuple[str, int]:
    outputs = []
    # slices already fan out over the worker pool
    for n in config.n_values():
        reports = generation_report(n, config.max_q, config.max_t, config.drop_nu12, config.max_slice_dim, config.workers)
        slices = [SliceRow(qdeg=r.qdeg, tdeg=r.tdeg, kernel_dim=r.expected, submodule_dim=r.actual) for r in reports]
        outputs.append(
            SyzygyOutput(n=n, drop_nu12=config.drop_nu12, slices=slices, passed=all(r.ok for r in reports))
        )
    ok = all(out.passed for out in outputs)
    return report.syzygy(outputs), EXIT_PASS if ok else EXIT_MISMATCH


def run_limit(config: RunConfig, report: ReportGenerator) -> Tuple[str, int]:
    Q, T = config.qmax, config.tmax
    series = hilbert_infinity_fermionic(Q, T)
    bosonic_agrees = series == hilbert_infinity_bosonic(Q, T)
    stab = stabilization_check(Q, T)
    rr_rows = []
    if config.rr:
        for which in Specialization:
            result = rr_specialize(which, Q)
            rr_rows.append(RRRow(which=which.value, match=result.match, equal=result.equal))
    gb = None
    gb_ok = True
    if config.gb_window is not None:
        gb_result = gb_stabilization_check(config.gb_window, max_basis_size=config.max_basis_size)
        gb, gb_ok = gb_result.to_dict(), gb_result.passed
    betti_inf = None
    if config.betti_index is not None:
        betti_inf = SeriesModel.from_series(betti_graded_infinity(config.betti_index, Q, T))
    out = LimitOutput(
        series=SeriesModel.from_series(series),
        threshold=stab.threshold,
        stabilized=stab.passed,
        bosonic_agrees=bosonic_agrees,
        rr=rr_rows,
        gb_window=gb,
        betti_infinity=betti_inf,
    )
    ok = bosonic_agrees and stab.passed and all(r.equal for r in rr_rows) and gb_ok
    return report.limit(out), EXIT_PASS if ok else EXIT_MISMATCH


def run_verify(config: RunConfig, report: ReportGenerator) -> Tuple[str, int]:
    planner = VerificationPlanner(config)
    plan = planner.generate_plan()
    for line in planner.explain_plan(plan):
        LOGGER.debug("%s", line)
    graph = build_parallel_graph(plan) if plan["parallel"] else build_graph(plan)
    final = graph.invoke(planner.initial_state())

    suites = {}
    for name in plan["execution_order"]:
        key = SUITE_KEYS[name]
        suites[key] = SuiteResult(**(final.get(key) or {"status": "error", "error": "not run"}))
    result = VerifyReport(
        n_range=config.n_range, passed=bool(final.get("passed")), suites=suites, first_failure=final.get("first_failure")
    )
    if result.passed:
        code = EXIT_PASS
    elif any(s.status == CAP for s in suites.values()):
        code = EXIT_CAP
    else:
        code = EXIT_MISMATCH
    return report.verify(result), code


COMMANDS = {
    Command.HILBERT: run_hilbert,
    Command.GROEBNER: run_groebner,
    Command.BETTI: run_betti,
    Command.SYZYGY_CHECK: run_syzygy,
    Command.LIMIT: run_limit,
    Command.VERIFY: run_verify,
}


def run(config: RunConfig) -> Tuple[str, int]:
    """Execute one subcommand; returns the rendered output and the exit code."""
    return COMMANDS[config.command](config, ReportGenerator(config.format))


def _emit(text: str, out: Optional[str], stream: TextIO):
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        stream.write(text)


def main(argv: Optional[Sequence[str]] = None, stream: Optional[TextIO] = None) -> int:
    stream = stream or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS

    try:
        logging.basicConfig(level=args.log_level, format=LOG_FORMAT, stream=sys.stderr)
        config = config_from_args(args)
    except (ValidationError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        text, code = run(config)
    except ResourceCapExceeded as exc:
        LOGGER.error("%s", exc)
        print(f"resource cap exceeded: {exc.cap} (limit {exc.limit})", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    _emit(text, args.out, stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
