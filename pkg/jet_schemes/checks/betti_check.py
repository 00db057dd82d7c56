"""
Betti ranks, graded Betti polynomials and the alternating-sum reconciliation.
"""

from __future__ import annotations

import math

from jet_schemes.betti import (
    alternating_sum_check,
    betti_closed_form,
    betti_graded,
    betti_rank,
    explicit_resolution_check,
    graded_at_one,
    graded_recursion_holds,
    proj_dim,
)
from jet_schemes.checks import SuiteRecorder, run_suite


def _body(state: dict, recorder: SuiteRecorder):
    Q, T = state["qmax"], state["tmax"]
    for n in state["n_values"]:
        top = proj_dim(n) if n >= 1 else 0
        if n >= 1:
            recorder.record(top == math.ceil(2 * n / 3), f"pd R_{n}/I_{n} = {top}")
        for i in range(top + 2):
            rank = betti_rank(i, n)
            recorder.record(rank == betti_closed_form(i, n), f"b({i},{n}) closed form")
            recorder.record(graded_at_one(betti_graded(i, n)) == rank, f"h^({i},{n}) at q=t=1")
            recorder.record(graded_recursion_holds(i, n), f"h^({i},{n}) recursion")
        recorder.record(alternating_sum_check(n, Q, T), f"alternating sum n={n}")
        if n in (1, 2, 3):
            recorder.record(explicit_resolution_check(n), f"explicit resolution n={n}")


def betti_check(state: dict) -> dict:
    return run_suite("betti", _body, state)


__all__ = ["betti_check"]
