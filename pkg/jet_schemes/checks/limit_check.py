"""
Limit series, stabilization and the Rogers-Ramanujan specializations.
"""

from __future__ import annotations

from jet_schemes.checks import SuiteRecorder, run_suite
from jet_schemes.limit import (
    Specialization,
    hilbert_infinity_bosonic,
    hilbert_infinity_fermionic,
    rr_specialize,
    stabilization_check,
)


def _body(state: dict, recorder: SuiteRecorder):
    Q, T = state["qmax"], state["tmax"]
    recorder.record(hilbert_infinity_fermionic(Q, T) == hilbert_infinity_bosonic(Q, T), "H_inf fermionic = bosonic")
    result = stabilization_check(Q, T)
    recorder.record(result.passed, f"H_n stabilizes to H_inf (threshold {result.threshold})")
    for which in Specialization:
        rr = rr_specialize(which, Q)
        recorder.record(rr.equal, f"H_inf at {which.value} = {rr.match}")


def limit_check(state: dict) -> dict:
    return run_suite("limit", _body, state)


__all__ = ["limit_check"]
