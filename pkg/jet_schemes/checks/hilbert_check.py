"""
Five-way agreement of the Hilbert series H_n.
"""

from __future__ import annotations

from jet_schemes.checks import SuiteRecorder, run_suite
from jet_schemes.exceptions import VerificationMismatch
from jet_schemes.hilbert import hilbert_recursive, htilde_check, qdegree_bound_holds, verify_methods


def _body(state: dict, recorder: SuiteRecorder):
    Q, T = state["qmax"], state["tmax"]
    oracle_window = tuple(state.get("oracle_window") or (Q, T))
    for n in state["n_values"]:
        try:
            verify_methods(
                n,
                Q,
                T,
                oracle_window=oracle_window,
                max_basis_size=state.get("max_basis_size"),
                max_slice_dim=state.get("max_slice_dim"),
            )
            recorder.record(True, f"H_{n} five-way")
        except VerificationMismatch as exc:
            recorder.record(False, f"H_{n} five-way ({exc})")

        series = hilbert_recursive(n, Q, T)
        recorder.record(series.is_nonnegative_integral() and qdegree_bound_holds(series, n), f"H_{n} coefficients")
        if n >= 3:
            recorder.record(htilde_check(n, Q, T), f"H~_{n} recursion")


def hilbert_check(state: dict) -> dict:
    return run_suite("hilbert", _body, state)


__all__ = ["hilbert_check"]
