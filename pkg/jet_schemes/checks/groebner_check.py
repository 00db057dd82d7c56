"""
Recursive Groebner basis, witness validation and the reduced-basis census.
"""

from __future__ import annotations

from jet_schemes.checks import SuiteRecorder, run_suite
from jet_schemes.groebner import is_groebner, reduce_basis
from jet_schemes.jet import census, jet_dimension, predicted_reduced_lt, recursive_gb, reduced_gb


def _body(state: dict, recorder: SuiteRecorder):
    cap = state.get("max_basis_size")
    for n in state["n_values"]:
        if n < 1:
            continue
        basis = recursive_gb(n)
        recorder.record(not basis.invalid_witnesses(), f"G_{n} witnesses")
        recorder.record(is_groebner(basis.polys()), f"G_{n} Buchberger criterion")

        reduced = reduced_gb(n, cap)
        recorder.record(reduce_basis(basis.as_groebner_basis()).gens == reduced.gens, f"G_{n} generates I_{n}")

        for k, (actual, predicted) in census(n, cap).items():
            recorder.record(actual == predicted, f"census n={n} k={k}: {actual} vs {predicted}")
            if k > 2:
                lead = [g.leading_monomial for g in reduced.by_degree().get(k, [])]
                recorder.record(lead == predicted_reduced_lt(n, k), f"leading terms n={n} k={k}")

        recorder.record(jet_dimension(n) == n // 2, f"dim R_{n}/I_{n}")


def groebner_check(state: dict) -> dict:
    return run_suite("groebner", _body, state)


__all__ = ["groebner_check"]
