"""
Slice-wise certification that mu_k and nu_ij generate the syzygies.
"""

from __future__ import annotations

from jet_schemes.checks import SuiteRecorder, run_suite
from jet_schemes.jet import fundamental_relation, mu, nu, x1_expression_identity
from jet_schemes.syzygy import decomposition_report, first_failure, generation_report, phi

# largest n the slice oracle runs on by default
SYZYGY_MAX_N = 6


def _label(prefix: str, reports) -> str:
    bad = first_failure(reports)
    if bad is None:
        return prefix
    return f"{prefix} slice ({bad.qdeg}, {bad.tdeg}): {bad.expected} vs {bad.actual}"


def _body(state: dict, recorder: SuiteRecorder):
    max_q, max_t = state.get("syzygy_window") or (20, 6)
    cap = state.get("max_slice_dim")
    workers = state.get("workers")
    for n in state["n_values"]:
        if n < 1:
            continue
        vanishing = all(not phi(mu(k, n)) for k in range(1, n))
        vanishing = vanishing and all(not phi(nu(i, j, n)) for i in range(1, n + 1) for j in range(i + 1, n + 1))
        recorder.record(vanishing, f"phi_{n} kills mu and nu")
        recorder.record(not fundamental_relation(n - 1), f"fundamental relation m={n - 1}")
        recorder.record(not x1_expression_identity(n - 1), f"shifted relation m={n - 1}")
        if n > SYZYGY_MAX_N:
            continue
        reports = generation_report(n, max_q, max_t, max_dim=cap, workers=workers)
        recorder.record(first_failure(reports) is None, _label(f"Ker(phi_{n}) generation", reports))
        reports = generation_report(n, max_q, max_t, drop_nu12=True, max_dim=cap, workers=workers)
        recorder.record(first_failure(reports) is None, _label(f"Ker(phi_{n}) without nu_1j, nu_2j", reports))
        if 3 <= n <= 5:
            reports = decomposition_report(n, max_q, max_t, max_dim=cap, workers=workers)
            recorder.record(first_failure(reports) is None, _label(f"I_{n} meet x_0 R_{n}", reports))


def syzygy_check(state: dict) -> dict:
    return run_suite("syzygy", _body, state)


__all__ = ["syzygy_check", "SYZYGY_MAX_N"]
