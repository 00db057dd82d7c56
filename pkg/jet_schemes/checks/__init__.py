"""
Verification suites run by the `verify` graph.

Each suite is a node: it reads the shared VerifyState and returns the
update for its own key, a dict shaped like schemas.SuiteResult.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional

from jet_schemes.exceptions import ResourceCapExceeded

LOGGER = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
ERROR = "error"
CAP = "cap"


class SuiteRecorder:
    """Collects per-item outcomes of one suite and keeps the first failure."""

    def __init__(self, name: str):
        self.name = name
        self.details: List[str] = []
        self.first_failure: Optional[str] = None

    def record(self, ok: bool, label: str):
        if ok:
            self.details.append(f"{label}: ok")
            return
        self.details.append(f"{label}: FAILED")
        if self.first_failure is None:
            self.first_failure = f"{self.name}: {label}"
            LOGGER.warning("First failure in %s: %s", self.name, label)

    def result(self) -> dict:
        status = PASS if self.first_failure is None else FAIL
        return {"status": status, "details": self.details, "first_failure": self.first_failure, "error": None}


def run_suite(name: str, body: Callable[[dict, SuiteRecorder], None], state: dict) -> dict:
    """Run body against a fresh recorder; exceptions become error or cap results."""
    recorder = SuiteRecorder(name)
    try:
        body(state, recorder)
    except ResourceCapExceeded as exc:
        LOGGER.warning("Suite %s hit %s", name, exc)
        return {name: {"status": CAP, "details": recorder.details, "first_failure": f"{name}: {exc}", "error": str(exc)}}
    except Exception as exc:  # noqa: BLE001
        LOGGER.exception("Suite %s raised", name)
        return {name: {"status": ERROR, "details": recorder.details, "first_failure": f"{name}: {exc}", "error": str(exc)}}
    return {name: recorder.result()}


def check_registry() -> Dict[str, Callable[[dict], dict]]:
    from jet_schemes.checks.betti_check import betti_check
    from jet_schemes.checks.groebner_check import groebner_check
    from jet_schemes.checks.hilbert_check import hilbert_check
    from jet_schemes.checks.limit_check import limit_check
    from jet_schemes.checks.syzygy_check import syzygy_check

    return {
        "HilbertCheck": hilbert_check,
        "GroebnerCheck": groebner_check,
        "BettiCheck": betti_check,
        "SyzygyCheck": syzygy_check,
        "LimitCheck": limit_check,
    }


# state key written by each check node
SUITE_KEYS = {
    "HilbertCheck": "hilbert",
    "GroebnerCheck": "groebner",
    "BettiCheck": "betti",
    "SyzygyCheck": "syzygy",
    "LimitCheck": "limit",
}

__all__ = ["PASS", "FAIL", "ERROR", "CAP", "SuiteRecorder", "run_suite", "check_registry", "SUITE_KEYS"]
