"""
Planning module: which verification suites a run needs, and in what order.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List

from jet_schemes.config import Command, RunConfig

LOGGER = logging.getLogger(__name__)

# Cheap suites first so the first failure surfaces early
DEFAULT_ORDER = ["HilbertCheck", "GroebnerCheck", "BettiCheck", "SyzygyCheck", "LimitCheck"]

CHECK_DESCRIPTIONS = {
    "HilbertCheck": "Five computations of H_n agree coefficientwise",
    "GroebnerCheck": "Recursive basis, witnesses and the reduced-basis census",
    "BettiCheck": "Betti recursion, closed forms and the alternating sum",
    "SyzygyCheck": "mu_k and nu_ij generate Ker(phi_n) slice by slice",
    "LimitCheck": "Limit series, stabilization and Rogers-Ramanujan",
}

COMMAND_CHECKS = {
    Command.HILBERT: ["HilbertCheck"],
    Command.GROEBNER: ["GroebnerCheck"],
    Command.BETTI: ["BettiCheck"],
    Command.SYZYGY_CHECK: ["SyzygyCheck"],
    Command.LIMIT: ["LimitCheck"],
    Command.VERIFY: list(DEFAULT_ORDER),
}


class VerificationPlanner:
    """Turns a run config into an execution plan for the verify graph."""

    def __init__(self, config: RunConfig):
        self.config = config

    def generate_plan(self) -> Dict[str, Any]:
        """
        Returns:
            Plan dictionary with checks, execution_order and reasoning
        """
        selected = COMMAND_CHECKS[self.config.command]
        order = [name for name in DEFAULT_ORDER if name in selected]
        plan = {
            "checks": selected,
            "execution_order": order,
            "parallel": self.config.parallel,
            "reasoning": f"{self.config.command.value}: {len(order)} suite(s) over n in {self.config.n_values()}",
        }
        LOGGER.info("Plan: %s", " -> ".join(order))
        return plan

    def initial_state(self) -> Dict[str, Any]:
        """Starting VerifyState for this config."""
        cfg = self.config
        return {
            "n_values": cfg.n_values(),
            "qmax": cfg.qmax,
            "tmax": cfg.tmax,
            "oracle_window": cfg.oracle_window(),
            "syzygy_window": (cfg.max_q, cfg.max_t),
            "max_slice_dim": cfg.max_slice_dim,
            "max_basis_size": cfg.max_basis_size,
            "workers": cfg.workers,
            "hilbert": None,
            "groebner": None,
            "betti": None,
            "syzygy": None,
            "limit": None,
            "passed": None,
            "first_failure": None,
        }

    @staticmethod
    def explain_plan(plan: Dict[str, Any]) -> List[str]:
        lines = [f"Execution order: {' -> '.join(plan['execution_order'])}"]
        for name in plan["execution_order"]:
            lines.append(f"  {name}: {CHECK_DESCRIPTIONS[name]}")
        return lines


__all__ = ["VerificationPlanner", "DEFAULT_ORDER", "CHECK_DESCRIPTIONS"]
