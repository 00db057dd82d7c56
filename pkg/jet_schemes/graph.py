"""
LangGraph state and graph builders for the verification suite.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Tuple, TypedDict

from langgraph.graph import END, StateGraph

from jet_schemes.checks import PASS, SUITE_KEYS, check_registry
from jet_schemes.parallel_processor import ParallelProcessor

LOGGER = logging.getLogger(__name__)


class VerifyState(TypedDict):
    """
    Shared state across all check nodes

    Attributes:
        n_values: The n values under test, in config order
        qmax, tmax: Series truncation window
        oracle_window: Window for the linear-algebra Hilbert oracle
        syzygy_window: (max_q, max_t) for the syzygy slice oracle
        max_slice_dim, max_basis_size: Resource caps
        workers: Thread count for slice fan-out
        hilbert, groebner, betti, syzygy, limit: Per-suite results
        passed: Overall verdict, set by the aggregate node
        first_failure: First failing item in suite order
    """

    n_values: List[int]
    qmax: int
    tmax: int
    oracle_window: Tuple[int, int]
    syzygy_window: Tuple[int, int]
    max_slice_dim: int
    max_basis_size: int
    workers: int
    hilbert: Optional[Dict[str, Any]]
    groebner: Optional[Dict[str, Any]]
    betti: Optional[Dict[str, Any]]
    syzygy: Optional[Dict[str, Any]]
    limit: Optional[Dict[str, Any]]
    passed: Optional[bool]
    first_failure: Optional[str]


def _aggregate_node(order: List[str]):
    keys = [SUITE_KEYS[name] for name in order]

    def aggregate(state: VerifyState) -> Dict[str, Any]:
        first_failure = None
        passed = True
        for key in keys:
            result = state.get(key) or {}
            if result.get("status") != PASS:
                passed = False
                first_failure = first_failure or result.get("first_failure") or f"{key}: not run"
        LOGGER.info("Verification %s", "passed" if passed else f"failed: {first_failure}")
        return {"passed": passed, "first_failure": first_failure}

    return aggregate


def build_graph(plan: Dict[str, Any]):
    """
    Build the sequential verification graph.

    Args:
        plan: Plan dictionary from VerificationPlanner with 'execution_order'

    Returns:
        Compiled StateGraph
    """
    order = plan.get("execution_order", [])
    if not order:
        raise ValueError("Execution order is empty in plan")
    registry = check_registry()

    workflow = StateGraph(VerifyState)
    for name in order:
        workflow.add_node(name, registry[name])
    workflow.add_node("aggregate", _aggregate_node(order))

    workflow.set_entry_point(order[0])
    for current, following in zip(order, order[1:]):
        workflow.add_edge(current, following)
    workflow.add_edge(order[-1], "aggregate")
    workflow.add_edge("aggregate", END)
    return workflow.compile()


def build_parallel_graph(plan: Dict[str, Any], processor: Optional[ParallelProcessor] = None):
    """
    Build the verification graph with all suites in one concurrent node.

    Suite results are merged in plan order, so the verdict and the first
    failure do not depend on completion order.
    """
    order = plan.get("execution_order", [])
    if not order:
        raise ValueError("Execution order is empty in plan")
    registry = check_registry()
    processor = processor or ParallelProcessor()

    def parallel_executor(state: VerifyState) -> Dict[str, Any]:
        final = processor.run_blocking([(name, registry[name]) for name in order], dict(state), use_parallel=True)
        LOGGER.debug("Suite timings: %s", processor.get_timing_report())
        return {SUITE_KEYS[name]: final[SUITE_KEYS[name]] for name in order}

    workflow = StateGraph(VerifyState)
    workflow.add_node("parallel_executor", parallel_executor)
    workflow.add_node("aggregate", _aggregate_node(order))
    workflow.set_entry_point("parallel_executor")
    workflow.add_edge("parallel_executor", "aggregate")
    workflow.add_edge("aggregate", END)
    return workflow.compile()


__all__ = ["VerifyState", "build_graph", "build_parallel_graph"]
