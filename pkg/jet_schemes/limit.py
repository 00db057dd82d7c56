"""
The n -> infinity limit of the Hilbert series and of the Groebner basis.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from jet_schemes.arith import BiSeries, QPolynomial, product_of_units
from jet_schemes.free_module import generator
from jet_schemes.hilbert import hilbert_recursive
from jet_schemes.jet import generators, lt_of_f, reduced_gb
from jet_schemes.poly import s_polynomial

LOGGER = logging.getLogger(__name__)


class LimitSource(str, Enum):
    FERMIONIC = "fermionic_inf"
    BOSONIC = "bosonic_inf"
    STABILIZED = "stabilized"


@dataclass
class LimitSeries:
    series: BiSeries
    source: LimitSource

    def to_dict(self) -> dict:
        return {"source": self.source.value, "series": self.series.to_dict()}


def hilbert_infinity_fermionic(Q: int, T: int) -> BiSeries:
    """sum_p q^{p(p-1)} t^p / (q; q)_p."""
    total = BiSeries.zero(Q, T)
    for p in range(T + 1):
        if p * (p - 1) > Q:
            break
        term = BiSeries.monomial(Q, T, p * (p - 1), p)
        for k in range(1, p + 1):
            term = term.divide_by_unit(k, 0)
        total = total + term
    return total


def hilbert_infinity_bosonic(Q: int, T: int) -> BiSeries:
    """
    1 / prod_{i>=0} (1 - q^i t) times
    sum_p (-1)^p (q^{(5p^2-3p)/2} t^{2p} - q^{(5p^2+5p)/2} t^{2p+2}) prod_{k<p} (1 - q^k t) / (1 - q^{k+1}).
    """
    total = BiSeries.zero(Q, T)
    p = 0
    while 2 * p <= T:
        term = BiSeries(Q, T, {((5 * p * p - 3 * p) // 2, 2 * p): 1, ((5 * p * p + 5 * p) // 2, 2 * p + 2): -1})
        term = term * product_of_units(Q, T, [(k, 1) for k in range(p)])
        for k in range(1, p + 1):
            term = term.divide_by_unit(k, 0)
        total = total + (term if p % 2 == 0 else -term)
        p += 1
    # factors with i > Q only reach beyond the window
    for i in range(Q + 1):
        total = total.divide_by_unit(i, 1)
    return total


def limit_series(Q: int, T: int, source: LimitSource = LimitSource.FERMIONIC) -> LimitSeries:
    source = LimitSource(source)
    if source is LimitSource.BOSONIC:
        return LimitSeries(hilbert_infinity_bosonic(Q, T), source)
    if source is LimitSource.STABILIZED:
        result = find_stabilization(Q, T)
        if result.threshold is None:
            raise ValueError(f"H_n did not stabilize on ({Q}, {T}) by n = {result.searched_to}")
        return LimitSeries(hilbert_recursive(result.threshold, Q, T), source)
    return LimitSeries(hilbert_infinity_fermionic(Q, T), source)


# -- stabilization -------------------------------------------------------------

@dataclass
class StabilizationResult:
    Q: int
    T: int
    threshold: Optional[int]
    searched_to: int
    matches_limit: bool = False

    @property
    def passed(self) -> bool:
        return self.threshold is not None and self.matches_limit

    def to_dict(self) -> dict:
        return {
            "qmax": self.Q,
            "tmax": self.T,
            "threshold": self.threshold,
            "searched_to": self.searched_to,
            "matches_limit": self.matches_limit,
        }


def find_stabilization(Q: int, T: int, max_n: Optional[int] = None) -> StabilizationResult:
    """
    Smallest n with H_n = H_{n+1} = H_{n+2} on the window.

    The threshold rests on those two consecutive equalities only; later n
    are not rechecked. stabilization_check compares H_threshold with the
    limit series. max_n defaults to 2Q + T + 10.
    """
    limit = 2 * Q + T + 10 if max_n is None else max_n
    previous = hilbert_recursive(0, Q, T)
    for n in range(1, limit + 1):
        current = hilbert_recursive(n, Q, T)
        if current == previous and hilbert_recursive(n + 1, Q, T) == current:
            LOGGER.info("H_n stabilizes on (%d, %d) from n = %d", Q, T, n - 1)
            return StabilizationResult(Q, T, n - 1, n + 1)
        previous = current
    LOGGER.warning("H_n did not stabilize on (%d, %d) by n = %d", Q, T, limit)
    return StabilizationResult(Q, T, None, limit)


def stabilization_check(Q: int, T: int, max_n: Optional[int] = None) -> StabilizationResult:
    result = find_stabilization(Q, T, max_n)
    if result.threshold is not None:
        result.matches_limit = hilbert_recursive(result.threshold, Q, T) == hilbert_infinity_fermionic(Q, T)
    return result


# -- Rogers-Ramanujan ------------------------------------------------------------

class Specialization(str, Enum):
    T_ONE = "t=1"
    T_Q = "t=q"
    T_Q2 = "t=q^2"

    @property
    def exponent(self) -> int:
        return {"t=1": 0, "t=q": 1, "t=q^2": 2}[self.value]


def rr_product(residues: List[int], Q: int) -> QPolynomial:
    """prod over m >= 1 with m mod 5 in residues of 1 / (1 - q^m), truncated at q^Q."""
    series = BiSeries.one(Q, 0)
    for m in range(1, Q + 1):
        if m % 5 in residues:
            series = series.divide_by_unit(m, 0)
    return series.t_slice(0)


def rr_candidates(Q: int) -> Dict[str, QPolynomial]:
    first = rr_product([1, 4], Q)
    second = rr_product([2, 3], Q)
    return {"G": first, "H": second, "G+H": first + second}


def _t_window(k: int, Q: int) -> int:
    if k == 0:
        # t^p enters with q^{p(p-1)}
        return (1 + math.isqrt(1 + 4 * Q)) // 2 + 1
    return Q // k


@dataclass
class RRResult:
    which: Specialization
    lhs: QPolynomial
    rhs: Optional[QPolynomial]
    match: Optional[str]

    @property
    def equal(self) -> bool:
        return self.match is not None

    def to_dict(self) -> dict:
        return {
            "which": self.which.value,
            "lhs": str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "match": self.match,
            "equal": self.equal,
        }


def rr_specialize(which: Specialization, Q: int) -> RRResult:
    """
    Specialize H_infinity at t = q^k and find the product it expands to.

    The candidates are G = prod 1/((1-q^{5k+1})(1-q^{5k+4})),
    H = prod 1/((1-q^{5k+2})(1-q^{5k+3})) and their sum.
    """
    which = Specialization(which)
    k = which.exponent
    lhs = hilbert_infinity_fermionic(Q, _t_window(k, Q)).specialize_t(k)
    for name, rhs in rr_candidates(Q).items():
        if lhs == rhs:
            LOGGER.info("H_inf at %s matches %s to order %d", which.value, name, Q)
            return RRResult(which, lhs, rhs, name)
    return RRResult(which, lhs, None, None)


# -- Groebner basis at infinity --------------------------------------------------

@dataclass
class GBStabilizationResult:
    max_qweight: int
    n_found: Optional[int]
    pair_rings: Dict[int, Optional[int]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.n_found is not None and all(v is not None for v in self.pair_rings.values())

    def to_dict(self) -> dict:
        return {
            "max_qweight": self.max_qweight,
            "n_found": self.n_found,
            "pair_rings": {str(i): v for i, v in self.pair_rings.items()},
            "passed": self.passed,
        }


def extra_leading_weights(n: int, max_basis_size: Optional[int] = None) -> List[int]:
    """q-weights of the reduced-basis leading monomials of I_n that are not LT(f_k)."""
    plain = {lt_of_f(k, n) for k in range(1, n + 1)}
    return sorted(m.weight for m in reduced_gb(n, max_basis_size).leading_monomials() if m not in plain)


def window_cut_by_generators(n: int, max_qweight: int, max_basis_size: Optional[int] = None) -> bool:
    return all(w > max_qweight for w in extra_leading_weights(n, max_basis_size))


def s_pair_ring(i: int, max_n: Optional[int] = None) -> Optional[int]:
    """Smallest N > i such that S(f_i, f_{i+1}) reduces to zero modulo f_1..f_N in R_N."""
    top = 2 * i + 4 if max_n is None else max_n
    for N in range(i + 1, top + 1):
        s = s_polynomial(generator(i, N), generator(i + 1, N))
        if not s or not s.elem.rem([g.elem for g in generators(N)]):
            return N
    return None


def gb_stabilization_check(
    max_qweight: int, max_pair: int = 8, max_n: Optional[int] = None, max_basis_size: Optional[int] = None
) -> GBStabilizationResult:
    """
    Find the smallest n such that for every n..max_n the reduced basis has
    no extra leading monomial of weight <= max_qweight, and the ring size at which
    each S(f_i, f_{i+1}) with i <= max_pair reduces to zero.
    """
    limit = max_qweight + 4 if max_n is None else max_n
    found = None
    for n in range(limit, 0, -1):
        if not window_cut_by_generators(n, max_qweight, max_basis_size):
            break
        found = n
    pairs = {i: s_pair_ring(i) for i in range(1, max_pair + 1)}
    LOGGER.info("Window %d cut out by f_k from n = %s", max_qweight, found)
    return GBStabilizationResult(max_qweight, found, pairs)


__all__ = [
    "LimitSource",
    "LimitSeries",
    "hilbert_infinity_fermionic",
    "hilbert_infinity_bosonic",
    "limit_series",
    "StabilizationResult",
    "find_stabilization",
    "stabilization_check",
    "Specialization",
    "rr_product",
    "rr_candidates",
    "RRResult",
    "rr_specialize",
    "GBStabilizationResult",
    "extra_leading_weights",
    "window_cut_by_generators",
    "s_pair_ring",
    "gb_stabilization_check",
]
