"""
The bigraded Hilbert series H_n(q, t) of R_n / I_n, computed five ways.

    recursive      H_n = (H_{n-2}(q, qt) + t H_{n-3}(q, q^2 t)) / (1 - q^{n-1} t)
    fermionic      sum over p of q-binomials over partial products
    bosonic        alternating sum over p over prod_{i<n} (1 - q^i t)
    staircase      standard monomials of the reduced Groebner basis
    linear_oracle  monomial count minus rank of I_n in each bidegree
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from jet_schemes.arith import BiSeries, product_of_units, qbinom
from jet_schemes.config import MAX_BASIS_SIZE, MAX_SLICE_DIM
from jet_schemes.context_cache import memoized
from jet_schemes.exceptions import VerificationMismatch
from jet_schemes.free_module import generator
from jet_schemes.groebner import staircase_hilbert
from jet_schemes.jet import reduced_gb
from jet_schemes.linalg import rank
from jet_schemes.poly import monomials_of_bidegree

LOGGER = logging.getLogger(__name__)


class HilbertMethod(str, Enum):
    RECURSIVE = "recursive"
    FERMIONIC = "fermionic"
    BOSONIC = "bosonic"
    STAIRCASE = "staircase"
    LINEAR_ORACLE = "linear_oracle"


@dataclass
class HilbertResult:
    n: int
    method: HilbertMethod
    series: BiSeries

    def to_dict(self) -> dict:
        return {"n": self.n, "method": self.method.value, "series": self.series.to_dict()}


def _check_window(n: int, Q: int, T: int):
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if Q < 0 or T < 0:
        raise ValueError(f"Truncation must be nonnegative, got ({Q}, {T})")


@memoized
def hilbert_recursive(n: int, Q: int, T: int) -> BiSeries:
    _check_window(n, Q, T)
    if n == 0:
        return BiSeries.one(Q, T)
    if n == 1:
        return BiSeries(Q, T, {(0, 0): 1, (0, 1): 1})
    if n == 2:
        return BiSeries.one(Q, T).divide_by_unit(1, 1) + BiSeries.monomial(Q, T, 0, 1)
    numerator = hilbert_recursive(n - 2, Q, T).substitute_t(1)
    numerator = numerator + hilbert_recursive(n - 3, Q, T).substitute_t(2).shift(0, 1)
    return numerator.divide_by_unit(n - 1, 1)


def hilbert_fermionic(n: int, Q: int, T: int) -> BiSeries:
    """sum_p [h+1, p]_q q^{p(p-1)} t^p / prod_{j=1}^{h} (1 - q^{n-j} t), h = floor((n-p)/2)."""
    _check_window(n, Q, T)
    total = BiSeries.zero(Q, T)
    for p in range(min(n, T) + 1):
        h = (n - p) // 2
        coeff = qbinom(h + 1, p)
        if coeff.is_zero():
            continue
        term = BiSeries.from_qpoly(Q, T, coeff, t_exp=p, q_shift=p * (p - 1))
        for j in range(1, h + 1):
            term = term.divide_by_unit(n - j, 1)
        total = total + term
    return total


def hilbert_bosonic(n: int, Q: int, T: int) -> BiSeries:
    """
    1 / prod_{i<n} (1 - q^i t) times
    sum_p (-1)^p prod_{k<p} (1 - q^k t) (q^{(5p^2-3p)/2} t^{2p} [n-2p+1, p]
                                         - q^{(5p^2+5p)/2} t^{2p+2} [n-2p-1, p]).
    """
    _check_window(n, Q, T)
    total = BiSeries.zero(Q, T)
    p = 0
    while 2 * p <= T:
        first = BiSeries.from_qpoly(Q, T, qbinom(n - 2 * p + 1, p), t_exp=2 * p, q_shift=(5 * p * p - 3 * p) // 2)
        second = BiSeries.from_qpoly(Q, T, qbinom(n - 2 * p - 1, p), t_exp=2 * p + 2, q_shift=(5 * p * p + 5 * p) // 2)
        term = (first - second) * product_of_units(Q, T, [(k, 1) for k in range(p)])
        total = total + (term if p % 2 == 0 else -term)
        p += 1
    for i in range(n):
        total = total.divide_by_unit(i, 1)
    return total


def hilbert_staircase(n: int, Q: int, T: int, max_basis_size: Optional[int] = None) -> BiSeries:
    _check_window(n, Q, T)
    if n == 0:
        return BiSeries.one(Q, T)
    cap = MAX_BASIS_SIZE if max_basis_size is None else max_basis_size
    basis = reduced_gb(n, cap)
    return staircase_hilbert(basis.leading_monomials(), n, Q, T)


def slice_dimension(n: int, qdeg: int, tdeg: int, max_dim: Optional[int] = None) -> int:
    """dim_k (R_n / I_n) in bidegree (qdeg, tdeg) by linear algebra."""
    if n == 0:
        return 1 if (qdeg, tdeg) == (0, 0) else 0
    monomials = monomials_of_bidegree(n, qdeg, tdeg)
    if not monomials:
        return 0
    rows = []
    for k in range(1, n + 1):
        fk = generator(k, n)
        for m in monomials_of_bidegree(n, qdeg - (k - 1), tdeg - 2):
            rows.append(fk.mul_monomial(m).terms)
    return len(monomials) - rank(rows, monomials, max_dim)


def hilbert_linear_oracle(n: int, max_tdeg: int, max_qdeg: int, max_dim: Optional[int] = None) -> BiSeries:
    _check_window(n, max_qdeg, max_tdeg)
    cap = MAX_SLICE_DIM if max_dim is None else max_dim
    coeffs: Dict[Tuple[int, int], int] = {}
    for j in range(max_tdeg + 1):
        for i in range(max_qdeg + 1):
            dim = slice_dimension(n, i, j, cap)
            if dim:
                coeffs[(i, j)] = dim
    return BiSeries(max_qdeg, max_tdeg, coeffs)


def hilbert_series(
    n: int,
    Q: int,
    T: int,
    method: HilbertMethod = HilbertMethod.RECURSIVE,
    max_basis_size: Optional[int] = None,
    max_slice_dim: Optional[int] = None,
) -> BiSeries:
    """Dispatch on method; the caps apply to the staircase and the linear oracle."""
    method = HilbertMethod(method)
    if method is HilbertMethod.RECURSIVE:
        return hilbert_recursive(n, Q, T)
    if method is HilbertMethod.FERMIONIC:
        return hilbert_fermionic(n, Q, T)
    if method is HilbertMethod.BOSONIC:
        return hilbert_bosonic(n, Q, T)
    if method is HilbertMethod.STAIRCASE:
        return hilbert_staircase(n, Q, T, max_basis_size)
    return hilbert_linear_oracle(n, T, Q, max_slice_dim)


def compute(
    n: int,
    Q: int,
    T: int,
    method: HilbertMethod,
    max_basis_size: Optional[int] = None,
    max_slice_dim: Optional[int] = None,
) -> HilbertResult:
    method = HilbertMethod(method)
    series = hilbert_series(n, Q, T, method, max_basis_size, max_slice_dim)
    return HilbertResult(n=n, method=method, series=series)


def htilde(n: int, Q: int, T: int) -> BiSeries:
    """H_n * prod_{i<n} (1 - q^i t)."""
    return hilbert_recursive(n, Q, T) * product_of_units(Q, T, [(i, 1) for i in range(n)])


def htilde_check(n: int, Q: int, T: int) -> bool:
    """
    H~_n = H~_{n-1} - q^{n-1} t^2 (1 - t) H~_{n-3}(q, qt).

    The factor (1 - t) is the alternating sum of the two shifted copies
    q^{n-1} t^2 and q^{n-1} t^3 in the graded Betti recursion.
    """
    if n < 3:
        raise ValueError(f"The H~ recursion starts at n = 3, got {n}")
    rhs = htilde(n - 3, Q, T).substitute_t(1).multiply_by_unit(0, 1).shift(n - 1, 2)
    return htilde(n, Q, T) == htilde(n - 1, Q, T) - rhs


def qdegree_bound_holds(series: BiSeries, n: int) -> bool:
    """No coefficient of t^j sits above q-degree (n - 1) j."""
    return all(i <= max(n - 1, 0) * j for i, j, _ in series.terms())


def compare_methods(
    n: int,
    Q: int,
    T: int,
    methods: Sequence[HilbertMethod],
    oracle_window: Optional[Tuple[int, int]] = None,
    max_basis_size: Optional[int] = None,
    max_slice_dim: Optional[int] = None,
) -> Optional[dict]:
    """
    Compare the given methods coefficientwise against the recursive series.

    The linear oracle is compared on its own window (qmax, tmax). The caps are passed to
    the staircase and the linear oracle.

    Returns:
        None when all agree, otherwise the first differing coefficient
    """
    reference = hilbert_recursive(n, Q, T)
    for method in methods:
        method = HilbertMethod(method)
        if method is HilbertMethod.RECURSIVE:
            continue
        if method is HilbertMethod.LINEAR_ORACLE:
            oq, ot = oracle_window or (Q, T)
            oq, ot = min(oq, Q), min(ot, T)
            other = hilbert_linear_oracle(n, ot, oq, max_slice_dim)
            base = reference.restrict(oq, ot)
        else:
            other = hilbert_series(n, Q, T, method, max_basis_size, max_slice_dim)
            base = reference
        diff = base.first_difference(other)
        if diff is not None:
            i, j, expected, actual = diff
            LOGGER.warning("H_%d: %s differs from recursive at q^%d t^%d", n, method.value, i, j)
            return {
                "n": n,
                "method": method.value,
                "q_deg": i,
                "t_deg": j,
                "expected": str(expected),
                "actual": str(actual),
            }
    return None


ALL_METHODS: List[HilbertMethod] = list(HilbertMethod)


def verify_methods(
    n: int,
    Q: int,
    T: int,
    methods: Sequence[HilbertMethod] = ALL_METHODS,
    oracle_window: Optional[Tuple[int, int]] = None,
    max_basis_size: Optional[int] = None,
    max_slice_dim: Optional[int] = None,
):
    """Raise VerificationMismatch at the first coefficient where a method disagrees."""
    diff = compare_methods(n, Q, T, methods, oracle_window, max_basis_size, max_slice_dim)
    if diff is not None:
        raise VerificationMismatch(
            f"H_{n} by {diff['method']}", f"q^{diff['q_deg']} t^{diff['t_deg']}", diff["expected"], diff["actual"]
        )


__all__ = [
    "HilbertMethod",
    "HilbertResult",
    "hilbert_recursive",
    "hilbert_fermionic",
    "hilbert_bosonic",
    "hilbert_staircase",
    "hilbert_linear_oracle",
    "hilbert_series",
    "slice_dimension",
    "compute",
    "htilde",
    "htilde_check",
    "qdegree_bound_holds",
    "compare_methods",
    "ALL_METHODS",
    "verify_methods",
]
