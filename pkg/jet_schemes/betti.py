"""
Betti numbers of the minimal free resolution of R_n / I_n.

Ranks come from the recursion b(i, n) = b(i, n-1) + b(i-1, n-3) + b(i-2, n-3)
and from a closed binomial sum; the (q, t)-graded versions h^(i, n) come
from the two-family q-binomial sum and from the graded recursion.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from jet_schemes.arith import BiSeries, QPolynomial, binom, qbinom
from jet_schemes.context_cache import memoized
from jet_schemes.free_module import generator
from jet_schemes.hilbert import htilde
from jet_schemes.jet import mu
from jet_schemes.poly import Polynomial

LOGGER = logging.getLogger(__name__)

# (q-exponent, t-exponent) -> integer coefficient
GradedPolynomial = Dict[Tuple[int, int], int]


def _add_into(target: GradedPolynomial, source: GradedPolynomial, q_shift: int = 0, t_shift: int = 0, tq: int = 0):
    """target += q^{q_shift} t^{t_shift} * source(q, q^tq t)."""
    for (i, j), c in source.items():
        key = (i + q_shift + tq * j, j + t_shift)
        value = target.get(key, 0) + c
        if value:
            target[key] = value
        else:
            target.pop(key, None)


def _qpoly_term(poly: QPolynomial, q_shift: int, t_exp: int) -> GradedPolynomial:
    return {(e + q_shift, t_exp): int(c) for e, c in poly.items()}


def graded_at_one(poly: GradedPolynomial) -> int:
    return sum(poly.values())


def graded_to_series(poly: GradedPolynomial, Q: int, T: int) -> BiSeries:
    return BiSeries(Q, T, poly)


def format_graded(poly: GradedPolynomial) -> str:
    """Terms in (t, q) order, e.g. "t^2 + q*t^2"."""
    if not poly:
        return "0"
    parts = []
    for (i, j), c in sorted(poly.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        factors = []
        if i:
            factors.append("q" if i == 1 else f"q^{i}")
        if j:
            factors.append("t" if j == 1 else f"t^{j}")
        mono = "*".join(factors)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


# -- ranks -------------------------------------------------------------------

_BASE_RANKS = {0: (1,), 1: (1, 1), 2: (1, 2, 1)}


@memoized
def betti_rank(i: int, n: int) -> int:
    """Rank of the i-th module in the minimal free resolution of R_n / I_n."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if i < 0:
        return 0
    if n in _BASE_RANKS:
        base = _BASE_RANKS[n]
        return base[i] if i < len(base) else 0
    return betti_rank(i, n - 1) + betti_rank(i - 1, n - 3) + betti_rank(i - 2, n - 3)


def betti_closed_form(i: int, n: int) -> int:
    """sum_p C(n-2p+1, p) C(p, i-p) + C(n-2p-1, p) C(p, i-p-1)."""
    if i < 0 or n < 0:
        raise ValueError(f"Betti indices must be nonnegative, got ({i}, {n})")
    return sum(
        binom(n - 2 * p + 1, p) * binom(p, i - p) + binom(n - 2 * p - 1, p) * binom(p, i - p - 1)
        for p in range(i + 1)
    )


def proj_dim(n: int) -> int:
    """Largest i with a nonzero Betti number; ceil(2n/3) for n >= 1."""
    if n < 1:
        raise ValueError(f"Projective dimension is taken for n >= 1, got {n}")
    top = 0
    for i in range(n + 2):
        if betti_rank(i, n):
            top = i
    return top


# -- graded ----------------------------------------------------------------

@memoized
def _betti_graded(i: int, n: int) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    total: GradedPolynomial = {}
    for p in range(i + 1):
        first = qbinom(n - 2 * p + 1, p) * qbinom(p, i - p)
        if not first.is_zero():
            exp = (5 * p * p - 3 * p + (i - p) * (i - p - 1)) // 2
            _add_into(total, _qpoly_term(first, exp, p + i))
        second = qbinom(n - 2 * p - 1, p) * qbinom(p, i - p - 1)
        if not second.is_zero():
            exp = (5 * p * p + 5 * p + (i - p - 1) * (i - p - 2)) // 2
            _add_into(total, _qpoly_term(second, exp, p + i + 1))
    return tuple(sorted(total.items()))


def betti_graded(i: int, n: int) -> GradedPolynomial:
    """
    h^(i, n) = sum_p q^{(5p^2-3p+(i-p)(i-p-1))/2} t^{p+i} [n-2p+1, p] [p, i-p]
             + q^{(5p^2+5p+(i-p-1)(i-p-2))/2} t^{p+i+1} [n-2p-1, p] [p, i-p-1]
    """
    if i < 0 or n < 0:
        raise ValueError(f"Betti indices must be nonnegative, got ({i}, {n})")
    return dict(_betti_graded(i, n))


_BASE_GRADED: Dict[int, List[GradedPolynomial]] = {
    0: [{(0, 0): 1}],
    1: [{(0, 0): 1}, {(0, 2): 1}],
    2: [{(0, 0): 1}, {(0, 2): 1, (1, 2): 1}, {(1, 3): 1}],
}


@memoized
def _betti_graded_recursive(i: int, n: int) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    if i < 0:
        return ()
    if n in _BASE_GRADED:
        base = _BASE_GRADED[n]
        return tuple(sorted(base[i].items())) if i < len(base) else ()
    total: GradedPolynomial = dict(_betti_graded_recursive(i, n - 1))
    _add_into(total, dict(_betti_graded_recursive(i - 1, n - 3)), q_shift=n - 1, t_shift=2, tq=1)
    _add_into(total, dict(_betti_graded_recursive(i - 2, n - 3)), q_shift=n - 1, t_shift=3, tq=1)
    return tuple(sorted(total.items()))


def betti_graded_recursive(i: int, n: int) -> GradedPolynomial:
    """h^(i,n) = h^(i,n-1) + q^{n-1} t^2 h^(i-1,n-3)(q,qt) + q^{n-1} t^3 h^(i-2,n-3)(q,qt)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return dict(_betti_graded_recursive(i, n))


def betti_graded_infinity(i: int, Q: int, T: int) -> BiSeries:
    """The n -> infinity limit of h^(i, n): [n-2p+1, p] and [n-2p-1, p] become 1/(q;q)_p."""
    total = BiSeries.zero(Q, T)
    for p in range(i + 1):
        first = BiSeries.from_qpoly(
            Q, T, qbinom(p, i - p), t_exp=p + i, q_shift=(5 * p * p - 3 * p + (i - p) * (i - p - 1)) // 2
        )
        second = BiSeries.from_qpoly(
            Q, T, qbinom(p, i - p - 1), t_exp=p + i + 1, q_shift=(5 * p * p + 5 * p + (i - p - 1) * (i - p - 2)) // 2
        )
        term = first + second
        for k in range(1, p + 1):
            term = term.divide_by_unit(k, 0)
        total = total + term
    return total


def graded_recursion_holds(i: int, n: int) -> bool:
    return betti_graded(i, n) == betti_graded_recursive(i, n)


def alternating_sum(n: int, Q: int, T: int) -> BiSeries:
    """sum_i (-1)^i h^(i, n) truncated at (Q, T)."""
    total = BiSeries.zero(Q, T)
    top = proj_dim(n) if n >= 1 else 0
    for i in range(top + 1):
        term = graded_to_series(betti_graded(i, n), Q, T)
        total = total + (term if i % 2 == 0 else -term)
    return total


def alternating_sum_check(n: int, Q: int, T: int) -> bool:
    """Compare the alternating Betti sum with H_n * prod_{i<n} (1 - q^i t)."""
    expected = htilde(n, Q, T)
    actual = alternating_sum(n, Q, T)
    diff = expected.first_difference(actual)
    if diff is not None:
        LOGGER.warning("Alternating Betti sum for n=%d differs at q^%d t^%d", n, diff[0], diff[1])
        return False
    return True


# -- tables ------------------------------------------------------------------

@dataclass
class BettiTable:
    n: int
    ranks: Dict[int, int]
    graded: Dict[int, GradedPolynomial] = field(default_factory=dict)

    @property
    def projective_dimension(self) -> int:
        return max((i for i, r in self.ranks.items() if r), default=0)

    def rows(self) -> List[Tuple[int, int, Optional[str]]]:
        return [(i, r, format_graded(self.graded[i]) if i in self.graded else None) for i, r in sorted(self.ranks.items())]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ranks": {str(i): r for i, r in sorted(self.ranks.items())},
            "graded": {str(i): [[a, b, c] for (a, b), c in sorted(p.items())] for i, p in sorted(self.graded.items())},
        }


def betti_table(n: int, graded: bool = False) -> BettiTable:
    top = proj_dim(n) if n >= 1 else 0
    ranks = {i: betti_rank(i, n) for i in range(top + 1)}
    polys = {i: betti_graded(i, n) for i in ranks} if graded else {}
    return BettiTable(n=n, ranks=ranks, graded=polys)


# -- explicit resolutions for small n ----------------------------------------

Matrix = List[List[Polynomial]]


def explicit_resolution(n: int) -> List[Matrix]:
    """
    Differentials of the minimal resolution of R_n / I_n for n = 1, 2, 3.

    The first matrix is the row (f_1 ... f_n); the second has the syzygies
    mu_k as columns.
    """
    if n not in (1, 2, 3):
        raise ValueError(f"Explicit resolutions are tabulated for n = 1, 2, 3, got {n}")
    first = [[generator(k, n) for k in range(1, n + 1)]]
    if n == 1:
        return [first]
    columns = [mu(k, n) for k in range(1, n)]
    second = [[col[row] for col in columns] for row in range(1, n + 1)]
    return [first, second]


def _compose(left: Matrix, right: Matrix) -> Matrix:
    n = left[0][0].n
    out = []
    for row in left:
        out_row = []
        for col in range(len(right[0])):
            total = Polynomial.zero(n)
            for idx, entry in enumerate(row):
                total = total + entry * right[idx][col]
            out_row.append(total)
        out.append(out_row)
    return out


def explicit_resolution_check(n: int) -> bool:
    """Consecutive differentials compose to zero and their sizes are the Betti ranks."""
    matrices = explicit_resolution(n)
    for idx, matrix in enumerate(matrices, start=1):
        if len(matrix[0]) != betti_rank(idx, n) or len(matrix) != betti_rank(idx - 1, n):
            return False
    for left, right in zip(matrices, matrices[1:]):
        if any(entry for row in _compose(left, right) for entry in row):
            return False
    return betti_rank(len(matrices) + 1, n) == 0


__all__ = [
    "GradedPolynomial",
    "BettiTable",
    "betti_rank",
    "betti_closed_form",
    "betti_graded",
    "betti_graded_recursive",
    "betti_graded_infinity",
    "graded_recursion_holds",
    "graded_at_one",
    "graded_to_series",
    "format_graded",
    "proj_dim",
    "alternating_sum",
    "alternating_sum_check",
    "betti_table",
    "explicit_resolution",
    "explicit_resolution_check",
]
