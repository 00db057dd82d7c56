"""
Slice-wise linear algebra certifying the syzygy and decomposition results.

Every check works one bidegree (qdeg, tdeg) at a time. Slices are
independent and are fanned out over a thread pool.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from jet_schemes.config import MAX_SLICE_DIM, WORKERS
from jet_schemes.free_module import FreeVector, generator, phi
from jet_schemes.hilbert import hilbert_recursive
from jet_schemes.jet import mu, nu
from jet_schemes.linalg import intersection_dim, rank, span_dim
from jet_schemes.poly import Monomial, Polynomial, monomials_of_bidegree

LOGGER = logging.getLogger(__name__)

Slice = Tuple[int, int]
SparseRow = Dict[Hashable, object]


@dataclass
class SliceReport:
    qdeg: int
    tdeg: int
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return asdict(self)


def _cap(max_dim: Optional[int]) -> int:
    return MAX_SLICE_DIM if max_dim is None else max_dim


def _domain(n: int, qdeg: int, tdeg: int) -> List[Tuple[int, Monomial]]:
    """Basis (k, m) of the slice of F_n: m e_k with m of bidegree (qdeg - k + 1, tdeg - 2)."""
    return [(k, m) for k in range(1, n + 1) for m in monomials_of_bidegree(n, qdeg - (k - 1), tdeg - 2)]


def _flatten(v: FreeVector) -> SparseRow:
    row: SparseRow = {}
    for k, entry in v.slots():
        for m, c in entry.terms.items():
            row[(k, m)] = c
    return row


def _multiples(p: Polynomial, qdeg: int, tdeg: int) -> List[SparseRow]:
    """Rows m * p for the monomials m that land p in the slice."""
    bideg = p.bidegree()
    if bideg is None:
        raise ValueError(f"{p} is not bihomogeneous")
    return [p.mul_monomial(m).terms for m in monomials_of_bidegree(p.n, qdeg - bideg[0], tdeg - bideg[1])]


def kernel_dim(n: int, qdeg: int, tdeg: int, max_dim: Optional[int] = None) -> int:
    """Dimension of the (qdeg, tdeg) slice of Ker(phi_n)."""
    domain = _domain(n, qdeg, tdeg)
    if not domain:
        return 0
    rows = [generator(k, n).mul_monomial(m).terms for k, m in domain]
    return len(domain) - rank(rows, max_dim=_cap(max_dim))


def submodule_dim(gens: Sequence[FreeVector], n: int, qdeg: int, tdeg: int, max_dim: Optional[int] = None) -> int:
    """Dimension of the (qdeg, tdeg) slice of the submodule of F_n generated by gens."""
    rows: List[SparseRow] = []
    for g in gens:
        if g.is_zero():
            continue
        bideg = g.bidegree()
        if bideg is None:
            raise ValueError(f"Generator {g} is not bihomogeneous")
        for m in monomials_of_bidegree(n, qdeg - bideg[0], tdeg - bideg[1]):
            rows.append(_flatten(g.mul_monomial(m)))
    if not rows:
        return 0
    return rank(rows, columns=_domain(n, qdeg, tdeg), max_dim=_cap(max_dim))


def syzygy_generators(n: int, drop_nu12: bool = False) -> List[FreeVector]:
    """mu_k for 1 <= k < n and nu_ij for i < j; drop_nu12 removes nu_1j and nu_2j."""
    gens = [mu(k, n) for k in range(1, n)]
    for i in range(1, n + 1):
        if drop_nu12 and i <= 2:
            continue
        gens.extend(nu(i, j, n) for j in range(i + 1, n + 1))
    return gens


def _slices(n: int, max_qdeg: int, max_tdeg: int) -> List[Slice]:
    return [
        (qdeg, tdeg)
        for tdeg in range(max_tdeg + 1)
        for qdeg in range(max_qdeg + 1)
        if qdeg <= max(n - 1, 0) * tdeg
    ]


def _fan_out(func, slices: Sequence[Slice], workers: Optional[int]) -> List[SliceReport]:
    workers = WORKERS if workers is None else workers
    if workers <= 1 or len(slices) <= 1:
        return [func(s) for s in slices]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, slices))


def generation_report(
    n: int,
    max_qdeg: int,
    max_tdeg: int,
    drop_nu12: bool = False,
    max_dim: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[SliceReport]:
    """Per-slice (kernel_dim, submodule_dim) for the mu/nu generators of Ker(phi_n)."""
    if n < 1:
        raise ValueError(f"Need n >= 1, got {n}")
    gens = syzygy_generators(n, drop_nu12)

    def one(s: Slice) -> SliceReport:
        qdeg, tdeg = s
        return SliceReport(
            qdeg, tdeg, kernel_dim(n, qdeg, tdeg, max_dim), submodule_dim(gens, n, qdeg, tdeg, max_dim)
        )

    reports = _fan_out(one, _slices(n, max_qdeg, max_tdeg), workers)
    LOGGER.info("Syzygy generation for n=%d: %d slices", n, len(reports))
    return reports


def generation_check(n: int, max_qdeg: int, max_tdeg: int, drop_nu12: bool = False, max_dim: Optional[int] = None) -> bool:
    return all(r.ok for r in generation_report(n, max_qdeg, max_tdeg, drop_nu12, max_dim))


def decomposition_report(
    n: int, max_qdeg: int, max_tdeg: int, max_dim: Optional[int] = None, workers: Optional[int] = None
) -> List[SliceReport]:
    """
    Slice dimensions of I_n intersected with x_0 R_n against the ideal
    generated by x_0 S^2(f_k) (k <= n - 3), f_1 and f_2.
    """
    if n < 3:
        raise ValueError(f"The decomposition needs n >= 3, got {n}")
    x0 = Polynomial.variable(0, n)
    right_gens = [x0 * generator(k, n - 3).shift(2, n) for k in range(1, n - 2)]
    right_gens += [generator(1, n), generator(2, n)]

    def one(s: Slice) -> SliceReport:
        qdeg, tdeg = s
        ideal_rows = [row for k in range(1, n + 1) for row in _multiples(generator(k, n), qdeg, tdeg)]
        x0_rows = _multiples(x0, qdeg, tdeg)
        left = intersection_dim(ideal_rows, x0_rows, _cap(max_dim))
        right = span_dim([row for g in right_gens for row in _multiples(g, qdeg, tdeg)], _cap(max_dim))
        return SliceReport(qdeg, tdeg, left, right)

    return _fan_out(one, _slices(n, max_qdeg, max_tdeg), workers)


def decomposition_check(n: int, max_qdeg: int, max_tdeg: int, max_dim: Optional[int] = None) -> bool:
    return all(r.ok for r in decomposition_report(n, max_qdeg, max_tdeg, max_dim))


def quotient_x0_report(
    n: int, max_qdeg: int, max_tdeg: int, max_dim: Optional[int] = None, workers: Optional[int] = None
) -> List[SliceReport]:
    """Slice dimensions of R_n / (x_0 R_n + I_n) against H_{n-2}(q, qt) / (1 - q^{n-1} t)."""
    if n < 2:
        raise ValueError(f"Need n >= 2, got {n}")
    expected = hilbert_recursive(n - 2, max_qdeg, max_tdeg).substitute_t(1).divide_by_unit(n - 1, 1)
    x0 = Polynomial.variable(0, n)

    def one(s: Slice) -> SliceReport:
        qdeg, tdeg = s
        monomials = monomials_of_bidegree(n, qdeg, tdeg)
        rows = [row for k in range(1, n + 1) for row in _multiples(generator(k, n), qdeg, tdeg)]
        rows += _multiples(x0, qdeg, tdeg)
        actual = len(monomials) - rank(rows, monomials, _cap(max_dim)) if monomials else 0
        return SliceReport(qdeg, tdeg, int(expected.coefficient(qdeg, tdeg)), actual)

    return _fan_out(one, _slices(n, max_qdeg, max_tdeg), workers)


def quotient_x0_check(n: int, max_qdeg: int, max_tdeg: int, max_dim: Optional[int] = None) -> bool:
    return all(r.ok for r in quotient_x0_report(n, max_qdeg, max_tdeg, max_dim))


def almost_syzygy_divisible(v: FreeVector) -> bool:
    """Whether phi_{n+2}(S(v)) is divisible by x_0."""
    image = phi(v.shift())
    return image.divisible_by(Monomial.variable(0, v.n + 2))


def first_failure(reports: Sequence[SliceReport]) -> Optional[SliceReport]:
    return next((r for r in reports if not r.ok), None)


__all__ = [
    "FreeVector",
    "phi",
    "SliceReport",
    "kernel_dim",
    "submodule_dim",
    "syzygy_generators",
    "generation_report",
    "generation_check",
    "decomposition_report",
    "decomposition_check",
    "quotient_x0_report",
    "quotient_x0_check",
    "almost_syzygy_divisible",
    "first_failure",
]
