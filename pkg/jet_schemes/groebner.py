"""
Buchberger's algorithm, reduced bases, the Buchberger criterion and the
bigraded Hilbert series of a monomial staircase.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from sympy.polys.monomials import monomial_divides, monomial_lcm, monomial_mul

from jet_schemes.arith import BiSeries
from jet_schemes.exceptions import ResourceCapExceeded
from jet_schemes.poly import Monomial, Polynomial, grevlex_key, s_polynomial

LOGGER = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass
class GroebnerBasis:
    """Generators of an ideal of R_n that form a Groebner basis for grevlex."""

    gens: List[Polynomial]
    n: int
    reduced: bool = False

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial for g in self.gens]

    def by_degree(self) -> Dict[int, List[Polynomial]]:
        """Generators grouped by t-degree of the leading monomial."""
        groups: Dict[int, List[Polynomial]] = {}
        for g in self.gens:
            groups.setdefault(g.leading_monomial.degree, []).append(g)
        return dict(sorted(groups.items()))

    def degree_counts(self) -> Dict[int, int]:
        return {deg: len(gens) for deg, gens in self.by_degree().items()}

    def __len__(self) -> int:
        return len(self.gens)

    def to_dict(self) -> dict:
        return {"n": self.n, "reduced": self.reduced, "gens": [str(g) for g in self.gens]}


def _update(lms: List[Tuple[int, ...]], pairs: Set[Pair], new_lm: Tuple[int, ...]) -> Set[Pair]:
    """
    Gebauer-Moeller update of the pair set when a generator with leading
    monomial new_lm is appended at index len(lms).
    """
    k = len(lms)
    kept = set()
    for i, j in pairs:
        lcm_ij = monomial_lcm(lms[i], lms[j])
        if (
            not monomial_divides(new_lm, lcm_ij)
            or lcm_ij == monomial_lcm(lms[i], new_lm)
            or lcm_ij == monomial_lcm(lms[j], new_lm)
        ):
            kept.add((i, j))

    by_lcm: Dict[Tuple[int, ...], List[int]] = {}
    for i in range(k):
        by_lcm.setdefault(monomial_lcm(lms[i], new_lm), []).append(i)

    minimal: List[Tuple[int, ...]] = []
    for lcm in sorted(by_lcm, key=grevlex_key):
        if all(not monomial_divides(other, lcm) for other in minimal):
            minimal.append(lcm)

    for lcm in minimal:
        group = by_lcm[lcm]
        if any(lcm == monomial_mul(lms[i], new_lm) for i in group):
            continue
        kept.add((min(group), k))
    return kept


def _select(lms: List[Tuple[int, ...]], pairs: Set[Pair]) -> Pair:
    """Normal strategy: smallest lcm first, ties by index."""
    return min(pairs, key=lambda p: (grevlex_key(monomial_lcm(lms[p[0]], lms[p[1]])), p))


def buchberger(gens: Sequence[Polynomial], max_basis_size: Optional[int] = None) -> GroebnerBasis:
    """
    Compute a Groebner basis of the ideal generated by gens.

    Pairs are processed in increasing lcm order. Pairs with coprime leading
    monomials and pairs covered by the chain criterion are skipped through
    the Gebauer-Moeller update. Every new generator is made primitive.

    Args:
        gens: Nonzero polynomials of a common ring
        max_basis_size: Abort once the basis grows past this size

    Returns:
        GroebnerBasis (not reduced)
    """
    if not gens:
        raise ValueError("Buchberger needs at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise ValueError(f"Generators live in different rings: R_{g.n} vs R_{n}")
        if not g:
            raise ValueError("Generators must be nonzero")

    basis: List[Polynomial] = []
    lms: List[Tuple[int, ...]] = []
    pairs: Set[Pair] = set()

    def append(p: Polynomial):
        nonlocal pairs
        if max_basis_size is not None and len(basis) >= max_basis_size:
            raise ResourceCapExceeded("max_basis_size", max_basis_size, len(basis) + 1)
        lm = tuple(p.leading_monomial)
        pairs = _update(lms, pairs, lm)
        basis.append(p)
        lms.append(lm)

    for g in gens:
        append(g.primitive())

    elems = [g.elem for g in basis]
    processed = 0
    while pairs:
        i, j = _select(lms, pairs)
        pairs.discard((i, j))
        processed += 1
        s = s_polynomial(basis[i], basis[j])
        if not s:
            continue
        r = s.elem.rem(elems)
        if r:
            new = Polynomial.wrap(n, r).primitive()
            append(new)
            elems.append(new.elem)
            LOGGER.debug("Pair (%d, %d) added generator %d of degree %d", i, j, len(basis), new.leading_monomial.degree)

    LOGGER.info("Buchberger in R_%d: %d generators after %d pairs", n, len(basis), processed)
    return GroebnerBasis(gens=basis, n=n, reduced=False)


def reduce_basis(G: GroebnerBasis) -> GroebnerBasis:
    """
    Minimalize, interreduce and normalize a Groebner basis.

    The result is monic, sorted by decreasing leading monomial and unique
    for the ideal.
    """
    ordered = sorted(G.gens, key=lambda g: grevlex_key(g.leading_monomial))
    minimal: List[Polynomial] = []
    for g in ordered:
        lm = g.leading_monomial
        if all(not h.leading_monomial.divides(lm) for h in minimal):
            minimal.append(g)

    reduced: List[Polynomial] = []
    for idx, g in enumerate(minimal):
        others = [h.elem for h in minimal[:idx] + minimal[idx + 1:]]
        elem = g.elem.rem(others) if others else g.elem
        reduced.append(Polynomial.wrap(G.n, elem).monic())
    reduced.sort(key=lambda g: grevlex_key(g.leading_monomial), reverse=True)
    return GroebnerBasis(gens=reduced, n=G.n, reduced=True)


def is_groebner(G: Sequence[Polynomial]) -> bool:
    """Buchberger criterion; pairs with coprime leading monomials are skipped."""
    gens = [g for g in G if g]
    if not gens:
        return True
    elems = [g.elem for g in gens]
    for i, j in itertools.combinations(range(len(gens)), 2):
        if gens[i].leading_monomial.coprime(gens[j].leading_monomial):
            continue
        s = s_polynomial(gens[i], gens[j])
        if s and s.elem.rem(elems):
            LOGGER.info("S-pair (%d, %d) does not reduce to zero", i, j)
            return False
    return True


# -- staircase Hilbert series --------------------------------------------

def _minimalize(gens: Sequence[Tuple[int, ...]]) -> FrozenSet[Tuple[int, ...]]:
    ordered = sorted(set(gens), key=sum)
    kept: List[Tuple[int, ...]] = []
    for g in ordered:
        if not any(monomial_divides(h, g) for h in kept):
            kept.append(g)
    return frozenset(kept)


class _Staircase:
    """Recursive variable splitting H(R/I) = H(R/(I + x_v)) + q^v t H(R/(I : x_v))."""

    def __init__(self, n: int):
        self.n = n
        self.memo: Dict[tuple, Dict[Tuple[int, int], int]] = {}

    def count(self, gens: FrozenSet[Tuple[int, ...]], free: Tuple[int, ...], qcap: int, tcap: int) -> Dict[Tuple[int, int], int]:
        if qcap < 0 or tcap < 0:
            return {}
        key = (gens, free, qcap, tcap)
        if key in self.memo:
            return self.memo[key]
        if any(not any(g) for g in gens):
            result: Dict[Tuple[int, int], int] = {}
        elif not gens:
            result = self._free(free, qcap, tcap)
        else:
            result = self._split(gens, free, qcap, tcap)
        self.memo[key] = result
        return result

    def _free(self, free: Tuple[int, ...], qcap: int, tcap: int) -> Dict[Tuple[int, int], int]:
        series = BiSeries.one(qcap, tcap)
        for v in free:
            series = series.divide_by_unit(v, 1)
        return {(i, j): int(c) for (i, j), c in series.coeffs.items()}

    def _split(self, gens, free, qcap, tcap) -> Dict[Tuple[int, int], int]:
        counts: Dict[int, int] = {}
        for g in gens:
            for v, e in enumerate(g):
                if e:
                    counts[v] = counts.get(v, 0) + 1
        v = max(counts, key=lambda idx: (counts[idx], -idx))

        # R / (I + x_v): x_v disappears
        with_v = _minimalize(g for g in gens if not g[v])
        first = self.count(with_v, tuple(u for u in free if u != v), qcap, tcap)

        # R / (I : x_v), shifted by the bidegree of x_v
        colon = _minimalize(tuple(e - 1 if (u == v and e) else e for u, e in enumerate(g)) for g in gens)
        second = self.count(colon, free, qcap - v, tcap - 1)

        result = dict(first)
        for (i, j), c in second.items():
            key = (i + v, j + 1)
            result[key] = result.get(key, 0) + c
        return result


def _inclusion_exclusion(gens: Sequence[Tuple[int, ...]], n: int, qcap: int, tcap: int) -> BiSeries:
    numerator: Dict[Tuple[int, int], int] = {}
    for size in range(len(gens) + 1):
        sign = -1 if size % 2 else 1
        for subset in itertools.combinations(gens, size):
            lcm = tuple(max(col) for col in zip(*subset)) if subset else (0,) * n
            key = (Monomial(lcm).weight, sum(lcm))
            if key[0] <= qcap and key[1] <= tcap:
                numerator[key] = numerator.get(key, 0) + sign
    series = BiSeries(qcap, tcap, numerator)
    for v in range(n):
        series = series.divide_by_unit(v, 1)
    return series


def staircase_hilbert(lead_monomials: Sequence[Sequence[int]], n: int, Q: int, T: int, method: str = "auto") -> BiSeries:
    """
    Bigraded generating function of the monomials of R_n divisible by none
    of lead_monomials, truncated at (Q, T).

    Args:
        method: "split" (recursive variable splitting), "inclusion_exclusion",
            or "auto" (inclusion-exclusion for at most 12 generators)
    """
    gens = _minimalize(tuple(m) for m in lead_monomials)
    for g in gens:
        if len(g) != n:
            raise ValueError(f"Monomial {g} is not in R_{n}")
    if method == "auto":
        method = "inclusion_exclusion" if len(gens) <= 12 else "split"
    if method == "inclusion_exclusion":
        return _inclusion_exclusion(sorted(gens, key=grevlex_key), n, Q, T)
    if method != "split":
        raise ValueError(f"Unknown staircase method: {method}")
    counts = _Staircase(n).count(gens, tuple(range(n)), Q, T)
    return BiSeries(Q, T, counts)


def krull_dimension(lead_monomials: Sequence[Sequence[int]], n: int) -> int:
    """Largest number of variables whose monomials all avoid the staircase ideal."""
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in _minimalize(tuple(m) for m in lead_monomials)]
    if any(not s for s in supports):
        return -1
    for size in range(n, -1, -1):
        for chosen in itertools.combinations(range(n), size):
            pool = set(chosen)
            if not any(s <= pool for s in supports):
                return size
    return 0


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    if not p:
        return p
    return Polynomial.wrap(p.n, p.elem.rem([g.elem for g in G.gens]))


__all__ = [
    "GroebnerBasis",
    "buchberger",
    "reduce_basis",
    "is_groebner",
    "staircase_hilbert",
    "krull_dimension",
    "normal_form",
]
