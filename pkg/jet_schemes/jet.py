"""
Constructions specific to the jet schemes of the double point.

The ideal I_n of R_n = k[x_0, ..., x_{n-1}] is generated by
f_k = sum_{i<k} x_i x_{k-1-i} for k = 1..n. This module builds the shift
operators, the syzygies mu_k and nu_ij, the recursive Groebner basis G_n
with explicit f-expressions, and the predicted leading terms of the
reduced basis.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from jet_schemes.arith import binom
from jet_schemes.context_cache import memoized
from jet_schemes.free_module import FreeVector, generator, phi
from jet_schemes.groebner import GroebnerBasis, buchberger, krull_dimension, reduce_basis
from jet_schemes.poly import Monomial, Polynomial, grevlex_key

LOGGER = logging.getLogger(__name__)


def f(k: int, n: int) -> Polynomial:
    """The k-th generator of I_n."""
    return generator(k, n)


def generators(n: int) -> List[Polynomial]:
    return [generator(k, n) for k in range(1, n + 1)]


def lt_of_f(k: int, n: Optional[int] = None) -> Monomial:
    """
    Leading monomial of f_k: x_m^2 for k = 2m + 1, x_m x_{m+1} for k = 2m + 2.

    n defaults to k.
    """
    n = k if n is None else n
    if k < 1:
        raise ValueError(f"f_{k} is undefined")
    m = (k - 1) // 2
    exps = [0] * n
    if k % 2:
        if m >= n:
            raise ValueError(f"LT(f_{k}) is not in R_{n}")
        exps[m] = 2
    else:
        if m + 1 >= n:
            raise ValueError(f"LT(f_{k}) is not in R_{n}")
        exps[m] = exps[m + 1] = 1
    return Monomial(exps)


def shift_ring(p: Polynomial) -> Polynomial:
    """S: R_n -> R_{n+1}, x_i -> x_{i+1}."""
    return p.shift(1)


def shift_module(v: FreeVector) -> FreeVector:
    """S: F_n -> F_{n+2}."""
    return v.shift()


def mu(k: int, n: int) -> FreeVector:
    """The syzygy with (-2k + 3(j-1)) x_{k-j+1} in slot j for j = 1..k+1."""
    if not 0 < k < n:
        raise ValueError(f"mu_{k} is defined for 0 < k < n, got n={n}")
    slots = {}
    for j in range(1, k + 2):
        slots[j] = Polynomial.variable(k - j + 1, n).scale(-2 * k + 3 * (j - 1))
    return FreeVector.from_slots(n, slots)


def nu(i: int, j: int, n: int) -> FreeVector:
    """The Koszul syzygy f_i e_j - f_j e_i."""
    if not 1 <= i < j <= n:
        raise ValueError(f"nu_{{{i},{j}}} needs 1 <= i < j <= n, got n={n}")
    return FreeVector.from_slots(n, {j: generator(i, n), i: -generator(j, n)})


@dataclass(frozen=True)
class WitnessedPoly:
    """A polynomial of I_n together with an f-expression: poly = phi_n(witness)."""

    poly: Polynomial
    witness: FreeVector

    @property
    def n(self) -> int:
        return self.poly.n

    def is_valid(self) -> bool:
        return self.witness.n == self.poly.n and phi(self.witness) == self.poly

    def scale(self, factor) -> "WitnessedPoly":
        return WitnessedPoly(self.poly.scale(factor), self.witness.scale(factor))

    def normalized(self) -> "WitnessedPoly":
        """Primitive integral form; the witness is scaled by the same factor."""
        if not self.poly:
            return self
        return self.scale(1 / self.poly.content())

    def extend(self, n: int) -> "WitnessedPoly":
        return WitnessedPoly(self.poly.extend(n), self.witness.extend(n))

    @property
    def leading_monomial(self) -> Monomial:
        return self.poly.leading_monomial


def witnessed_generator(k: int, n: int) -> WitnessedPoly:
    return WitnessedPoly(generator(k, n), FreeVector.unit(k, n))


def tilde_shift(w: WitnessedPoly) -> WitnessedPoly:
    """Modified shift: sum S(phi_i) f_{i+2}, carrying the shifted witness."""
    shifted = w.witness.shift()
    return WitnessedPoly(phi(shifted), shifted)


def shifted_mu_image(k: int, n: int) -> Polynomial:
    """phi_{n+2}(S(mu_k)) for mu_k in F_n."""
    return phi(mu(k, n).shift())


def shifted_mu_forms(k: int) -> Tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
    """
    The image phi(S(mu_k)) in R_{k+4} next to its three closed forms:

        (2k+6) x_{k+3} f_1 + (2k+3) x_{k+2} f_2 - (k+3) x_0 f_{k+4}
        (2k+3) x_{k+2} f_2 - (k+3) x_0 S(f_{k+2})
        k x_{k+2} f_2 - (k+3) x_0 S^2(f_k)
    """
    n = k + 4
    image = phi(mu(k, k + 2).shift()).extend(n)
    x = lambda i: Polynomial.variable(i, n)  # noqa: E731
    three_term = (
        x(k + 3) * generator(1, n) * (2 * k + 6)
        + x(k + 2) * generator(2, n) * (2 * k + 3)
        - x(0) * generator(k + 4, n) * (k + 3)
    )
    middle = x(k + 2) * generator(2, n) * (2 * k + 3) - x(0) * generator(k + 2, k + 2).shift(1, n) * (k + 3)
    reduced = x(k + 2) * generator(2, n) * k - x(0) * generator(k, k).shift(2, n) * (k + 3)
    return image, three_term, middle, reduced


def shifted_nu_image(i: int, j: int, n: int) -> Tuple[Polynomial, Polynomial]:
    """phi_{n+2}(S(nu_ij)) and its closed form 2 x_0 x_{j+1} f_{i+2} - 2 x_0 x_{i+1} f_{j+2}."""
    m = n + 2
    image = phi(nu(i, j, n).shift())
    x = lambda a: Polynomial.variable(a, m)  # noqa: E731
    closed = x(0) * x(j + 1) * generator(i + 2, m) * 2 - x(0) * x(i + 1) * generator(j + 2, m) * 2
    return image, closed


def x0_shift_witness(k: int, n: int) -> FreeVector:
    """
    f-expression of x_0 S^2(f_k) in F_n:

        x_0 S^2(f_k) = (k x_{k+2} e_2 - S(mu_k)) / (k + 3)
    """
    if k < 1 or n < k + 3:
        raise ValueError(f"x_0 S^2(f_{k}) needs n >= k + 3, got n={n}")
    base = k + 3
    first = FreeVector.unit(2, base, Polynomial.variable(k + 2, base).scale(k))
    witness = (first - mu(k, k + 1).shift()).scale(Fraction(1, k + 3))
    return witness.extend(n)


def x0_shift(w: WitnessedPoly, n: int) -> WitnessedPoly:
    """x_0 S^2(p) in R_n for p in I_{n-3}, with witness sum S^2(phi_i) * (witness of x_0 S^2(f_i))."""
    x0 = Polynomial.variable(0, n)
    poly = x0 * w.poly.shift(2, n)
    witness = FreeVector.zero(n)
    for i, coeff in w.witness.slots():
        witness = witness + x0_shift_witness(i, n).mul(coeff.shift(2, n))
    return WitnessedPoly(poly, witness)


def fundamental_relation(m: int) -> Polynomial:
    """sum_{i=0}^{m} (m - 3i) x_i f_{m+1-i} in R_{m+1}; identically zero."""
    n = m + 1
    total = Polynomial.zero(n)
    for i in range(m + 1):
        total = total + Polynomial.variable(i, n) * generator(m + 1 - i, n) * (m - 3 * i)
    return total


def x1_expression_identity(m: int) -> Polynomial:
    """Shift of the fundamental relation: sum (m - 3i) x_{i+1} S(f_{m+1-i}) in R_{m+2}; identically zero."""
    n = m + 2
    total = Polynomial.zero(n)
    for i in range(m + 1):
        total = total + Polynomial.variable(i + 1, n) * generator(m + 1 - i, m + 1).shift(1, n) * (m - 3 * i)
    return total


def x1_expression_residual(m: int) -> Polynomial:
    """
    m x_1 S(f_{m+1}) + sum_{i>=1} (m - 3i) x_{i+1} f_{m+3-i} in R_{m+2}.

    Divisible by x_0: x_1 S(f_{m+1}) lies in (f_1, ..., f_{m+2}) + x_0 R.
    """
    if m < 1:
        raise ValueError(f"Need m >= 1, got {m}")
    n = m + 2
    total = Polynomial.variable(1, n) * generator(m + 1, m + 1).shift(1, n) * m
    for i in range(1, m + 1):
        total = total + Polynomial.variable(i + 1, n) * generator(m + 3 - i, n) * (m - 3 * i)
    return total


# -- recursive Groebner basis ----------------------------------------------

@dataclass
class RecursiveBasis:
    n: int
    elements: List[WitnessedPoly]

    def polys(self) -> List[Polynomial]:
        return [w.poly for w in self.elements]

    def leading_monomials(self) -> List[Monomial]:
        return [w.leading_monomial for w in self.elements]

    def invalid_witnesses(self) -> List[int]:
        return [idx for idx, w in enumerate(self.elements) if not w.is_valid()]

    def as_groebner_basis(self) -> GroebnerBasis:
        return GroebnerBasis(gens=self.polys(), n=self.n, reduced=False)

    def __len__(self) -> int:
        return len(self.elements)


def _drop_redundant(elements: List[WitnessedPoly]) -> List[WitnessedPoly]:
    """Remove elements whose leading monomial is divisible by that of another kept element."""
    order = sorted(range(len(elements)), key=lambda idx: (grevlex_key(elements[idx].leading_monomial), idx))
    kept: List[int] = []
    for idx in order:
        lm = elements[idx].leading_monomial
        if all(not elements[other].leading_monomial.divides(lm) for other in kept):
            kept.append(idx)
    keep = set(kept)
    return [w for idx, w in enumerate(elements) if idx in keep]


@memoized
def recursive_gb(n: int) -> RecursiveBasis:
    """
    G_n = x_0 S^2(G_{n-3}) + {f_1, f_2} + S~(G_{n-2}) with G_0 empty,
    G_1 = {f_1}, G_2 = {f_1, f_2}.

    Elements whose leading monomial is divisible by another leading
    monomial are dropped, so G_n is a minimal Groebner basis; all elements
    are primitive.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n <= 2:
        return RecursiveBasis(n, [witnessed_generator(k, n) for k in range(1, n + 1)])

    elements: List[WitnessedPoly] = []
    for w in recursive_gb(n - 3).elements:
        elements.append(x0_shift(w, n).normalized())
    elements.extend(witnessed_generator(k, n) for k in (1, 2))
    for w in recursive_gb(n - 2).elements:
        elements.append(tilde_shift(w).normalized())

    kept = _drop_redundant(elements)
    LOGGER.debug("G_%d: %d candidates, %d kept", n, len(elements), len(kept))
    return RecursiveBasis(n, kept)


# -- reduced basis and its leading terms -----------------------------------

@memoized
def reduced_gb(n: int, max_basis_size: Optional[int] = None) -> GroebnerBasis:
    """Reduced Groebner basis of I_n computed by Buchberger from f_1..f_n."""
    if n < 1:
        return GroebnerBasis(gens=[], n=n, reduced=True)
    return reduce_basis(buchberger(generators(n), max_basis_size=max_basis_size))


def admissible_monomials(deg: int, lo: int, hi: int, n: Optional[int] = None) -> List[Monomial]:
    """
    Squarefree monomials of degree deg in x_lo..x_hi with no two adjacent
    variables, as monomials of R_n (n defaults to hi + 1).
    """
    n = hi + 1 if n is None else n
    if deg < 0:
        return []
    if deg == 0:
        return [Monomial.one(max(n, 0))]
    found = []
    for combo in itertools.combinations(range(lo, hi + 1), deg):
        if all(b - a >= 2 for a, b in zip(combo, combo[1:])):
            exps = [0] * n
            for idx in combo:
                exps[idx] = 1
            found.append(Monomial(exps))
    found.sort(key=grevlex_key, reverse=True)
    return found


def census_prediction(n: int, k: int) -> int:
    """Predicted number of reduced basis elements of degree k."""
    if k == 2:
        return n
    if k < 2:
        return 0
    return binom((n - k + 1) // 2, k - 2)


def predicted_reduced_lt(n: int, k: int) -> List[Monomial]:
    """m * LT(f_{n+k-2}) for admissible m of degree k - 2 in x_0..x_{floor((n+k-7)/2)}."""
    if k <= 2:
        raise ValueError(f"Prediction is for degree k > 2, got {k}")
    hi = (n + k - 7) // 2
    multipliers = admissible_monomials(k - 2, 0, hi, n) if hi >= 0 else []
    if not multipliers:
        return []
    lead = lt_of_f(n + k - 2, n)
    return sorted((m * lead for m in multipliers), key=grevlex_key, reverse=True)


def census(n: int, max_basis_size: Optional[int] = None) -> Dict[int, Tuple[int, int]]:
    """Degree -> (actual count in the reduced basis, predicted count)."""
    counts = reduced_gb(n, max_basis_size).degree_counts()
    top = max(list(counts) + [2])
    return {k: (counts.get(k, 0), census_prediction(n, k)) for k in range(2, top + 1)}


def jet_dimension(n: int) -> int:
    """Krull dimension of R_n / I_n."""
    if n <= 0:
        return 0
    return krull_dimension(reduced_gb(n).leading_monomials(), n)


__all__ = [
    "f",
    "generators",
    "lt_of_f",
    "shift_ring",
    "shift_module",
    "mu",
    "nu",
    "WitnessedPoly",
    "RecursiveBasis",
    "tilde_shift",
    "x0_shift",
    "x0_shift_witness",
    "shifted_mu_image",
    "shifted_mu_forms",
    "shifted_nu_image",
    "fundamental_relation",
    "x1_expression_identity",
    "x1_expression_residual",
    "recursive_gb",
    "reduced_gb",
    "admissible_monomials",
    "census_prediction",
    "predicted_reduced_lt",
    "census",
    "jet_dimension",
]
