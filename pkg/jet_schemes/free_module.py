"""
The generators f_k, the free module F_n and the map phi_n: F_n -> R_n.

The basis vector e_k of F_n carries bidegree (k - 1, 2), the bidegree of
f_k, so that phi_n preserves bidegrees.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from jet_schemes.context_cache import memoized
from jet_schemes.poly import Monomial, Polynomial

Number = Union[int, Fraction]


@memoized
def generator(k: int, n: int) -> Polynomial:
    """f_k = sum_{i=0}^{k-1} x_i x_{k-1-i} in R_n."""
    if not 1 <= k <= n:
        raise ValueError(f"f_{k} is not defined in R_{n}; need 1 <= k <= n")
    terms: Dict[Monomial, int] = {}
    for i in range(k):
        m = Monomial.variable(i, n) * Monomial.variable(k - 1 - i, n)
        terms[m] = terms.get(m, 0) + 1
    return Polynomial(n, terms)


class FreeVector:
    """Element (alpha_1, ..., alpha_n) of F_n; slot k is 1-based in the math, 0-based here."""

    __slots__ = ("n", "entries")

    def __init__(self, entries: Sequence[Polynomial]):
        entries = tuple(entries)
        n = len(entries)
        for slot, entry in enumerate(entries, start=1):
            if entry.n != n:
                raise ValueError(f"Slot {slot} lies in R_{entry.n}, expected R_{n}")
        self.n = n
        self.entries = entries

    @classmethod
    def zero(cls, n: int) -> "FreeVector":
        return cls([Polynomial.zero(n) for _ in range(n)])

    @classmethod
    def unit(cls, k: int, n: int, coeff: Optional[Polynomial] = None) -> "FreeVector":
        """coeff * e_k (coeff defaults to 1)."""
        if not 1 <= k <= n:
            raise ValueError(f"e_{k} is not a basis vector of F_{n}")
        coeff = Polynomial.constant(n) if coeff is None else coeff
        entries = [Polynomial.zero(n) for _ in range(n)]
        entries[k - 1] = coeff
        return cls(entries)

    @classmethod
    def from_slots(cls, n: int, slots: Dict[int, Polynomial]) -> "FreeVector":
        entries = [Polynomial.zero(n) for _ in range(n)]
        for k, coeff in slots.items():
            if not 1 <= k <= n:
                raise ValueError(f"Slot {k} out of range for F_{n}")
            entries[k - 1] = entries[k - 1] + coeff
        return cls(entries)

    def __getitem__(self, k: int) -> Polynomial:
        """1-based slot access."""
        if not 1 <= k <= self.n:
            raise IndexError(f"Slot {k} out of range for F_{self.n}")
        return self.entries[k - 1]

    def slots(self) -> Iterable[Tuple[int, Polynomial]]:
        """Nonzero (slot, entry) pairs."""
        return ((k, e) for k, e in enumerate(self.entries, start=1) if e)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _check(self, other: "FreeVector"):
        if self.n != other.n:
            raise ValueError(f"Free module mismatch: F_{self.n} vs F_{other.n}")

    def __add__(self, other: "FreeVector") -> "FreeVector":
        self._check(other)
        return FreeVector([a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "FreeVector") -> "FreeVector":
        self._check(other)
        return FreeVector([a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "FreeVector":
        return FreeVector([-a for a in self.entries])

    def scale(self, factor: Number) -> "FreeVector":
        return FreeVector([a.scale(factor) for a in self.entries])

    def mul(self, p: Polynomial) -> "FreeVector":
        return FreeVector([p * a for a in self.entries])

    def mul_monomial(self, m: Sequence[int]) -> "FreeVector":
        return FreeVector([a.mul_monomial(m) for a in self.entries])

    def shift(self) -> "FreeVector":
        """Module shift F_n -> F_{n+2}: two zero slots, then S applied to every entry."""
        n = self.n + 2
        return FreeVector([Polynomial.zero(n), Polynomial.zero(n)] + [a.shift(1, n) for a in self.entries])

    def extend(self, n: int) -> "FreeVector":
        """Embed F_self.n into F_n by padding with zero slots."""
        if n < self.n:
            raise ValueError(f"Cannot shrink F_{self.n} to F_{n}")
        return FreeVector([a.extend(n) for a in self.entries] + [Polynomial.zero(n)] * (n - self.n))

    def bidegree(self) -> Optional[Tuple[int, int]]:
        """Common bidegree of the nonzero slots with e_k of bidegree (k - 1, 2)."""
        degrees = set()
        for k, entry in self.slots():
            inner = entry.bidegree()
            if inner is None:
                return None
            degrees.add((inner[0] + k - 1, inner[1] + 2))
        return degrees.pop() if len(degrees) == 1 else None

    def is_bihomogeneous(self) -> bool:
        return self.is_zero() or self.bidegree() is not None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.entries) + ")"

    def __repr__(self) -> str:
        return f"FreeVector{self}"

    def to_list(self) -> List[dict]:
        return [a.to_dict() for a in self.entries]


def phi(v: FreeVector) -> Polynomial:
    """phi_n(alpha) = sum alpha_k f_k."""
    total = Polynomial.zero(v.n)
    for k, entry in v.slots():
        total = total + entry * generator(k, v.n)
    return total


__all__ = ["FreeVector", "generator", "phi"]
