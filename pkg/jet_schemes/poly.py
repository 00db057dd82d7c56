"""
Sparse polynomials in x_0..x_{n-1} over the rationals.

Variable x_i has bidegree (i, 1): q-weight i and t-degree 1. Terms are
ordered by grevlex with x_0 > x_1 > ... > x_{n-1}. Arithmetic runs on
sympy's sparse ``PolyRing`` over QQ; the public surface speaks in
``Monomial`` and ``fractions.Fraction``.
"""

from __future__ import annotations

import math
from enum import IntEnum
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing

from jet_schemes.arith import format_rational, parse_rational
from jet_schemes.context_cache import memoized

Number = Union[int, Fraction]


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Monomial(tuple):
    """Exponent vector; entry i is the exponent of x_i."""

    def __new__(cls, exps: Iterable[int]):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"Negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int, power: int = 1) -> "Monomial":
        if not 0 <= i < n:
            raise ValueError(f"Variable x{i} is not in R_{n}")
        exps = [0] * n
        exps[i] = power
        return cls(exps)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        """t-degree: total degree."""
        return sum(self)

    @property
    def weight(self) -> int:
        """q-weight: sum of i * a_i."""
        return sum(i * e for i, e in enumerate(self))

    @property
    def bidegree(self) -> Tuple[int, int]:
        return (self.weight, self.degree)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self) if e)

    def _same_ring(self, other: "Monomial"):
        if len(self) != len(other):
            raise ValueError(f"Monomials live in different rings: R_{len(self)} vs R_{len(other)}")

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        self._same_ring(other)
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other: "Monomial") -> bool:
        self._same_ring(other)
        return all(a <= b for a, b in zip(self, other))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self, other))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._same_ring(other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def coprime(self, other: "Monomial") -> bool:
        self._same_ring(other)
        return not any(a and b for a, b in zip(self, other))

    def shift(self, k: int = 1, n: Optional[int] = None) -> "Monomial":
        """Image under x_i -> x_{i+k} in R_n (default R_{len + k})."""
        n = len(self) + k if n is None else n
        exps = [0] * n
        for i, e in enumerate(self):
            if e:
                if i + k >= n:
                    raise ValueError(f"x{i + k} is not in R_{n}")
                exps[i + k] = e
        return Monomial(exps)

    def extend(self, n: int) -> "Monomial":
        if n < len(self):
            if any(self[n:]):
                raise ValueError(f"{self} does not lie in R_{n}")
            return Monomial(self[:n])
        return Monomial(tuple(self) + (0,) * (n - len(self)))

    def __str__(self) -> str:
        factors = []
        for i, e in enumerate(self):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        return "*".join(factors) if factors else "1"

    def __repr__(self) -> str:
        return f"Monomial({tuple(self)})"


def grevlex_key(m: Sequence[int]) -> Tuple:
    """Sort key realizing grevlex; larger key means larger monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def grevlex_cmp(m1: Monomial, m2: Monomial) -> Ordering:
    if len(m1) != len(m2):
        raise ValueError(f"Cannot compare monomials of lengths {len(m1)} and {len(m2)}")
    k1, k2 = grevlex_key(m1), grevlex_key(m2)
    if k1 == k2:
        return Ordering.EQUAL
    return Ordering.GREATER if k1 > k2 else Ordering.LESS


@memoized
def polynomial_ring(n: int) -> PolyRing:
    """The ring R_n = QQ[x0, ..., x_{n-1}] with grevlex order."""
    if n < 1:
        raise ValueError(f"R_{n} has no variables; need n >= 1")
    return PolyRing([f"x{i}" for i in range(n)], QQ, grevlex)


def to_domain(value: Number):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_domain(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class Polynomial:
    """Element of R_n with exact rational coefficients."""

    __slots__ = ("n", "_elem")

    def __init__(self, n: int, terms: Optional[Mapping[Sequence[int], Number]] = None):
        ring = polynomial_ring(n)
        data = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != n:
                raise ValueError(f"Monomial {tuple(exps)} does not have {n} exponents")
            if coeff:
                data[tuple(exps)] = to_domain(coeff)
        self.n = n
        self._elem = ring.from_dict(data)

    @classmethod
    def wrap(cls, n: int, elem: PolyElement) -> "Polynomial":
        obj = object.__new__(cls)
        obj.n = n
        obj._elem = elem
        return obj

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls.wrap(n, polynomial_ring(n).zero)

    @classmethod
    def constant(cls, n: int, value: Number = 1) -> "Polynomial":
        return cls(n, {(0,) * n: value})

    @classmethod
    def variable(cls, i: int, n: int) -> "Polynomial":
        return cls(n, {Monomial.variable(i, n): 1})

    @classmethod
    def from_monomial(cls, m: Sequence[int], coeff: Number = 1) -> "Polynomial":
        return cls(len(m), {tuple(m): coeff})

    @property
    def elem(self) -> PolyElement:
        return self._elem

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return {Monomial(m): from_domain(c) for m, c in self._elem.items()}

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in decreasing grevlex order."""
        return [(Monomial(m), from_domain(c)) for m, c in self._elem.terms()]

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.items()]

    def coefficient(self, m: Sequence[int]) -> Fraction:
        value = self._elem.get(tuple(m))
        return from_domain(value) if value is not None else Fraction(0)

    def is_zero(self) -> bool:
        return not self._elem

    def __bool__(self) -> bool:
        return bool(self._elem)

    def __len__(self) -> int:
        return len(self._elem)

    # -- leading data -------------------------------------------------

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self._elem:
            raise ValueError("The zero polynomial has no leading term")
        m, c = self._elem.LT
        return Monomial(m), from_domain(c)

    @property
    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    @property
    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.n != other.n:
            raise ValueError(f"Ambient mismatch: R_{self.n} vs R_{other.n}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial.wrap(self.n, self._elem + other._elem)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial.wrap(self.n, self._elem - other._elem)

    def __neg__(self) -> "Polynomial":
        return Polynomial.wrap(self.n, -self._elem)

    def __mul__(self, other: Union["Polynomial", Number]) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return Polynomial.wrap(self.n, self._elem * other._elem)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor: Number) -> "Polynomial":
        if not factor:
            return Polynomial.zero(self.n)
        return Polynomial.wrap(self.n, self._elem.mul_ground(to_domain(factor)))

    def mul_monomial(self, m: Sequence[int], coeff: Number = 1) -> "Polynomial":
        if len(m) != self.n:
            raise ValueError(f"Monomial {tuple(m)} is not in R_{self.n}")
        return Polynomial.wrap(self.n, self._elem.mul_term((tuple(m), to_domain(coeff))))

    def content(self) -> Fraction:
        """Positive rational c with self / c primitive integral; sign follows the leading coefficient."""
        if not self._elem:
            return Fraction(1)
        coeffs = [from_domain(c) for c in self._elem.values()]
        num = 0
        den = 1
        for c in coeffs:
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        content = Fraction(num, den)
        return content if self.leading_coefficient > 0 else -content

    def primitive(self) -> "Polynomial":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if not self._elem:
            return self
        return self.scale(1 / self.content())

    def monic(self) -> "Polynomial":
        if not self._elem:
            return self
        return Polynomial.wrap(self.n, self._elem.monic())

    # -- ring maps ----------------------------------------------------

    def shift(self, k: int = 1, n: Optional[int] = None) -> "Polynomial":
        """Image under x_i -> x_{i+k}, landing in R_{self.n + k} unless n is given."""
        n = self.n + k if n is None else n
        return Polynomial(n, {Monomial(m).shift(k, n): from_domain(c) for m, c in self._elem.items()})

    def extend(self, n: int) -> "Polynomial":
        """The same polynomial viewed in R_n."""
        if n == self.n:
            return self
        return Polynomial(n, {Monomial(m).extend(n): from_domain(c) for m, c in self._elem.items()})

    # -- grading ------------------------------------------------------

    def bidegree(self) -> Optional[Tuple[int, int]]:
        """Common (q-weight, t-degree) of all terms, or None if not bihomogeneous or zero."""
        degrees = {Monomial(m).bidegree for m in self._elem}
        return degrees.pop() if len(degrees) == 1 else None

    def is_bihomogeneous(self) -> bool:
        return not self._elem or self.bidegree() is not None

    def divisible_by(self, m: Sequence[int]) -> bool:
        """Every term is divisible by the monomial m."""
        return all(all(a >= b for a, b in zip(exps, m)) for exps in self._elem)

    # -- comparisons and output ---------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._elem == other._elem

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._elem.items())))

    def __str__(self) -> str:
        if not self._elem:
            return "0"
        parts = []
        for m, c in self.items():
            mono = str(m)
            if mono == "1":
                text = str(c)
            elif c == 1:
                text = mono
            elif c == -1:
                text = f"-{mono}"
            else:
                text = f"{c}*{mono}"
            parts.append(text)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, {self})"

    def to_dict(self) -> dict:
        return {"n": self.n, "terms": [[list(m), format_rational(c)] for m, c in self.items()]}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Polynomial":
        return cls(int(data["n"]), {tuple(exps): parse_rational(c) for exps, c in data["terms"]})


def leading_term(p: Polynomial) -> Tuple[Monomial, Fraction]:
    return p.leading_term()


def ring_ops(p1: Polynomial, p2: Union[Polynomial, Number], op: str) -> Polynomial:
    """Apply add, sub, mul or scale."""
    if op == "scale":
        return p1.scale(p2)  # type: ignore[arg-type]
    if not isinstance(p2, Polynomial):
        raise ValueError(f"Operation {op} needs two polynomials")
    if op == "add":
        return p1 + p2
    if op == "sub":
        return p1 - p2
    if op == "mul":
        return p1 * p2
    raise ValueError(f"Unknown ring operation: {op}")


def reduce(p: Polynomial, G: Sequence[Polynomial]) -> Tuple[List[Polynomial], Polynomial]:
    """
    Multivariate division of p by the list G.

    The current leading term is reduced by the first element of G whose
    leading monomial divides it; if none does, it moves to the remainder.

    Returns:
        (quotients, remainder) with p = sum(q_i * g_i) + remainder
    """
    if not G:
        raise ValueError("Division needs at least one divisor")
    for g in G:
        p._check(g)
        if not g:
            raise ValueError("Cannot divide by the zero polynomial")
    if not p:
        return [Polynomial.zero(p.n) for _ in G], p
    quotients, remainder = p.elem.div([g.elem for g in G])
    return [Polynomial.wrap(p.n, q) for q in quotients], Polynomial.wrap(p.n, remainder)


def remainder(p: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    if not p:
        return p
    return Polynomial.wrap(p.n, p.elem.rem([g.elem for g in G]))


def s_polynomial(g1: Polynomial, g2: Polynomial) -> Polynomial:
    """(L / LT(g1)) g1 - (L / LT(g2)) g2 with L the lcm of the leading monomials."""
    if not g1 or not g2:
        raise ValueError("S-polynomial of a zero polynomial")
    g1._check(g2)
    m1, c1 = g1.leading_term()
    m2, c2 = g2.leading_term()
    lcm = m1.lcm(m2)
    return g1.mul_monomial(lcm / m1, 1 / c1) - g2.mul_monomial(lcm / m2, 1 / c2)


@memoized
def monomials_of_bidegree(n: int, qdeg: int, tdeg: int) -> Tuple[Monomial, ...]:
    """All monomials of R_n with q-weight qdeg and t-degree tdeg, in decreasing grevlex order."""
    if n < 1 or qdeg < 0 or tdeg < 0:
        return ()
    found: List[Monomial] = []
    exps = [0] * n

    def fill(var: int, q_left: int, t_left: int):
        if var == 0:
            if q_left == 0:
                exps[0] = t_left
                found.append(Monomial(exps))
                exps[0] = 0
            return
        for a in range(min(t_left, q_left // var) + 1):
            exps[var] = a
            fill(var - 1, q_left - var * a, t_left - a)
        exps[var] = 0

    fill(n - 1, qdeg, tdeg)
    found.sort(key=grevlex_key, reverse=True)
    return tuple(found)


__all__ = [
    "Monomial",
    "Ordering",
    "Polynomial",
    "grevlex_key",
    "grevlex_cmp",
    "leading_term",
    "ring_ops",
    "reduce",
    "remainder",
    "s_polynomial",
    "monomials_of_bidegree",
    "polynomial_ring",
]
