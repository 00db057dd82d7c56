"""
Exact arithmetic: rationals, polynomials in q, and truncated power series in (q, t).

All values are immutable; every operation returns a new object.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from jet_schemes.context_cache import memoized
from jet_schemes.exceptions import TruncationMismatchError

Rational = Fraction
Number = Union[int, Fraction]


def format_rational(value: Fraction) -> str:
    """Serialize a rational as "num/den" (denominator always present)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class QPolynomial:
    """Polynomial in a single variable q with rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, Number]] = None):
        cleaned: Dict[int, Fraction] = {}
        for exp, coeff in (coeffs or {}).items():
            if exp < 0:
                raise ValueError(f"Negative q-exponent {exp}")
            if coeff:
                cleaned[exp] = Fraction(coeff)
        self._coeffs = cleaned

    @classmethod
    def monomial(cls, exp: int, coeff: Number = 1) -> "QPolynomial":
        return cls({exp: coeff})

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else -1

    def coefficient(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self._coeffs.items()))

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        out = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            out[exp] = out.get(exp, 0) + coeff
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["QPolynomial", Number]) -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return QPolynomial({e: c * other for e, c in self._coeffs.items()})
        out: Dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q^k."""
        return QPolynomial({e + k: c for e, c in self._coeffs.items()})

    def truncate(self, qmax: int) -> "QPolynomial":
        return QPolynomial({e: c for e, c in self._coeffs.items() if e <= qmax})

    def evaluate(self, q: Number) -> Fraction:
        return sum((c * Fraction(q) ** e for e, c in self._coeffs.items()), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == QPolynomial({0: other})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"QPolynomial({self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for exp, coeff in sorted(self._coeffs.items()):
            parts.append(_format_term(coeff, "q", exp))
        return " + ".join(parts).replace("+ -", "- ")


def _format_term(coeff: Fraction, var: str, exp: int) -> str:
    if exp == 0:
        return str(coeff)
    power = var if exp == 1 else f"{var}^{exp}"
    if coeff == 1:
        return power
    if coeff == -1:
        return f"-{power}"
    return f"{coeff}*{power}"


@memoized
def qbinom(a: int, b: int) -> QPolynomial:
    """
    Gaussian binomial coefficient [a choose b]_q.

    Zero when b < 0, b > a, or a < 0. Built by the Pascal rule
    [a, b] = [a-1, b-1] + q^b [a-1, b].
    """
    if a < 0 or b < 0 or b > a:
        return QPolynomial()
    if b == 0 or b == a:
        return QPolynomial.one()
    return qbinom(a - 1, b - 1) + qbinom(a - 1, b).shift(b)


def binom(a: int, b: int) -> int:
    """Ordinary binomial coefficient, zero outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


Window = Tuple[int, int]


class BiSeries:
    """
    Power series in (q, t) truncated modulo (q^{qmax+1}, t^{tmax+1}).

    Coefficients are keyed by (q-exponent, t-exponent).
    """

    __slots__ = ("qmax", "tmax", "_coeffs")

    def __init__(self, qmax: int, tmax: int, coeffs: Optional[Mapping[Tuple[int, int], Number]] = None):
        if qmax < 0 or tmax < 0:
            raise ValueError(f"Truncation orders must be nonnegative, got ({qmax}, {tmax})")
        self.qmax = qmax
        self.tmax = tmax
        cleaned: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), coeff in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"Negative exponent in term q^{i} t^{j}")
            if i <= qmax and j <= tmax and coeff:
                cleaned[(i, j)] = Fraction(coeff)
        self._coeffs = cleaned

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, qmax: int, tmax: int) -> "BiSeries":
        return cls(qmax, tmax)

    @classmethod
    def one(cls, qmax: int, tmax: int) -> "BiSeries":
        return cls(qmax, tmax, {(0, 0): 1})

    @classmethod
    def monomial(cls, qmax: int, tmax: int, i: int, j: int, coeff: Number = 1) -> "BiSeries":
        return cls(qmax, tmax, {(i, j): coeff})

    @classmethod
    def from_qpoly(cls, qmax: int, tmax: int, poly: QPolynomial, t_exp: int = 0, q_shift: int = 0) -> "BiSeries":
        """Embed q^{q_shift} t^{t_exp} * poly(q)."""
        return cls(qmax, tmax, {(e + q_shift, t_exp): c for e, c in poly.items()})

    # -- access -------------------------------------------------------

    @property
    def window(self) -> Window:
        return (self.qmax, self.tmax)

    @property
    def coeffs(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._coeffs)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._coeffs.get((i, j), Fraction(0))

    def terms(self) -> List[Tuple[int, int, Fraction]]:
        """Nonzero terms sorted by (t-exponent, q-exponent)."""
        return [(i, j, c) for (i, j), c in sorted(self._coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]))]

    def t_slice(self, j: int) -> QPolynomial:
        """Coefficient of t^j as a polynomial in q."""
        return QPolynomial({i: c for (i, jj), c in self._coeffs.items() if jj == j})

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_nonnegative_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self._coeffs.values())

    def evaluate(self, q: Number, t: Number) -> Fraction:
        """Evaluate the stored terms; exact only when the series is a polynomial inside its window."""
        q, t = Fraction(q), Fraction(t)
        return sum((c * q**i * t**j for (i, j), c in self._coeffs.items()), Fraction(0))

    def specialize_t(self, k: int) -> QPolynomial:
        """
        Substitute t = q^k and return the q-polynomial truncated at qmax.

        The caller is responsible for the window being large enough in t for
        the result to be exact up to q^qmax.
        """
        out: Dict[int, Fraction] = {}
        for (i, j), c in self._coeffs.items():
            e = i + k * j
            if e <= self.qmax:
                out[e] = out.get(e, 0) + c
        return QPolynomial(out)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "BiSeries"):
        if self.window != other.window:
            raise TruncationMismatchError(self.window, other.window)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        out = dict(self._coeffs)
        for key, coeff in other._coeffs.items():
            out[key] = out.get(key, 0) + coeff
        return BiSeries(self.qmax, self.tmax, out)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.qmax, self.tmax, {k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __mul__(self, other: Union["BiSeries", Number]) -> "BiSeries":
        if not isinstance(other, BiSeries):
            return self.scale(other)
        self._check(other)
        out: Dict[Tuple[int, int], Fraction] = {}
        qmax, tmax = self.qmax, self.tmax
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i <= qmax and j <= tmax:
                    out[(i, j)] = out.get((i, j), 0) + c1 * c2
        return BiSeries(qmax, tmax, out)

    __rmul__ = __mul__

    def scale(self, factor: Number) -> "BiSeries":
        return BiSeries(self.qmax, self.tmax, {k: c * factor for k, c in self._coeffs.items()})

    def shift(self, a: int, b: int) -> "BiSeries":
        """Multiply by q^a t^b."""
        return BiSeries(self.qmax, self.tmax, {(i + a, j + b): c for (i, j), c in self._coeffs.items()})

    def op(self, other: "BiSeries", name: str) -> "BiSeries":
        """Apply a named ring operation: add, sub or mul."""
        if name == "add":
            return self + other
        if name == "sub":
            return self - other
        if name == "mul":
            return self * other
        raise ValueError(f"Unknown series operation: {name}")

    def divide_by_unit(self, a: int, b: int) -> "BiSeries":
        """
        Divide by 1 - q^a t^b (multiply by the geometric series in q^a t^b).

        Requires (a, b) != (0, 0) so that the divisor is a unit.
        """
        if a < 0 or b < 0 or (a == 0 and b == 0):
            raise ValueError(f"1 - q^{a} t^{b} is not a unit of the power series ring")
        out: Dict[Tuple[int, int], Fraction] = {}
        # (i - a, j - b) precedes (i, j) in (j, i) order
        for j in range(self.tmax + 1):
            for i in range(self.qmax + 1):
                value = self._coeffs.get((i, j), 0)
                if i >= a and j >= b:
                    value = value + out.get((i - a, j - b), 0)
                if value:
                    out[(i, j)] = value
        return BiSeries(self.qmax, self.tmax, out)

    def multiply_by_unit(self, a: int, b: int) -> "BiSeries":
        """Multiply by 1 - q^a t^b."""
        return self - self.shift(a, b)

    def substitute_t(self, k: int) -> "BiSeries":
        """Replace t by q^k t."""
        if k < 0:
            raise ValueError(f"Substitution exponent must be nonnegative, got {k}")
        return BiSeries(self.qmax, self.tmax, {(i + k * j, j): c for (i, j), c in self._coeffs.items()})

    def restrict(self, qmax: int, tmax: int) -> "BiSeries":
        """Re-truncate to a smaller window."""
        if qmax > self.qmax or tmax > self.tmax:
            raise TruncationMismatchError(self.window, (qmax, tmax))
        return BiSeries(qmax, tmax, self._coeffs)

    def first_difference(self, other: "BiSeries") -> Optional[Tuple[int, int, Fraction, Fraction]]:
        """First (i, j, mine, theirs) in (t, q) order where the coefficients differ."""
        self._check(other)
        for j in range(self.tmax + 1):
            for i in range(self.qmax + 1):
                mine, theirs = self.coefficient(i, j), other.coefficient(i, j)
                if mine != theirs:
                    return (i, j, mine, theirs)
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.window == other.window and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.window, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"BiSeries(qmax={self.qmax}, tmax={self.tmax}, terms={len(self._coeffs)})"

    # -- serialization -----------------------------------------------

    def to_dict(self) -> dict:
        return {
            "qmax": self.qmax,
            "tmax": self.tmax,
            "terms": [[i, j, format_rational(c)] for i, j, c in self.terms()],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "BiSeries":
        coeffs = {(int(i), int(j)): parse_rational(c) for i, j, c in data["terms"]}
        return cls(int(data["qmax"]), int(data["tmax"]), coeffs)

    def to_table(self) -> str:
        """Plain-text table: rows are t-degrees, columns are q-degrees."""
        cells = [[_cell(self.coefficient(i, j)) for i in range(self.qmax + 1)] for j in range(self.tmax + 1)]
        width = max([len(c) for row in cells for c in row] + [len(str(self.qmax))])
        header = "t\\q " + " ".join(str(i).rjust(width) for i in range(self.qmax + 1))
        lines = [header]
        for j, row in enumerate(cells):
            lines.append(f"{str(j).rjust(3)} " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def _cell(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def series_ops(s1: BiSeries, s2: BiSeries, op: str) -> BiSeries:
    return s1.op(s2, op)


def divide_by_unit(s: BiSeries, a: int, b: int) -> BiSeries:
    return s.divide_by_unit(a, b)


def substitute_t(s: BiSeries, k: int) -> BiSeries:
    return s.substitute_t(k)


def product_of_units(qmax: int, tmax: int, factors: Iterable[Tuple[int, int]]) -> BiSeries:
    """The polynomial prod (1 - q^a t^b) over the given exponent pairs, truncated."""
    result = BiSeries.one(qmax, tmax)
    for a, b in factors:
        result = result.multiply_by_unit(a, b)
    return result


__all__ = [
    "Rational",
    "QPolynomial",
    "BiSeries",
    "qbinom",
    "binom",
    "series_ops",
    "divide_by_unit",
    "substitute_t",
    "product_of_units",
    "format_rational",
    "parse_rational",
]
