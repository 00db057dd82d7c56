"""
Tests for exact arithmetic: q-polynomials, Gaussian binomials and
truncated bivariate series.
"""

import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from jet_schemes.arith import (
    BiSeries,
    QPolynomial,
    binom,
    format_rational,
    parse_rational,
    product_of_units,
    qbinom,
    series_ops,
)
from jet_schemes.exceptions import TruncationMismatchError

series_strategy = st.dictionaries(
    st.tuples(st.integers(0, 5), st.integers(0, 3)), st.integers(-4, 4), max_size=6
).map(lambda coeffs: BiSeries(5, 3, coeffs))


class QBinomialTests(unittest.TestCase):
    def test_small_values(self):
        self.assertEqual(qbinom(4, 2), QPolynomial({0: 1, 1: 1, 2: 2, 3: 1, 4: 1}))
        self.assertEqual(qbinom(0, 0), QPolynomial.one())
        self.assertEqual(qbinom(5, 1), QPolynomial({i: 1 for i in range(5)}))

    def test_zero_outside_range(self):
        self.assertTrue(qbinom(3, 5).is_zero())
        self.assertTrue(qbinom(-1, 0).is_zero())
        self.assertTrue(qbinom(3, -1).is_zero())

    @given(st.integers(min_value=0, max_value=12), st.integers(min_value=0, max_value=12))
    def test_symmetry(self, a, b):
        """[a, b] = [a, a - b]"""
        if b <= a:
            self.assertEqual(qbinom(a, b), qbinom(a, a - b))

    @given(st.integers(min_value=0, max_value=14), st.integers(min_value=0, max_value=14))
    def test_specializes_to_binomial(self, a, b):
        self.assertEqual(qbinom(a, b).evaluate(1), binom(a, b))

    def test_pascal_identities(self):
        for a in range(1, 21):
            for b in range(a):
                with self.subTest(a=a, b=b):
                    upper = qbinom(a + 1, b + 1)
                    self.assertEqual(qbinom(a, b) + qbinom(a, b + 1).shift(b + 1), upper)
                    self.assertEqual(qbinom(a, b).shift(a - b) + qbinom(a, b + 1), upper)

    def test_value_at_one_up_to_twenty(self):
        for a in range(21):
            for b in range(a + 1):
                self.assertEqual(qbinom(a, b).evaluate(1), binom(a, b))

    @given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
    def test_degree(self, a, b):
        if b <= a:
            self.assertEqual(qbinom(a, b).degree(), b * (a - b))


class RationalFormatTests(unittest.TestCase):
    def test_denominator_always_present(self):
        self.assertEqual(format_rational(Fraction(3)), "3/1")
        self.assertEqual(format_rational(Fraction(-2, 4)), "-1/2")
        self.assertEqual(parse_rational("5/3"), Fraction(5, 3))


class BiSeriesTests(unittest.TestCase):
    def test_geometric_series(self):
        series = BiSeries.one(4, 3).divide_by_unit(1, 1)
        expected = BiSeries(4, 3, {(k, k): 1 for k in range(4)})
        self.assertEqual(series, expected)

    def test_truncation_drops_out_of_window_terms(self):
        series = BiSeries(2, 1, {(3, 0): 1, (0, 2): 5, (1, 1): 7})
        self.assertEqual(series.coeffs, {(1, 1): Fraction(7)})

    @given(
        st.integers(min_value=0, max_value=3),
        st.integers(min_value=0, max_value=3),
        st.dictionaries(
            st.tuples(st.integers(0, 6), st.integers(0, 4)), st.integers(-5, 5), max_size=8
        ),
    )
    def test_unit_division_inverts_multiplication(self, a, b, coeffs):
        if (a, b) == (0, 0):
            return
        series = BiSeries(6, 4, coeffs)
        self.assertEqual(series.multiply_by_unit(a, b).divide_by_unit(a, b), series)
        self.assertEqual(series.divide_by_unit(a, b).multiply_by_unit(a, b), series)

    def test_zero_exponent_unit_rejected(self):
        with self.assertRaises(ValueError):
            BiSeries.one(3, 3).divide_by_unit(0, 0)

    def test_window_mismatch(self):
        with self.assertRaises(TruncationMismatchError):
            BiSeries.one(3, 3) + BiSeries.one(3, 2)

    def test_substitute_t(self):
        series = BiSeries(8, 3, {(0, 1): 1, (1, 2): 2})
        self.assertEqual(series.substitute_t(2), BiSeries(8, 3, {(2, 1): 1, (5, 2): 2}))

    def test_specialize_t(self):
        series = BiSeries(5, 3, {(0, 0): 1, (0, 1): 1, (1, 1): 1, (3, 3): 4})
        self.assertEqual(series.specialize_t(1), QPolynomial({0: 1, 1: 1, 2: 1}))
        self.assertEqual(series.specialize_t(0), QPolynomial({0: 2, 1: 1, 3: 4}))

    def test_product_and_ops(self):
        left = product_of_units(4, 2, [(0, 1), (1, 1)])
        self.assertEqual(left, BiSeries(4, 2, {(0, 0): 1, (0, 1): -1, (1, 1): -1, (1, 2): 1}))
        self.assertEqual(series_ops(left, left, "sub"), BiSeries.zero(4, 2))
        with self.assertRaises(ValueError):
            series_ops(left, left, "pow")

    def test_first_difference_order(self):
        left = BiSeries(3, 2, {(2, 0): 1, (0, 1): 1})
        right = BiSeries(3, 2, {(0, 1): 2})
        self.assertEqual(left.first_difference(right), (2, 0, Fraction(1), Fraction(0)))

    def test_dict_form(self):
        series = BiSeries(3, 2, {(1, 1): Fraction(1, 2), (0, 0): 1})
        data = series.to_dict()
        self.assertEqual(data["terms"], [[0, 0, "1/1"], [1, 1, "1/2"]])
        self.assertEqual(BiSeries.from_dict(data), series)

    @settings(max_examples=30, deadline=None)
    @given(series_strategy, series_strategy, series_strategy)
    def test_multiplication_is_associative(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)

    def test_q_binomial_theorem(self):
        """prod_{k<p} (1 - q^k t) = sum_j (-1)^j q^{j(j-1)/2} t^j [p, j]_q"""
        for p in range(0, 6):
            expected = BiSeries.zero(12, 6)
            for j in range(p + 1):
                term = BiSeries.from_qpoly(12, 6, qbinom(p, j), t_exp=j, q_shift=j * (j - 1) // 2)
                expected = expected + (term if j % 2 == 0 else -term)
            self.assertEqual(product_of_units(12, 6, [(k, 1) for k in range(p)]), expected)

    def test_restrict(self):
        series = BiSeries.one(5, 5).divide_by_unit(1, 1)
        self.assertEqual(series.restrict(2, 1), BiSeries(2, 1, {(0, 0): 1, (1, 1): 1}))
        with self.assertRaises(TruncationMismatchError):
            series.restrict(6, 1)


if __name__ == "__main__":
    unittest.main()
