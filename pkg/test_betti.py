"""
Tests for Betti ranks, graded Betti polynomials and explicit resolutions.
"""

import math
import unittest

from hypothesis import given, strategies as st

from jet_schemes.arith import BiSeries
from jet_schemes.betti import (
    alternating_sum,
    alternating_sum_check,
    betti_closed_form,
    betti_graded,
    betti_graded_infinity,
    betti_graded_recursive,
    betti_rank,
    betti_table,
    explicit_resolution,
    explicit_resolution_check,
    format_graded,
    graded_at_one,
    graded_recursion_holds,
    proj_dim,
)
from jet_schemes.hilbert import htilde


class BettiRankTests(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual([betti_rank(i, 3) for i in range(4)], [1, 3, 2, 0])
        self.assertEqual([betti_rank(i, 4) for i in range(5)], [1, 4, 4, 1, 0])
        self.assertEqual(betti_rank(2, 4), 4)
        self.assertEqual(betti_rank(-1, 4), 0)

    def test_projective_dimension(self):
        self.assertEqual(proj_dim(3), 2)
        self.assertEqual(proj_dim(6), 4)
        for n in range(1, 20):
            self.assertEqual(proj_dim(n), math.ceil(2 * n / 3))

    def test_projective_dimension_needs_positive_n(self):
        with self.assertRaises(ValueError):
            proj_dim(0)

    @given(st.integers(min_value=0, max_value=12), st.integers(min_value=0, max_value=25))
    def test_closed_form(self, i, n):
        self.assertEqual(betti_closed_form(i, n), betti_rank(i, n))

    def test_euler_characteristic_vanishes(self):
        # R_n / I_n has positive codimension, so sum (-1)^i b_i = 0
        for n in range(1, 15):
            self.assertEqual(sum((-1) ** i * betti_rank(i, n) for i in range(n + 2)), 0)


class GradedBettiTests(unittest.TestCase):
    def test_first_syzygy_module(self):
        """h^(1, n) = t^2 [n]_q"""
        for n in range(1, 9):
            self.assertEqual(betti_graded(1, n), {(k, 2): 1 for k in range(n)})

    def test_second_module_for_four_variables(self):
        self.assertEqual(betti_graded(2, 4), {(1, 3): 1, (2, 3): 1, (3, 3): 1, (5, 4): 1})

    def test_specializes_to_ranks(self):
        for n in range(0, 12):
            for i in range(0, n + 2):
                self.assertEqual(graded_at_one(betti_graded(i, n)), betti_rank(i, n))

    def test_recursion(self):
        for n in range(0, 12):
            for i in range(0, n + 2):
                with self.subTest(i=i, n=n):
                    self.assertTrue(graded_recursion_holds(i, n))
        self.assertEqual(betti_graded_recursive(-1, 5), {})

    def test_alternating_sum(self):
        for n in range(0, 9):
            with self.subTest(n=n):
                self.assertTrue(alternating_sum_check(n, 12, 6))
        self.assertEqual(alternating_sum(3, 8, 4), htilde(3, 8, 4))

    def test_limit(self):
        """h^(1, inf) = t^2 / (1 - q)"""
        expected = BiSeries.monomial(8, 4, 0, 2).divide_by_unit(1, 0)
        self.assertEqual(betti_graded_infinity(1, 8, 4), expected)
        self.assertEqual(betti_graded_infinity(0, 8, 4), BiSeries.one(8, 4))

    def test_format(self):
        self.assertEqual(format_graded(betti_graded(1, 2)), "t^2 + q*t^2")
        self.assertEqual(format_graded({(0, 0): 1}), "1")

    def test_invalid_indices(self):
        with self.assertRaises(ValueError):
            betti_graded(-1, 3)
        with self.assertRaises(ValueError):
            betti_closed_form(0, -2)


class BettiTableTests(unittest.TestCase):
    def test_table(self):
        table = betti_table(4, graded=True)
        self.assertEqual(table.ranks, {0: 1, 1: 4, 2: 4, 3: 1})
        self.assertEqual(table.projective_dimension, 3)
        rows = table.rows()
        self.assertEqual(rows[0], (0, 1, "1"))
        self.assertEqual(table.to_dict()["ranks"]["2"], 4)

    def test_table_without_grading(self):
        table = betti_table(0)
        self.assertEqual(table.ranks, {0: 1})
        self.assertEqual(table.rows(), [(0, 1, None)])


class ExplicitResolutionTests(unittest.TestCase):
    def test_small_resolutions(self):
        for n in (1, 2, 3):
            with self.subTest(n=n):
                self.assertTrue(explicit_resolution_check(n))

    def test_shapes(self):
        first, second = explicit_resolution(3)
        self.assertEqual((len(first), len(first[0])), (1, 3))
        self.assertEqual((len(second), len(second[0])), (3, 2))

    def test_only_small_n(self):
        with self.assertRaises(ValueError):
            explicit_resolution(4)


if __name__ == "__main__":
    unittest.main()
