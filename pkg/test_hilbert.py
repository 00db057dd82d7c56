"""
Tests for the five computations of H_n and the H~ recursion.
"""

import unittest
from unittest import mock

import pytest
from hypothesis import given, settings, strategies as st

from jet_schemes.arith import BiSeries
from jet_schemes.exceptions import ResourceCapExceeded, VerificationMismatch
from jet_schemes.hilbert import (
    ALL_METHODS,
    HilbertMethod,
    compare_methods,
    compute,
    hilbert_bosonic,
    hilbert_fermionic,
    hilbert_linear_oracle,
    hilbert_recursive,
    hilbert_series,
    hilbert_staircase,
    htilde_check,
    qdegree_bound_holds,
    slice_dimension,
    verify_methods,
)


class SmallSeriesTests(unittest.TestCase):
    def test_base_cases(self):
        self.assertEqual(hilbert_recursive(0, 4, 3), BiSeries.one(4, 3))
        self.assertEqual(hilbert_recursive(1, 4, 3), BiSeries(4, 3, {(0, 0): 1, (0, 1): 1}))
        expected = BiSeries.one(4, 3).divide_by_unit(1, 1) + BiSeries.monomial(4, 3, 0, 1)
        self.assertEqual(hilbert_recursive(2, 4, 3), expected)

    def test_three_variables(self):
        """H_3 = (1 + t + qt) / (1 - q^2 t)"""
        expected = BiSeries(5, 3, {(0, 0): 1, (0, 1): 1, (1, 1): 1}).divide_by_unit(2, 1)
        self.assertEqual(hilbert_recursive(3, 5, 3), expected)
        self.assertEqual(expected.coefficient(5, 3), 1)
        self.assertEqual(expected.coefficient(5, 2), 0)

    def test_negative_input(self):
        with self.assertRaises(ValueError):
            hilbert_recursive(-1, 3, 3)
        with self.assertRaises(ValueError):
            hilbert_fermionic(2, -1, 3)


class AgreementTests(unittest.TestCase):
    def test_closed_forms_match_recursion(self):
        for n in range(0, 10):
            reference = hilbert_recursive(n, 12, 6)
            with self.subTest(n=n):
                self.assertEqual(hilbert_fermionic(n, 12, 6), reference)
                self.assertEqual(hilbert_bosonic(n, 12, 6), reference)

    def test_staircase_matches_recursion(self):
        for n in range(0, 7):
            with self.subTest(n=n):
                self.assertEqual(hilbert_staircase(n, 10, 5), hilbert_recursive(n, 10, 5))

    def test_linear_oracle_matches_recursion(self):
        for n in range(0, 5):
            with self.subTest(n=n):
                self.assertEqual(hilbert_linear_oracle(n, 3, 6), hilbert_recursive(n, 6, 3))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=0, max_value=12), st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=5))
    def test_fermionic_on_random_windows(self, n, Q, T):
        self.assertEqual(hilbert_fermionic(n, Q, T), hilbert_recursive(n, Q, T))

    def test_slice_dimension(self):
        # f_3 is the one relation between x1^2 and x0 x2
        self.assertEqual(slice_dimension(3, 2, 2), 1)
        self.assertEqual(slice_dimension(0, 0, 0), 1)
        self.assertEqual(slice_dimension(0, 1, 0), 0)

    def test_dispatch(self):
        for method in HilbertMethod:
            with self.subTest(method=method.value):
                self.assertEqual(hilbert_series(3, 5, 3, method), hilbert_recursive(3, 5, 3))
        result = compute(2, 3, 2, "fermionic")
        self.assertEqual(result.method, HilbertMethod.FERMIONIC)
        self.assertEqual(result.to_dict()["n"], 2)


class HilbertPropertyTests(unittest.TestCase):
    def test_coefficients_are_nonnegative_integers(self):
        for n in range(0, 10):
            series = hilbert_recursive(n, 12, 6)
            self.assertTrue(series.is_nonnegative_integral())
            self.assertTrue(qdegree_bound_holds(series, n))

    def test_qdegree_bound_detects_violation(self):
        self.assertFalse(qdegree_bound_holds(BiSeries(5, 2, {(3, 1): 1}), 3))

    def test_htilde_recursion(self):
        for n in range(3, 11):
            with self.subTest(n=n):
                self.assertTrue(htilde_check(n, 12, 6))

    def test_htilde_needs_three(self):
        with self.assertRaises(ValueError):
            htilde_check(2, 4, 4)


class MethodComparisonTests(unittest.TestCase):
    def test_all_methods_agree(self):
        for n in range(0, 5):
            self.assertIsNone(compare_methods(n, 8, 4, ALL_METHODS, (6, 3)))
            verify_methods(n, 8, 4, oracle_window=(6, 3))

    def test_mismatch_is_raised(self):
        wrong = hilbert_recursive(3, 6, 3) + BiSeries.monomial(6, 3, 4, 2)
        with mock.patch("jet_schemes.hilbert.hilbert_fermionic", return_value=wrong):
            diff = compare_methods(3, 6, 3, [HilbertMethod.FERMIONIC])
            self.assertEqual((diff["q_deg"], diff["t_deg"], diff["method"]), (4, 2, "fermionic"))
            with self.assertRaises(VerificationMismatch) as ctx:
                verify_methods(3, 6, 3, [HilbertMethod.FERMIONIC])
        self.assertEqual(ctx.exception.location, "q^4 t^2")

    def test_caps_reach_every_method(self):
        with self.assertRaises(ResourceCapExceeded) as ctx:
            compare_methods(4, 6, 3, [HilbertMethod.STAIRCASE], max_basis_size=2)
        self.assertEqual(ctx.exception.cap, "max_basis_size")
        with self.assertRaises(ResourceCapExceeded) as ctx:
            verify_methods(4, 6, 3, [HilbertMethod.LINEAR_ORACLE], oracle_window=(4, 3), max_slice_dim=1)
        self.assertEqual(ctx.exception.cap, "max_slice_dim")


@pytest.mark.slow
class LargeWindowTests(unittest.TestCase):
    def test_five_way_agreement(self):
        for n in range(0, 7):
            with self.subTest(n=n):
                verify_methods(n, 30, 15, oracle_window=(15, 6))

    def test_four_way_agreement_up_to_ten(self):
        methods = [HilbertMethod.FERMIONIC, HilbertMethod.BOSONIC, HilbertMethod.STAIRCASE]
        for n in range(7, 11):
            with self.subTest(n=n):
                verify_methods(n, 30, 15, methods)


if __name__ == "__main__":
    unittest.main()
