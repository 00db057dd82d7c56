"""
Tests for the slice oracles: syzygy generation, the x_0 decomposition and
the quotient by x_0.
"""

import unittest

import pytest
from hypothesis import given, settings, strategies as st

from jet_schemes.exceptions import ResourceCapExceeded
from jet_schemes.free_module import FreeVector, phi
from jet_schemes.jet import mu, nu
from jet_schemes.linalg import intersection_dim, rank, span_dim
from jet_schemes.poly import Polynomial
from jet_schemes.syzygy import (
    SliceReport,
    almost_syzygy_divisible,
    decomposition_check,
    decomposition_report,
    first_failure,
    generation_check,
    generation_report,
    kernel_dim,
    quotient_x0_check,
    submodule_dim,
    syzygy_generators,
)


class LinearAlgebraTests(unittest.TestCase):
    def test_rank(self):
        rows = [{"a": 1, "b": 2}, {"a": 2, "b": 4}, {"c": 1}]
        self.assertEqual(rank(rows), 2)
        self.assertEqual(rank([]), 0)
        self.assertEqual(rank([{"a": 0}]), 0)

    def test_intersection(self):
        U = [{"a": 1}, {"b": 1}]
        V = [{"b": 1}, {"c": 1}]
        self.assertEqual(span_dim(U + V), 3)
        self.assertEqual(intersection_dim(U, V), 1)

    def test_cap(self):
        with self.assertRaises(ResourceCapExceeded):
            rank([{"a": 1}, {"b": 1}], max_dim=1)


class KernelTests(unittest.TestCase):
    def test_first_syzygy(self):
        # mu_1 spans the (1, 3) slice of Ker(phi_2)
        self.assertEqual(kernel_dim(2, 1, 3), 1)
        self.assertEqual(kernel_dim(2, 0, 2), 0)
        self.assertEqual(submodule_dim([mu(1, 2)], 2, 1, 3), 1)

    def test_generator_list(self):
        self.assertEqual(len(syzygy_generators(4)), 3 + 6)
        self.assertEqual(len(syzygy_generators(4, drop_nu12=True)), 3 + 1)

    def test_generation(self):
        for n in range(1, 5):
            with self.subTest(n=n):
                self.assertTrue(generation_check(n, 10, 5))

    def test_generation_without_low_koszul_syzygies(self):
        for n in range(1, 5):
            with self.subTest(n=n):
                self.assertTrue(generation_check(n, 10, 5, drop_nu12=True))

    def test_reports_are_in_slice_order(self):
        reports = generation_report(3, 4, 3, workers=2)
        sequential = generation_report(3, 4, 3, workers=1)
        self.assertEqual(reports, sequential)
        self.assertTrue(all(r.qdeg <= 2 * r.tdeg for r in reports))
        self.assertIsNone(first_failure(reports))

    def test_slice_cap(self):
        with self.assertRaises(ResourceCapExceeded):
            generation_report(4, 10, 5, max_dim=2)

    def test_needs_positive_n(self):
        with self.assertRaises(ValueError):
            generation_report(0, 3, 3)


class DecompositionTests(unittest.TestCase):
    def test_intersection_with_x0(self):
        for n in range(3, 6):
            with self.subTest(n=n):
                self.assertTrue(decomposition_check(n, 10, 5))

    def test_needs_three_variables(self):
        with self.assertRaises(ValueError):
            decomposition_report(2, 4, 4)

    def test_quotient_by_x0(self):
        for n in range(2, 7):
            with self.subTest(n=n):
                self.assertTrue(quotient_x0_check(n, 10, 5))

    def test_almost_syzygies(self):
        for n in range(2, 6):
            for k in range(1, n):
                self.assertTrue(almost_syzygy_divisible(mu(k, n)))
            self.assertTrue(almost_syzygy_divisible(nu(1, n, n)))


class RandomSyzygyTests(unittest.TestCase):
    @settings(max_examples=20, deadline=None)
    @given(
        st.lists(st.integers(-3, 3), min_size=3, max_size=3),
        st.lists(st.integers(-3, 3), min_size=6, max_size=6),
        st.lists(st.integers(0, 3), min_size=9, max_size=9),
    )
    def test_combinations_of_syzygies(self, mu_coeffs, nu_coeffs, variables):
        n = 4
        gens = [mu(k, n) for k in range(1, n)] + [nu(i, j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        v = FreeVector.zero(n)
        for g, c, var in zip(gens, mu_coeffs + nu_coeffs, variables):
            v = v + g.mul(Polynomial.variable(var, n).scale(c))
        self.assertTrue(phi(v).is_zero())
        self.assertTrue(almost_syzygy_divisible(v))


class SliceReportTests(unittest.TestCase):
    def test_first_failure(self):
        reports = [SliceReport(0, 2, 1, 1), SliceReport(1, 2, 2, 1), SliceReport(2, 2, 3, 0)]
        self.assertEqual(first_failure(reports), reports[1])
        self.assertEqual(reports[1].to_dict(), {"qdeg": 1, "tdeg": 2, "expected": 2, "actual": 1})


@pytest.mark.slow
class LargeSliceTests(unittest.TestCase):
    def test_generation_six_variables(self):
        self.assertTrue(generation_check(6, 20, 6))
        self.assertTrue(generation_check(6, 20, 6, drop_nu12=True))


if __name__ == "__main__":
    unittest.main()
