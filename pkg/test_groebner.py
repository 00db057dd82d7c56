"""
Tests for Buchberger, basis reduction and staircase Hilbert series.
"""

import unittest

import pytest

from jet_schemes.exceptions import ResourceCapExceeded
from jet_schemes.groebner import (
    buchberger,
    is_groebner,
    krull_dimension,
    normal_form,
    reduce_basis,
    staircase_hilbert,
)
from jet_schemes.hilbert import hilbert_recursive
from jet_schemes.jet import generators, reduced_gb
from jet_schemes.poly import Monomial, Polynomial


class BuchbergerTests(unittest.TestCase):
    def test_bases_satisfy_criterion(self):
        for n in range(1, 7):
            with self.subTest(n=n):
                self.assertTrue(is_groebner(buchberger(generators(n)).gens))

    def test_generators_alone_are_not_a_basis(self):
        # I_4 needs the cubic x_0 x_2^2
        self.assertTrue(is_groebner(generators(3)))
        self.assertFalse(is_groebner(generators(4)))

    def test_leading_term_ideal_of_four_generators(self):
        lead = set(reduce_basis(buchberger(generators(4))).leading_monomials())
        expected = {
            Monomial((2, 0, 0, 0)),
            Monomial((1, 1, 0, 0)),
            Monomial((0, 2, 0, 0)),
            Monomial((0, 1, 1, 0)),
            Monomial((1, 0, 2, 0)),
        }
        self.assertEqual(lead, expected)

    def test_reduced_basis_is_monic_and_sorted(self):
        basis = reduced_gb(5)
        self.assertTrue(basis.reduced)
        for g in basis.gens:
            self.assertEqual(g.leading_coefficient, 1)
        lead = basis.leading_monomials()
        for a, b in zip(lead, lead[1:]):
            self.assertFalse(a.divides(b) or b.divides(a))

    def test_reduction_is_unique(self):
        direct = reduce_basis(buchberger(generators(5)))
        reordered = reduce_basis(buchberger(list(reversed(generators(5)))))
        self.assertEqual(direct.gens, reordered.gens)

    def test_normal_form_of_ideal_member(self):
        gens = generators(4)
        member = gens[2] * Polynomial.variable(3, 4) + gens[0] * gens[1]
        self.assertTrue(normal_form(member, reduced_gb(4)).is_zero())

    def test_basis_size_cap(self):
        with self.assertRaises(ResourceCapExceeded) as ctx:
            buchberger(generators(3), max_basis_size=1)
        self.assertEqual(ctx.exception.cap, "max_basis_size")

    def test_empty_input(self):
        with self.assertRaises(ValueError):
            buchberger([])

    def test_degree_counts(self):
        self.assertEqual(reduced_gb(2).degree_counts(), {2: 2})


class StaircaseTests(unittest.TestCase):
    def test_single_variable(self):
        # k[x0] / (x0^2)
        series = staircase_hilbert([Monomial((2,))], 1, 4, 4)
        self.assertEqual(series, hilbert_recursive(1, 4, 4))

    def test_split_matches_inclusion_exclusion(self):
        for n in range(2, 6):
            lead = reduced_gb(n).leading_monomials()
            with self.subTest(n=n):
                self.assertEqual(
                    staircase_hilbert(lead, n, 8, 4, method="split"),
                    staircase_hilbert(lead, n, 8, 4, method="inclusion_exclusion"),
                )

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            staircase_hilbert([Monomial((2,))], 1, 3, 3, method="magic")

    def test_krull_dimension(self):
        self.assertEqual(krull_dimension([Monomial((2, 0))], 2), 1)
        self.assertEqual(krull_dimension([Monomial((1, 0)), Monomial((0, 1))], 2), 0)
        self.assertEqual(krull_dimension([], 3), 3)


@pytest.mark.slow
class LargeBasisTests(unittest.TestCase):
    def test_basis_for_ten_variables(self):
        basis = reduced_gb(10)
        self.assertTrue(is_groebner(basis.gens))


if __name__ == "__main__":
    unittest.main()
