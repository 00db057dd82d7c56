"""
Tests for the jet ideal: leading terms, syzygies, witnessed recursive
Groebner bases and the reduced-basis census.
"""

import unittest

import pytest

from jet_schemes.free_module import FreeVector, phi
from jet_schemes.groebner import is_groebner, reduce_basis
from jet_schemes.jet import (
    WitnessedPoly,
    admissible_monomials,
    census,
    census_prediction,
    f,
    fundamental_relation,
    generators,
    jet_dimension,
    lt_of_f,
    mu,
    nu,
    predicted_reduced_lt,
    recursive_gb,
    reduced_gb,
    shift_module,
    shift_ring,
    shifted_mu_forms,
    shifted_mu_image,
    shifted_nu_image,
    tilde_shift,
    witnessed_generator,
    x0_shift_witness,
    x1_expression_identity,
    x1_expression_residual,
)
from jet_schemes.poly import Monomial, Polynomial


class LeadingTermTests(unittest.TestCase):
    def test_pattern(self):
        self.assertEqual(lt_of_f(1), Monomial((2,)))
        self.assertEqual(lt_of_f(2), Monomial((1, 1)))
        self.assertEqual(lt_of_f(5), Monomial((0, 0, 2, 0, 0)))
        self.assertEqual(lt_of_f(6), Monomial((0, 0, 1, 1, 0, 0)))

    def test_matches_polynomial(self):
        for n in range(1, 9):
            for k in range(1, n + 1):
                self.assertEqual(f(k, n).leading_monomial, lt_of_f(k, n))

    def test_pattern_up_to_thirty(self):
        for k in range(1, 31):
            with self.subTest(k=k):
                self.assertEqual(f(k, k).leading_monomial, lt_of_f(k))

    def test_invalid_index(self):
        with self.assertRaises(ValueError):
            lt_of_f(0)
        with self.assertRaises(ValueError):
            lt_of_f(4, 2)


class SyzygyTests(unittest.TestCase):
    def test_mu_and_nu_are_syzygies(self):
        for n in range(2, 7):
            for k in range(1, n):
                self.assertTrue(phi(mu(k, n)).is_zero(), f"mu_{k} in F_{n}")
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    self.assertTrue(phi(nu(i, j, n)).is_zero(), f"nu_{i}{j} in F_{n}")

    def test_mu_is_bihomogeneous(self):
        self.assertEqual(mu(1, 2).bidegree(), (1, 3))
        self.assertEqual(mu(3, 5).bidegree(), (3, 3))

    def test_mu_out_of_range(self):
        with self.assertRaises(ValueError):
            mu(3, 3)
        with self.assertRaises(ValueError):
            nu(2, 2, 3)

    def test_fundamental_relation(self):
        for m in range(0, 9):
            self.assertTrue(fundamental_relation(m).is_zero())
            self.assertTrue(x1_expression_identity(m).is_zero())

    def test_x1_residual_divisible_by_x0(self):
        for m in range(1, 7):
            residual = x1_expression_residual(m)
            self.assertTrue(residual.divisible_by(Monomial.variable(0, m + 2)))

    def test_shifted_mu_closed_forms(self):
        for k in range(1, 6):
            image, three_term, middle, reduced = shifted_mu_forms(k)
            self.assertEqual(image, three_term)
            self.assertEqual(image, middle)
            self.assertEqual(image, reduced)
            self.assertEqual(shifted_mu_image(k, k + 2), image)

    def test_shifted_nu_closed_form(self):
        for n in range(2, 6):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    image, closed = shifted_nu_image(i, j, n)
                    self.assertEqual(image, closed)

    def test_x0_shift_witness(self):
        for k in range(1, 5):
            n = k + 3
            expected = Polynomial.variable(0, n) * f(k, k).shift(2, n)
            self.assertEqual(phi(x0_shift_witness(k, n)), expected)

    def test_shift_ring(self):
        self.assertEqual(shift_ring(Polynomial.variable(0, 3)), Polynomial.variable(1, 4))

    def test_shift_module(self):
        self.assertEqual(shift_module(FreeVector.unit(1, 2)), FreeVector.unit(3, 4))
        self.assertEqual(shift_module(mu(1, 2)), mu(1, 2).shift())

    def test_shift_of_first_syzygy(self):
        x = lambda i: Polynomial.variable(i, 4)  # noqa: E731
        zero = Polynomial.zero(4)
        self.assertEqual(shift_module(mu(1, 2)), FreeVector([zero, zero, x(2).scale(-2), x(1)]))

    def test_tilde_shift_of_cubic(self):
        x = lambda i: Polynomial.variable(i, 4)  # noqa: E731
        witness = FreeVector.from_slots(4, {2: x(3), 3: x(2).scale(2), 4: -x(1)})
        cubic = WitnessedPoly(Polynomial(4, {(1, 0, 2, 0): 4}), witness)
        self.assertTrue(cubic.is_valid())
        shifted = tilde_shift(cubic)
        expected = Polynomial(6, {(0, 1, 0, 2, 0, 0): 4, (1, 0, 0, 1, 1, 0): 6, (1, 0, 1, 0, 0, 1): -2})
        self.assertEqual(shifted.poly, expected)
        self.assertTrue(shifted.is_valid())

    def test_tilde_shift_of_generators(self):
        for n in range(1, 5):
            for k in range(1, n + 1):
                shifted = tilde_shift(witnessed_generator(k, n))
                self.assertEqual(shifted.poly, f(k + 2, n + 2))
                self.assertTrue(shifted.is_valid())


class RecursiveBasisTests(unittest.TestCase):
    def test_small_bases(self):
        self.assertEqual(len(recursive_gb(0)), 0)
        self.assertEqual(recursive_gb(2).polys(), generators(2))
        self.assertEqual(len(recursive_gb(5)), 6)
        self.assertEqual(len(recursive_gb(6)), 8)

    def test_small_bases_up_to_scaling(self):
        def primitive_set(polys):
            return {p.primitive() for p in polys}

        cubic4 = Polynomial(4, {(1, 0, 2, 0): 1})
        self.assertEqual(primitive_set(recursive_gb(4).polys()), primitive_set(generators(4) + [cubic4]))
        cubic5 = Polynomial(5, {(1, 0, 1, 1, 0): 1})
        self.assertEqual(primitive_set(recursive_gb(5).polys()), primitive_set(generators(5) + [cubic5]))
        self.assertIn(Monomial((0, 1, 0, 2, 0, 0)), recursive_gb(6).leading_monomials())

    def test_witnesses_hold(self):
        for n in range(1, 9):
            with self.subTest(n=n):
                self.assertEqual(recursive_gb(n).invalid_witnesses(), [])

    def test_is_groebner_basis_of_the_ideal(self):
        for n in range(1, 8):
            basis = recursive_gb(n)
            with self.subTest(n=n):
                self.assertTrue(is_groebner(basis.polys()))
                self.assertEqual(reduce_basis(basis.as_groebner_basis()).gens, reduced_gb(n).gens)

    def test_negative_n(self):
        with self.assertRaises(ValueError):
            recursive_gb(-1)


class CensusTests(unittest.TestCase):
    def test_admissible_monomials(self):
        found = admissible_monomials(2, 0, 3)
        self.assertEqual(
            set(found), {Monomial((1, 0, 1, 0)), Monomial((1, 0, 0, 1)), Monomial((0, 1, 0, 1))}
        )
        self.assertEqual(admissible_monomials(0, 0, 3), [Monomial((0, 0, 0, 0))])
        self.assertEqual(admissible_monomials(3, 0, 3), [])

    def test_prediction(self):
        self.assertEqual(census_prediction(12, 2), 12)
        self.assertEqual(census_prediction(12, 3), 5)
        self.assertEqual(census_prediction(12, 4), 6)
        self.assertEqual(census_prediction(12, 5), 4)
        self.assertEqual(census_prediction(12, 6), 0)

    def test_census_small_n(self):
        for n in range(1, 9):
            for k, (actual, predicted) in census(n).items():
                self.assertEqual(actual, predicted, f"n={n} k={k}")

    def test_predicted_leading_terms(self):
        n = 8
        reduced = reduced_gb(n)
        for k, gens in reduced.by_degree().items():
            if k > 2:
                self.assertEqual([g.leading_monomial for g in gens], predicted_reduced_lt(n, k))

    def test_prediction_needs_degree_above_two(self):
        with self.assertRaises(ValueError):
            predicted_reduced_lt(8, 2)

    def test_dimension(self):
        for n in range(0, 9):
            self.assertEqual(jet_dimension(n), n // 2)


@pytest.mark.slow
class LargeCensusTests(unittest.TestCase):
    def test_census_fourteen_variables(self):
        for k, (actual, predicted) in census(14).items():
            self.assertEqual(actual, predicted, f"k={k}")

    def test_census_twelve_variables(self):
        counts = census(12)
        self.assertEqual(counts[2], (12, 12))
        self.assertEqual(counts[3], (5, 5))
        self.assertEqual(counts[4], (6, 6))
        self.assertEqual(counts[5], (4, 4))


if __name__ == "__main__":
    unittest.main()
