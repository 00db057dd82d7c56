"""
Tests for monomials, grevlex and polynomial arithmetic in R_n.
"""

import unittest
from fractions import Fraction

from hypothesis import given, strategies as st

from jet_schemes.free_module import FreeVector, generator, phi
from jet_schemes.poly import (
    Monomial,
    Ordering,
    Polynomial,
    grevlex_cmp,
    leading_term,
    monomials_of_bidegree,
    reduce,
    remainder,
    ring_ops,
    s_polynomial,
)

exponents = st.lists(st.integers(min_value=0, max_value=3), min_size=4, max_size=4)


class MonomialTests(unittest.TestCase):
    def test_bidegree(self):
        m = Monomial((2, 0, 1, 3))
        self.assertEqual(m.degree, 6)
        self.assertEqual(m.weight, 11)
        self.assertEqual(m.bidegree, (11, 6))

    def test_grevlex_small_cases(self):
        # x0 > x1 > x2 and x1^2 > x0 x2
        self.assertEqual(grevlex_cmp(Monomial((1, 0, 0)), Monomial((0, 1, 0))), Ordering.GREATER)
        self.assertEqual(grevlex_cmp(Monomial((0, 2, 0)), Monomial((1, 0, 1))), Ordering.GREATER)
        self.assertEqual(grevlex_cmp(Monomial((0, 0, 1)), Monomial((2, 0, 0))), Ordering.LESS)

    @given(exponents, exponents, exponents)
    def test_grevlex_is_multiplicative(self, a, b, c):
        a, b, c = Monomial(a), Monomial(b), Monomial(c)
        self.assertEqual(grevlex_cmp(a, b), grevlex_cmp(a * c, b * c))

    @given(exponents, exponents)
    def test_bidegree_is_additive(self, a, b):
        a, b = Monomial(a), Monomial(b)
        self.assertEqual((a * b).bidegree, (a.weight + b.weight, a.degree + b.degree))

    def test_shift_and_extend(self):
        m = Monomial((1, 2))
        self.assertEqual(m.shift(), Monomial((0, 1, 2)))
        self.assertEqual(m.extend(4), Monomial((1, 2, 0, 0)))
        with self.assertRaises(ValueError):
            Monomial((0, 1)).extend(1)

    def test_negative_exponent(self):
        with self.assertRaises(ValueError):
            Monomial((1, -1))


class PolynomialTests(unittest.TestCase):
    def test_generators(self):
        # f_3 = 2 x0 x2 + x1^2 with leading monomial x1^2
        f3 = generator(3, 3)
        self.assertEqual(f3, Polynomial(3, {(1, 0, 1): 2, (0, 2, 0): 1}))
        self.assertEqual(f3.leading_monomial, Monomial((0, 2, 0)))
        self.assertEqual(f3.bidegree(), (2, 2))

    def test_generator_out_of_range(self):
        with self.assertRaises(ValueError):
            generator(4, 3)

    def test_leading_term(self):
        # x1^2 beats 2 x0 x2 in grevlex
        self.assertEqual(leading_term(generator(3, 3)), (Monomial((0, 2, 0)), Fraction(1)))
        with self.assertRaises(ValueError):
            leading_term(Polynomial.zero(2))

    def test_s_polynomial_of_first_generators(self):
        self.assertTrue(s_polynomial(generator(1, 2), generator(2, 2)).is_zero())

    def test_division(self):
        n = 3
        p = generator(3, n) * Polynomial.variable(0, n) + Polynomial.variable(2, n)
        quotients, rest = reduce(p, [generator(1, n), generator(3, n)])
        total = rest
        for q, g in zip(quotients, [generator(1, n), generator(3, n)]):
            total = total + q * g
        self.assertEqual(total, p)
        self.assertEqual(remainder(Polynomial(2, {(2, 1): 1}), [generator(1, 2)]), Polynomial.zero(2))

    def test_division_by_nothing(self):
        with self.assertRaises(ValueError):
            reduce(generator(1, 2), [])

    def test_ring_mismatch(self):
        with self.assertRaises(ValueError):
            generator(1, 2) + generator(1, 3)

    def test_ring_ops_and_scaling(self):
        x0 = Polynomial.variable(0, 2)
        self.assertEqual(ring_ops(x0, x0, "mul"), generator(1, 2))
        self.assertEqual(generator(2, 2).monic(), Polynomial(2, {(1, 1): 1}))
        self.assertEqual(Polynomial(2, {(1, 1): Fraction(4, 3), (2, 0): 2}).content(), Fraction(2, 3))

    def test_shift(self):
        self.assertEqual(generator(1, 1).shift(2, 4), Polynomial(4, {(0, 0, 2, 0): 1}))

    def test_monomials_of_bidegree(self):
        found = monomials_of_bidegree(3, 2, 2)
        self.assertEqual(set(found), {Monomial((1, 0, 1)), Monomial((0, 2, 0))})
        self.assertEqual(found[0], Monomial((0, 2, 0)))
        self.assertEqual(monomials_of_bidegree(3, -1, 2), ())

    def test_dict_form(self):
        p = generator(4, 4)
        self.assertEqual(Polynomial.from_dict(p.to_dict()), p)


class FreeModuleTests(unittest.TestCase):
    def test_phi_of_units(self):
        for k in range(1, 5):
            self.assertEqual(phi(FreeVector.unit(k, 4)), generator(k, 4))

    def test_bidegree_of_basis_vectors(self):
        self.assertEqual(FreeVector.unit(3, 4).bidegree(), (2, 2))
        v = FreeVector.unit(1, 3, Polynomial.variable(1, 3))
        self.assertEqual(v.bidegree(), (1, 3))

    def test_shift_moves_two_slots(self):
        v = FreeVector.unit(1, 2, Polynomial.variable(0, 2))
        shifted = v.shift()
        self.assertEqual(shifted.n, 4)
        self.assertEqual(shifted[3], Polynomial.variable(1, 4))
        self.assertTrue(shifted[1].is_zero())


if __name__ == "__main__":
    unittest.main()
