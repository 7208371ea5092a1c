# pylint: disable=missing-docstring

"""
Copyright 2019 ARM Limited
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from toeplitz_lib.Algebra.GaussianRational import GaussianRational, I, ONE, ZERO
from toeplitz_lib.Algebra.Poly import MINUS_INFINITY, Poly, Z, divrem, gcd, self_inversive
from toeplitz_lib.Algebra.Poly import sharp, sharp_sum_witness, squarefree_decomposition, xgcd
from toeplitz_lib.ToeplitzErrors import BothZero, DivisionByZeroPolynomial, InternalInconsistency
from toeplitz_lib.ToeplitzErrors import ZeroPolynomial, ZeroSum


GAUSSIANS = st.builds(GaussianRational,
                      st.fractions(min_value=-5, max_value=5, max_denominator=6),
                      st.fractions(min_value=-5, max_value=5, max_denominator=6))
POLYS = st.lists(GAUSSIANS, max_size=5).map(Poly)
NONZERO_POLYS = POLYS.filter(bool)


class GaussianRationalTestcase(unittest.TestCase):

    def test_arithmetic_is_exact(self):
        value = GaussianRational(1, 2)
        self.assertEqual(value * value.conjugate(), 5)
        self.assertEqual(value * value.inverse(), ONE)
        self.assertEqual(value / 2, GaussianRational(Fraction(1, 2), 1))
        self.assertEqual(I ** 2, -1)
        self.assertEqual(I ** -1, -I)
        self.assertEqual(1 - I, GaussianRational(1, -1))

    def test_coerce(self):
        self.assertEqual(GaussianRational.coerce(Fraction(3, 4)), GaussianRational(Fraction(3, 4)))
        self.assertEqual(GaussianRational.coerce(complex(2, -3)), GaussianRational(2, -3))
        with self.assertRaises(TypeError):
            GaussianRational.coerce(complex(0.5, 0))
        with self.assertRaises(TypeError):
            GaussianRational.coerce("1")

    def test_predicates(self):
        self.assertTrue(GaussianRational(Fraction(3, 5), Fraction(4, 5)).is_unimodular())
        self.assertFalse(GaussianRational(1, 1).is_unimodular())
        self.assertTrue(GaussianRational(2).is_real())
        self.assertFalse(ZERO)
        self.assertEqual(hash(GaussianRational(2)), hash(Fraction(2)))

    def test_zero_division(self):
        with self.assertRaises(ZeroDivisionError):
            ZERO.inverse()

    def test_str_uses_literal_grammar(self):
        self.assertEqual(str(GaussianRational(-1, 2)), "-1+2i")
        self.assertEqual(str(GaussianRational(Fraction(2, 3), Fraction(-1, 5))), "2/3-1/5i")
        self.assertEqual(str(-I), "-i")


class PolyTestcase(unittest.TestCase):

    def test_trailing_zeros_dropped(self):
        poly = Poly([1, 2, 0, 0])
        self.assertEqual(poly.coeffs, (1, 2))
        self.assertEqual(poly.degree, 1)
        self.assertEqual(Poly().degree, MINUS_INFINITY)
        self.assertTrue(Poly().degree < 0)
        self.assertTrue(Poly().is_zero())

    def test_leading_of_zero_raises(self):
        with self.assertRaises(ZeroPolynomial):
            _ = Poly().leading
        with self.assertRaises(ZeroPolynomial):
            Poly().mult0()

    def test_from_roots_and_evaluation(self):
        poly = Poly.from_roots([1, 2])
        self.assertEqual(poly, Poly([2, -3, 1]))
        self.assertEqual(poly(1), 0)
        self.assertEqual(Poly([1, 1])(I), GaussianRational(1, 1))
        self.assertAlmostEqual(abs(poly.evaluate(3j) - (2 - 9j - 9)), 0.0)

    def test_mult0_and_shift(self):
        poly = Poly([0, 0, 3, 1])
        self.assertEqual(poly.mult0(), 2)
        self.assertEqual(poly.shift(-2), Poly([3, 1]))
        self.assertEqual(Poly([1]).shift(2), Poly.monomial(2))
        with self.assertRaises(InternalInconsistency):
            Poly([1, 1]).shift(-1)

    def test_sharp(self):
        self.assertEqual(sharp(Poly([1, 2])), Poly([2, 1]))
        self.assertEqual(sharp(Z), Poly([1]))
        self.assertEqual(sharp(Poly([I, 1])), Poly([1, -I]))
        self.assertEqual(Poly([0, 1]).reversed_conj(2), Poly([0, 1]))

    def test_self_inversive(self):
        self.assertEqual(self_inversive(Poly([1, 1])), 1)
        self.assertEqual(self_inversive(Poly([-1, 0, 1])), -1)
        self.assertIsNone(self_inversive(Poly([1, 2])))
        with self.assertRaises(ZeroPolynomial):
            self_inversive(Poly())

    def test_sharp_sum_witness(self):
        total, shift1, shift2 = sharp_sum_witness(Poly([1]), Z)
        self.assertEqual(total, Poly([1, 1]))
        self.assertEqual((shift1, shift2), (1, 0))
        with self.assertRaises(ZeroSum):
            sharp_sum_witness(Poly([1]), Poly([-1]))

    def test_division(self):
        quotient, remainder = divrem(Poly([2, -3, 1]), Poly([-1, 1]))
        self.assertEqual(quotient, Poly([-2, 1]))
        self.assertTrue(remainder.is_zero())
        with self.assertRaises(DivisionByZeroPolynomial):
            divrem(Poly([1]), Poly())
        with self.assertRaises(InternalInconsistency):
            Poly([1, 0, 1]).exact_div(Poly([-1, 1]))

    def test_gcd(self):
        self.assertEqual(gcd(Poly.from_roots([1, 2]), Poly.from_roots([2, 3], lead=5)),
                         Poly([-2, 1]))
        with self.assertRaises(BothZero):
            gcd(Poly(), Poly())

    def test_squarefree_decomposition(self):
        poly = Poly.from_roots([1, 1, 2], lead=3)
        factors = dict((multiplicity, factor)
                       for factor, multiplicity in squarefree_decomposition(poly))
        self.assertEqual(factors, {1: Poly([-2, 1]), 2: Poly([-1, 1])})

    def test_compose_moebius(self):
        self.assertEqual(Z.compose_moebius(1, 1, 1, -1), Poly([1, 1]))

    @settings(max_examples=50, deadline=None)
    @given(POLYS, NONZERO_POLYS)
    def test_divrem_identity(self, dividend, divisor):
        quotient, remainder = divrem(dividend, divisor)
        self.assertEqual(quotient * divisor + remainder, dividend)
        self.assertTrue(remainder.degree < divisor.degree)

    @settings(max_examples=50, deadline=None)
    @given(NONZERO_POLYS, NONZERO_POLYS)
    def test_xgcd_bezout(self, first, second):
        common, left, right = xgcd(first, second)
        self.assertEqual(left * first + right * second, common)
        self.assertTrue(common.divides(first))
        self.assertTrue(common.divides(second))

    @settings(max_examples=50, deadline=None)
    @given(NONZERO_POLYS)
    def test_sharp_involution(self, poly):
        self.assertEqual(sharp(sharp(poly)), poly.shift(-poly.mult0()))

    @settings(max_examples=50, deadline=None)
    @given(POLYS, POLYS)
    def test_sharp_multiplicative(self, first, second):
        self.assertEqual(sharp(first * second), sharp(first) * sharp(second))

    def test_sharp_sum_witness_with_cancellation(self):
        total, shift1, shift2 = sharp_sum_witness(Poly([1, 1]), Poly([1, -1]))
        self.assertEqual(total, Poly([2]))
        self.assertEqual((shift1, shift2), (-1, -1))

    @settings(max_examples=50, deadline=None)
    @given(NONZERO_POLYS, NONZERO_POLYS)
    def test_sharp_sum_witness_identity(self, first, second):
        total = first + second
        if not total:
            with self.assertRaises(ZeroSum):
                sharp_sum_witness(first, second)
            return
        result, shift1, shift2 = sharp_sum_witness(first, second)
        self.assertEqual(result, sharp(total))
        self.assertEqual(shift1, total.degree - first.degree)
        self.assertEqual(shift2, total.degree - second.degree)
        lift = max(0, -shift1, -shift2)
        self.assertEqual(result.shift(lift), sharp(first).shift(shift1 + lift)
                         + sharp(second).shift(shift2 + lift))


if __name__ == '__main__':
    unittest.main()
