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

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.Algebra.Poly import Poly, sharp
from toeplitz_lib.Algebra.RationalFunction import RationalFunction
from toeplitz_lib.RootLocation.numeric import NumericPoly
from toeplitz_lib.Symbol.RationalSymbol import ShiftedSymbol, SymbolClass, add_real_constant
from toeplitz_lib.Symbol.RationalSymbol import helson_symbol, make_symbol, omega_star
from toeplitz_lib.Symbol.RationalSymbol import quadratic_family, symbol_from_roots
from toeplitz_lib.Symbol.RationalSymbol import wiener_hopf_split
from toeplitz_lib.ToeplitzErrors import DomainError, InexactFactorization, NonRealCoefficients
from toeplitz_lib.ToeplitzErrors import NotProper, NotRatT, ZeroDenominator, ZeroSymbol

I = GaussianRational(0, 1)
HALF = Fraction(1, 2)

# Exact points inside, on and outside the circle.
SAMPLE_POINTS = [HALF, Fraction(-1, 3), I * Fraction(1, 4), 0,
                 1, -1, I, GaussianRational(Fraction(3, 5), Fraction(-4, 5)),
                 2, Fraction(-5, 2), I * 3]
ROOT_LISTS = st.lists(st.sampled_from(SAMPLE_POINTS), max_size=4)


class MakeSymbolTestcase(unittest.TestCase):

    def test_zero_inputs(self):
        with self.assertRaises(ZeroDenominator):
            make_symbol(Poly([1]), Poly())
        with self.assertRaises(ZeroSymbol):
            make_symbol(Poly(), Poly([1]))
        with self.assertRaises(ZeroSymbol):
            make_symbol(Poly(), Poly([1, -1]))

    def test_common_factor_divided_out(self):
        omega = make_symbol(Poly.from_roots([HALF, 1]), Poly.from_roots([1, -1]))
        self.assertTrue(omega.reduction.reduced)
        self.assertEqual(omega.reduction.common_factor, Poly([-1, 1]))
        self.assertEqual(omega.s, Poly([-HALF, 1]))
        self.assertEqual(omega.q, Poly([1, 1]))
        self.assertTrue(omega.is_rat_t())
        self.assertEqual((omega.m, omega.n), (1, 1))

    def test_root_counts(self):
        omega = symbol_from_roots([HALF, -I, 3], [Fraction(1, 3), -1, 2, 2])
        self.assertEqual(omega.symbol_class, SymbolClass.GENERAL_RAT)
        self.assertEqual((omega.n_minus, omega.n_zero, omega.n_plus), (1, 1, 1))
        self.assertEqual((omega.m_minus, omega.m_zero, omega.m_plus), (1, 1, 2))
        with self.assertRaises(NotRatT):
            omega.require_rat_t("apply_forward")
        self.assertFalse(omega.reduction.reduced)

    def test_proper(self):
        omega = make_symbol(Poly([0, 0, 1]), Poly([-1, 1]))
        self.assertFalse(omega.is_proper())
        with self.assertRaises(NotProper):
            omega.require_proper("szego_eigen")

    def test_exact_evaluation(self):
        omega = make_symbol(Poly([1, 1]), Poly([-2, 1]))
        self.assertEqual(omega(0), Fraction(-1, 2))
        self.assertTrue(omega.same_function(make_symbol(Poly([2, 2]), Poly([-4, 2]))))


class FamiliesTestcase(unittest.TestCase):

    def test_helson(self):
        omega = helson_symbol(2)
        self.assertEqual(omega.s, Poly([-1, -2, -1]))
        self.assertEqual(omega.q, Poly([1, -2, 1]))
        self.assertEqual(omega.m_zero, 2)
        with self.assertRaises(DomainError):
            helson_symbol(0)

    def test_quadratic_degenerate_parameter(self):
        omega = quadratic_family(2)
        self.assertTrue(omega.reduction.reduced)
        self.assertEqual(omega.m, 1)
        self.assertEqual(quadratic_family(1).m, 2)

    def test_add_real_constant(self):
        omega = helson_symbol(1)
        shifted = add_real_constant(omega, 3)
        self.assertEqual(shifted.as_rational_function(), omega.as_rational_function() + 3)
        with self.assertRaises(NonRealCoefficients):
            add_real_constant(omega, I)


class OmegaStarTestcase(unittest.TestCase):

    def test_boundary_conjugate(self):
        omega = make_symbol(Poly([1, 2]), Poly([-1, 0, 1]))
        star = omega_star(omega)
        self.assertEqual(star.shift, 1)
        self.assertEqual(star.numer, sharp(omega.s))
        self.assertEqual(star.denom, sharp(omega.q))
        point = GaussianRational(Fraction(3, 5), Fraction(4, 5))
        self.assertEqual(star(point), omega(point).conjugate())

    def test_inexact_shifted_symbol(self):
        shifted = ShiftedSymbol(0, NumericPoly([1.0, 2.0]), Poly([1]))
        self.assertFalse(shifted.exact)
        with self.assertRaises(InexactFactorization):
            shifted.cleared()


class WienerHopfTestcase(unittest.TestCase):

    def test_product_reconstructs_symbol(self):
        omega = symbol_from_roots([HALF, HALF, 3], [-1, 2], lead=5)
        split = wiener_hopf_split(omega)
        self.assertTrue(split.exact)
        self.assertEqual(split.kappa, 2)
        product = split.minus.as_rational_function() * Poly.monomial(split.kappa) * \
            split.zero.as_rational_function() * split.plus.as_rational_function()
        self.assertEqual(product, omega.as_rational_function())
        self.assertTrue(split.zero_symbol().same_function(
            make_symbol(Poly([1]), Poly([1, 1]))))

    @settings(max_examples=200, deadline=None)
    @given(ROOT_LISTS, ROOT_LISTS,
           st.sampled_from([1, -2, I, GaussianRational(3, 4)]))
    def test_product_identity_on_random_symbols(self, zeros, poles, lead):
        omega = symbol_from_roots(zeros, poles, lead=lead)
        split = wiener_hopf_split(omega)
        self.assertTrue(split.exact)
        self.assertEqual(split.kappa, omega.n_minus - omega.m_minus)
        power = Poly.monomial(abs(split.kappa))
        product = split.minus.as_rational_function() * split.zero.as_rational_function() * \
            split.plus.as_rational_function()
        if split.kappa >= 0:
            self.assertEqual(product * power, omega.as_rational_function())
        else:
            self.assertEqual(product, omega.as_rational_function() * power)

    def test_negative_index(self):
        omega = symbol_from_roots([2], [HALF, 1])
        split = wiener_hopf_split(omega)
        self.assertEqual(split.kappa, -1)
        self.assertEqual(split.minus.shift, 1)
        self.assertEqual(RationalFunction(Poly([1])) * split.minus.as_rational_function() *
                         Poly.monomial(1),
                         RationalFunction(Poly.monomial(2), Poly([-HALF, 1])))


if __name__ == '__main__':
    unittest.main()
