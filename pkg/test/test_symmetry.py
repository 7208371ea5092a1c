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

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.Algebra.Poly import Poly
from toeplitz_lib.Symbol.RationalSymbol import helson_symbol, make_symbol, quadratic_family
from toeplitz_lib.Symbol.symmetry import ImageClass, cayley_compose, circle_image_classify
from toeplitz_lib.Symbol.symmetry import omega_star_equals_omega, real_on_circle
from toeplitz_lib.ToeplitzErrors import NonRealCoefficients, NonRealPoles, NotRatT

I = GaussianRational(0, 1)


class RealOnCircleTestcase(unittest.TestCase):

    def test_helson_symbols_are_real(self):
        for power in range(1, 5):
            omega = helson_symbol(power)
            witness = real_on_circle(omega)
            self.assertIsNotNone(witness)
            self.assertTrue(witness.gamma.is_unimodular())
            self.assertTrue(omega_star_equals_omega(omega))

    def test_not_real(self):
        omega = make_symbol(Poly([1]), Poly([-1, 1]))
        self.assertIsNone(real_on_circle(omega))
        self.assertFalse(omega_star_equals_omega(omega))

    def test_needs_rat_t(self):
        with self.assertRaises(NotRatT):
            real_on_circle(make_symbol(Poly([1]), Poly([-2, 1])))


class CayleyTestcase(unittest.TestCase):

    def test_identity_gives_first_helson_symbol(self):
        omega = cayley_compose(Poly([0, 1]), Poly([1]))
        self.assertTrue(omega.same_function(helson_symbol(1)))
        self.assertIsNotNone(real_on_circle(omega))

    def test_real_rooted_denominator(self):
        omega = cayley_compose(Poly([1, 0, 1]), Poly.from_roots([1, -2]))
        self.assertTrue(omega.is_rat_t())
        self.assertIsNotNone(real_on_circle(omega))

    def test_errors(self):
        with self.assertRaises(NonRealCoefficients):
            cayley_compose(Poly([I]), Poly([1]))
        with self.assertRaises(NonRealPoles):
            cayley_compose(Poly([1]), Poly([1, 0, 1]))


class ImageClassTestcase(unittest.TestCase):

    def test_classes(self):
        self.assertEqual(circle_image_classify(helson_symbol(1)), ImageClass.REAL_FULL_LINE)
        self.assertEqual(circle_image_classify(quadratic_family(1)), ImageClass.REAL_FULL_LINE)
        self.assertEqual(circle_image_classify(quadratic_family(3)),
                         ImageClass.REAL_PROPER_SUBSET)
        self.assertEqual(circle_image_classify(make_symbol(Poly([2]), Poly([1]))),
                         ImageClass.REAL_PROPER_SUBSET)
        self.assertEqual(circle_image_classify(make_symbol(Poly([1]), Poly([-1, 1]))),
                         ImageClass.NOT_REAL_VALUED)


if __name__ == '__main__':
    unittest.main()
