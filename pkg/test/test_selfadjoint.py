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

from hypothesis import given, settings, strategies as st

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.Algebra.Poly import Poly
from toeplitz_lib.SelfAdjoint.analyzer import CheckStatus, analyze, helson_family
from toeplitz_lib.SelfAdjoint.analyzer import quadratic_family_report
from toeplitz_lib.Symbol.RationalSymbol import add_real_constant, helson_symbol, make_symbol
from toeplitz_lib.Symbol.RationalSymbol import quadratic_family
from toeplitz_lib.Symbol.symmetry import ImageClass
from toeplitz_lib.ToeplitzErrors import InternalInconsistency, NotRatT


class HelsonFamilyTestcase(unittest.TestCase):

    def test_extension_iff_even(self):
        for power in range(1, 7):
            report = helson_family(power)
            self.assertTrue(report.symmetric)
            self.assertEqual(report.extension_exists, power % 2 == 0, power)
            self.assertEqual(report.n_plus == report.n_minus, power % 2 == 0, power)

    def test_first_member(self):
        report = helson_family(1)
        self.assertEqual((report.l_plus, report.l_minus), (1, 0))
        self.assertEqual((report.k_plus_in, report.k_minus_in), (0, 1))
        self.assertEqual((report.n_plus, report.n_minus), (0, 1))
        self.assertEqual(report.omega_at_zero, GaussianRational(0, 1))
        self.assertEqual(report.image_class, ImageClass.REAL_FULL_LINE)

    def test_checks_recorded(self):
        report = helson_family(2)
        names = [name for name, _ in report.checks]
        self.assertIn("sharp_identities", names)
        self.assertIn("deficiency_indices", names)
        for _, status in report.checks:
            self.assertIn(status, (CheckStatus.PASS, CheckStatus.SKIP))


class QuadraticFamilyTestcase(unittest.TestCase):

    def test_extension_iff_large_parameter(self):
        self.assertTrue(quadratic_family_report(3).extension_exists)
        self.assertTrue(quadratic_family_report(4).extension_exists)
        self.assertFalse(quadratic_family_report(1).extension_exists)
        self.assertEqual(quadratic_family_report(3).image_class, ImageClass.REAL_PROPER_SUBSET)


class AnalyzeTestcase(unittest.TestCase):

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from([helson_symbol(1), helson_symbol(2), helson_symbol(3),
                            quadratic_family(1), quadratic_family(3), quadratic_family(-4)]),
           st.fractions(min_value=-5, max_value=5, max_denominator=4))
    def test_extension_invariant_under_real_constant(self, omega, constant):
        shifted = analyze(add_real_constant(omega, constant))
        self.assertTrue(shifted.symmetric)
        self.assertEqual(shifted.extension_exists, analyze(omega).extension_exists)
        self.assertEqual((shifted.n_plus, shifted.n_minus),
                         (analyze(omega).n_plus, analyze(omega).n_minus))


    def test_not_symmetric(self):
        report = analyze(make_symbol(Poly([1]), Poly([-1, 1])))
        self.assertFalse(report.symmetric)
        self.assertIsNone(report.n_plus)
        self.assertIsNone(report.extension_exists)
        self.assertEqual(report.checks, [])

    def test_needs_rat_t(self):
        with self.assertRaises(NotRatT):
            analyze(make_symbol(Poly([1]), Poly([-2, 1])))

    def test_failed_check_raises(self):
        report = analyze(make_symbol(Poly([1]), Poly([-1, 1])))
        with self.assertRaises(InternalInconsistency):
            report.add_check("forced", False)
        report.add_check("not_applicable", None)
        self.assertEqual(report.checks, [("not_applicable", CheckStatus.SKIP)])


if __name__ == '__main__':
    unittest.main()
