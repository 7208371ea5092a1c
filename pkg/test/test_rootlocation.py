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

import mock
import numpy
from hypothesis import given, settings, strategies as st

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.Algebra.Poly import Poly, sharp
from toeplitz_lib.RootLocation.numeric import NumericPoly, classify_roots, numeric_roots
from toeplitz_lib.RootLocation.numeric import relative_residual
from toeplitz_lib.RootLocation.rootloc import RootCounts, closed_disk_count, count_roots
from toeplitz_lib.RootLocation.rootloc import SNAP_DENOMINATOR, factor_circle
from toeplitz_lib.RootLocation.schur_cohn import closed_disk_test, cohn_test
from toeplitz_lib.RootLocation.schur_cohn import schur_cohn_inside_count
from toeplitz_lib.RootLocation.sturm import circle_root_count, count_real_roots
from toeplitz_lib.ToeplitzErrors import ZeroPolynomial

I = GaussianRational(0, 1)
HALF = Fraction(1, 2)

# Exact points grouped by location: inside, on the circle, outside.
LOCATED_POINTS = [(HALF, 0), (I * Fraction(1, 3), 0), (Fraction(-1, 4), 0),
                  (1, 1), (-1, 1), (I, 1), (GaussianRational(Fraction(3, 5), Fraction(4, 5)), 1),
                  (2, 2), (Fraction(-3, 2), 2), (I * 3, 2)]

GAUSSIANS = st.builds(GaussianRational,
                      st.fractions(min_value=-3, max_value=3, max_denominator=4),
                      st.fractions(min_value=-3, max_value=3, max_denominator=4))
POLYS = st.lists(GAUSSIANS, min_size=1, max_size=4).map(Poly).filter(bool)


class RootCountsTestcase(unittest.TestCase):

    def test_small_examples(self):
        self.assertEqual(count_roots(Poly([0, I * 3, I * 2])), RootCounts(1, 0, 1))
        self.assertEqual(count_roots(Poly.from_roots([HALF, 1, 2, -I])), RootCounts(1, 2, 1))
        self.assertEqual(count_roots(Poly.from_roots([1, 1, 3])), RootCounts(0, 2, 1))
        self.assertEqual(count_roots(Poly([5])), RootCounts(0, 0, 0))
        self.assertEqual(count_roots(Poly.monomial(3)), RootCounts(3, 0, 0))

    def test_zero_polynomial(self):
        with self.assertRaises(ZeroPolynomial):
            count_roots(Poly())

    def test_counts_helpers(self):
        counts = RootCounts(1, 2, 3)
        self.assertEqual(counts.total, 6)
        self.assertEqual(counts.closed_disk, 3)
        self.assertEqual(counts + (1, 1, 1), RootCounts(2, 3, 4))
        self.assertDictEqual(counts.to_dict(), {"inside": 1, "on_circle": 2, "outside": 3})
        self.assertEqual(closed_disk_count(Poly.from_roots([HALF, 2])), 1)
        self.assertEqual(closed_disk_count(Poly.from_roots([2, I * 3])), 0)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.tuples(st.sampled_from(LOCATED_POINTS), st.integers(1, 2)),
                    min_size=1, max_size=4))
    def test_counts_match_construction(self, picks):
        roots = []
        expected = [0, 0, 0]
        for (root, location), multiplicity in picks:
            roots.extend([root] * multiplicity)
            expected[location] += multiplicity
        poly = Poly.from_roots(roots, lead=GaussianRational(2, -1))
        counts = count_roots(poly)
        self.assertEqual(tuple(counts), tuple(expected))
        self.assertEqual(closed_disk_test(poly), expected[2] == 0)
        self.assertEqual(cohn_test(poly), expected[0] == 0 and expected[2] == 0)

    @settings(max_examples=40, deadline=None)
    @given(POLYS, POLYS)
    def test_counts_add_over_products(self, first, second):
        self.assertEqual(count_roots(first * second),
                         count_roots(first) + count_roots(second))

    @settings(max_examples=40, deadline=None)
    @given(POLYS)
    def test_sharp_swaps_inside_and_outside(self, poly):
        counts = count_roots(poly)
        self.assertEqual(count_roots(sharp(poly)),
                         RootCounts(counts.outside, counts.on_circle,
                                    counts.inside - poly.mult0()))


class FactorCircleTestcase(unittest.TestCase):

    def test_exact_split(self):
        poly = Poly.from_roots([HALF, -1, 2], lead=3)
        split = factor_circle(poly)
        self.assertTrue(split.exact)
        self.assertEqual(split.unit, 3)
        self.assertEqual(split.part_inside, Poly([-HALF, 1]))
        self.assertEqual(split.part_on, Poly([1, 1]))
        self.assertEqual(split.part_outside, Poly([-2, 1]))
        self.assertEqual(split.reconstruct(), poly)
        self.assertEqual(split.counts, RootCounts(1, 1, 1))

    def test_roots_at_origin(self):
        split = factor_circle(Poly.monomial(2, 5))
        self.assertTrue(split.exact)
        self.assertEqual(split.part_inside, Poly.monomial(2))

    def test_irrational_roots_fall_back_to_numeric(self):
        poly = Poly([-1, -1, 1])
        split = factor_circle(poly)
        self.assertFalse(split.exact)
        self.assertEqual(split.counts, RootCounts(1, 0, 1))
        self.assertLess(relative_residual(split.reconstruct().to_numpy(), poly.to_numpy()),
                        1e-10)

    def test_numeric_fallback_is_logged(self):
        with mock.patch("toeplitz_lib.RootLocation.rootloc._logger") as logger:
            factor_circle(Poly.from_roots([HALF, 2]))
            logger.return_value.debug.assert_not_called()
            factor_circle(Poly([-1, -1, 1]))
        message, denominator, _ = logger.return_value.debug.call_args[0]
        self.assertIn("no exact circle split", message)
        self.assertEqual(denominator, SNAP_DENOMINATOR)


class SchurCohnTestcase(unittest.TestCase):

    def test_inside_count(self):
        self.assertEqual(schur_cohn_inside_count(Poly.from_roots([HALF, 3])), 1)
        self.assertEqual(schur_cohn_inside_count(Poly.from_roots([HALF, I * Fraction(1, 3)])),
                         2)
        self.assertEqual(schur_cohn_inside_count(Poly([7])), 0)

    def test_closed_disk_and_cohn(self):
        self.assertTrue(closed_disk_test(Poly.from_roots([HALF, I])))
        self.assertFalse(closed_disk_test(Poly.from_roots([HALF, 2])))
        self.assertTrue(cohn_test(Poly([1, 0, 1])))
        self.assertTrue(cohn_test(Poly([-1, 0, 0, 1])))
        self.assertFalse(cohn_test(Poly.from_roots([1, 2])))
        with self.assertRaises(ZeroPolynomial):
            cohn_test(Poly([3]))


class SturmTestcase(unittest.TestCase):

    def test_real_root_count(self):
        self.assertEqual(count_real_roots([Fraction(-1), Fraction(0), Fraction(1)]), 2)
        self.assertEqual(count_real_roots([Fraction(1), Fraction(0), Fraction(1)]), 0)
        self.assertEqual(count_real_roots([Fraction(0), Fraction(0), Fraction(1)]), 2)
        self.assertEqual(count_real_roots([Fraction(4)]), 0)

    def test_circle_root_count(self):
        self.assertEqual(circle_root_count(Poly([1, 0, 1])), 2)
        self.assertEqual(circle_root_count(Poly([1, 2, 1])), 2)
        self.assertEqual(circle_root_count(Poly([1, -Fraction(5, 2), 1])), 0)
        self.assertEqual(circle_root_count(Poly([3])), 0)


class NumericTestcase(unittest.TestCase):

    def test_numeric_roots_with_multiplicity(self):
        roots = sorted(numeric_roots(Poly.from_roots([1, 1, 2])), key=lambda root: root.real)
        numpy.testing.assert_allclose(roots, [1, 1, 2], atol=1e-10)

    def test_classify(self):
        inside, on_circle, outside = classify_roots([0.5, 1.0 + 1e-12, 2j], 1e-9)
        self.assertEqual((len(inside), len(on_circle), len(outside)), (1, 1, 1))

    def test_numeric_poly(self):
        poly = NumericPoly.from_roots([2.0], lead=3.0)
        numpy.testing.assert_allclose(poly.coeffs, [-6, 3])
        self.assertEqual(poly.degree, 1)
        numpy.testing.assert_allclose(poly.sharp().coeffs, [3, -6])
        self.assertAlmostEqual(abs(poly.evaluate(2.0)), 0.0)
        self.assertEqual(NumericPoly([0, 0]).degree, -1)


if __name__ == '__main__':
    unittest.main()
