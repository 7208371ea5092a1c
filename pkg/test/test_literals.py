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

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.Algebra.Poly import Poly
from toeplitz_lib.ToeplitzErrors import ParseError
from toeplitz_lib.literals import emit_poly_literal, format_complex
from toeplitz_lib.literals import parse_complex_literal, parse_poly_literal


class ComplexLiteralTestcase(unittest.TestCase):

    def test_forms(self):
        self.assertEqual(parse_complex_literal("3/2"), GaussianRational(Fraction(3, 2)))
        self.assertEqual(parse_complex_literal("-1+2i"), GaussianRational(-1, 2))
        self.assertEqual(parse_complex_literal("i"), GaussianRational(0, 1))
        self.assertEqual(parse_complex_literal("-i"), GaussianRational(0, -1))
        self.assertEqual(parse_complex_literal("3i"), GaussianRational(0, 3))
        self.assertEqual(parse_complex_literal("1+i"), GaussianRational(1, 1))
        self.assertEqual(parse_complex_literal(" 2/3-1/5i "),
                         GaussianRational(Fraction(2, 3), Fraction(-1, 5)))

    def test_errors_carry_position(self):
        with self.assertRaises(ParseError) as error:
            parse_complex_literal("1/0")
        self.assertEqual(error.exception.position, 2)
        with self.assertRaises(ParseError):
            parse_complex_literal("")
        with self.assertRaises(ParseError):
            parse_complex_literal("0.5")

    def test_format(self):
        self.assertEqual(format_complex(GaussianRational(1, -1)), "1-i")
        self.assertEqual(format_complex(GaussianRational(0, Fraction(3, 2))), "3/2i")
        self.assertEqual(format_complex(Fraction(-7, 3)), "-7/3")


class PolyLiteralTestcase(unittest.TestCase):

    def test_parse(self):
        poly = parse_poly_literal('[1, -1/2, 2+3i, "i"]')
        self.assertEqual(poly, Poly([1, Fraction(-1, 2), GaussianRational(2, 3),
                                     GaussianRational(0, 1)]))
        self.assertTrue(parse_poly_literal("[]").is_zero())
        self.assertEqual(parse_poly_literal(' [ "0", "1" ] '), Poly([0, 1]))

    def test_errors(self):
        with self.assertRaises(ParseError) as error:
            parse_poly_literal("[1,,2]")
        self.assertEqual(error.exception.position, 3)
        with self.assertRaises(ParseError) as error:
            parse_poly_literal("1")
        self.assertEqual(error.exception.position, 0)
        with self.assertRaises(ParseError) as error:
            parse_poly_literal("[1/0]")
        self.assertEqual(error.exception.position, 3)
        with self.assertRaises(ParseError):
            parse_poly_literal("[1] x")
        with self.assertRaises(ParseError):
            parse_poly_literal('["1]')

    def test_emit(self):
        poly = Poly([Fraction(1, 2), GaussianRational(0, -1)])
        text = emit_poly_literal(poly)
        self.assertEqual(text, '["1/2", "-i"]')
        self.assertEqual(parse_poly_literal(text), poly)


if __name__ == '__main__':
    unittest.main()
