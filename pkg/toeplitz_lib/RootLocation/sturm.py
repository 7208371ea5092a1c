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

Exact count of unit circle roots of a self-inversive polynomial. The Cayley substitution
z = (1 + it)/(1 - it) maps the circle minus {-1} onto the real line, so the circle roots become
real roots of a real polynomial, counted with Sturm sequences by sympy.
"""

import sympy

from toeplitz_lib.Algebra.GaussianRational import I
from toeplitz_lib.Algebra.Poly import Poly
from toeplitz_lib.ToeplitzErrors import InternalInconsistency
from toeplitz_lib.tools.asserts import assertTrue

_T = sympy.Symbol("t", real=True)


def strip_minus_one(poly):
    """
    Divide out the root z = -1.

    :param poly: nonzero Poly
    :return: tuple (multiplicity of -1, cofactor)
    """
    factor = Poly([1, 1])
    multiplicity = 0
    while poly.degree >= 1 and not poly(-1):
        poly = poly.exact_div(factor)
        multiplicity += 1
    return multiplicity, poly


def cayley_image(poly):
    """
    Numerator of poly((1 + it)/(1 - it)), normalized to real coefficients.

    :param poly: self-inversive Poly with poly(-1) != 0
    :return: list of Fractions, ascending in t
    :raises: InternalInconsistency if the image is not a real multiple
    """
    image = poly.compose_moebius(I, 1, -I, 1)
    # A self-inversive input gives gamma * real coefficients.
    reference = next(coeff for coeff in image.coeffs if coeff)
    normalized = image.scale(reference.inverse())
    assertTrue(normalized.is_real(),
               "Cayley image of {} is not a real multiple".format(poly))
    return [coeff.re for coeff in normalized.coeffs]


def count_real_roots(coeffs):
    """
    Number of real roots with multiplicity of a real rational polynomial, via sympy's
    square-free decomposition and Sturm-sequence root counting.

    :param coeffs: ascending list of Fractions
    :return: int
    """
    if len(coeffs) <= 1:
        return 0
    descending = [sympy.Rational(value.numerator, value.denominator)
                  for value in reversed(coeffs)]
    poly = sympy.Poly(descending, _T, domain=sympy.QQ)
    _, factors = poly.sqf_list()
    return int(sum(multiplicity * factor.count_roots() for factor, multiplicity in factors))


def circle_root_count(poly):
    """
    Exact number of roots on the unit circle, with multiplicity.

    :param poly: nonzero self-inversive Poly
    :return: int
    :raises: InternalInconsistency if poly is not self-inversive up to scaling
    """
    if poly.is_constant():
        return 0
    minus_one, rest = strip_minus_one(poly)
    count = minus_one + count_real_roots(cayley_image(rest))
    if count > poly.degree:
        raise InternalInconsistency("Circle count {} exceeds degree of {}".format(count, poly))
    return count
