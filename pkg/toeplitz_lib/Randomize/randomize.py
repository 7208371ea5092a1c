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

Randomize class for generating randomized exact polynomials, symbols and Hardy functions.
"""

import random
from fractions import Fraction

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.Algebra.Poly import Poly
from toeplitz_lib.Algebra.RationalFunction import RationalFunction
from toeplitz_lib.Randomize.seed import SeedInteger

# Rational points on the unit circle from Pythagorean triples.
UNIT_POINTS = [GaussianRational(1), GaussianRational(-1), GaussianRational(0, 1),
               GaussianRational(0, -1), GaussianRational(Fraction(3, 5), Fraction(4, 5)),
               GaussianRational(Fraction(-4, 5), Fraction(3, 5)),
               GaussianRational(Fraction(5, 13), Fraction(-12, 13)),
               GaussianRational(Fraction(-8, 17), Fraction(-15, 17))]

RADII = [Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)]


class Randomize(object):
    """
    Seeded generator. Every draw goes through one random.Random, so equal seeds give equal
    sequences.
    """
    def __init__(self, seed=None):
        self.seed = seed if isinstance(seed, SeedInteger) else SeedInteger(seed or 0)
        self._random = random.Random(self.seed.value)

    def random_integer(self, max_value, min_value=0):
        """
        :param max_value: Maximum value, int
        :param min_value: Minimum value, int, default is 0
        :return: int
        """
        return self._random.randint(min_value, max_value)

    def random_list_elem(self, items):
        """
        :param items: non-empty sequence
        :return: one element
        """
        return self._random.choice(items)

    def random_rational(self, bound=4, max_denominator=4):
        """
        :return: Fraction with |numerator| <= bound and denominator in 1..max_denominator
        """
        return Fraction(self.random_integer(bound, -bound),
                        self.random_integer(max_denominator, 1))

    def random_gaussian(self, bound=4, max_denominator=4):
        """
        :return: GaussianRational with random rational parts
        """
        return GaussianRational(self.random_rational(bound, max_denominator),
                                self.random_rational(bound, max_denominator))

    def random_real(self, bound=4, max_denominator=4):
        """
        :return: real GaussianRational
        """
        return GaussianRational(self.random_rational(bound, max_denominator))

    def random_poly(self, degree, real=False):
        """
        Polynomial of exactly the given degree.

        :param degree: int >= 0
        :param real: restrict to real coefficients
        :return: Poly
        """
        draw = self.random_real if real else self.random_gaussian
        coeffs = [draw() for _ in range(degree)]
        lead = draw()
        while not lead:
            lead = draw()
        return Poly(coeffs + [lead])

    def random_unit_point(self):
        """
        :return: exact GaussianRational of modulus 1
        """
        return self.random_list_elem(UNIT_POINTS)

    def random_point(self, radius):
        """
        :return: exact point of modulus radius
        """
        return self.random_unit_point() * GaussianRational(radius)

    def random_disk_point(self):
        """
        :return: exact point with |point| < 1
        """
        point = self.random_gaussian(3, 4)
        while point.abs2() >= 1:
            point = self.random_gaussian(3, 4)
        return point

    def random_root_multiset(self, max_roots=6, max_multiplicity=3):
        """
        Roots at radii 1/3, 1/2, 1, 2 and 3 with multiplicities up to max_multiplicity.

        :return: list of (root, multiplicity, radius), roots pairwise distinct
        """
        chosen = []
        for _ in range(self.random_integer(max_roots, 1)):
            radius = self.random_list_elem(RADII)
            root = self.random_point(radius)
            if any(root == known for known, _, _ in chosen):
                continue
            chosen.append((root, self.random_integer(max_multiplicity, 1), radius))
        return chosen

    def random_circle_poly(self, degree):
        """
        :return: monic Poly with all roots on the circle
        """
        return Poly.from_roots([self.random_unit_point() for _ in range(degree)])

    def random_outer_poly(self, degree):
        """
        :return: monic Poly with all roots of modulus 2 or 3
        """
        return Poly.from_roots([self.random_point(self.random_list_elem(RADII[3:]))
                                for _ in range(degree)])

    def random_ratt_pair(self, max_m=6, max_n=6, proper=False):
        """
        Numerator and circle-rooted denominator of a random Rat(T) symbol.

        :return: tuple (s, q) of Poly
        """
        m_deg = self.random_integer(max_m)
        n_deg = self.random_integer(min(max_n, m_deg) if proper else max_n)
        return self.random_poly(n_deg), self.random_circle_poly(m_deg)

    def random_hardy_function(self, max_degree=6):
        """
        :return: RationalFunction with poles of modulus 2 or 3 only
        """
        numer = self.random_poly(self.random_integer(max_degree))
        denom = self.random_outer_poly(self.random_integer(min(max_degree, 3)))
        return RationalFunction(numer, denom)

    def random_real_rooted(self, degree):
        """
        :return: real Poly with only real rational roots
        """
        return Poly.from_roots([self.random_real() for _ in range(degree)],
                               self.random_list_elem([1, -1, 2, Fraction(1, 2)]))
