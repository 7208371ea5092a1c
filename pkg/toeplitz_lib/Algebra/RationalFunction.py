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

RationalFunction module, contains the exact quotient numer/denom of coprime polynomials.
"""

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.Algebra.Poly import Poly, gcd
from toeplitz_lib.ToeplitzErrors import ZeroDenominator, DenominatorVanishesAtZero
from toeplitz_lib.ToeplitzErrors import PolesInClosedDisk
from toeplitz_lib.RootLocation.rootloc import count_roots


class RationalFunction(object):
    """
    Reduced quotient numer/denom with a monic denominator. Zero is 0/1.
    """
    __slots__ = ("_numer", "_denom")

    def __init__(self, numer, denom=None):
        numer = numer if isinstance(numer, Poly) else Poly.constant(numer)
        if denom is None:
            denom = Poly.constant(1)
        elif not isinstance(denom, Poly):
            denom = Poly.constant(denom)
        if not denom:
            raise ZeroDenominator("Rational function with zero denominator")
        if not numer:
            self._numer, self._denom = Poly(), Poly.constant(1)
            return
        common = gcd(numer, denom)
        numer = numer.exact_div(common)
        denom = denom.exact_div(common)
        lead_inv = denom.leading.inverse()
        self._numer = numer.scale(lead_inv)
        self._denom = denom.scale(lead_inv)

    @property
    def numer(self):
        """
        :return: numerator Poly
        """
        return self._numer

    @property
    def denom(self):
        """
        :return: monic denominator Poly
        """
        return self._denom

    def is_zero(self):
        """
        :return: True for 0
        """
        return not self._numer

    def is_polynomial(self):
        """
        :return: True if the denominator is constant
        """
        return self._denom.degree == 0

    def __bool__(self):
        return bool(self._numer)

    __nonzero__ = __bool__

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        return RationalFunction(Poly.constant(GaussianRational.coerce(other)))

    def __eq__(self, other):
        try:
            other = RationalFunction._lift(other)
        except TypeError:
            return NotImplemented
        return self._numer * other.denom == other.numer * self._denom

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._numer, self._denom))

    def __add__(self, other):
        try:
            other = RationalFunction._lift(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self._numer * other.denom + other.numer * self._denom,
                                self._denom * other.denom)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self._numer, self._denom)

    def __sub__(self, other):
        try:
            other = RationalFunction._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = RationalFunction._lift(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = RationalFunction._lift(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self._numer * other.numer, self._denom * other.denom)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = RationalFunction._lift(other)
        except TypeError:
            return NotImplemented
        if not other:
            raise ZeroDenominator("Division by the zero rational function")
        return RationalFunction(self._numer * other.denom, self._denom * other.numer)

    __div__ = __truediv__

    def __call__(self, point):
        """
        Exact evaluation.

        :param point: scalar
        :return: GaussianRational
        :raises: ZeroDenominator at a pole
        """
        denom_value = self._denom(point)
        if not denom_value:
            raise ZeroDenominator("Pole at {}".format(GaussianRational.coerce(point)))
        return self._numer(point) / denom_value

    def evaluate(self, points):
        """
        Floating point evaluation.

        :param points: complex or numpy array
        """
        return self._numer.evaluate(points) / self._denom.evaluate(points)

    def value_at_zero(self):
        """
        :return: f(0) exactly
        :raises: DenominatorVanishesAtZero
        """
        denom0 = self._denom.coeff(0)
        if not denom0:
            raise DenominatorVanishesAtZero("{} has a pole at 0".format(self))
        return self._numer.coeff(0) / denom0

    def taylor(self, count):
        """
        First count Taylor coefficients at 0 by exact power series division.

        :param count: number of coefficients
        :return: list of GaussianRational
        :raises: DenominatorVanishesAtZero
        """
        denom0 = self._denom.coeff(0)
        if not denom0:
            raise DenominatorVanishesAtZero("{} has a pole at 0".format(self))
        inverse = denom0.inverse()
        series = []
        for k in range(count):
            value = self._numer.coeff(k)
            for j in range(1, min(k, self._denom.degree) + 1):
                value = value - self._denom.coeff(j) * series[k - j]
            series.append(value * inverse)
        return series

    def poles_in_closed_disk(self):
        """
        :return: number of poles with |z| <= 1, with multiplicity
        """
        if self._denom.degree == 0:
            return 0
        return count_roots(self._denom).closed_disk

    def require_hardy(self, name="f"):
        """
        Check that the function belongs to every Hardy space, i.e. has no poles in the closed
        unit disk.

        :param name: name used in the error message
        :return: self
        :raises: PolesInClosedDisk
        """
        if self.poles_in_closed_disk():
            raise PolesInClosedDisk("{} = {} has poles in the closed unit disk".format(name, self))
        return self

    def __repr__(self):
        return "RationalFunction({!r}, {!r})".format(self._numer, self._denom)

    def __str__(self):
        if self.is_polynomial():
            return str(self._numer)
        return "({!s}) / ({!s})".format(self._numer, self._denom)


__all__ = ["RationalFunction"]
