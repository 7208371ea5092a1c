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

GaussianRational module, contains the exact scalar type re + i*im with rational parts.
"""

from fractions import Fraction
from numbers import Rational


class GaussianRational(object):
    """
    Immutable exact complex number with rational real and imaginary parts. Equality is exact.
    Plain ints and Fractions are accepted wherever a GaussianRational is expected.
    """
    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        self._re = Fraction(re)
        self._im = Fraction(im)

    @classmethod
    def coerce(cls, value):
        """
        Convert value to GaussianRational.

        :param value: GaussianRational, int, Fraction or complex with integral parts
        :return: GaussianRational
        :raises: TypeError for unsupported types
        """
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, Rational):
            return cls(value, 0)
        if isinstance(value, complex):
            if value.real.is_integer() and value.imag.is_integer():
                return cls(int(value.real), int(value.imag))
            raise TypeError("Refusing inexact complex value {!r}".format(value))
        raise TypeError("Cannot convert {!r} to GaussianRational".format(value))

    @property
    def re(self):  # pylint: disable=invalid-name
        """
        :return: real part as Fraction
        """
        return self._re

    @property
    def im(self):  # pylint: disable=invalid-name
        """
        :return: imaginary part as Fraction
        """
        return self._im

    def conjugate(self):
        """
        :return: complex conjugate
        """
        return GaussianRational(self._re, -self._im)

    def abs2(self):
        """
        Squared modulus, exact.

        :return: Fraction
        """
        return self._re * self._re + self._im * self._im

    def is_real(self):
        """
        :return: True if imaginary part is zero
        """
        return self._im == 0

    def is_unimodular(self):
        """
        :return: True if re^2 + im^2 == 1 exactly
        """
        return self.abs2() == 1

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __bool__(self):
        return self._re != 0 or self._im != 0

    __nonzero__ = __bool__

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self._re == other.re and self._im == other.im

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re + other.re, self._im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re - other.re, self._im - other.im)

    def __rsub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re * other.re - self._im * other.im,
                                self._re * other.im + self._im * other.re)

    __rmul__ = __mul__

    def inverse(self):
        """
        Multiplicative inverse.

        :return: GaussianRational
        :raises: ZeroDivisionError for zero
        """
        norm = self.abs2()
        if norm == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self._re / norm, -self._im / norm)

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __repr__(self):
        return "GaussianRational({!s}, {!s})".format(self._re, self._im)

    def __str__(self):
        # Lazy import, literals imports this module.
        from toeplitz_lib.literals import format_complex
        return format_complex(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
