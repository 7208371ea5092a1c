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

Poly module, contains the exact univariate polynomial over the Gaussian rationals and the
polynomial algebra built on it: sharp reversal, self-inversive test, division with remainder,
gcd, extended gcd and square-free decomposition.
"""

import numpy
from numpy.polynomial import polynomial as npoly

from toeplitz_lib.Algebra.GaussianRational import GaussianRational, ZERO, ONE
from toeplitz_lib.ToeplitzErrors import ZeroPolynomial, ZeroSum, DivisionByZeroPolynomial
from toeplitz_lib.ToeplitzErrors import BothZero, InternalInconsistency
from toeplitz_lib.tools.asserts import assertTrue, assertEqual


class _MinusInfinity(object):
    """
    Degree of the zero polynomial. Compares below every integer and refuses arithmetic.
    """
    __slots__ = ()

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def _refuse(self, *_):
        raise ZeroPolynomial("Degree of the zero polynomial used in arithmetic")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = _refuse
    __neg__ = __int__ = __index__ = _refuse

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


class Poly(object):
    """
    Immutable polynomial with ascending Gaussian-rational coefficients. Trailing zeros are never
    stored, so the zero polynomial has an empty coefficient tuple and degree MINUS_INFINITY.
    """
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        values = [GaussianRational.coerce(coeff) for coeff in coeffs]
        while values and not values[-1]:
            values.pop()
        self._coeffs = tuple(values)

    @classmethod
    def constant(cls, value):
        """
        :param value: scalar
        :return: constant polynomial
        """
        return cls([value])

    @classmethod
    def monomial(cls, power, coeff=1):
        """
        :param power: nonnegative integer
        :param coeff: scalar coefficient
        :return: coeff * z^power
        """
        if power < 0:
            raise ValueError("Negative power {}".format(power))
        return cls([0] * power + [coeff])

    @classmethod
    def from_roots(cls, roots, lead=1):
        """
        Build lead * prod(z - root).

        :param roots: iterable of scalars, repeated for multiplicity
        :param lead: leading coefficient
        :return: Poly
        """
        result = cls.constant(lead)
        for root in roots:
            result = result * cls([-GaussianRational.coerce(root), 1])
        return result

    @property
    def coeffs(self):
        """
        :return: tuple of ascending coefficients
        """
        return self._coeffs

    @property
    def degree(self):
        """
        :return: int, or MINUS_INFINITY for the zero polynomial
        """
        if not self._coeffs:
            return MINUS_INFINITY
        return len(self._coeffs) - 1

    @property
    def leading(self):
        """
        :return: leading coefficient
        :raises: ZeroPolynomial
        """
        if not self._coeffs:
            raise ZeroPolynomial("Zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, power):
        """
        :param power: index
        :return: coefficient of z^power, zero outside the stored range
        """
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return ZERO

    def is_zero(self):
        """
        :return: True for the zero polynomial
        """
        return not self._coeffs

    def is_constant(self):
        """
        :return: True for polynomials of degree <= 0
        """
        return len(self._coeffs) <= 1

    def is_real(self):
        """
        :return: True if every coefficient is real
        """
        return all(coeff.is_real() for coeff in self._coeffs)

    def mult0(self):
        """
        Multiplicity of 0 as a root.

        :return: int
        :raises: ZeroPolynomial
        """
        if not self._coeffs:
            raise ZeroPolynomial("Root multiplicity undefined for the zero polynomial")
        count = 0
        while not self._coeffs[count]:
            count += 1
        return count

    def __bool__(self):
        return bool(self._coeffs)

    __nonzero__ = __bool__

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other.coeffs
        try:
            return self._coeffs == Poly.constant(other).coeffs
        except TypeError:
            return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._coeffs)

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        return Poly.constant(other)

    def __add__(self, other):
        try:
            other = Poly._lift(other)
        except TypeError:
            return NotImplemented
        size = max(len(self), len(other))
        return Poly([self.coeff(k) + other.coeff(k) for k in range(size)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-coeff for coeff in self._coeffs])

    def __sub__(self, other):
        try:
            other = Poly._lift(other)
        except TypeError:
            return NotImplemented
        size = max(len(self), len(other))
        return Poly([self.coeff(k) - other.coeff(k) for k in range(size)])

    def __rsub__(self, other):
        try:
            other = Poly._lift(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = Poly._lift(other)
        except TypeError:
            return NotImplemented
        if not self._coeffs or not other.coeffs:
            return Poly()
        product = [ZERO] * (len(self) + len(other) - 1)
        for i, left in enumerate(self._coeffs):
            if not left:
                continue
            for j, right in enumerate(other.coeffs):
                product[i + j] = product[i + j] + left * right
        return Poly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Poly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, scalar):
        """
        :param scalar: scalar factor
        :return: scalar * self
        """
        scalar = GaussianRational.coerce(scalar)
        return Poly([scalar * coeff for coeff in self._coeffs])

    def monic(self):
        """
        :return: self divided by its leading coefficient
        :raises: ZeroPolynomial
        """
        return self.scale(self.leading.inverse())

    def conj(self):
        """
        :return: polynomial with conjugated coefficients
        """
        return Poly([coeff.conjugate() for coeff in self._coeffs])

    def shift(self, power):
        """
        Multiply by z^power. Negative powers divide and require the low coefficients to vanish.

        :param power: int
        :return: Poly
        :raises: InternalInconsistency if z^-power does not divide self
        """
        if power >= 0 or not self._coeffs:
            return Poly([0] * power + list(self._coeffs)) if power > 0 else self
        if self.mult0() < -power:
            raise InternalInconsistency("z^{} does not divide {}".format(-power, self))
        return Poly(self._coeffs[-power:])

    def sharp(self):
        """
        z^deg * conj(p(1/conj(z))): conjugated coefficients in reverse order, leading zeros
        of the reversal dropped.

        :return: Poly
        """
        return Poly([coeff.conjugate() for coeff in reversed(self._coeffs)])

    def reversed_conj(self, length):
        """
        Formal degree-length reversal z^length * conj(p(1/conj(z))), keeping the zeros that
        sharp drops.

        :param length: formal degree, at least deg(self)
        :return: Poly
        """
        if self._coeffs and length < self.degree:
            raise ValueError("Formal degree {} below degree {}".format(length, self.degree))
        return Poly([self.coeff(length - k).conjugate() for k in range(length + 1)])

    def derivative(self):
        """
        :return: formal derivative
        """
        return Poly([coeff * k for k, coeff in enumerate(self._coeffs)][1:])

    def compose_moebius(self, alpha, beta, gamma, delta, degree=None):
        """
        Numerator of p((alpha z + beta)/(gamma z + delta)) cleared by (gamma z + delta)^degree.

        :param alpha: scalar
        :param beta: scalar
        :param gamma: scalar
        :param delta: scalar
        :param degree: clearing power, deg(self) by default
        :return: Poly
        """
        degree = self.degree if degree is None else degree
        if not self._coeffs:
            return Poly()
        top = Poly([beta, alpha])
        bottom = Poly([delta, gamma])
        result = Poly()
        for power, coeff in enumerate(self._coeffs):
            if coeff:
                result = result + (top ** power) * (bottom ** (degree - power)) * coeff
        return result

    def __call__(self, point):
        """
        Exact Horner evaluation.

        :param point: scalar
        :return: GaussianRational
        """
        point = GaussianRational.coerce(point)
        value = ZERO
        for coeff in reversed(self._coeffs):
            value = value * point + coeff
        return value

    def to_numpy(self):
        """
        :return: numpy complex array of ascending coefficients
        """
        return numpy.array([complex(coeff) for coeff in self._coeffs], dtype=complex)

    def evaluate(self, points):
        """
        Floating point evaluation.

        :param points: complex or numpy array of complex
        :return: complex or numpy array
        """
        if not self._coeffs:
            return numpy.zeros_like(numpy.asarray(points, dtype=complex))
        return npoly.polyval(points, self.to_numpy())

    def divrem(self, divisor):
        """
        See module function divrem.
        """
        return divrem(self, divisor)

    def exact_div(self, divisor):
        """
        Quotient of a division known to be exact.

        :param divisor: Poly
        :return: Poly
        :raises: InternalInconsistency if the remainder is nonzero
        """
        quotient, remainder = divrem(self, divisor)
        if remainder:
            raise InternalInconsistency("{} does not divide {}".format(divisor, self))
        return quotient

    def divides(self, other):
        """
        :param other: Poly
        :return: True if self divides other exactly
        """
        return not divrem(other, self)[1]

    def __repr__(self):
        return "Poly({!r})".format([str(coeff) for coeff in self._coeffs])

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for power, coeff in enumerate(self._coeffs):
            if not coeff:
                continue
            if power == 0:
                terms.append("({})".format(coeff))
            elif power == 1:
                terms.append("({})z".format(coeff))
            else:
                terms.append("({})z^{}".format(coeff, power))
        return " + ".join(terms)


Z = Poly([0, 1])


def sharp(poly):
    """
    Conjugate reversal poly^#.

    :param poly: Poly
    :return: Poly with deg = deg(poly) - mult0(poly)
    """
    return poly.sharp()


def self_inversive(poly):
    """
    Test poly = gamma * poly^# with gamma = poly(0)/conj(lead).

    :param poly: nonzero Poly
    :return: unimodular GaussianRational gamma, or None
    :raises: ZeroPolynomial
    """
    if not poly:
        raise ZeroPolynomial("self_inversive of the zero polynomial")
    gamma = poly.coeff(0) / poly.leading.conjugate()
    if not gamma:
        return None
    if poly != sharp(poly).scale(gamma):
        return None
    assertTrue(gamma.is_unimodular(), "Self-inversive constant {} not unimodular".format(gamma))
    return gamma


def sharp_sum_witness(first, second):
    """
    Witness (p1 + p2)^# = z^(n - n1) p1^# + z^(n - n2) p2^#, shifts possibly negative.

    :param first: nonzero Poly
    :param second: nonzero Poly
    :return: tuple (sharp(p1 + p2), n - n1, n - n2)
    :raises: ZeroPolynomial, ZeroSum
    """
    if not first or not second:
        raise ZeroPolynomial("sharp_sum_witness needs nonzero summands")
    total = first + second
    if not total:
        raise ZeroSum("p1 + p2 is the zero polynomial")
    shift1 = total.degree - first.degree
    shift2 = total.degree - second.degree
    # Clear negative shifts to compare as polynomials.
    lift = max(0, -shift1, -shift2)
    left = sharp(total).shift(lift)
    right = sharp(first).shift(shift1 + lift) + sharp(second).shift(shift2 + lift)
    assertEqual(left, right, "sharp sum identity failed for {} and {}".format(first, second))
    return sharp(total), shift1, shift2


def divrem(dividend, divisor):
    """
    Division with remainder over the Gaussian rationals.

    :param dividend: Poly
    :param divisor: nonzero Poly
    :return: tuple (quotient, remainder), deg(remainder) < deg(divisor)
    :raises: DivisionByZeroPolynomial
    """
    if not divisor:
        raise DivisionByZeroPolynomial("Division by the zero polynomial")
    if dividend.degree < divisor.degree:
        return Poly(), dividend
    remainder = list(dividend.coeffs)
    div_deg = divisor.degree
    lead_inv = divisor.leading.inverse()
    quotient = [ZERO] * (len(remainder) - div_deg)
    for k in range(len(remainder) - 1 - div_deg, -1, -1):
        factor = remainder[k + div_deg] * lead_inv
        quotient[k] = factor
        if factor:
            for j, coeff in enumerate(divisor.coeffs):
                remainder[k + j] = remainder[k + j] - factor * coeff
    return Poly(quotient), Poly(remainder[:div_deg])


def gcd(first, second):
    """
    Monic greatest common divisor.

    :param first: Poly
    :param second: Poly
    :return: monic Poly
    :raises: BothZero
    """
    if not first and not second:
        raise BothZero("gcd(0, 0) is undefined")
    left, right = first, second
    while right:
        left, right = right, divrem(left, right)[1]
    return left.monic()


def xgcd(first, second):
    """
    Extended Euclid: u * first + v * second = g with g monic.

    :param first: Poly
    :param second: Poly
    :return: tuple (g, u, v)
    :raises: BothZero
    """
    if not first and not second:
        raise BothZero("xgcd(0, 0) is undefined")
    old_r, rem = first, second
    old_s, s_coef = Poly.constant(1), Poly()
    old_t, t_coef = Poly(), Poly.constant(1)
    while rem:
        quotient, new_r = divrem(old_r, rem)
        old_r, rem = rem, new_r
        old_s, s_coef = s_coef, old_s - quotient * s_coef
        old_t, t_coef = t_coef, old_t - quotient * t_coef
    lead_inv = old_r.leading.inverse()
    return old_r.scale(lead_inv), old_s.scale(lead_inv), old_t.scale(lead_inv)


def squarefree_decomposition(poly):
    """
    Yun's algorithm. The product of factor**multiplicity equals poly / lead(poly).

    :param poly: nonzero Poly
    :return: list of (monic square-free Poly, multiplicity)
    :raises: ZeroPolynomial
    """
    if not poly:
        raise ZeroPolynomial("Square-free decomposition of the zero polynomial")
    if poly.degree == 0:
        return []
    derivative = poly.derivative()
    common = gcd(poly, derivative)
    current = poly.exact_div(common)
    cofactor = derivative.exact_div(common)
    delta = cofactor - current.derivative()
    factors = []
    multiplicity = 1
    while current.degree >= 1:
        factor = gcd(current, delta)
        current = current.exact_div(factor)
        cofactor = delta.exact_div(factor)
        delta = cofactor - current.derivative()
        if factor.degree >= 1:
            factors.append((factor, multiplicity))
        multiplicity += 1
    return factors


__all__ = ["Poly", "Z", "MINUS_INFINITY", "ONE", "sharp", "self_inversive",
           "sharp_sum_witness", "divrem", "gcd", "xgcd", "squarefree_decomposition"]
