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

RationalSymbol module, contains the rational symbol omega = s/q, its boundary conjugate
omega*, and the three factor split omega = omega_- (z^kappa omega_0) omega_+.
"""

from toeplitz_lib.Algebra.GaussianRational import GaussianRational, I
from toeplitz_lib.Algebra.Poly import Poly, gcd, sharp
from toeplitz_lib.Algebra.RationalFunction import RationalFunction
from toeplitz_lib.Configurations import resolve
from toeplitz_lib.LogManager import get_component_logger
from toeplitz_lib.RootLocation.numeric import relative_residual
from toeplitz_lib.RootLocation.rootloc import factor_circle
from toeplitz_lib.ToeplitzErrors import ZeroDenominator, ZeroSymbol, NotRatT, NotProper
from toeplitz_lib.ToeplitzErrors import NonRealCoefficients, InexactFactorization
from toeplitz_lib.ToeplitzErrors import InternalInconsistency, DomainError
from toeplitz_lib.tools.asserts import assertEqual


def _logger():
    return get_component_logger("symbol", "SYM")


class SymbolClass(object):  # pylint: disable=too-few-public-methods
    """
    Enum for symbol classes.
    """
    RAT_T = "RatT"
    GENERAL_RAT = "GeneralRat"


class ReductionReport(object):  # pylint: disable=too-few-public-methods
    """
    Record of the common factor divided out of the user given (s, q).
    """
    def __init__(self, original_s, original_q, common_factor):
        self.original_s = original_s
        self.original_q = original_q
        self.common_factor = common_factor

    @property
    def reduced(self):
        """
        :return: True if a nonconstant common factor was removed
        """
        return self.common_factor.degree >= 1


class RationalSymbol(object):
    """
    Reduced coprime pair (s, q) with its circle factorizations. Construct with make_symbol.
    """
    def __init__(self, s, q, s_split, q_split, reduction):
        self.s = s
        self.q = q
        self.s_split = s_split
        self.q_split = q_split
        self.reduction = reduction
        counts = q_split.counts
        self.symbol_class = SymbolClass.RAT_T if counts.inside == 0 and counts.outside == 0 \
            else SymbolClass.GENERAL_RAT

    @property
    def m(self):  # pylint: disable=invalid-name
        """
        :return: deg(q)
        """
        return self.q.degree

    @property
    def n(self):  # pylint: disable=invalid-name
        """
        :return: deg(s)
        """
        return self.s.degree

    @property
    def m_minus(self):
        """
        :return: number of poles inside the disk
        """
        return self.q_split.counts.inside

    @property
    def m_zero(self):
        """
        :return: number of poles on the circle
        """
        return self.q_split.counts.on_circle

    @property
    def m_plus(self):
        """
        :return: number of poles outside the closed disk
        """
        return self.q_split.counts.outside

    @property
    def n_minus(self):
        """
        :return: number of zeroes inside the disk
        """
        return self.s_split.counts.inside

    @property
    def n_zero(self):
        """
        :return: number of zeroes on the circle
        """
        return self.s_split.counts.on_circle

    @property
    def n_plus(self):
        """
        :return: number of zeroes outside the closed disk
        """
        return self.s_split.counts.outside

    def is_rat_t(self):
        """
        :return: True if every pole lies on the unit circle
        """
        return self.symbol_class == SymbolClass.RAT_T

    def require_rat_t(self, operation):
        """
        :param operation: name used in the error message
        :raises: NotRatT
        """
        if not self.is_rat_t():
            raise NotRatT("{} needs a symbol with all poles on the unit circle, {} has "
                          "{} pole(s) off the circle".format(operation, self,
                                                            self.m_minus + self.m_plus))

    def is_proper(self):
        """
        :return: True if deg(s) <= deg(q)
        """
        return self.n <= self.m

    def require_proper(self, operation):
        """
        :param operation: name used in the error message
        :raises: NotProper
        """
        if not self.is_proper():
            raise NotProper("{} needs a proper symbol, got deg(s) = {} > deg(q) = {}".format(
                operation, self.n, self.m))

    def as_rational_function(self):
        """
        :return: RationalFunction s/q
        """
        return RationalFunction(self.s, self.q)

    def same_function(self, other):
        """
        Cross-multiplication equality with another RationalSymbol or ShiftedSymbol.

        :return: bool
        """
        if isinstance(other, ShiftedSymbol):
            return other.same_function(self)
        return self.s * other.q == other.s * self.q

    def __call__(self, point):
        """
        Exact evaluation.

        :param point: scalar
        :return: GaussianRational
        """
        return self.as_rational_function()(point)

    def evaluate(self, points):
        """
        Floating point evaluation.

        :param points: complex or numpy array
        """
        return self.s.evaluate(points) / self.q.evaluate(points)

    def __repr__(self):
        return "RationalSymbol(s={!r}, q={!r})".format(self.s, self.q)

    def __str__(self):
        return "({!s}) / ({!s})".format(self.s, self.q)


class ShiftedSymbol(object):
    """
    z^shift * numer / denom, the shift kept explicit and possibly negative. numer and denom are
    Poly, or NumericPoly for inexact circle factors.
    """
    def __init__(self, shift, numer, denom):
        self.shift = shift
        self.numer = numer
        self.denom = denom

    @property
    def exact(self):
        """
        :return: True if both polynomials are exact
        """
        return isinstance(self.numer, Poly) and isinstance(self.denom, Poly)

    def cleared(self):
        """
        Numerator and denominator with the shift multiplied into one of them.

        :return: tuple (Poly, Poly)
        :raises: InexactFactorization for numeric parts
        """
        if not self.exact:
            raise InexactFactorization("Shifted symbol has numeric factors")
        if self.shift >= 0:
            return self.numer.shift(self.shift), self.denom
        return self.numer, self.denom.shift(-self.shift)

    def flatten(self, config=None):
        """
        :return: RationalSymbol with the shift multiplied in
        """
        numer, denom = self.cleared()
        return make_symbol(numer, denom, config)

    def as_rational_function(self):
        """
        :return: RationalFunction
        """
        numer, denom = self.cleared()
        return RationalFunction(numer, denom)

    def same_function(self, other):
        """
        Cross-multiplication equality with a RationalSymbol or ShiftedSymbol.

        :return: bool
        """
        numer, denom = self.cleared()
        if isinstance(other, ShiftedSymbol):
            other_numer, other_denom = other.cleared()
        else:
            other_numer, other_denom = other.s, other.q
        return numer * other_denom == other_numer * denom

    def evaluate(self, points):
        """
        Floating point evaluation.

        :param points: complex or numpy array
        """
        return points ** self.shift * self.numer.evaluate(points) / self.denom.evaluate(points)

    def __call__(self, point):
        """
        Exact evaluation at a nonzero point or, for shift >= 0, at any point.
        """
        return self.as_rational_function()(point)

    def __repr__(self):
        return "ShiftedSymbol({}, {!r}, {!r})".format(self.shift, self.numer, self.denom)

    def __str__(self):
        return "z^{} * ({!s}) / ({!s})".format(self.shift, self.numer, self.denom)


class WienerHopfSplit(object):  # pylint: disable=too-few-public-methods
    """
    omega = minus * (z^kappa * zero) * plus with minus = s_-/(z^kappa q_-), zero = s_0/q_0 and
    plus = s_+/q_+, the scalar units carried by plus.
    """
    def __init__(self, kappa, minus, zero, plus):
        self.kappa = kappa
        self.minus = minus
        self.zero = zero
        self.plus = plus

    @property
    def exact(self):
        """
        :return: True if every factor is exact
        """
        return self.minus.exact and self.zero.exact and self.plus.exact

    def zero_symbol(self, config=None):
        """
        :return: omega_0 as a RationalSymbol
        :raises: InexactFactorization
        """
        return self.zero.flatten(config)


def make_symbol(s_in, q_in, config=None):
    """
    Build a RationalSymbol, dividing out common factors of s and q.

    :param s_in: numerator Poly
    :param q_in: denominator Poly
    :param config: LabConfiguration or None
    :return: RationalSymbol
    :raises: ZeroDenominator, ZeroSymbol
    """
    if not q_in:
        raise ZeroDenominator("Symbol denominator q is the zero polynomial")
    if not s_in:
        raise ZeroSymbol("Symbol numerator s is the zero polynomial")
    common = gcd(s_in, q_in)
    s_out, q_out = s_in, q_in
    if common.degree >= 1:
        s_out = s_in.exact_div(common)
        q_out = q_in.exact_div(common)
        _logger().warning("Symbol not coprime, divided out common factor %s: s = %s, q = %s",
                          common, s_out, q_out)
    config = resolve(config)
    return RationalSymbol(s_out, q_out, factor_circle(s_out, config), factor_circle(q_out, config),
                          ReductionReport(s_in, q_in, common))


def omega_star(omega):
    """
    Boundary conjugate symbol omega*(z) = z^(m-n) s#(z) / q#(z).

    :param omega: RationalSymbol
    :return: ShiftedSymbol
    """
    return ShiftedSymbol(omega.m - omega.n, sharp(omega.s), sharp(omega.q))


def wiener_hopf_split(omega, config=None):
    """
    Split omega = omega_- (z^kappa omega_0) omega_+ with kappa = n_- - m_-.

    :param omega: RationalSymbol
    :param config: LabConfiguration or None
    :return: WienerHopfSplit
    :raises: InternalInconsistency if the product does not reconstruct omega
    """
    s_split, q_split = omega.s_split, omega.q_split
    kappa = omega.n_minus - omega.m_minus
    minus = ShiftedSymbol(-kappa, s_split.part_inside, q_split.part_inside)
    zero = ShiftedSymbol(0, s_split.part_on, q_split.part_on)
    if s_split.exact and q_split.exact:
        plus = ShiftedSymbol(0, s_split.part_outside.scale(s_split.unit),
                             q_split.part_outside.scale(q_split.unit))
        left = s_split.part_inside * s_split.part_on * plus.numer * omega.q
        right = q_split.part_inside * q_split.part_on * plus.denom * omega.s
        assertEqual(left, right, "Wiener-Hopf product does not reconstruct {}".format(omega))
    else:
        plus = ShiftedSymbol(0, s_split.part_outside * s_split.unit,
                             q_split.part_outside * q_split.unit)
        left = s_split.part_inside * s_split.part_on * plus.numer
        right = q_split.part_inside * q_split.part_on * plus.denom
        residual = max(relative_residual(left.to_numpy(), omega.s.to_numpy()),
                       relative_residual(right.to_numpy(), omega.q.to_numpy()))
        if residual > resolve(config).reconstruction:
            raise InternalInconsistency("Wiener-Hopf product residual {:.3e} for {}".format(
                residual, omega))
    return WienerHopfSplit(kappa, minus, zero, plus)


def add_real_constant(omega, constant, config=None):
    """
    :param omega: RationalSymbol
    :param constant: real rational
    :return: RationalSymbol omega + constant
    :raises: NonRealCoefficients for a non-real constant
    """
    constant = GaussianRational.coerce(constant)
    if not constant.is_real():
        raise NonRealCoefficients("Constant {} is not real".format(constant))
    return make_symbol(omega.s + omega.q.scale(constant), omega.q, config)


def helson_symbol(power, config=None):
    """
    omega_k = (-i)^k (z+1)^k / (z-1)^k.

    :param power: k >= 1
    :return: RationalSymbol
    """
    if power < 1:
        raise DomainError("Helson family needs k >= 1, got {}".format(power))
    s_poly = (Poly([1, 1]) ** power).scale((-I) ** power)
    q_poly = Poly([-1, 1]) ** power
    return make_symbol(s_poly, q_poly, config)


def quadratic_family(parameter, config=None):
    """
    omega = i(1 + a z + z^2) / (1 - z^2).

    :param parameter: real rational a
    :return: RationalSymbol
    """
    parameter = GaussianRational.coerce(parameter)
    s_poly = Poly([1, parameter, 1]).scale(I)
    q_poly = Poly([1, 0, -1])
    return make_symbol(s_poly, q_poly, config)


def symbol_from_roots(zeros, poles, lead=1, config=None):
    """
    :param zeros: roots of s, repeated by multiplicity
    :param poles: roots of q, repeated by multiplicity
    :param lead: leading coefficient of s
    :return: RationalSymbol
    """
    return make_symbol(Poly.from_roots(zeros, lead), Poly.from_roots(poles), config)


__all__ = ["SymbolClass", "ReductionReport", "RationalSymbol", "ShiftedSymbol",
           "WienerHopfSplit", "make_symbol", "omega_star", "wiener_hopf_split",
           "add_real_constant", "helson_symbol", "quadratic_family", "symbol_from_roots"]
