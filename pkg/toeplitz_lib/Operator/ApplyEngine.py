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

ApplyEngine module. Applies T_omega and its adjoint to rational Hardy space elements and
verifies the pairing, compression, Szego kernel and Sarason axiom relations exactly.
"""

from toeplitz_lib.Algebra.GaussianRational import GaussianRational, ZERO
from toeplitz_lib.Algebra.Poly import Poly, Z, sharp, divrem, xgcd
from toeplitz_lib.Algebra.RationalFunction import RationalFunction
from toeplitz_lib.Algebra import matrices
from toeplitz_lib.Operator.descriptors import DomElement
from toeplitz_lib.Symbol.RationalSymbol import omega_star
from toeplitz_lib.ToeplitzErrors import DegreeTooLarge, LambdaNotInDisk, IdentityFailure
from toeplitz_lib.tools.asserts import assertEqual, assertTrue


class Side(object):  # pylint: disable=too-few-public-methods
    """
    Enum for the operator a domain question refers to.
    """
    FORWARD = "Forward"
    ADJOINT = "Adjoint"


def _as_rational(value):
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)


def _check_remainder_degree(omega, r_poly):
    if r_poly.degree >= omega.m:
        raise DegreeTooLarge("r = {} must have degree below m = {}".format(r_poly, omega.m))


def decompose_domain_element(omega, function):
    """
    Write f = q h + r with deg r < m.

    :param omega: RationalSymbol of class RatT
    :param function: RationalFunction with poles off the closed disk
    :return: DomElement
    :raises: NotRatT, PolesInClosedDisk
    """
    omega.require_rat_t("decompose_domain_element")
    function = _as_rational(function).require_hardy()
    numer, denom, q_poly = function.numer, function.denom, omega.q
    _, denom_inverse, _ = xgcd(denom, q_poly)
    r_poly = divrem(numer * denom_inverse, q_poly)[1]
    h_numer = (numer - r_poly * denom).exact_div(q_poly)
    element = DomElement(RationalFunction(h_numer, denom), r_poly)
    assertEqual(element.value(q_poly), function,
                "Domain decomposition does not reconstruct {}".format(function))
    return element


def dom_contains(omega, function, side=Side.FORWARD):
    """
    Domain membership of a rational Hardy function.

    Forward: every such f lies in q H^p + P_(m-1), see decompose_domain_element.
    Adjoint: f lies in q# H^p' iff q# divides the numerator.

    :raises: NotRatT, PolesInClosedDisk
    """
    omega.require_rat_t("dom_contains")
    function = _as_rational(function).require_hardy()
    if side == Side.FORWARD:
        return True
    return sharp(omega.q).divides(function.numer)


def apply_forward(omega, element):
    """
    T_omega (q h + r) = s h + r~ with r s = r~ q + r2, deg r2 < m.

    :param omega: RationalSymbol of class RatT
    :param element: DomElement
    :return: RationalFunction
    :raises: NotRatT, DegreeTooLarge
    """
    omega.require_rat_t("apply_forward")
    _check_remainder_degree(omega, element.r)
    r_tilde = divrem(element.r * omega.s, omega.q)[0]
    return element.h * omega.s + r_tilde


def _drop_taylor(function, count):
    """
    T_(z^-count) f = (f - first count Taylor terms) / z^count.
    """
    if count <= 0 or function.is_zero():
        return function
    head = Poly(function.taylor(count))
    return RationalFunction((function.numer - head * function.denom).shift(-count),
                            function.denom)


def apply_adjoint(omega, v_function):
    """
    Adjoint applied to g = q# v: the analytic part of z^(m-n) s# v.

    :param omega: RationalSymbol of class RatT
    :param v_function: RationalFunction or Poly with poles off the closed disk
    :return: RationalFunction
    :raises: NotRatT, PolesInClosedDisk
    """
    omega.require_rat_t("apply_adjoint")
    v_function = _as_rational(v_function).require_hardy("v")
    shift = omega.m - omega.n
    product = v_function * sharp(omega.s)
    if shift >= 0:
        return product * Poly.monomial(shift)
    return _drop_taylor(product, -shift)


def hardy_pairing(first, second):
    """
    sum_k f_k conj(g_k) in closed form: the residue sum of f(z) conj(g)(1/z) / z inside the disk.

    :param first: RationalFunction with poles off the closed disk
    :param second: RationalFunction with poles off the closed disk
    :return: GaussianRational
    :raises: PolesInClosedDisk
    """
    first = _as_rational(first).require_hardy("f")
    second = _as_rational(second).require_hardy("g")
    if first.is_zero() or second.is_zero():
        return ZERO
    length = max(second.numer.degree, second.denom.degree)
    reflected_numer = second.numer.reversed_conj(length)
    reflected_denom = second.denom.reversed_conj(length)
    poles = reflected_denom * Z
    numer = first.numer * reflected_numer
    _, inverse, _ = xgcd(first.denom, poles)
    residue_poly = divrem(numer * inverse, poles)[1]
    return residue_poly.coeff(poles.degree - 1) / poles.leading


def adjoint_identity_check(omega, element, v_function):
    """
    <T f, q# v> - <q h + r, T* (q# v)>, exactly zero for a correct adjoint.

    :return: GaussianRational residual
    """
    forward = apply_forward(omega, element)
    backward = apply_adjoint(omega, v_function)
    q_sharp_v = _as_rational(v_function) * sharp(omega.q)
    return hardy_pairing(forward, q_sharp_v) - hardy_pairing(element.value(omega.q), backward)


class ToeplitzCompression(object):
    """
    P_k T_phi restricted to P_(k-1) for an analytic polynomial symbol phi, as a k x k
    DomainMatrix over QQ_I.
    """
    def __init__(self, matrix):
        self.matrix = matrix

    @property
    def size(self):
        """
        :return: k
        """
        return self.matrix.shape[0]

    @property
    def entries(self):
        """
        :return: list of rows of GaussianRational
        """
        return matrices.to_rows(self.matrix)

    def adjoint(self):
        """
        :return: ToeplitzCompression of the conjugate transpose
        """
        return ToeplitzCompression(matrices.conjugate_transpose(self.matrix))

    def apply(self, poly):
        """
        :param poly: Poly of degree < k
        :return: Poly
        """
        return Poly(matrices.apply(self.matrix, [poly.coeff(k) for k in range(self.size)]))

    def solve(self, poly):
        """
        :param poly: right hand side of degree < k
        :return: Poly x with matrix * x = poly
        :raises: InternalInconsistency for a singular compression
        """
        return Poly(matrices.solve(self.matrix, [poly.coeff(k) for k in range(self.size)]))


def toeplitz_compression(symbol, size):
    """
    :param symbol: Poly phi
    :param size: k
    :return: ToeplitzCompression with entry (i, j) = phi_(i-j)
    """
    return ToeplitzCompression(matrices.lower_toeplitz(symbol, size))


def compression_solve(omega, r1_poly):
    """
    Solve T*_(q#,m) r = T*_(s#,m) T*_(z^(m-n),m) r1 for r.

    :param omega: proper RationalSymbol of class RatT
    :param r1_poly: Poly of degree < m
    :return: Poly r, the quotient in s r1 = q r + r2
    :raises: NotRatT, NotProper, DegreeTooLarge
    """
    omega.require_rat_t("compression_solve")
    omega.require_proper("compression_solve")
    _check_remainder_degree(omega, r1_poly)
    size = omega.m
    if size == 0:
        return Poly()
    q_star = toeplitz_compression(sharp(omega.q), size).adjoint()
    s_star = toeplitz_compression(sharp(omega.s), size).adjoint()
    shift_star = toeplitz_compression(Poly.monomial(omega.m - omega.n), size).adjoint()
    return q_star.solve(s_star.apply(shift_star.apply(r1_poly)))


def szego_eigen(omega, point):
    """
    Eigenvalue certificate of T_omega k_lambda = conj(omega*(lambda)) k_lambda: returns c and r
    with s + (1 - conj(lambda) z) r = q c, deg r < m.

    :param omega: proper RationalSymbol of class RatT
    :param point: lambda with |lambda| < 1
    :return: tuple (c, r)
    :raises: NotRatT, NotProper, LambdaNotInDisk, IdentityFailure
    """
    omega.require_rat_t("szego_eigen")
    omega.require_proper("szego_eigen")
    point = GaussianRational.coerce(point)
    if point.abs2() >= 1:
        raise LambdaNotInDisk("lambda = {} is not in the open unit disk".format(point))
    eigenvalue = omega_star(omega)(point).conjugate()
    kernel_factor = Poly([1, -point.conjugate()])
    r_poly, remainder = divrem(omega.q.scale(eigenvalue) - omega.s, kernel_factor)
    if remainder:
        raise IdentityFailure("1 - conj({})z does not divide q c - s".format(point))
    assertEqual(omega.s + kernel_factor * r_poly, omega.q.scale(eigenvalue),
                "Szego identity failed at {}".format(point), error=IdentityFailure)
    assertTrue(r_poly.degree < omega.m, "Szego remainder degree {} not below m".format(
        r_poly.degree), error=IdentityFailure)
    return eigenvalue, r_poly


def backward_shift(function):
    """
    (f - f(0)) / z.

    :raises: DenominatorVanishesAtZero
    """
    function = _as_rational(function)
    return (function - function.value_at_zero()) / RationalFunction(Z)


def multiple_space_contains(function, factor):
    """
    f in factor * H^2 for a rational Hardy f.

    :param function: RationalFunction with poles off the closed disk
    :param factor: nonzero Poly
    :return: bool
    """
    function = _as_rational(function).require_hardy()
    return RationalFunction(function.numer, function.denom * factor).poles_in_closed_disk() == 0


class SarasonReport(object):  # pylint: disable=too-few-public-methods
    """
    Named axiom verdicts for one domain element.
    """
    def __init__(self):
        self.checks = []

    def add(self, name, status):
        """
        :param name: check name
        :param status: bool, or None for a check that does not apply
        """
        self.checks.append((name, None if status is None else bool(status)))

    @property
    def passed(self):
        """
        :return: True if every applicable check holds
        """
        return all(status is not False for _, status in self.checks)


def shift_domain_element(omega, element):
    """
    z (q h + r) = q (z h + a) + b with z r = a q + b.

    :return: DomElement
    """
    quotient, remainder = divrem(element.r * Z, omega.q)
    return DomElement(element.h * Z + quotient, remainder)


def sarason_axioms_check(omega, element):
    """
    Check on one element that z Dom is in Dom, that the backward shift of T(z f) is T f and,
    when f(0) = 0, that the backward shift of f is in Dom. For f(0) != 0 the last check is
    recorded as None.

    :param omega: RationalSymbol of class RatT
    :param element: DomElement
    :return: SarasonReport
    """
    omega.require_rat_t("sarason_axioms_check")
    q_poly = omega.q
    value = element.value(q_poly)
    report = SarasonReport()

    shifted = shift_domain_element(omega, element)
    report.add("shift_invariant_domain",
              shifted.value(q_poly) == value * Z and shifted.r.degree < omega.m
              and shifted.h.poles_in_closed_disk() == 0)
    report.add("compressed_shift_identity",
              backward_shift(apply_forward(omega, shifted)) == apply_forward(omega, element))

    if value.value_at_zero():
        report.add("backward_shift_domain", None)
        return report
    h_zero = element.h.value_at_zero()
    h_back = backward_shift(element.h)
    r_back = (q_poly - q_poly.coeff(0)).shift(-1).scale(h_zero) + \
        (element.r - element.r.coeff(0)).shift(-1)
    back = DomElement(h_back, r_back)
    report.add("backward_shift_domain",
              back.value(q_poly) == backward_shift(value) and r_back.degree < omega.m)
    return report


__all__ = ["Side", "decompose_domain_element", "dom_contains", "apply_forward", "apply_adjoint",
           "hardy_pairing", "adjoint_identity_check", "ToeplitzCompression",
           "toeplitz_compression", "compression_solve", "szego_eigen", "backward_shift",
           "multiple_space_contains", "SarasonReport", "shift_domain_element",
           "sarason_axioms_check"]
