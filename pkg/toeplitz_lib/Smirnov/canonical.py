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

canonical module, the canonical Smirnov form b/a of a rational symbol through Fejer-Riesz
spectral factorization, and the descriptor identities linking it to Sarason operators.
"""

import numpy

from toeplitz_lib.Algebra.Poly import gcd
from toeplitz_lib.Configurations import resolve
from toeplitz_lib.Operator.profile import forward_domain, adjoint_domain, sarason_domain
from toeplitz_lib.RootLocation.numeric import NumericPoly, numeric_roots
from toeplitz_lib.Symbol.RationalSymbol import omega_star
from toeplitz_lib.ToeplitzErrors import NotCoprime, DenominatorVanishesAtZero
from toeplitz_lib.ToeplitzErrors import CircleRootDetected, ZeroSymbol
from toeplitz_lib.tools.asserts import assertTrue


def _circle_points(count):
    return numpy.exp(2j * numpy.pi * numpy.arange(count) / float(count))


def _laurent_numerator(s_poly, q_poly):
    """
    z^K (|s|^2 + |q|^2) on the circle as an exact polynomial, K = max degree.
    """
    length = max(s_poly.degree, q_poly.degree)
    return s_poly * s_poly.reversed_conj(length) + q_poly * q_poly.reversed_conj(length)


def _outside_representatives(roots, tau, tolerance):
    """
    Pair roots as (alpha, 1/conj(alpha)) and keep the member outside the closed disk.
    """
    outside = [root for root in roots if abs(root) > 1 + tau]
    inside = [root for root in roots if abs(root) < 1 - tau]
    if len(outside) != len(inside) or len(outside) + len(inside) != len(roots):
        raise CircleRootDetected("Fejer-Riesz polynomial has roots on the unit circle")
    unmatched = list(inside)
    for root in outside:
        mirror = 1.0 / numpy.conj(root)
        distances = [abs(candidate - mirror) for candidate in unmatched]
        best = int(numpy.argmin(distances))
        if distances[best] > tolerance * max(1.0, abs(mirror)):
            raise CircleRootDetected("Root {} has no reflected partner".format(root))
        unmatched.pop(best)
    return outside


def fejer_riesz(s_poly, q_poly, config=None):
    """
    Outer polynomial r with |r|^2 = |s|^2 + |q|^2 on the circle, no roots in the closed disk and
    arg r(0) = arg q(0).

    :param s_poly: nonzero Poly
    :param q_poly: Poly with q(0) != 0, coprime to s_poly
    :param config: LabConfiguration or None
    :return: NumericPoly r
    :raises: ZeroSymbol, NotCoprime, DenominatorVanishesAtZero, CircleRootDetected
    """
    config = resolve(config)
    if not s_poly:
        raise ZeroSymbol("Fejer-Riesz factor needs a nonzero numerator")
    if not q_poly.coeff(0):
        raise DenominatorVanishesAtZero("q({}) vanishes at 0".format(q_poly))
    if gcd(s_poly, q_poly).degree >= 1:
        raise NotCoprime("{} and {} share a root".format(s_poly, q_poly))
    laurent = _laurent_numerator(s_poly, q_poly)
    laurent = laurent.shift(-laurent.mult0())
    half = laurent.degree // 2
    q_zero = complex(q_poly.coeff(0))
    phase = q_zero / abs(q_zero)
    if half == 0:
        return NumericPoly([numpy.sqrt(complex(laurent.coeff(0)).real) * phase])

    roots = numeric_roots(laurent, config)
    outside = _outside_representatives(roots, config.tau, config.pairing)
    raw = NumericPoly.from_roots(outside)
    points = _circle_points(config.circle_points)
    modulus = numpy.real(laurent.evaluate(points) * points ** (-half))
    scale_squared = float(numpy.mean(modulus / numpy.abs(raw.evaluate(points)) ** 2))
    ratio = raw.evaluate(0j) / q_zero
    rotation = numpy.conj(ratio) / abs(ratio)
    return raw * (numpy.sqrt(scale_squared) * rotation)


class CanonicalTriple(object):  # pylint: disable=too-many-instance-attributes
    """
    omega = b/a with a = q/r, b = s/r, |a|^2 + |b|^2 = 1 on the circle and a(0) > 0.
    """
    def __init__(self, r_poly, s_poly, q_poly):
        self.r = r_poly  # pylint: disable=invalid-name
        self.a_numer = q_poly
        self.a_denom = r_poly
        self.b_numer = s_poly
        self.b_denom = r_poly
        self.a_at_zero = complex(q_poly.coeff(0)) / complex(r_poly.evaluate(0j))
        self.circle_residual = None
        self.modulus_residual = None
        self.min_root_modulus = None
        self.sarason_domain = None

    def a(self, points):  # pylint: disable=invalid-name
        """
        :return: a evaluated at complex points
        """
        return self.a_numer.evaluate(points) / self.a_denom.evaluate(points)

    def b(self, points):  # pylint: disable=invalid-name
        """
        :return: b evaluated at complex points
        """
        return self.b_numer.evaluate(points) / self.b_denom.evaluate(points)


def canonical_form(omega, config=None):
    """
    Canonical triple of a RatT symbol with residual certificates and the Sarason domain q H^2.

    :param omega: RationalSymbol of class RatT
    :param config: LabConfiguration or None
    :return: CanonicalTriple
    :raises: NotRatT; InternalInconsistency when a certificate exceeds its tolerance
    """
    config = resolve(config)
    omega.require_rat_t("canonical_form")
    s_poly, q_poly = omega.s, omega.q
    r_poly = fejer_riesz(s_poly, q_poly, config)
    triple = CanonicalTriple(r_poly, s_poly, q_poly)
    points = _circle_points(config.circle_points)
    r_abs2 = numpy.abs(r_poly.evaluate(points)) ** 2
    target = numpy.abs(s_poly.evaluate(points)) ** 2 + numpy.abs(q_poly.evaluate(points)) ** 2
    triple.modulus_residual = float(numpy.max(numpy.abs(r_abs2 - target)))
    triple.circle_residual = float(numpy.max(numpy.abs(
        numpy.abs(triple.a(points)) ** 2 + numpy.abs(triple.b(points)) ** 2 - 1)))
    roots = r_poly.roots()
    triple.min_root_modulus = float(numpy.min(numpy.abs(roots))) if len(roots) else None
    triple.sarason_domain = sarason_domain(omega)

    tolerance = config.fejer_riesz
    assertTrue(triple.circle_residual <= tolerance,
               "|a|^2 + |b|^2 - 1 residual {:.3e}".format(triple.circle_residual))
    assertTrue(triple.modulus_residual <= tolerance * max(1.0, float(numpy.max(target))),
               "|r|^2 residual {:.3e}".format(triple.modulus_residual))
    assertTrue(abs(triple.a_at_zero.imag) <= config.phase and triple.a_at_zero.real > 0,
               "a(0) = {} is not positive".format(triple.a_at_zero))
    assertTrue(triple.min_root_modulus is None or triple.min_root_modulus >= 1 + config.tau,
               "r has a root of modulus {}".format(triple.min_root_modulus))
    return triple


def sarason_correspondence_checks(omega, config=None):
    """
    Descriptor identities: the Sarason domain q H^2 is the domain of T_omega without its
    polynomial summand, and for proper symbols the adjoint domain equals the Sarason domain of
    omega*.

    :param omega: RationalSymbol of class RatT
    :return: list of (name, bool)
    :raises: InternalInconsistency when an identity fails
    """
    omega.require_rat_t("sarason_correspondence_checks")
    domain = forward_domain(omega)
    sarason = sarason_domain(omega)
    checks = [("sarason_domain_is_domain_core",
               domain.without_finite_span().same_space(sarason)),
              ("sarason_domain_equals_domain_iff_constant_q",
               domain.same_space(sarason) == (omega.m == 0))]
    if omega.is_proper():
        star = omega_star(omega).flatten(config)
        checks.append(("adjoint_domain_is_sarason_domain_of_star",
                       adjoint_domain(omega).same_space(sarason_domain(star))))
    for name, status in checks:
        assertTrue(status, "{} failed for {}".format(name, omega))
    return checks
