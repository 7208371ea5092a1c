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

Real-valuedness of a symbol on the unit circle: the exact algebraic test, the Cayley
construction of real-valued symbols, and a sampling classifier for the circle image.
"""

import math

import numpy

from toeplitz_lib.Algebra.GaussianRational import I
from toeplitz_lib.Algebra.Poly import sharp, self_inversive
from toeplitz_lib.Configurations import resolve
from toeplitz_lib.RootLocation.numeric import numeric_roots
from toeplitz_lib.Symbol.RationalSymbol import make_symbol
from toeplitz_lib.ToeplitzErrors import NonRealCoefficients, NonRealPoles, InternalInconsistency

ARC_MERGE_TOLERANCE = 1e-6


class ImageClass(object):  # pylint: disable=too-few-public-methods
    """
    Enum for the shape of omega(T).
    """
    NOT_REAL_VALUED = "NotRealValued"
    REAL_PROPER_SUBSET = "RealProperSubset"
    REAL_FULL_LINE = "RealFullLine"


class SymmetryWitness(object):  # pylint: disable=too-few-public-methods
    """
    Certificate that omega is real on the circle: s = z^shift * s_tilde with s_tilde
    self-inversive, gamma the self-inversive constant of q.
    """
    def __init__(self, gamma, s_tilde, shift):
        self.gamma = gamma
        self.s_tilde = s_tilde
        self.shift = shift

    def __repr__(self):
        return "SymmetryWitness(gamma={!s}, s_tilde={!s}, shift={})".format(
            self.gamma, self.s_tilde, self.shift)


def _condition_five(omega):
    """
    :return: SymmetryWitness when the algebraic symmetry condition holds, else None
    """
    s_poly, q_poly = omega.s, omega.q
    shift = omega.m - omega.n
    if shift < 0 or s_poly.mult0() < shift:
        return None
    s_tilde = s_poly.shift(-shift)
    if self_inversive(s_tilde) is None:
        return None
    if q_poly.coeff(0) * s_poly.leading.conjugate() != \
            q_poly.leading.conjugate() * s_poly.coeff(shift):
        return None
    gamma = self_inversive(q_poly)
    if gamma is None:
        raise InternalInconsistency("Denominator {} of a RatT symbol is not self-inversive".format(
            q_poly))
    return SymmetryWitness(gamma, s_tilde, shift)


def omega_star_equals_omega(omega):
    """
    Cross-multiplication test of omega* = omega as rational functions.

    :param omega: RationalSymbol
    :return: bool
    """
    s_poly, q_poly = omega.s, omega.q
    shift = omega.m - omega.n
    if shift >= 0:
        return sharp(s_poly).shift(shift) * q_poly == s_poly * sharp(q_poly)
    return sharp(s_poly) * q_poly == s_poly.shift(-shift) * sharp(q_poly)


def real_on_circle(omega):
    """
    Decide omega(T) in R exactly for a RatT symbol.

    :param omega: RationalSymbol of class RatT
    :return: SymmetryWitness or None
    :raises: NotRatT; InternalInconsistency when the two symmetry tests disagree
    """
    omega.require_rat_t("real_on_circle")
    witness = _condition_five(omega)
    crosscheck = omega_star_equals_omega(omega)
    if (witness is not None) != crosscheck:
        raise InternalInconsistency(
            "Symmetry tests disagree for {}: algebraic condition {}, omega* = omega {}".format(
                omega, witness is not None, crosscheck))
    return witness


def _check_real(poly, name):
    if not poly.is_real():
        raise NonRealCoefficients("{} = {} has non-real coefficients".format(name, poly))


def cayley_compose(s_real, q_real, check_poles=True, config=None):
    """
    omega(z) = s_real(w) / q_real(w) with w = -i (z + 1)/(z - 1), cleared to polynomials.

    :param s_real: Poly with real coefficients
    :param q_real: Poly with real coefficients
    :param check_poles: verify numerically that q_real has only real roots
    :param config: LabConfiguration or None
    :return: RationalSymbol
    :raises: NonRealCoefficients, NonRealPoles
    """
    config = resolve(config)
    _check_real(s_real, "s")
    _check_real(q_real, "q")
    if check_poles and q_real.degree >= 1:
        for root in numeric_roots(q_real, config):
            if abs(root.imag) > config.tau * max(1.0, abs(root)):
                raise NonRealPoles("q = {} has the non-real root {}".format(q_real, root))
    degree = max(s_real.degree, q_real.degree, 0)
    s_poly = s_real.compose_moebius(-I, -I, 1, -1, degree)
    q_poly = q_real.compose_moebius(-I, -I, 1, -1, degree)
    return make_symbol(s_poly, q_poly, config)


def _pole_angles(omega, config):
    angles = sorted(math.atan2(root.imag, root.real) % (2 * math.pi)
                    for root in numeric_roots(omega.q, config))
    unique = []
    for angle in angles:
        if not unique or angle - unique[-1] > 10 * config.tau:
            unique.append(angle)
    if len(unique) > 1 and unique[0] + 2 * math.pi - unique[-1] <= 10 * config.tau:
        unique.pop()
    return unique


def _arc_interval(omega, start, stop, samples):
    """
    Image interval of omega on the open arc (start, stop), the endpoints being poles.
    """
    thetas = start + (stop - start) * numpy.arange(1, samples + 1) / (samples + 1.0)
    values = numpy.real(omega.evaluate(numpy.exp(1j * thetas)))
    offset = (stop - start) * 1e-7
    near = numpy.real(omega.evaluate(numpy.exp(1j * numpy.array([start + offset,
                                                                 stop - offset]))))
    low, high = float(numpy.min(values)), float(numpy.max(values))
    for limit in near:
        if limit > 0:
            high = float("inf")
        else:
            low = float("-inf")
    return low, high


def _covers_line(intervals):
    intervals = sorted(intervals)
    if not intervals or intervals[0][0] != float("-inf"):
        return False
    reach = intervals[0][1]
    for low, high in intervals[1:]:
        if low > reach + ARC_MERGE_TOLERANCE * max(1.0, abs(reach)):
            return False
        reach = max(reach, high)
    return reach == float("inf")


def circle_image_classify(omega, config=None):
    """
    Classify omega(T) as not real, a proper subset of R, or all of R. Advisory: the image is
    sampled on every arc between consecutive poles, with the one-sided pole limits taken
    from the sign of omega next to each pole.

    :param omega: RationalSymbol of class RatT
    :param config: LabConfiguration or None
    :return: ImageClass value
    :raises: NotRatT
    """
    config = resolve(config)
    if real_on_circle(omega) is None:
        return ImageClass.NOT_REAL_VALUED
    angles = _pole_angles(omega, config) if omega.m >= 1 else []
    if not angles:
        return ImageClass.REAL_PROPER_SUBSET
    bounds = angles + [angles[0] + 2 * math.pi]
    intervals = [_arc_interval(omega, bounds[k], bounds[k + 1], config.arc_samples)
                 for k in range(len(angles))]
    if _covers_line(intervals):
        return ImageClass.REAL_FULL_LINE
    return ImageClass.REAL_PROPER_SUBSET
