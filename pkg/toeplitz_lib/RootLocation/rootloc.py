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

rootloc module, locates polynomial roots relative to the unit circle. Counts are exact;
the explicit split p = unit * p_inside * p_on * p_outside is exact whenever its parts have
Gaussian-rational coefficients and numeric otherwise.
"""

from collections import namedtuple
from fractions import Fraction

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.Algebra.Poly import Poly, gcd, sharp, divrem
from toeplitz_lib.Configurations import resolve
from toeplitz_lib.LogManager import get_component_logger
from toeplitz_lib.RootLocation.numeric import NumericPoly, numeric_roots, classify_roots
from toeplitz_lib.RootLocation.numeric import relative_residual
from toeplitz_lib.RootLocation.schur_cohn import schur_cohn_inside_count
from toeplitz_lib.RootLocation.schur_cohn import cohn_test, closed_disk_test
from toeplitz_lib.RootLocation.sturm import circle_root_count
from toeplitz_lib.ToeplitzErrors import ZeroPolynomial, InternalInconsistency

SNAP_DENOMINATOR = 10 ** 6


class RootCounts(namedtuple("RootCounts", ["inside", "on_circle", "outside"])):
    """
    Root counts with multiplicity relative to the unit circle.
    """
    __slots__ = ()

    @property
    def total(self):
        """
        :return: inside + on_circle + outside
        """
        return self.inside + self.on_circle + self.outside

    @property
    def closed_disk(self):
        """
        :return: inside + on_circle
        """
        return self.inside + self.on_circle

    def __add__(self, other):
        return RootCounts(self.inside + other[0], self.on_circle + other[1],
                          self.outside + other[2])

    def to_dict(self):
        """
        :return: dict for reports
        """
        return {"inside": self.inside, "on_circle": self.on_circle, "outside": self.outside}


class CircleFactorization(object):
    """
    p = unit * part_inside * part_on * part_outside with monic parts. exact tells whether the
    parts are Poly (exact) or NumericPoly.
    """
    def __init__(self, unit, part_inside, part_on, part_outside, counts, exact):
        self.unit = unit
        self.part_inside = part_inside
        self.part_on = part_on
        self.part_outside = part_outside
        self.counts = counts
        self.exact = exact

    def reconstruct(self):
        """
        :return: unit * part_inside * part_on * part_outside
        """
        if self.exact:
            return (self.part_inside * self.part_on * self.part_outside).scale(self.unit)
        return self.part_inside * self.part_on * self.part_outside * self.unit

    def __repr__(self):
        return "CircleFactorization(unit={!s}, inside={!s}, on={!s}, outside={!s}, " \
               "exact={})".format(self.unit, self.part_inside, self.part_on,
                                  self.part_outside, self.exact)


def _logger():
    return get_component_logger("rootloc", "ROO")


def _circle_core(core):
    """
    :param core: Poly with core(0) != 0
    :return: tuple (d = gcd(core, core#), number of circle roots of d)
    """
    common = gcd(core, sharp(core))
    return common, circle_root_count(common)


def count_roots(poly):
    """
    Exact root counts (inside, on_circle, outside) with multiplicity.

    The circle roots and the reciprocal pairs of p live in d = gcd(p, p#); the circle count
    of d is exact through the Cayley transform and the rest of d splits evenly. The cofactor
    p/d is counted with the Schur-Cohn chain.

    :param poly: nonzero Poly
    :return: RootCounts
    :raises: ZeroPolynomial
    """
    if not poly:
        raise ZeroPolynomial("count_roots of the zero polynomial")
    zeros = poly.mult0()
    core = poly.shift(-zeros)
    if core.degree == 0:
        return RootCounts(zeros, 0, 0)
    common, on_circle = _circle_core(core)
    paired = common.degree - on_circle
    if paired % 2:
        raise InternalInconsistency("Odd reciprocal pair count in {}".format(common))
    cofactor = core.exact_div(common)
    inside = schur_cohn_inside_count(cofactor)
    return RootCounts(zeros + paired // 2 + inside,
                      on_circle,
                      paired // 2 + cofactor.degree - inside)


def _snap(roots):
    """
    Round the coefficients of prod(z - root) to nearby Gaussian rationals.

    :return: monic Poly candidate
    """
    coeffs = NumericPoly.from_roots(roots).coeffs
    return Poly([GaussianRational(Fraction(float(value.real)).limit_denominator(SNAP_DENOMINATOR),
                                  Fraction(float(value.imag)).limit_denominator(SNAP_DENOMINATOR))
                 for value in coeffs])


def _verify_exact_split(poly, part_inside, part_on, counts):
    """
    :return: exact part_outside if the candidate split is certified, else None
    """
    unit = poly.leading
    quotient, remainder = divrem(poly, (part_inside * part_on).scale(unit))
    if remainder or quotient.leading != 1:
        return None
    expected = ((part_inside, RootCounts(counts.inside, 0, 0)),
                (part_on, RootCounts(0, counts.on_circle, 0)),
                (quotient, RootCounts(0, 0, counts.outside)))
    for part, part_counts in expected:
        if part.degree != part_counts.total or count_roots(part) != part_counts:
            return None
    return quotient


def factor_circle(poly, config=None):
    """
    Split poly by root location relative to the unit circle.

    :param poly: nonzero Poly
    :param config: LabConfiguration or None
    :return: CircleFactorization
    :raises: ZeroPolynomial; InternalInconsistency when the numeric classification disagrees
    with the exact counts
    """
    config = resolve(config)
    counts = count_roots(poly)
    zeros = poly.mult0()
    core = poly.shift(-zeros)
    one = Poly.constant(1)
    if core.degree == 0:
        return CircleFactorization(poly.leading, Poly.monomial(zeros), one, one, counts, True)

    roots = numeric_roots(core, config)
    inside, on_circle, outside = classify_roots(roots, config.tau)
    if (len(inside) + zeros, len(on_circle), len(outside)) != tuple(counts):
        raise InternalInconsistency(
            "Numeric classification ({}, {}, {}) disagrees with exact counts {} for {}".format(
                len(inside) + zeros, len(on_circle), len(outside), tuple(counts), poly))

    if not on_circle:
        part_on = one
    else:
        common, circle = _circle_core(core)
        part_on = common if circle == common.degree else _snap(on_circle)
    part_inside = Poly.monomial(zeros) * (_snap(inside) if inside else one)
    part_outside = _verify_exact_split(poly, part_inside, part_on, counts)
    if part_outside is not None:
        return CircleFactorization(poly.leading, part_inside, part_on, part_outside, counts, True)

    _logger().debug("Snapping roots to denominators up to %d gave no exact circle split for %s, "
                    "using numeric factors", SNAP_DENOMINATOR, poly)
    numeric = CircleFactorization(complex(poly.leading),
                                  NumericPoly.from_roots(inside + [0j] * zeros),
                                  NumericPoly.from_roots(on_circle),
                                  NumericPoly.from_roots(outside),
                                  counts, False)
    residual = relative_residual(numeric.reconstruct().to_numpy(), poly.to_numpy())
    if residual > config.reconstruction:
        raise InternalInconsistency("Numeric factor reconstruction residual {:.3e} for {}".format(
            residual, poly))
    return numeric


def closed_disk_count(poly):
    """
    :param poly: nonzero Poly
    :return: number of roots with |z| <= 1
    """
    return count_roots(poly).closed_disk


__all__ = ["RootCounts", "CircleFactorization", "count_roots", "factor_circle",
           "closed_disk_count", "cohn_test", "closed_disk_test"]
