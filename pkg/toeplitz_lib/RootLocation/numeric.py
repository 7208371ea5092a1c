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

Floating point polynomial roots: companion matrix start values from numpy, Aberth polishing,
and NumericPoly, the floating counterpart of Poly used by inexact circle factorizations.
"""

import numpy
from numpy.polynomial import polynomial as npoly

from toeplitz_lib.Algebra.Poly import squarefree_decomposition
from toeplitz_lib.Configurations import resolve


class NumericPoly(object):
    """
    Polynomial with complex floating coefficients, ascending. Mirrors the parts of the Poly
    interface that factor displays and numeric cross-checks use.
    """
    exact = False

    def __init__(self, coeffs):
        values = numpy.array(coeffs, dtype=complex)
        nonzero = numpy.nonzero(values)[0]
        self._coeffs = values[:nonzero[-1] + 1] if len(nonzero) else values[:0]

    @classmethod
    def from_roots(cls, roots, lead=1.0):
        """
        :param roots: iterable of complex roots
        :param lead: leading coefficient
        :return: NumericPoly
        """
        roots = list(roots)
        if not roots:
            return cls([lead])
        return cls(npoly.polyfromroots(roots) * lead)

    @property
    def coeffs(self):
        """
        :return: numpy array of ascending coefficients
        """
        return self._coeffs

    @property
    def degree(self):
        """
        :return: int, -1 for the zero polynomial
        """
        return len(self._coeffs) - 1

    @property
    def leading(self):
        """
        :return: leading coefficient
        """
        return complex(self._coeffs[-1])

    def to_numpy(self):
        """
        :return: numpy complex array of ascending coefficients
        """
        return numpy.array(self._coeffs, dtype=complex)

    def evaluate(self, points):
        """
        :param points: complex or numpy array
        :return: complex or numpy array
        """
        return npoly.polyval(points, self._coeffs)

    def sharp(self):
        """
        :return: conjugate reversal
        """
        values = numpy.conj(self._coeffs[::-1])
        nonzero = numpy.nonzero(values)[0]
        return NumericPoly(values[nonzero[0]:] if len(nonzero) else values)

    def roots(self):
        """
        :return: numpy array of roots
        """
        return npoly.polyroots(self._coeffs) if self.degree >= 1 else numpy.array([], complex)

    def __mul__(self, other):
        other_coeffs = other.to_numpy() if hasattr(other, "to_numpy") else \
            numpy.array([complex(other)])
        return NumericPoly(npoly.polymul(self._coeffs, other_coeffs))

    __rmul__ = __mul__

    def __repr__(self):
        return "NumericPoly({!r})".format(list(self._coeffs))


def aberth(coeffs, start, tolerance, max_iterations):
    """
    Aberth-Ehrlich simultaneous root refinement.

    :param coeffs: ascending complex coefficients of a square-free polynomial
    :param start: numpy array of initial root estimates
    :param tolerance: relative stopping tolerance on the correction size
    :param max_iterations: iteration cap
    :return: numpy array of refined roots
    """
    roots = numpy.array(start, dtype=complex)
    if len(roots) == 0:
        return roots
    derivative = npoly.polyder(coeffs)
    for _ in range(max_iterations):
        values = npoly.polyval(roots, coeffs)
        slopes = npoly.polyval(roots, derivative)
        with numpy.errstate(divide="ignore", invalid="ignore"):
            ratio = numpy.where(slopes != 0, values / slopes, 0)
            diffs = roots[:, None] - roots[None, :]
            numpy.fill_diagonal(diffs, 1)
            repulsion = numpy.sum(1.0 / diffs, axis=1) - 1.0
            correction = ratio / (1 - ratio * repulsion)
        correction = numpy.where(numpy.isfinite(correction), correction, 0)
        roots = roots - correction
        if numpy.all(numpy.abs(correction) <= tolerance * numpy.maximum(1.0, numpy.abs(roots))):
            break
    return roots


def numeric_roots(poly, config=None):
    """
    Roots of an exact polynomial with multiplicity. Each square-free factor is solved from
    companion matrix estimates and polished with Aberth iteration.

    :param poly: nonzero Poly
    :param config: LabConfiguration or None
    :return: list of complex roots, repeated by multiplicity
    """
    config = resolve(config)
    roots = []
    for factor, multiplicity in squarefree_decomposition(poly):
        coeffs = factor.to_numpy()
        start = npoly.polyroots(coeffs)
        polished = aberth(coeffs, start, config.polish, config.max_iterations)
        for root in polished:
            roots.extend([complex(root)] * multiplicity)
    return roots


def classify_roots(roots, tau):
    """
    Split roots by modulus: inside |r| < 1 - tau, outside |r| > 1 + tau, on the circle otherwise.

    :return: tuple of three lists (inside, on, outside)
    """
    inside, on_circle, outside = [], [], []
    for root in roots:
        modulus = abs(root)
        if modulus < 1 - tau:
            inside.append(root)
        elif modulus > 1 + tau:
            outside.append(root)
        else:
            on_circle.append(root)
    return inside, on_circle, outside


def relative_residual(approximation, exact):
    """
    Max coefficient error of approximation against exact, relative to the largest exact
    coefficient.

    :param approximation: numpy array of ascending coefficients
    :param exact: numpy array of ascending coefficients
    :return: float
    """
    size = max(len(approximation), len(exact))
    first = numpy.zeros(size, dtype=complex)
    second = numpy.zeros(size, dtype=complex)
    first[:len(approximation)] = approximation
    second[:len(exact)] = exact
    scale = max(numpy.max(numpy.abs(second)), 1e-300)
    return float(numpy.max(numpy.abs(first - second)) / scale)
