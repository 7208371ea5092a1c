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

Schur-Cohn root counting and Cohn's all-roots-on-the-circle criterion, in exact arithmetic.
"""

from toeplitz_lib.Algebra.Poly import self_inversive
from toeplitz_lib.Algebra.matrices import conjugate_transpose, hermitian_inertia, lower_toeplitz
from toeplitz_lib.ToeplitzErrors import ZeroPolynomial, InternalInconsistency
from toeplitz_lib.LogManager import get_component_logger


def _logger():
    return get_component_logger("rootloc", "ROO")


def schur_transform(poly, formal_degree):
    """
    One Schur-Cohn step: conj(a_0) f - a_m f*, truncated to formal degree m - 1.

    :param poly: Poly of formal degree formal_degree
    :param formal_degree: m
    :return: tuple (transformed Poly, delta = |a_0|^2 - |a_m|^2)
    """
    low = poly.coeff(0)
    high = poly.coeff(formal_degree)
    reflected = poly.reversed_conj(formal_degree)
    transformed = poly.scale(low.conjugate()) - reflected.scale(high)
    return transformed, low.abs2() - high.abs2()


def schur_cohn_chain(poly):
    """
    Chain of delta values of the repeated Schur-Cohn transform.

    :param poly: Poly of degree m >= 1
    :return: list of m Fractions
    """
    deltas = []
    current = poly
    for formal_degree in range(poly.degree, 0, -1):
        current, delta = schur_transform(current, formal_degree)
        deltas.append(delta)
    return deltas


def schur_cohn_matrix(poly):
    """
    Hermitian Schur-Cohn form A^H A - B^H B, with A and B the lower triangular Toeplitz
    matrices of the low coefficients of poly and of its formal reversal.

    :param poly: Poly of degree m >= 1
    :return: m x m DomainMatrix over QQ_I
    """
    size = poly.degree
    low = lower_toeplitz(poly, size)
    rev = lower_toeplitz(poly.reversed_conj(size), size)
    return conjugate_transpose(low) * low - conjugate_transpose(rev) * rev


def schur_cohn_inside_count(poly):
    """
    Number of roots in the open unit disk of a polynomial without unit circle roots and
    without reciprocal pairs (alpha, 1/conj(alpha)).

    Uses the sign changes of the running products of the Schur-Cohn chain. When a chain value
    vanishes the inertia of the Hermitian Schur-Cohn form decides instead.

    :param poly: nonzero Poly
    :return: int
    :raises: ZeroPolynomial, InternalInconsistency if the form is singular
    """
    if not poly:
        raise ZeroPolynomial("Root count of the zero polynomial")
    if poly.degree == 0:
        return 0
    deltas = schur_cohn_chain(poly)
    if all(deltas):
        inside = 0
        product = 1
        for delta in deltas:
            product *= delta
            if product < 0:
                inside += 1
        return inside
    _logger().debug("Singular Schur-Cohn chain for degree %d, using Hermitian form",
                    poly.degree)
    _, negative, zero = hermitian_inertia(schur_cohn_matrix(poly))
    if zero:
        raise InternalInconsistency("Singular Schur-Cohn form for {}".format(poly))
    return negative


def closed_disk_test(poly):
    """
    Exact decision whether every root of poly lies in the closed unit disk.

    :param poly: nonzero Poly
    :return: bool
    :raises: ZeroPolynomial
    """
    if not poly:
        raise ZeroPolynomial("closed_disk_test of the zero polynomial")
    current = poly
    while current.degree >= 1:
        low = current.coeff(0)
        high = current.leading
        low_abs, high_abs = low.abs2(), high.abs2()
        if low_abs > high_abs:
            return False
        if low_abs == high_abs:
            return cohn_test(current)
        # g and (conj(a_n) g - a_0 g*)/z have all roots in the closed disk together.
        reduced = current.scale(high.conjugate()) - current.reversed_conj(current.degree) \
            .scale(low)
        current = reduced.shift(-1)
    return True


def cohn_test(poly):
    """
    Cohn's criterion: all roots lie on the unit circle iff poly is self-inversive and its
    derivative has all roots in the closed unit disk.

    :param poly: Poly of degree >= 1
    :return: bool
    :raises: ZeroPolynomial
    """
    if not poly:
        raise ZeroPolynomial("cohn_test of the zero polynomial")
    if poly.degree < 1:
        raise ZeroPolynomial("cohn_test needs degree >= 1, got constant {}".format(poly))
    if self_inversive(poly) is None:
        return False
    if poly.degree == 1:
        return True
    return closed_disk_test(poly.derivative())
