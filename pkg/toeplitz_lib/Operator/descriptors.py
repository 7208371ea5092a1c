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

Value types shared by the operator profiles and the apply engine.
"""

from fractions import Fraction

from toeplitz_lib.Algebra.Poly import Poly
from toeplitz_lib.Algebra.matrices import rank
from toeplitz_lib.Algebra.RationalFunction import RationalFunction
from toeplitz_lib.ToeplitzErrors import DomainError


def conjugate_exponent(p_label):
    """
    p' with 1/p + 1/p' = 1.

    :param p_label: number in (1, inf)
    :return: Fraction for rational input, float otherwise
    :raises: DomainError outside (1, inf)
    """
    if isinstance(p_label, (int, Fraction)):
        p_label = Fraction(p_label)
    if not p_label > 1:
        raise DomainError("Hardy space exponent p must lie in (1, inf), got {}".format(p_label))
    return p_label / (p_label - 1)


class SpaceDescriptor(object):  # pylint: disable=too-few-public-methods
    """
    Symbolic subspace T_{z^shift} * multiplier * Q_cut (inner_factor * H^p) + span(finite_span).
    Q_cut is the identity when cut <= 0 and drops the first cut Taylor coefficients otherwise.
    multiplier is None for 1.
    """
    def __init__(self, shift=0, multiplier=None, tail_projection_cut=0, inner_factor=None,
                 finite_span=None, p_label=2):
        # pylint: disable=too-many-arguments
        self.shift = shift
        self.multiplier = multiplier
        self.tail_projection_cut = max(tail_projection_cut, 0)
        self.inner_factor = inner_factor if inner_factor is not None else Poly.constant(1)
        self.finite_span = list(finite_span or [])
        self.p_label = p_label

    def without_finite_span(self):
        """
        :return: copy with the finite dimensional summand removed
        """
        return SpaceDescriptor(self.shift, self.multiplier, self.tail_projection_cut,
                               self.inner_factor, [], self.p_label)

    def same_space(self, other):
        """
        Structural equality. Inner factors are compared up to a nonzero constant, finite spans
        by the span they generate.

        :param other: SpaceDescriptor
        :return: bool
        """
        if (self.shift, self.tail_projection_cut) != (other.shift, other.tail_projection_cut):
            return False
        if (self.multiplier is None) != (other.multiplier is None):
            return False
        if self.multiplier is not None and not self.multiplier.same_function(other.multiplier):
            return False
        if not _associated(self.inner_factor, other.inner_factor):
            return False
        return _same_span(self.finite_span, other.finite_span)

    def __repr__(self):
        parts = ["({!s}) H^{}".format(self.inner_factor, self.p_label)]
        if self.tail_projection_cut:
            parts.insert(0, "Q_{}".format(self.tail_projection_cut))
        if self.multiplier is not None:
            parts.insert(0, "[{!s}]".format(self.multiplier))
        if self.shift:
            parts.insert(0, "T_z^{}".format(self.shift))
        text = " ".join(parts)
        if self.finite_span:
            text += " + span({})".format(", ".join(str(item) for item in self.finite_span))
        return text


def _associated(first, second):
    if not isinstance(first, Poly) or not isinstance(second, Poly):
        return first is second
    if first.degree != second.degree:
        return False
    if not first:
        return True
    return first.monic() == second.monic()


def _as_rational(item):
    return item if isinstance(item, RationalFunction) else RationalFunction(item)


def _same_span(first, second):
    if len(first) != len(second):
        return False
    if not first:
        return True
    first_rf = [_as_rational(item) for item in first]
    second_rf = [_as_rational(item) for item in second]
    denom = Poly.constant(1)
    for item in first_rf + second_rf:
        denom = denom * item.denom
    vectors = [list((item * denom).numer.coeffs) for item in first_rf + second_rf]
    width = max(len(vector) for vector in vectors)
    vectors = [vector + [0] * (width - len(vector)) for vector in vectors]
    return rank(vectors[:len(first)]) == rank(vectors)


class DomElement(object):  # pylint: disable=too-few-public-methods
    """
    f = q h + r in Dom(T_omega), h a Hardy rational function and deg r < m.
    """
    def __init__(self, h, r):  # pylint: disable=invalid-name
        self.h = h if isinstance(h, RationalFunction) else RationalFunction(h)
        self.r = r if isinstance(r, Poly) else Poly.constant(r)

    def value(self, q_poly):
        """
        :param q_poly: the symbol denominator q
        :return: RationalFunction q h + r
        """
        return self.h * q_poly + self.r

    def __repr__(self):
        return "DomElement(h={!s}, r={!s})".format(self.h, self.r)


class OperatorProfile(object):  # pylint: disable=too-many-instance-attributes
    """
    Structure of T_omega on H^p. kernel_basis, domain and range are None when only the
    Fredholm data is known.
    """
    side = "Forward"

    def __init__(self, p_label, kernel_dim, range_complement_dim, closed_range, dense_range,
                 kernel_basis=None, domain=None, range_space=None):
        # pylint: disable=too-many-arguments
        self.p_label = p_label
        self.kernel_dim = kernel_dim
        self.kernel_basis = kernel_basis
        self.domain = domain
        self.range = range_space
        self.range_complement_dim = range_complement_dim
        self.closed_range = closed_range
        self.dense_range = dense_range
        self.injective = kernel_dim == 0
        self.fredholm = closed_range
        self.index = kernel_dim - range_complement_dim if self.fredholm else None


class AdjointProfile(OperatorProfile):  # pylint: disable=too-few-public-methods
    """
    Structure of the adjoint of T_omega on H^p', p' the conjugate exponent.
    """
    side = "Adjoint"

    def __init__(self, *args, **kwargs):
        super(AdjointProfile, self).__init__(*args, **kwargs)
        self.tilde_p_star = None
