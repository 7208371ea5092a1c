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

profile module, structural data of T_omega and its adjoint: kernel bases, domain and range
descriptors, range complements, closed/dense range, Fredholm index.
"""

from toeplitz_lib.Algebra.Poly import Poly, sharp
from toeplitz_lib.Algebra.RationalFunction import RationalFunction
from toeplitz_lib.Algebra.matrices import nullspace_basis, row_space_basis
from toeplitz_lib.Operator.descriptors import SpaceDescriptor, OperatorProfile, AdjointProfile
from toeplitz_lib.Operator.descriptors import conjugate_exponent
from toeplitz_lib.Symbol.RationalSymbol import ShiftedSymbol
from toeplitz_lib.ToeplitzErrors import InexactFactorization, InternalInconsistency


def _require_exact(part, what, strict=True):
    if not isinstance(part, Poly):
        if not strict:
            return None
        raise InexactFactorization("{} has no exact factorization, basis unavailable".format(what))
    return part


def _relation_matrix(blocks, rows):
    """
    Coefficient matrix of sum_i multiplier_i * x_i with x_i of degree < size_i.

    :param blocks: list of (multiplier Poly, size)
    :param rows: number of coefficients compared
    :return: rows x sum(size_i) matrix
    """
    matrix = [[] for _ in range(rows)]
    for multiplier, size in blocks:
        for power in range(size):
            column = multiplier.shift(power)
            for row in range(rows):
                matrix[row].append(column.coeff(row))
    return matrix


def _tilde_space(left, right, m_deg, r_size):
    """
    Basis of {r : deg r < r_size, r * left = r1 * right + r2 with r1, r2 in P_(m-1)}.
    """
    if r_size <= 0:
        return []
    rows = max(r_size + left.degree, m_deg + right.degree, m_deg, 1)
    one = Poly.constant(1)
    matrix = _relation_matrix([(left, r_size), (-right, m_deg), (-one, m_deg)], rows)
    solutions = nullspace_basis(matrix, r_size + 2 * m_deg)
    projected = [vector[:r_size] for vector in solutions if any(vector[:r_size])]
    return [Poly(vector) for vector in row_space_basis(projected)]


def tilde_p_basis(omega):
    """
    Basis of {r in P_(n-1) : r q = r1 s + r2, r1, r2 in P_(m-1)}, exact and echelonized.

    :param omega: RationalSymbol of class RatT
    :return: list of Poly
    :raises: NotRatT
    """
    omega.require_rat_t("tilde_p_basis")
    return _tilde_space(omega.q, omega.s, omega.m, omega.n)


def _star_right(omega):
    if omega.m >= omega.n:
        return sharp(omega.s).shift(omega.m - omega.n)
    return sharp(omega.s)


def tilde_p_star_basis(omega):
    """
    Range supplement of T_(omega*): {r : r q# = B r1 + r2, r1, r2 in P_(m-1)} with
    B = z^(m-n) s# for m >= n and B = s# otherwise, r of degree below deg B.

    :param omega: RationalSymbol of class RatT
    :return: list of Poly
    :raises: NotRatT
    """
    omega.require_rat_t("tilde_p_star_basis")
    right = _star_right(omega)
    return _tilde_space(sharp(omega.q), right, omega.m, right.degree)


def _relation_witness(left, right, m_deg, r_poly):
    size = 2 * m_deg
    rows = max(r_poly.degree + left.degree + 1, m_deg + right.degree, m_deg, 1)
    matrix = _relation_matrix([(right, m_deg), (Poly.constant(1), m_deg)], rows)
    target = r_poly * left
    for row in range(rows):
        matrix[row].append(-target.coeff(row))
    for vector in nullspace_basis(matrix, size + 1):
        if vector[size]:
            scale = vector[size].inverse()
            values = [value * scale for value in vector[:size]]
            return Poly(values[:m_deg]), Poly(values[m_deg:])
    return None


def tilde_p_witness(omega, r_poly):
    """
    :param omega: RationalSymbol of class RatT
    :param r_poly: element of the tilde_p_basis span
    :return: tuple (r1, r2) with r q = r1 s + r2, or None when r_poly is outside the space
    """
    omega.require_rat_t("tilde_p_witness")
    return _relation_witness(omega.q, omega.s, omega.m, r_poly)


def sarason_domain(omega, p_label=2):
    """
    :param omega: RationalSymbol
    :return: SpaceDescriptor q H^2
    """
    return SpaceDescriptor(inner_factor=omega.q, p_label=p_label)


def forward_domain(omega, p_label=2):
    """
    :param omega: RationalSymbol of class RatT
    :return: SpaceDescriptor q H^p + P_(m-1)
    """
    omega.require_rat_t("forward_domain")
    return SpaceDescriptor(inner_factor=omega.q,
                           finite_span=[Poly.monomial(power) for power in range(omega.m)],
                           p_label=p_label)


def adjoint_domain(omega, p_label=2):
    """
    :param omega: RationalSymbol
    :return: SpaceDescriptor (q_0)# H^p', equal to q# H^p' for RatT symbols
    """
    p_dual = conjugate_exponent(p_label)
    if omega.is_rat_t():
        return SpaceDescriptor(inner_factor=sharp(omega.q), p_label=p_dual)
    return SpaceDescriptor(inner_factor=omega.q_split.part_on.sharp(), p_label=p_dual)


def _forward_rat_t(omega, p_label, strict):
    m_deg, n_minus, n_zero = omega.m, omega.n_minus, omega.n_zero
    kernel_dim = max(0, m_deg - n_minus - n_zero)
    kernel_basis = []
    if kernel_dim:
        s_plus = _require_exact(omega.s_split.part_outside, "s_+", strict)
        kernel_basis = None if s_plus is None else \
            [RationalFunction(Poly.monomial(power), s_plus) for power in range(kernel_dim)]
    domain = forward_domain(omega, p_label)
    range_space = SpaceDescriptor(inner_factor=omega.s, finite_span=tilde_p_basis(omega),
                                  p_label=p_label)
    return OperatorProfile(p_label, kernel_dim,
                           range_complement_dim=max(n_minus - m_deg, 0),
                           closed_range=n_zero == 0,
                           dense_range=n_minus <= m_deg,
                           kernel_basis=kernel_basis, domain=domain, range_space=range_space)


def profile(omega, p_label=2, strict=True):
    """
    Structure of T_omega on H^p. RatT symbols get explicit bases and descriptors; general
    symbols only kernel and complement dimensions with the range flags.

    :param omega: RationalSymbol
    :param p_label: Hardy exponent, a label only
    :param strict: raise when a kernel basis is only numerically available; otherwise leave
        kernel_basis None
    :return: OperatorProfile
    :raises: InexactFactorization when strict and a nontrivial kernel basis needs a numeric s_+
    """
    conjugate_exponent(p_label)
    if omega.is_rat_t():
        return _forward_rat_t(omega, p_label, strict)
    poles_closed = omega.m_minus + omega.m_zero
    return OperatorProfile(p_label,
                           kernel_dim=max(0, poles_closed - omega.n_minus - omega.n_zero),
                           range_complement_dim=max(0, omega.n_minus - poles_closed),
                           closed_range=omega.n_zero == 0,
                           dense_range=omega.n_minus <= poles_closed)


def _adjoint_range(omega, p_dual):
    if omega.is_rat_t():
        return SpaceDescriptor(shift=omega.m - omega.n, inner_factor=sharp(omega.s),
                               p_label=p_dual)
    s_split, q_split = omega.s_split, omega.q_split
    multiplier = ShiftedSymbol(0, s_split.part_outside.sharp(), q_split.part_outside.sharp())
    cut = omega.n_zero + omega.n_minus - omega.m_zero - omega.m_minus
    return SpaceDescriptor(shift=omega.m - omega.n, multiplier=multiplier,
                           tail_projection_cut=cut, inner_factor=s_split.part_on.sharp(),
                           p_label=p_dual)


def adjoint_kernel_basis(omega, kernel_dim, strict=True):
    """
    (q_-)# (q_0)# z^j / (s_-)# for j < kernel_dim.

    :return: list of RationalFunction, or None when not strict and a factor is numeric
    :raises: InexactFactorization for numeric factors when strict
    """
    if not kernel_dim:
        return []
    s_minus = _require_exact(omega.s_split.part_inside, "s_-", strict)
    if omega.is_rat_t():
        numer = sharp(omega.q)
    else:
        q_minus = _require_exact(omega.q_split.part_inside, "q_-", strict)
        q_zero = _require_exact(omega.q_split.part_on, "q_0", strict)
        if q_minus is None or q_zero is None:
            return None
        numer = sharp(q_minus) * sharp(q_zero)
    if s_minus is None:
        return None
    denom = sharp(s_minus)
    return [RationalFunction(numer.shift(power), denom) for power in range(kernel_dim)]


def adjoint_profile(omega, p_label=2, with_tilde_star=False, strict=True):
    """
    Structure of the adjoint of T_omega on H^p'.

    :param omega: RationalSymbol
    :param p_label: Hardy exponent of T_omega; the adjoint acts on H^p'
    :param with_tilde_star: also compute the range supplement of T_(omega*) (RatT only)
    :param strict: see profile
    :return: AdjointProfile
    """
    p_dual = conjugate_exponent(p_label)
    poles_closed = omega.m_minus + omega.m_zero
    kernel_dim = max(0, omega.n_minus - poles_closed)
    domain = adjoint_domain(omega, p_label)
    result = AdjointProfile(p_dual, kernel_dim,
                            range_complement_dim=max(0, poles_closed - omega.n_minus
                                                     - omega.n_zero),
                            closed_range=omega.n_zero == 0,
                            dense_range=poles_closed <= omega.n_minus + omega.n_zero,
                            kernel_basis=adjoint_kernel_basis(omega, kernel_dim, strict),
                            domain=domain, range_space=_adjoint_range(omega, p_dual))
    if with_tilde_star and omega.is_rat_t():
        result.tilde_p_star = tilde_p_star_basis(omega)
    if result.fredholm and result.index != omega.n_minus - poles_closed:
        raise InternalInconsistency("Adjoint index {} differs from n_- - m_- - m_0 = {}".format(
            result.index, omega.n_minus - poles_closed))
    return result


def index_matches_dimensions(omega, forward=None):
    """
    :param omega: RationalSymbol
    :param forward: OperatorProfile of omega, computed when None
    :return: True when the forward index equals m_- + m_0 - n_-, None when T_omega is not
        Fredholm
    """
    forward = profile(omega) if forward is None else forward
    if not forward.fredholm:
        return None
    return forward.index == omega.m_minus + omega.m_zero - omega.n_minus


__all__ = ["forward_domain", "adjoint_domain", "tilde_p_basis", "tilde_p_star_basis",
           "tilde_p_witness", "sarason_domain",
           "profile", "adjoint_kernel_basis", "adjoint_profile", "index_matches_dimensions"]
