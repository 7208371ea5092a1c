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

Exact matrices over the Gaussian rationals, carried by sympy's DomainMatrix over QQ_I.
"""

from fractions import Fraction

from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.ToeplitzErrors import InternalInconsistency


def to_qq_i(value):
    """
    :param value: GaussianRational, int or Fraction
    :return: QQ_I element
    """
    value = GaussianRational.coerce(value)
    return QQ_I(QQ(value.re.numerator, value.re.denominator),
                QQ(value.im.numerator, value.im.denominator))


def _to_fraction(part):
    return Fraction(int(part.numerator), int(part.denominator))


def from_qq_i(element):
    """
    :param element: QQ_I element
    :return: GaussianRational
    """
    return GaussianRational(_to_fraction(element.x), _to_fraction(element.y))


def domain_matrix(rows, cols=None):
    """
    :param rows: list of rows of scalars
    :param cols: column count, needed when rows is empty
    :return: DomainMatrix over QQ_I
    """
    if not rows:
        return DomainMatrix.zeros((0, cols or 0), QQ_I)
    return DomainMatrix([[to_qq_i(value) for value in row] for row in rows],
                        (len(rows), len(rows[0])), QQ_I)


def to_rows(matrix):
    """
    :param matrix: DomainMatrix over QQ_I
    :return: list of rows of GaussianRational
    """
    return [[from_qq_i(element) for element in row] for row in matrix.to_list()]


def lower_toeplitz(poly, size):
    """
    :param poly: Poly phi
    :param size: k
    :return: k x k DomainMatrix with entry (i, j) = phi_(i-j)
    """
    return domain_matrix([[poly.coeff(row - col) for col in range(size)]
                          for row in range(size)], size)


def conjugate_transpose(matrix):
    """
    :param matrix: DomainMatrix over QQ_I
    :return: Hermitian transpose
    """
    return matrix.applyfunc(lambda element: QQ_I(element.x, -element.y)).transpose()


def apply(matrix, vector):
    """
    :param matrix: n x k DomainMatrix
    :param vector: k scalars
    :return: list of n GaussianRational
    """
    column = domain_matrix([[value] for value in vector], 1)
    return [row[0] for row in to_rows(matrix * column)]


def nullspace_basis(rows, cols):
    """
    Basis of {x : rows x = 0}.

    :param rows: list of rows
    :param cols: column count
    :return: list of GaussianRational vectors
    """
    if not rows:
        return [[GaussianRational(int(i == j)) for j in range(cols)] for i in range(cols)]
    return to_rows(domain_matrix(rows, cols).nullspace())


def row_space_basis(vectors):
    """
    Canonical basis of the span of vectors: the nonzero rows of the reduced row echelon form.

    :param vectors: list of equal-length vectors
    :return: list of GaussianRational vectors
    """
    if not vectors:
        return []
    reduced, pivots = domain_matrix(vectors).rref()
    return to_rows(reduced)[:len(pivots)]


def rank(vectors):
    """
    :param vectors: list of equal-length vectors
    :return: dimension of their span
    """
    if not vectors:
        return 0
    return domain_matrix(vectors).rank()


def solve(rows, rhs):
    """
    Solve a square nonsingular system exactly by LU decomposition.

    :param rows: n x n list of rows or DomainMatrix
    :param rhs: n scalars
    :return: list of GaussianRational
    :raises: InternalInconsistency for singular systems
    """
    matrix = rows if isinstance(rows, DomainMatrix) else domain_matrix(rows)
    column = domain_matrix([[value] for value in rhs], 1)
    try:
        solution = matrix.lu_solve(column)
    except DMNonInvertibleMatrixError:
        raise InternalInconsistency("Singular {0}x{0} system".format(matrix.shape[0]))
    return [row[0] for row in to_rows(solution)]


def hermitian_inertia(matrix):
    """
    Inertia of a Hermitian matrix. Its characteristic polynomial is real rooted, so the sign
    changes of the coefficients count the positive eigenvalues exactly.

    :param matrix: Hermitian DomainMatrix over QQ_I, or list of rows
    :return: tuple (positive, negative, zero)
    """
    if not isinstance(matrix, DomainMatrix):
        matrix = domain_matrix(matrix)
    size = matrix.shape[0]
    coeffs = [from_qq_i(element).re for element in matrix.charpoly()]
    zero = 0
    while coeffs and not coeffs[-1]:
        coeffs.pop()
        zero += 1
    signs = [coeff > 0 for coeff in coeffs if coeff]
    positive = sum(1 for left, right in zip(signs, signs[1:]) if left != right)
    return positive, size - positive - zero, zero


__all__ = ["to_qq_i", "from_qq_i", "domain_matrix", "to_rows", "lower_toeplitz",
           "conjugate_transpose", "apply", "nullspace_basis", "row_space_basis", "rank", "solve",
           "hermitian_inertia"]
