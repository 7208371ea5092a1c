# pylint: disable=missing-docstring

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
"""

import unittest
from fractions import Fraction

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.Algebra.Poly import Poly
from toeplitz_lib.Algebra.matrices import apply, conjugate_transpose, domain_matrix
from toeplitz_lib.Algebra.matrices import from_qq_i, hermitian_inertia, lower_toeplitz
from toeplitz_lib.Algebra.matrices import nullspace_basis, rank, row_space_basis, solve
from toeplitz_lib.Algebra.matrices import to_qq_i, to_rows
from toeplitz_lib.RootLocation.schur_cohn import schur_cohn_matrix
from toeplitz_lib.ToeplitzErrors import InternalInconsistency

I = GaussianRational(0, 1)


class ConversionTestcase(unittest.TestCase):

    def test_scalar_round_trip(self):
        value = GaussianRational(Fraction(-2, 3), Fraction(5, 7))
        self.assertEqual(from_qq_i(to_qq_i(value)), value)
        self.assertEqual(from_qq_i(to_qq_i(4)), 4)

    def test_rows(self):
        self.assertEqual(to_rows(domain_matrix([[1, I], [Fraction(1, 2), 0]])),
                         [[1, I], [Fraction(1, 2), 0]])
        self.assertEqual(domain_matrix([], 3).shape, (0, 3))


class MatrixTestcase(unittest.TestCase):

    def test_nullspace(self):
        matrix = [[1, 2, 3], [2, 4, 6]]
        basis = nullspace_basis(matrix, 3)
        self.assertEqual(len(basis), 2)
        for vector in basis:
            self.assertEqual(apply(domain_matrix(matrix), vector), [0, 0])
        self.assertEqual(len(nullspace_basis([], 3)), 3)
        self.assertEqual(nullspace_basis([[1, 0], [0, I]], 2), [])

    def test_row_space_basis(self):
        self.assertEqual(row_space_basis([[1, 1], [2, 2]]), [[1, 1]])
        self.assertEqual(row_space_basis([[2, 4], [1, 3]]), [[1, 0], [0, 1]])
        self.assertEqual(row_space_basis([]), [])

    def test_rank(self):
        self.assertEqual(rank([[1, I], [I, -1]]), 1)
        self.assertEqual(rank([[1, 0], [0, 1]]), 2)
        self.assertEqual(rank([]), 0)

    def test_solve(self):
        self.assertEqual(solve([[2, 1], [1, 3]], [3, 5]), [Fraction(4, 5), Fraction(7, 5)])
        self.assertEqual(solve([[I, 0], [0, 1]], [1, 2]), [-I, 2])
        with self.assertRaises(InternalInconsistency):
            solve([[1, 2], [2, 4]], [1, 1])

    def test_lower_toeplitz_and_adjoint(self):
        matrix = lower_toeplitz(Poly([1, I]), 2)
        self.assertEqual(to_rows(matrix), [[1, 0], [I, 1]])
        self.assertEqual(to_rows(conjugate_transpose(matrix)), [[1, -I], [0, 1]])


class InertiaTestcase(unittest.TestCase):

    def test_small_forms(self):
        self.assertEqual(hermitian_inertia([[1, 0], [0, -1]]), (1, 1, 0))
        self.assertEqual(hermitian_inertia([[0, 1], [1, 0]]), (1, 1, 0))
        self.assertEqual(hermitian_inertia([[1, I], [-I, 1]]), (1, 0, 1))
        self.assertEqual(hermitian_inertia([[0, 0], [0, 0]]), (0, 0, 2))
        self.assertEqual(hermitian_inertia([[-3, 0, 0], [0, -1, 0], [0, 0, 2]]), (1, 2, 0))

    def test_schur_cohn_form_counts_inside_roots(self):
        # Roots 1/2 and 3: one root inside the disk gives one negative eigenvalue.
        poly = Poly.from_roots([Fraction(1, 2), 3])
        self.assertEqual(hermitian_inertia(schur_cohn_matrix(poly)), (1, 1, 0))
        poly = Poly.from_roots([Fraction(1, 2), I * Fraction(1, 3)])
        self.assertEqual(hermitian_inertia(schur_cohn_matrix(poly))[1], 2)


if __name__ == '__main__':
    unittest.main()
