"""
Tests for integer rank and torsion, with sympy's normal forms as the oracle.
"""

import random

from django.test import SimpleTestCase
from sympy import Matrix
from sympy.polys.matrices.normalforms import is_smith_normal_form, smith_normal_decomp

from apps.simplicial.chains import SparseMatrix
from apps.simplicial.smith import (
    integer_rank_and_torsion,
    nonzero_invariant_factors,
    rational_rank,
    to_domain_matrix,
)


def random_matrix(rng, rows=8, cols=8, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def snf_diagonal(M):
    S, U, V = smith_normal_decomp(to_domain_matrix(M))
    dense = S.to_Matrix()
    size = min(dense.shape)
    return [abs(int(dense[i, i])) for i in range(size)], S, U, V


class InvariantFactorTests(SimpleTestCase):
    def test_known_example(self):
        M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
        self.assertEqual(nonzero_invariant_factors(M), (2, 6, 12))

    def test_rank_deficient_matrix(self):
        M = [[1, 2, 3], [2, 4, 6], [0, 0, 0]]
        self.assertEqual(nonzero_invariant_factors(M), (1,))

    def test_empty_matrix_has_no_factors(self):
        self.assertEqual(nonzero_invariant_factors([]), ())
        self.assertEqual(nonzero_invariant_factors([[]]), ())

    def test_decomposition_reconstructs_random_matrices(self):
        rng = random.Random(20240611)
        for _ in range(25):
            M = random_matrix(rng)
            diagonal, S, U, V = snf_diagonal(M)
            A = to_domain_matrix(M)
            self.assertEqual((U.to_dense() * A * V.to_dense()).to_Matrix(), S.to_Matrix())
            self.assertTrue(is_smith_normal_form(S.to_dense()))
            self.assertEqual(nonzero_invariant_factors(M), tuple(d for d in diagonal if d))

    def test_factors_agree_with_rank(self):
        rng = random.Random(7)
        for _ in range(25):
            M = random_matrix(rng, rows=6)
            self.assertEqual(len(nonzero_invariant_factors(M)), Matrix(M).rank())


class SparseRankTests(SimpleTestCase):
    def test_sparse_path_matches_dense(self):
        rng = random.Random(11)
        for _ in range(10):
            M = [[rng.choice([0, 0, 0, 1, -1, 2, 3]) for _ in range(8)] for _ in range(6)]
            factors = nonzero_invariant_factors(M)
            rank, torsion = integer_rank_and_torsion(SparseMatrix.from_dense(M))
            self.assertEqual(rank, len(factors))
            self.assertEqual(torsion, tuple(f for f in factors if f > 1))
            self.assertEqual(rational_rank(SparseMatrix.from_dense(M)), Matrix(M).rank())

    def test_torsion_survives_unit_elimination(self):
        M = [[1, 0, 0], [0, 2, 0], [0, 0, 6]]
        self.assertEqual(integer_rank_and_torsion(SparseMatrix.from_dense(M)), (3, (2, 6)))
