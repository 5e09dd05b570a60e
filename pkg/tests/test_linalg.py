"""Exact dense linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyalg.errors import DimensionMismatch, NotInvertible, NotSquare
from cyalg.linalg import (Matrix, determinant, fixed_space, invert,
                          rank_kernel, stack_rows)
from cyalg.scalar import ONE, ZERO, Scalar, zeta

from oracles import laplace_det, rank_by_minors


def M(rows):
    return Matrix.from_rows(rows)


def test_constructors_and_indexing():
    A = M([(1, 2), (3, 4)])
    assert A[0, 1] == Scalar(2)
    assert A.row(1) == (Scalar(3), Scalar(4))
    assert A.col(0) == (Scalar(1), Scalar(3))
    assert Matrix.identity(2) * A == A
    assert Matrix.zeros(2, 2).is_zero()


def test_matrix_arithmetic():
    A = M([(1, 2), (3, 4)])
    B = M([(0, 1), (1, 0)])
    assert A * B == M([(2, 1), (4, 3)])
    assert A + B - B == A
    assert (-A).scale(Scalar(-1)) == A
    assert A.apply((1, 0)) == (Scalar(1), Scalar(3))
    assert A.transpose().transpose() == A


def test_rank_kernel_examples():
    rank, kernel = rank_kernel(M([(1, 2, 3), (2, 4, 6)]))
    assert rank == 1
    assert len(kernel) == 2
    A = M([(1, 2, 3), (2, 4, 6)])
    for v in kernel:
        assert A.apply(v) == (ZERO, ZERO)
    rank, kernel = rank_kernel(Matrix.identity(3))
    assert rank == 3 and kernel == []


def test_determinant_examples():
    assert determinant(M([(1, 2), (3, 4)])) == Scalar(-2)
    assert determinant(Matrix.identity(4)) == ONE
    assert determinant(M([(Fraction(1, 2), 0), (0, Fraction(2, 3))])) == Scalar(Fraction(1, 3))
    with pytest.raises(NotSquare):
        determinant(M([(1, 2, 3)]))
    z3 = zeta(3)
    assert determinant(M([(z3, 0, 0), (0, 1, 0), (0, 0, 1)])) == z3


def test_invert():
    A = M([(1, 2), (3, 4)])
    assert A * invert(A) == Matrix.identity(2)
    with pytest.raises(NotInvertible):
        invert(M([(1, 2), (2, 4)]))


def test_stack_rows():
    A = M([(1, 2)])
    B = M([(3, 4), (5, 6)])
    assert stack_rows([A, B]) == M([(1, 2), (3, 4), (5, 6)])


def test_fixed_space_permutation_golden():
    z3 = zeta(3)
    P = M([(0, 0, 1), (1, 0, 0), (0, 1, 0)])
    basis = fixed_space([P], [z3])
    assert basis == [(z3 * z3, z3, ONE)]
    assert fixed_space([Matrix.identity(2)], [ONE]) == [(ONE, ZERO), (ZERO, ONE)]
    with pytest.raises(DimensionMismatch):
        fixed_space([P, Matrix.identity(2)], [ONE, ONE])


small_entries = st.integers(min_value=-5, max_value=5)


def matrices(n):
    return st.lists(st.lists(small_entries, min_size=n, max_size=n),
                    min_size=n, max_size=n).map(Matrix.from_rows)


@given(matrices(3))
@settings(max_examples=50, deadline=None)
def test_determinant_matches_cofactor_oracle(A):
    rows = [[A[i, j].as_fraction() for j in range(3)] for i in range(3)]
    assert determinant(A).as_fraction() == laplace_det(rows)


@given(matrices(3))
@settings(max_examples=50, deadline=None)
def test_rank_matches_minor_oracle(A):
    rows = [[A[i, j].as_fraction() for j in range(3)] for i in range(3)]
    rank, kernel = rank_kernel(A)
    assert rank == rank_by_minors(rows)
    assert rank + len(kernel) == 3
    zero = tuple(ZERO for _ in range(3))
    for v in kernel:
        assert A.apply(v) == zero


@given(matrices(3), matrices(3))
@settings(max_examples=40, deadline=None)
def test_determinant_multiplicative(A, B):
    assert determinant(A * B) == determinant(A) * determinant(B)
