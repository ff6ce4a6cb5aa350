import numpy as np
import pytest

import oracles
from conifold.zlinalg import (
    IntegerMatrix,
    determinant,
    in_row_span,
    kernel_basis,
    normalize_vector,
    rank_exact,
    smith_normal_form,
)


def M(rows):
    return IntegerMatrix.from_rows(rows)


def test_rank_small_cases():
    assert rank_exact(IntegerMatrix.identity(3)) == 3
    assert rank_exact(IntegerMatrix.zeros(2, 2)) == 0
    assert rank_exact(M([[2, 4], [1, 2]])) == 1


def test_rank_handles_big_entries():
    big = 10 ** 40
    A = M([[big, big + 1], [big - 1, big]])
    assert rank_exact(A) == 2
    assert determinant(A) == 1


def test_kernel_examples():
    assert kernel_basis(M([[1, 0], [0, 1]])) == []
    assert kernel_basis(M([[1, 0], [2, 0]])) == [(2, -1)]
    assert kernel_basis(M([[1, 0], [0, 1], [1, 1]])) == [(1, 1, -1)]


def test_kernel_of_zero_rows():
    K = kernel_basis(IntegerMatrix.zeros(3, 2))
    assert len(K) == 3
    assert oracles.maximal_minor_gcd([list(v) for v in K]) == 1


def test_smith_examples():
    assert smith_normal_form(M([[1, 0], [0, 0]])).invariant_factors == (1,)
    assert smith_normal_form(M([[2, 0], [0, 3]])).invariant_factors == (1, 6)
    assert smith_normal_form(IntegerMatrix.identity(4)).invariant_factors == (1, 1, 1, 1)


def test_smith_reference_matrix():
    A = M([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]])
    snf = smith_normal_form(A)
    assert snf.invariant_factors == (1, 10, 30)
    assert (snf.U @ A @ snf.V) == snf.D
    assert abs(determinant(snf.U)) == 1 and abs(determinant(snf.V)) == 1


@pytest.mark.parametrize("seed", range(20))
def test_smith_divisibility_and_transforms(seed):
    rng = np.random.default_rng(seed)
    m, n = rng.integers(1, 6, size=2)
    A = IntegerMatrix.from_array(rng.integers(-6, 7, size=(m, n)))
    snf = smith_normal_form(A)
    assert (snf.U @ A @ snf.V) == snf.D
    d = snf.invariant_factors
    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert len(d) == oracles.rank(A.to_rows())
    D = snf.D
    assert all(D[i, j] == 0 for i in range(D.rows) for j in range(D.cols) if i != j)


def test_in_row_span_examples():
    assert in_row_span(M([[1, 0]]), (2, 0))
    assert not in_row_span(M([[1, 0]]), (0, 1))
    assert in_row_span(M([[1, 1], [1, -1]]), (1, 0))


def test_in_row_span_length_mismatch():
    with pytest.raises(ValueError):
        in_row_span(M([[1, 0]]), (1, 0, 0))


def test_normalize_vector():
    assert normalize_vector((0, -4, 6)) == (0, 2, -3)
    assert normalize_vector((0, 0)) == (0, 0)


def test_matrix_validation():
    with pytest.raises((TypeError, ValueError)):
        IntegerMatrix.from_rows([[1, 2], [3]])
    with pytest.raises((TypeError, ValueError)):
        IntegerMatrix.from_rows([[1.5, 2]])


def test_transpose_and_submatrix():
    A = M([[1, 2, 3], [4, 5, 6]])
    assert A.T.to_rows() == [[1, 4], [2, 5], [3, 6]]
    assert A.submatrix([1], [0, 2]).to_rows() == [[4, 6]]
    with pytest.raises(IndexError):
        A.submatrix([2])
