"""Exact linear algebra: determinants, inverses, solving, kernels."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quivermag.linalg import (Matrix, column_space_basis, determinant, hstack,
                              invert, kernel_basis, rank, rref, solve)

from conftest import cofactor_determinant, elimination_rank


def frac_grid(m: Matrix) -> list[list[Fraction]]:
    return [list(row) for row in m.entries]


class TestMatrixBasics:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            Matrix([[1, 2], [3]])

    def test_zero_dimensional_shapes(self):
        empty_cols = Matrix.from_columns([], rows=3)
        assert (empty_cols.rows, empty_cols.cols) == (3, 0)
        zero_rows = Matrix.from_columns([(), ()], rows=0)
        assert (zero_rows.rows, zero_rows.cols) == (0, 2)
        product = zero_rows * Matrix.zeros(2, 5)
        assert (product.rows, product.cols) == (0, 5)

    def test_product_and_sum(self):
        a = Matrix([[1, 2], [3, 4]])
        b = Matrix([[0, 1], [1, 0]])
        assert a * b == Matrix([[2, 1], [4, 3]])
        assert a + b - b == a
        assert (a * Fraction(1, 2)).entries[1][1] == 2

    def test_str_prints_exact_fractions(self):
        m = Matrix([[Fraction(1, 2), 3]])
        assert str(m) == "1/2 3"

    def test_apply(self):
        m = Matrix([[1, 0], [1, 1]])
        assert m.apply((1, 2)) == (Fraction(1), Fraction(3))


class TestDeterminant:
    def test_triangular(self):
        assert determinant(Matrix([[1, 0], [1, 1]])) == 1

    def test_all_ones_3x3_is_singular(self):
        assert determinant(Matrix([[1] * 3] * 3)) == 0

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            determinant(Matrix([[1, 2]]))

    def test_empty_matrix(self):
        assert determinant(Matrix([], cols=0)) == 1

    def test_random_5x5_matches_cofactor_oracle(self):
        rng = random.Random(501)
        for _ in range(25):
            grid = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
            assert determinant(Matrix(grid)) == cofactor_determinant(
                [[Fraction(x) for x in row] for row in grid])

    def test_rational_input_matches_cofactor_oracle(self):
        rng = random.Random(502)
        for _ in range(10):
            grid = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)]
                    for _ in range(4)]
            assert determinant(Matrix(grid)) == cofactor_determinant(grid)

    def test_integer_input_gives_integer_determinant(self):
        rng = random.Random(503)
        for _ in range(50):
            n = rng.randint(1, 5)
            grid = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
            assert determinant(Matrix(grid)).denominator == 1


class TestInvert:
    def test_lower_unitriangular(self):
        assert invert(Matrix([[1, 0], [1, 1]])) == Matrix([[1, 0], [-1, 1]])

    def test_hand_elimination_3x3(self):
        m = Matrix([[1, 0, 0], [1, 1, 0], [0, 1, 1]])
        inv = invert(m)
        assert inv == Matrix([[1, 0, 0], [-1, 1, 0], [1, -1, 1]])
        assert m * inv == Matrix.identity(3)
        assert inv * m == Matrix.identity(3)

    def test_all_ones_singular(self):
        assert invert(Matrix([[1] * 3] * 3)) is None

    def test_random_inverses_multiply_back(self):
        rng = random.Random(504)
        seen_invertible = 0
        for _ in range(40):
            n = rng.randint(1, 5)
            m = Matrix([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
            inv = invert(m)
            assert (inv is None) == (determinant(m) == 0)
            if inv is not None:
                seen_invertible += 1
                assert m * inv == Matrix.identity(n)
                assert inv * m == Matrix.identity(n)
        assert seen_invertible > 10


class TestSolve:
    def test_free_variables_default_to_zero(self):
        ones = Matrix([[1] * 3] * 3)
        rhs = Matrix([[1], [1], [1]])
        sol = solve(ones, rhs)
        assert sol == Matrix([[1], [0], [0]])
        assert ones * sol == rhs

    def test_identity_returns_rhs(self):
        rhs = Matrix([[2], [3]])
        assert solve(Matrix.identity(2), rhs) == rhs

    def test_inconsistent(self):
        assert solve(Matrix([[1], [1]]), Matrix([[0], [1]])) is None

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            solve(Matrix.identity(2), Matrix([[1]]))

    def test_multi_column_rhs(self):
        m = Matrix([[2, 0], [0, 4]])
        rhs = Matrix([[2, 4], [4, 8]])
        assert m * solve(m, rhs) == rhs

    def test_zero_column_matrix(self):
        # 2x0 system: consistent only against a zero right-hand side
        empty = Matrix.from_columns([], rows=2)
        assert solve(empty, Matrix([[0], [0]])) == Matrix.zeros(0, 1)
        assert solve(empty, Matrix([[1], [0]])) is None


class TestKernel:
    def test_identity_has_trivial_kernel(self):
        assert kernel_basis(Matrix.identity(2)) == []

    def test_single_relation(self):
        assert kernel_basis(Matrix([[1, 1]])) == [(Fraction(1), Fraction(-1))]

    def test_leading_coefficient_normalized(self):
        assert kernel_basis(Matrix([[2, 1]])) == [(Fraction(1), Fraction(-2))]

    def test_random_rank_deficient(self):
        rng = random.Random(505)
        # rank-3 4x6 matrix: three independent rows plus one dependent row
        base = [[rng.randint(-4, 4) for _ in range(6)] for _ in range(3)]
        fourth = [a + b for a, b in zip(base[0], base[2])]
        m = Matrix(base + [fourth])
        assert elimination_rank(frac_grid(m)) == 3
        basis = kernel_basis(m)
        assert len(basis) == 3
        for vec in basis:
            assert m.apply(vec) == (Fraction(0),) * 4
        assert elimination_rank([list(v) for v in basis]) == 3

    def test_rank_nullity(self):
        rng = random.Random(506)
        for _ in range(30):
            rows, cols = rng.randint(0, 5), rng.randint(0, 5)
            m = Matrix([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], cols)
            assert rank(m) + len(kernel_basis(m)) == cols


class TestColumnSpace:
    def test_pivot_columns_selected_in_order(self):
        m = Matrix([[1, 2, 1], [2, 4, 0]])
        basis = column_space_basis(m)
        assert basis == [m.col(0), m.col(2)]

    def test_hstack_shapes(self):
        left = Matrix.identity(2)
        right = Matrix([[5], [6]])
        assert hstack(left, right) == Matrix([[1, 0, 5], [0, 1, 6]])


@given(st.integers(1, 4), st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_invertibility_iff_nonzero_determinant(n, seed):
    rng = random.Random(seed)
    m = Matrix([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
    det = determinant(m)
    inv = invert(m)
    assert (inv is not None) == (det != 0)
    if inv is not None:
        assert m * inv == Matrix.identity(n)
        assert determinant(inv) * det == 1


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_rref_is_idempotent_and_rank_matches_oracle(rows, cols, seed):
    rng = random.Random(seed)
    m = Matrix([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], cols)
    reduced, pivots = rref(m)
    again, pivots2 = rref(reduced)
    assert again == reduced and pivots2 == pivots
    assert len(pivots) == elimination_rank(frac_grid(m))
