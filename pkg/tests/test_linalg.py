"""Exact matrix algebra; frozen values come from an independent
computer-algebra run (sympy) or a short hand calculation noted inline.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import numoracle as no
from repdesc.cyclo import CycNum, CycPoly
from repdesc.linalg import Mat

I2 = Mat.identity(2)
Z4 = CycNum.root_of_unity(4, 1)


def frac_mat(rows):
    return Mat([[CycNum.rational(Fraction(x)) for x in row] for row in rows])


A = frac_mat([[2, 1, 0], [1, -1, 3], [0, 2, 1]])


class TestExactAlgebra:
    def test_det_frozen(self):
        assert A.det() == CycNum.rational(-15)

    def test_inverse_frozen(self):
        want = frac_mat([
            [Fraction(7, 15), Fraction(1, 15), Fraction(-1, 5)],
            [Fraction(1, 15), Fraction(-2, 15), Fraction(2, 5)],
            [Fraction(-2, 15), Fraction(4, 15), Fraction(1, 5)],
        ])
        assert A.inverse() == want
        assert A @ want == Mat.identity(3)

    def test_charpoly_frozen(self):
        # x^3 - 2x^2 - 8x + 15
        assert A.charpoly() == CycPoly(
            [CycNum.rational(15), CycNum.rational(-8),
             CycNum.rational(-2), CycNum.rational(1)]
        )

    def test_cyclotomic_block(self):
        B = Mat([[Z4, CycNum.one()], [CycNum.zero(), -Z4]])
        assert B.det() == CycNum.one()
        assert B.inverse() == Mat([[-Z4, -CycNum.one()],
                                   [CycNum.zero(), Z4]])
        # x^2 + 1
        assert B.charpoly() == CycPoly(
            [CycNum.rational(1), CycNum.rational(0), CycNum.rational(1)]
        )

    def test_singular_matrix(self):
        C = frac_mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        assert not C.is_invertible()
        with pytest.raises(ValueError):
            C.inverse()
        ns = C.nullspace()
        assert len(ns) == 1
        x, y, z = ns[0]
        # one-dimensional kernel spanned by (-1, -1, 1)
        assert x == y and x == -z and not z.is_zero()

    def test_rref_frozen(self):
        C = frac_mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        R, pivots = C.rref()
        assert pivots == [0, 1]
        assert R == frac_mat([[1, 0, 1], [0, 1, 1], [0, 0, 0]])

    def test_solve_consistent_system(self):
        C = frac_mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        b = (CycNum.rational(6), CycNum.rational(12), CycNum.rational(2))
        x = C.solve(b)
        assert x is not None
        assert tuple(
            sum((C.rows[i][j] * x[j] for j in range(3)), CycNum.zero())
            for i in range(3)
        ) == b

    def test_solve_inconsistent_system(self):
        C = frac_mat([[1, 2], [2, 4]])
        assert C.solve((CycNum.rational(1), CycNum.rational(3))) is None

    def test_zero_and_identity(self):
        assert Mat.zero(2, 3).nrows == 2 and Mat.zero(2, 3).ncols == 3
        assert I2 @ I2 == I2
        assert Mat.identity(0).nrows == 0

    def test_from_cols(self):
        M = Mat.from_cols([(CycNum.rational(1), CycNum.rational(2)),
                           (CycNum.rational(3), CycNum.rational(4))])
        assert M == frac_mat([[1, 3], [2, 4]])

    def test_transpose(self):
        M = frac_mat([[1, 2, 3], [4, 5, 6]])
        assert M.transpose() == frac_mat([[1, 4], [2, 5], [3, 6]])

    def test_apply_entrywise(self):
        M = Mat([[Z4, CycNum.one()]])
        assert M.apply_entrywise(lambda c: c * c) == Mat(
            [[-CycNum.one(), CycNum.one()]]
        )


_entry = st.integers(min_value=-5, max_value=5)


def _mat_strategy(n):
    return st.lists(
        st.lists(_entry, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(frac_mat)


class TestProperties:
    @given(_mat_strategy(3), _mat_strategy(3))
    @settings(max_examples=50, deadline=None)
    def test_det_is_multiplicative(self, X, Y):
        assert (X @ Y).det() == X.det() * Y.det()

    @given(_mat_strategy(3))
    @settings(max_examples=50, deadline=None)
    def test_inverse_round_trip(self, X):
        if not X.is_invertible():
            return
        assert X @ X.inverse() == Mat.identity(3)
        assert X.inverse() @ X == Mat.identity(3)

    @given(_mat_strategy(3))
    @settings(max_examples=40, deadline=None)
    def test_charpoly_vanishes_on_eigen_frame(self, X):
        # the matrix satisfies its own characteristic polynomial
        f = X.charpoly()
        acc = Mat.zero(3, 3)
        power = Mat.identity(3)
        for c in f.coeffs:
            acc = acc + power.scale(c)
            power = power @ X
        assert acc == Mat.zero(3, 3)

    @given(_mat_strategy(2), _mat_strategy(2))
    @settings(max_examples=50, deadline=None)
    def test_matmul_matches_float_evaluation(self, X, Y):
        assert no.mat_close(
            no.eval_mat(X @ Y), no.matmul(no.eval_mat(X), no.eval_mat(Y))
        )

    @given(_mat_strategy(3))
    @settings(max_examples=40, deadline=None)
    def test_rref_reproduces_row_space_dimension(self, X):
        R, pivots = X.rref()
        assert len(pivots) == X.rank()
        assert R.rank() == X.rank()
