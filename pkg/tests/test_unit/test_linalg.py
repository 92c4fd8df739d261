"""
Unit tests for exact rational linear algebra.
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from omnileib.linalg import (
    DimensionError,
    InputError,
    Matrix,
    NotInSpanError,
    SparseMatrix,
    Subspace,
    format_rational,
    kernel_basis,
    rank,
    rref_rank,
    to_rational,
)

small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def rational_matrices(draw, max_rows=5, max_cols=5):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    entries = draw(st.lists(small_rationals, min_size=rows * cols, max_size=rows * cols))
    return Matrix(rows, cols, tuple(entries))


class TestRationals:
    """Parsing and printing of exact scalars."""

    @pytest.mark.unit
    @pytest.mark.parametrize("text,expected", [
        ("1", Fraction(1)),
        ("-2", Fraction(-2)),
        ("3/4", Fraction(3, 4)),
        ("6/8", Fraction(3, 4)),
        (" -1/2 ", Fraction(-1, 2)),
        (5, Fraction(5)),
    ])
    def test_to_rational(self, text, expected):
        assert to_rational(text) == expected

    @pytest.mark.unit
    @pytest.mark.parametrize("value", [0.5, True, "1.5", "abc", "1/0", None])
    def test_to_rational_rejects(self, value):
        with pytest.raises(InputError):
            to_rational(value)

    @pytest.mark.unit
    def test_format_rational(self):
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-3, 6)) == "-1/2"
        assert format_rational(Fraction(0)) == "0"


class TestMatrix:
    """Dense matrix arithmetic."""

    @pytest.mark.unit
    def test_shape_mismatch(self):
        with pytest.raises(DimensionError):
            Matrix(2, 2, (1, 2, 3))
        with pytest.raises(DimensionError):
            Matrix.identity(2) @ Matrix.zeros(3, 1)

    @pytest.mark.unit
    def test_product_and_apply(self):
        a = Matrix.from_rows([[1, 2], [0, 1]])
        b = Matrix.from_rows([[0, 1], [1, 0]])
        assert (a @ b).to_rows() == [[2, 1], [1, 0]]
        assert a.apply((Fraction(1), Fraction(1))) == (Fraction(3), Fraction(1))

    @pytest.mark.unit
    def test_commutator_of_units(self):
        e12 = Matrix.unit(2, 0, 1)
        e21 = Matrix.unit(2, 1, 0)
        assert e12.commutator(e21).to_rows() == [[1, 0], [0, -1]]

    @pytest.mark.unit
    def test_transpose(self):
        m = Matrix.from_rows([[1, 2, 3]])
        assert m.transpose().shape == (3, 1)
        assert m.transpose().transpose() == m


class TestRowReduction:
    """Exact ranks, reduced forms and kernels."""

    @pytest.mark.unit
    def test_rref_of_singular_matrix(self):
        reduction = rref_rank([[1, 2], [2, 4]])
        assert reduction.rank == 1
        assert reduction.pivot_columns == (0,)
        assert reduction.rref.to_rows() == [[1, 2], [0, 0]]

    @pytest.mark.unit
    def test_zero_and_empty(self):
        assert rank(Matrix.zeros(3, 4)) == 0
        assert rank(Matrix.zeros(0, 4)) == 0
        assert kernel_basis([], cols=2) == [(1, 0), (0, 1)]

    @pytest.mark.unit
    @settings(max_examples=60, deadline=None)
    @given(rational_matrices())
    def test_rank_matches_sympy(self, m):
        oracle = sympy.Matrix(m.rows, m.cols, [sympy.Rational(e.numerator, e.denominator) for e in m.entries])
        assert rank(m) == oracle.rank()

    @pytest.mark.unit
    @settings(max_examples=40, deadline=None)
    @given(rational_matrices())
    def test_rref_is_idempotent_and_transpose_has_same_rank(self, m):
        reduction = rref_rank(m)
        again = rref_rank(reduction.rref)
        assert again.rref == reduction.rref
        assert again.rank == reduction.rank
        assert rank(m.transpose()) == reduction.rank

    @pytest.mark.unit
    @settings(max_examples=60, deadline=None)
    @given(rational_matrices())
    def test_kernel_is_annihilated(self, m):
        basis = kernel_basis(m)
        assert len(basis) == m.cols - rank(m)
        for vec in basis:
            assert all(v == 0 for v in m.apply(vec))

    @pytest.mark.unit
    @settings(max_examples=40, deadline=None)
    @given(rational_matrices())
    def test_sparse_rank_agrees_with_dense(self, m):
        acc = {(i, j): m[i, j] for i in range(m.rows) for j in range(m.cols)}
        sparse = SparseMatrix.from_accumulator(m.rows, m.cols, acc)
        assert sparse.rank() == rank(m)
        assert sparse.to_matrix() == m

    @pytest.mark.unit
    def test_sparse_product(self):
        a = SparseMatrix.from_accumulator(2, 2, {(0, 1): Fraction(1)})
        assert (a @ a).is_zero()
        b = SparseMatrix.from_accumulator(2, 2, {(1, 0): Fraction(2)})
        assert (a @ b).entries == {(0, 0): Fraction(2)}


class TestSubspace:
    """Spans, coordinates and annihilators."""

    @pytest.mark.unit
    def test_span_and_coordinates(self):
        sub = Subspace.span([(1, 1, 0), (2, 2, 0), (0, 1, 1)], 3)
        assert sub.dim == 2
        w = (Fraction(1), Fraction(2), Fraction(1))
        assert sub.combine(sub.coordinates(w)) == w
        assert not sub.contains((1, 0, 0))
        with pytest.raises(NotInSpanError):
            sub.coordinates((1, 0, 0))

    @pytest.mark.unit
    def test_annihilator(self):
        sub = Subspace.span([(1, 0, 0)], 3)
        functionals = sub.annihilator()
        assert len(functionals) == 2
        assert all(f[0] == 0 for f in functionals)

    @pytest.mark.unit
    def test_annihilator_of_zero_subspace(self):
        assert Subspace.span([], 2).annihilator() == [(1, 0), (0, 1)]
