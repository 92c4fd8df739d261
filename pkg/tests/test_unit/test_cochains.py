"""
Unit tests for dense cochain tables.
"""

from fractions import Fraction

import pytest

from omnileib.cochains import (
    Cochain,
    CochainError,
    algebra_from_cochain,
    bracket_cochain,
    identity_cochain,
    multi_indices,
)
from omnileib.linalg import DimensionError, Matrix


class TestCochain:
    """Construction, evaluation and arithmetic."""

    @pytest.mark.unit
    def test_shape_and_size(self):
        c = Cochain.zero(3, 2, 4)
        assert c.shape == (2, 2, 2, 4)
        assert c.size == 32
        assert c.is_zero()

    @pytest.mark.unit
    def test_degree_zero_is_a_vector(self):
        c = Cochain.from_flat(0, 3, 2, ["1", "-1/2"])
        assert c.value(()) == (Fraction(1), Fraction(-1, 2))
        assert c.evaluate() == (Fraction(1), Fraction(-1, 2))

    @pytest.mark.unit
    def test_negative_degree(self):
        with pytest.raises(CochainError):
            Cochain.zero(-1, 2, 2)

    @pytest.mark.unit
    def test_wrong_table_shape(self):
        with pytest.raises(DimensionError):
            Cochain(1, 2, 2, [[1, 0]])

    @pytest.mark.unit
    def test_basis_element_and_value(self):
        c = Cochain.basis_element(2, 2, 3, (1, 0), 2)
        assert c.value((1, 0)) == (0, 0, 1)
        assert c.value((0, 1)) == (0, 0, 0)
        with pytest.raises(CochainError):
            c.value((1,))

    @pytest.mark.unit
    def test_evaluate_is_multilinear(self):
        c = Cochain.from_function(2, 2, 1, lambda idx: [idx[0] + 2 * idx[1] + 1])
        # c(e1,e1)=1, c(e1,e2)=3, c(e2,e1)=2, c(e2,e2)=4
        assert c.evaluate((1, 1), (1, 0)) == (Fraction(3),)
        assert c.evaluate((1, 0), (0, 2)) == (Fraction(6),)
        assert c.evaluate(("1/2", 0), (0, 1)) == (Fraction(3, 2),)

    @pytest.mark.unit
    def test_arithmetic(self):
        a = Cochain.basis_element(1, 2, 1, (0,), 0)
        b = Cochain.basis_element(1, 2, 1, (1,), 0)
        total = a + b.scale(3)
        assert total.flat() == (1, 3)
        assert (total - total).is_zero()
        assert -a == a.scale(-1)
        with pytest.raises(CochainError):
            a + Cochain.zero(2, 2, 1)

    @pytest.mark.unit
    def test_map_codomain(self):
        c = Cochain.basis_element(1, 1, 2, (0,), 0)
        swap = Matrix.from_rows([[0, 1], [1, 0]])
        assert c.map_codomain(swap).value((0,)) == (0, 1)

    @pytest.mark.unit
    def test_equality_and_hash(self):
        a = Cochain.basis_element(1, 2, 1, (0,), 0)
        b = Cochain.from_flat(1, 2, 1, [1, 0])
        assert a == b
        assert hash(a) == hash(b)
        assert a != Cochain.from_flat(1, 2, 1, [0, 1])

    @pytest.mark.unit
    def test_multi_indices_order(self):
        assert list(multi_indices(2, 2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert list(multi_indices(3, 0)) == [()]


class TestBracketCochain:
    """Algebras as 2-cochains valued in themselves."""

    @pytest.mark.unit
    def test_round_trip(self, l2, sl2):
        for alg in (l2, sl2):
            alpha = bracket_cochain(alg)
            assert alpha.degree == 2
            assert algebra_from_cochain(alpha) == alg

    @pytest.mark.unit
    def test_bracket_values(self, l2):
        assert bracket_cochain(l2).value((1, 1)) == (1, 0)

    @pytest.mark.unit
    def test_only_square_two_cochains(self):
        with pytest.raises(CochainError):
            algebra_from_cochain(Cochain.zero(1, 2, 2))

    @pytest.mark.unit
    def test_identity_cochain(self):
        ident = identity_cochain(3)
        assert ident.degree == 1
        assert ident.value((2,)) == (0, 0, 1)
