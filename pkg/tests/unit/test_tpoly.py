"""
Integer polynomial tests.
"""
import pytest

from preperm.models.tpoly import TPoly


class TestTPolyArithmetic:
    """Test exact arithmetic in Z[t]."""

    def test_coefficients_are_stripped(self):
        """Trailing zeros never appear in the coefficient list."""
        poly = TPoly([1, 2, 0, 0])
        assert poly.coefficients == [1, 2]
        assert poly.degree == 1

    def test_zero(self):
        """Test the zero polynomial."""
        assert TPoly.zero().is_zero()
        assert TPoly.zero().degree == -1
        assert TPoly.zero().coefficients == []
        assert not TPoly.zero()

    def test_add_and_subtract(self):
        """Test addition and subtraction with integers."""
        assert TPoly([1, 2]) + TPoly([0, 1]) == [1, 3]
        assert (TPoly([1, 1]) - TPoly([1, 1])).is_zero()
        assert 1 + TPoly([0, 1]) == [1, 1]
        assert 3 - TPoly([1]) == [2]

    def test_multiply(self):
        """Test products."""
        assert TPoly([1, 1]) * TPoly([1, 1]) == [1, 2, 1]
        assert 2 * TPoly([1, 1]) == [2, 2]
        assert TPoly([1, 1]) * 0 == TPoly.zero()

    def test_monomial_and_shift(self):
        """Test monomials and shifts."""
        assert TPoly.monomial(2, 3) == [0, 0, 3]
        assert TPoly([1, 1]).shift(2) == [0, 0, 1, 1]
        with pytest.raises(ValueError):
            TPoly.monomial(-1)

    def test_evaluation(self):
        """Test evaluation at integers."""
        assert TPoly([1, 2, 1]).at(1) == 4
        assert TPoly([1, 2, 1]).at(-1) == 0

    def test_predicates(self):
        """Test palindromicity and non-negativity."""
        assert TPoly([1, 4, 1]).is_palindromic()
        assert not TPoly([1, 4]).is_palindromic()
        assert TPoly([0, 3]).is_nonnegative()
        assert not TPoly([1, -1]).is_nonnegative()

    def test_equality_and_hash(self):
        """Equal polynomials hash alike, whatever their construction."""
        assert TPoly([1, 2]) == TPoly([1, 2, 0])
        assert hash(TPoly([1, 2])) == hash(TPoly([1, 2, 0]))
        assert TPoly([5]) == 5
        assert TPoly([1, 2]).as_tuple() == (1, 2)
        assert list(TPoly([3, 0, 1])) == [3, 0, 1]
