"""
Betti number tests.
"""
from math import perm

import pytest

from preperm.models.options import BettiMethod
from preperm.services.betti_service import BettiService


class TestEulerCharacteristic:
    """Test χ(X_k) = P(n, k+1)."""

    @pytest.mark.parametrize("n,k,expected", [(2, 0, 2), (4, 1, 12), (5, 3, 120), (6, 2, 120)])
    def test_values(self, n, k, expected):
        """Test known Euler characteristics."""
        assert BettiService.euler_characteristic(n, k) == expected

    def test_out_of_range(self):
        """Test rejection of k > n-2."""
        with pytest.raises(ValueError):
            BettiService.euler_characteristic(4, 3)


class TestBettiNumbers:
    """Test the independent Betti computations."""

    @pytest.mark.parametrize(
        "n,k,expected",
        [
            (3, 0, [1, 1, 1]),
            (3, 1, [1, 4, 1]),
            (4, 1, [1, 5, 5, 1]),
            (4, 2, [1, 11, 11, 1]),
            (5, 1, [1, 6, 6, 6, 1]),
            (5, 2, [1, 16, 26, 16, 1]),
            (5, 3, [1, 26, 66, 26, 1]),
        ],
    )
    @pytest.mark.parametrize("method", list(BettiMethod))
    def test_known_tables(self, n, k, expected, method):
        """Every method reproduces the known tables."""
        table = BettiService.betti(n, k, method)
        assert table.betti == expected
        assert table.method == method
        assert table.total == perm(n, k + 1)
        assert table.is_palindromic

    def test_compare_methods(self):
        """Test the side-by-side comparison."""
        comparison = BettiService.compare_methods(4, 2)
        assert comparison.agree
        assert comparison.euler_characteristic == 24
        assert set(comparison.tables) == {"descents", "recursion", "codes", "fan"}
        assert all(row == [1, 11, 11, 1] for row in comparison.tables.values())

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_top_order_is_eulerian(self, n):
        """The top order gives the Eulerian numbers."""
        assert BettiService.betti_via_recursion(n, n - 2).betti == BettiService.eulerian_row(n)

    def test_eulerian_row(self):
        """Test small Eulerian rows."""
        assert BettiService.eulerian_row(4) == [1, 11, 11, 1]
        assert BettiService.eulerian_row(1) == [1]

    def test_poincare_poly(self):
        """Test the Poincaré polynomial of X_1 for n=4."""
        assert BettiService.poincare_poly(4, 1) == [1, 5, 5, 1]


class TestHessenberg:
    """Test Poincaré polynomials of the Hessenberg varieties Hess(S, h_k)."""

    def test_hess_poincare(self):
        """Test the Hessenberg Poincaré polynomial for (4, 1)."""
        assert BettiService.hess_poincare(4, 1) == [1, 6, 10, 6, 1]

    @pytest.mark.parametrize("n,k", [(4, 1), (5, 1), (5, 2), (6, 2)])
    def test_degree_and_total(self, n, k):
        """Degree, palindromicity and total dimension."""
        poly = BettiService.hess_poincare(n, k)
        assert poly.degree == BettiService.hess_dimension(n, k)
        assert poly.is_palindromic()
        assert poly.at(1) == perm(n, k + 1) * perm(n - k - 1)

    def test_hess_dimension(self):
        """Test complex dimensions."""
        assert BettiService.hess_dimension(4, 1) == 4
        assert BettiService.hess_dimension(6, 3) == 6

    @pytest.mark.parametrize("n,k", [(3, 1), (4, 0), (4, 2)])
    def test_hessenberg_range(self, n, k):
        """Test the range 1 <= k <= n-3."""
        with pytest.raises(ValueError):
            BettiService.hess_poincare(n, k)
