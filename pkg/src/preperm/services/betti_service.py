"""
Betti service: Euler characteristics, Betti numbers and Poincaré polynomials.
"""
from functools import lru_cache
from itertools import permutations
from math import comb, perm
from typing import Dict, List, Tuple

from preperm.models.options import BettiMethod
from preperm.models.tpoly import TPoly
from preperm.schemas.betti import BettiComparison, BettiTable
from preperm.services.chain_service import ChainService, check_range
from preperm.services.code_service import CodeService
from preperm.services.symfunc_service import SymFuncService
from preperm.utils.logger import logger


def check_hessenberg_range(n: int, k: int) -> None:
    """Require 1 <= k <= n-3."""
    if not 1 <= k <= n - 3:
        raise ValueError(f"k must lie in [1, {n - 3}] for n={n}, got {k}")


def _descents(alpha0, sequence: Tuple[int, ...]) -> int:
    head = sum(1 for a in alpha0 if a > sequence[0])
    return head + sum(1 for x, y in zip(sequence, sequence[1:]) if x > y)


@lru_cache(maxsize=None)
def _recursive_poincare(n: int, k: int) -> Tuple[int, ...]:
    total = SymFuncService.q_int(n)
    for j in range(1, k + 1):
        # H*(X^{j-1}); X^0 is a point
        inner = TPoly.one() if j == 1 else TPoly(_recursive_poincare(j, j - 2))
        shifts = SymFuncService.q_int(n - j - 1).shift(1)
        total = total + comb(n, j) * shifts * inner
    return tuple(total.coefficients)


def _table(n: int, k: int, counts: Dict[int, int], method: BettiMethod) -> BettiTable:
    return BettiTable(
        n=n,
        k=k,
        betti=[counts.get(i, 0) for i in range(n)],
        method=method,
    )


class BettiService:
    """Betti service class."""

    @staticmethod
    def euler_characteristic(n: int, k: int) -> int:
        """P(n, k+1) = n!/(n-k-1)!."""
        check_range(n, k)
        return perm(n, k + 1)

    @staticmethod
    def betti_via_descents(n: int, k: int) -> BettiTable:
        """Count (k+1)-permutations of [n] by descents, α_0 being the complement."""
        check_range(n, k)
        counts: Dict[int, int] = {}
        universe = set(range(1, n + 1))
        for sequence in permutations(range(1, n + 1), k + 1):
            d = _descents(universe - set(sequence), sequence)
            counts[d] = counts.get(d, 0) + 1
        return _table(n, k, counts, BettiMethod.DESCENTS)

    @staticmethod
    def betti_via_recursion(n: int, k: int) -> BettiTable:
        """Unfold H*(X_k) = H*(P^{n-1}) plus shifted copies of H*(X^{j-1}) for |α| = j <= k."""
        check_range(n, k)
        coefficients = _recursive_poincare(n, k)
        return _table(n, k, dict(enumerate(coefficients)), BettiMethod.RECURSION)

    @staticmethod
    def betti_via_codes(n: int, k: int) -> BettiTable:
        """Count codes with μ >= n-k by index."""
        check_range(n, k)
        counts: Dict[int, int] = {}
        for code in CodeService.enumerate_codes(n, n - k):
            counts[code.index] = counts.get(code.index, 0) + 1
        return _table(n, k, counts, BettiMethod.CODES)

    @staticmethod
    def betti_via_fan(n: int, k: int) -> BettiTable:
        """Count maximal cones by the codimension of τ_C."""
        check_range(n, k)
        counts: Dict[int, int] = {}
        for chain in ChainService.enumerate_chains(n, k, dim_filter=n - 1):
            i = n - 1 - ChainService.tau_chain(chain).dimension
            counts[i] = counts.get(i, 0) + 1
        return _table(n, k, counts, BettiMethod.FAN)

    @staticmethod
    def betti(n: int, k: int, method: BettiMethod) -> BettiTable:
        handlers = {
            BettiMethod.DESCENTS: BettiService.betti_via_descents,
            BettiMethod.RECURSION: BettiService.betti_via_recursion,
            BettiMethod.CODES: BettiService.betti_via_codes,
            BettiMethod.FAN: BettiService.betti_via_fan,
        }
        return handlers[BettiMethod(method)](n, k)

    @staticmethod
    def compare_methods(n: int, k: int) -> BettiComparison:
        """Every method side by side with an agreement flag."""
        tables = {method.value: BettiService.betti(n, k, method).betti for method in BettiMethod}
        rows = list(tables.values())
        agree = all(row == rows[0] for row in rows)
        if not agree:
            logger.warning(f"Betti methods disagree for n={n}, k={k}: {tables}")
        return BettiComparison(
            n=n,
            k=k,
            euler_characteristic=BettiService.euler_characteristic(n, k),
            tables=tables,
            agree=agree,
        )

    @staticmethod
    def poincare_poly(n: int, k: int) -> TPoly:
        """Σ β_{2i} t^i."""
        return TPoly(BettiService.betti_via_recursion(n, k).betti)

    @staticmethod
    def hess_poincare(n: int, k: int) -> TPoly:
        """[n-k-1]_t! times the Poincaré polynomial of X_k."""
        check_hessenberg_range(n, k)
        return SymFuncService.q_factorial(n - k - 1) * BettiService.poincare_poly(n, k)

    @staticmethod
    def hess_dimension(n: int, k: int) -> int:
        """Complex dimension k + (n-k)(n-k-1)/2 of Hess(S, h_k)."""
        check_hessenberg_range(n, k)
        return k + (n - k) * (n - k - 1) // 2

    @staticmethod
    def eulerian_row(n: int) -> List[int]:
        """Permutations of [n] counted by descents."""
        if n < 1:
            raise ValueError("n must be positive")
        row = [0] * n
        for sequence in permutations(range(1, n + 1)):
            row[sum(1 for x, y in zip(sequence, sequence[1:]) if x > y)] += 1
        return row
