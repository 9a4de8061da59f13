"""
Symmetric function service: q-analogues, products, ω and monomial expansion.
"""
from collections import Counter
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import factorial, prod
from typing import Dict, Tuple

from sympy import Poly, ZZ, symbols

from preperm.models.symfunc import SymBasis, SymSeries
from preperm.models.tpoly import TPoly, t
from preperm.schemas.series import SeriesDump, SeriesTerm

Exponent = Tuple[int, ...]
MonomialExpansion = Dict[Exponent, TPoly]


@lru_cache(maxsize=None)
def _generators(count: int):
    return symbols(f"x1:{count + 1}") + (t,)


@lru_cache(maxsize=None)
def _basis_poly(basis: SymBasis, degree: int, count: int) -> Poly:
    """h_r or e_r in `count` variables, as a polynomial with a trailing t slot."""
    if basis == SymBasis.H:
        supports = combinations_with_replacement(range(count), degree)
    else:
        supports = combinations(range(count), degree)
    terms = {}
    for support in supports:
        counts = Counter(support)
        terms[tuple(counts[i] for i in range(count)) + (0,)] = 1
    if not terms:
        terms[(0,) * (count + 1)] = 0
    return Poly.from_dict(terms, *_generators(count), domain=ZZ)


def monomials_from_poly(poly: Poly, count: int) -> MonomialExpansion:
    """Split a polynomial in x_1..x_N, t into x-monomials with t-coefficients."""
    grouped: Dict[Exponent, Dict[int, int]] = {}
    for exponent, coefficient in poly.as_dict().items():
        grouped.setdefault(exponent[:count], {})[exponent[count]] = int(coefficient)
    expansion: MonomialExpansion = {}
    for key, by_degree in grouped.items():
        coefficients = [by_degree.get(d, 0) for d in range(max(by_degree) + 1)]
        value = TPoly(coefficients)
        if not value.is_zero():
            expansion[key] = value
    return expansion


class SymFuncService:
    """Symmetric function service class."""

    @staticmethod
    def q_int(m: int) -> TPoly:
        """[m]_t = 1 + t + ... + t^{m-1}."""
        if m < 0:
            raise ValueError("q-integers need m >= 0")
        return TPoly([1] * m)

    @staticmethod
    @lru_cache(maxsize=None)
    def q_factorial(m: int) -> TPoly:
        """[m]_t! = [1]_t [2]_t ... [m]_t."""
        if m < 0:
            raise ValueError("q-factorials need m >= 0")
        result = TPoly.one()
        for j in range(1, m + 1):
            result = result * SymFuncService.q_int(j)
        return result

    @staticmethod
    def h(parts, coefficient=1) -> SymSeries:
        return SymSeries.element(SymBasis.H, parts, coefficient)

    @staticmethod
    def e(parts, coefficient=1) -> SymSeries:
        return SymSeries.element(SymBasis.E, parts, coefficient)

    @staticmethod
    def mul(left: SymSeries, right: SymSeries) -> SymSeries:
        """Product; both factors must use the same basis."""
        return left * right

    @staticmethod
    def add(left: SymSeries, right: SymSeries) -> SymSeries:
        return left + right

    @staticmethod
    def omega(series: SymSeries) -> SymSeries:
        return series.omega()

    @staticmethod
    def expand_monomials(series: SymSeries, count: int) -> MonomialExpansion:
        """Expand in x_1..x_N: h_r as all monomials of degree r, e_r as the squarefree ones."""
        if count < 1:
            raise ValueError("need at least one variable")
        gens = _generators(count)
        total = Poly(0, *gens, domain=ZZ)
        for partition, coefficient in series.items():
            term = Poly.from_dict(
                {(0,) * count + (d,): c for d, c in enumerate(coefficient.coefficients) if c},
                *gens,
                domain=ZZ,
            )
            for part in partition:
                term = term * _basis_poly(series.basis, part, count)
            total = total + term
        return monomials_from_poly(total, count)

    @staticmethod
    def specialize_dimension(series: SymSeries) -> TPoly:
        """h_λ, e_λ -> n!/∏ λ_i!, the dimension of the induced permutation module."""
        result = TPoly.zero()
        for partition, coefficient in series.items():
            weight = sum(partition)
            result = result + coefficient * (factorial(weight) // prod(factorial(p) for p in partition))
        return result

    @staticmethod
    def dump_series(series: SymSeries) -> SeriesDump:
        return SeriesDump(
            basis=series.basis.value,
            terms=[
                SeriesTerm(partition=list(partition), coeff=coefficient.coefficients)
                for partition, coefficient in series.items()
            ],
        )
