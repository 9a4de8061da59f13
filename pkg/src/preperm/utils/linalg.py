"""
Exact rational linear algebra helpers built on sympy.
"""
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, Rational
from sympy.polys.matrices import DomainMatrix

Vector = Tuple[Rational, ...]


def to_rational(value) -> Rational:
    """Coerce an int, string, Fraction or sympy number to a Rational."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, str):
        value = value.strip()
    return Rational(value)


def to_vector(values: Sequence) -> Vector:
    """Coerce a sequence of numbers to a tuple of Rationals."""
    return tuple(to_rational(x) for x in values)


def _domain_matrix(rows: Sequence[Sequence]) -> DomainMatrix:
    return DomainMatrix.from_Matrix(Matrix([list(r) for r in rows])).to_field()


def rank(vectors: Sequence[Sequence]) -> int:
    """Rank of the span of the given vectors."""
    vectors = [v for v in vectors]
    if not vectors or not len(vectors[0]):
        return 0
    return _domain_matrix(vectors).rank()


def prefix_ranks(vectors: Sequence[Sequence]) -> List[int]:
    """
    Ranks of the spans of the first j vectors for j = 1..len(vectors).

    Computed from a single row reduction: the pivot columns of the reduced
    echelon form are exactly the greedily independent columns.
    """
    if not vectors:
        return []
    columns = _domain_matrix(vectors).transpose()
    _, pivots = columns.rref()
    pivot_set = set(pivots)
    ranks: List[int] = []
    count = 0
    for j in range(len(vectors)):
        if j in pivot_set:
            count += 1
        ranks.append(count)
    return ranks


def in_span(vectors: Sequence[Sequence], target: Sequence) -> bool:
    """Whether target lies in the span of vectors."""
    if not vectors:
        return all(x == 0 for x in target)
    return rank(list(vectors) + [target]) == rank(vectors)


@lru_cache(maxsize=65536)
def _inverse(generators: Tuple[Tuple, ...]) -> Matrix:
    return Matrix(generators).T.inv()


def solve_coordinates(
    generators: Sequence[Sequence],
    point: Sequence,
) -> Optional[List[Rational]]:
    """
    Coordinates of point with respect to linearly independent generators.

    Returns None when the point is not in their span.
    """
    if not generators:
        return [] if all(x == 0 for x in point) else None

    target = Matrix([to_rational(x) for x in point])
    if len(generators) == len(point):
        key = tuple(tuple(g) for g in generators)
        return list(_inverse(key) * target)

    system = Matrix([list(g) for g in generators]).T
    try:
        solution, params = system.gauss_jordan_solve(target)
    except ValueError:
        return None
    if params.shape[0]:
        raise ValueError("generators are linearly dependent")
    return list(solution)
