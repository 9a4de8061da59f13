"""
Seeded sampling of exact rationals for the randomized verifiers.
"""
import random
from typing import Optional, Tuple

from sympy import Rational

from preperm.core.config import settings


def trial_rng(seed: int, index: int) -> random.Random:
    """Independent generator for one trial, reproducible from (seed, index)."""
    return random.Random(f"{seed}:{index}")


def random_rational(
    rng: random.Random,
    nonzero: bool = False,
    numerator_bound: Optional[int] = None,
    denominator_bound: Optional[int] = None,
) -> Rational:
    """Uniform numerator and denominator within the configured bounds."""
    num_bound = numerator_bound or settings.RANDOM_NUMERATOR_BOUND
    den_bound = denominator_bound or settings.RANDOM_DENOMINATOR_BOUND
    while True:
        numerator = rng.randint(-num_bound, num_bound)
        if numerator or not nonzero:
            return Rational(numerator, rng.randint(1, den_bound))


def random_vector(rng: random.Random, n: int, support: int) -> Tuple[Rational, ...]:
    """Vector of length n with exactly `support` nonzero coordinates."""
    positions = set(rng.sample(range(n), support))
    return tuple(
        random_rational(rng, nonzero=True) if i in positions else Rational(0)
        for i in range(n)
    )


def _odd(rng: random.Random, low: int, high: int) -> int:
    value = rng.randint(low, high)
    return value if value % 2 else value + (1 if value < high else -1)


def generic_point(rng: random.Random, dim: int) -> Tuple[Rational, ...]:
    """Point with odd numerators and denominators, avoiding integral walls."""
    bound = settings.GENERIC_POINT_BOUND
    return tuple(
        Rational(_odd(rng, -bound, bound), _odd(rng, 1, bound))
        for _ in range(dim)
    )


def distinct_diagonal(rng: random.Random, n: int) -> Tuple[Rational, ...]:
    """n pairwise distinct random rationals."""
    entries = []
    while len(entries) < n:
        value = random_rational(rng)
        if value not in entries:
            entries.append(value)
    return tuple(entries)
