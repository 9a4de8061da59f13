"""
Chain service: list notation, cones, intersections, ordering and τ_C.
"""
import re
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Sequence

from preperm.models.chain import Chain, Cone, ray_of
from preperm.utils.linalg import solve_coordinates, to_rational
from preperm.utils.logger import logger

_BRACKETS = (("⟦", "⟧"), ("[[", "]]"))


def check_range(n: int, k: int) -> None:
    """Require 0 <= k <= n-2."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 0 <= k <= n - 2:
        raise ValueError(f"k must lie in [0, {n - 2}] for n={n}, got {k}")


@lru_cache(maxsize=None)
def _cone(chain: Chain) -> Cone:
    generators = tuple(ray_of(chain.n, subset) for subset in chain.generator_subsets())
    return Cone(n=chain.n, generators=generators)


class ChainService:
    """Chain service class."""

    @staticmethod
    def parse_chain(text: str, n: int) -> Chain:
        """Parse list notation such as ⟦1,4|2,3|5⟧ or [[1,4|2,3|5]]."""
        body = text.strip()
        for left, right in _BRACKETS:
            if body.startswith(left) and body.endswith(right):
                body = body[len(left):len(body) - len(right)]
                break
        else:
            raise ValueError(f"chain must be enclosed in ⟦ ⟧ or [[ ]]: {text!r}")

        parts = body.split("|")
        if len(parts) < 2:
            raise ValueError(f"chain needs at least one bar: {text!r}")

        blocks = []
        seen = set()
        for index, part in enumerate(parts):
            tokens = [tok for tok in re.split(r"[,\s]+", part.strip()) if tok]
            block = set()
            for token in tokens:
                if not token.isdigit():
                    raise ValueError(f"not a number in chain: {token!r}")
                value = int(token)
                if not 1 <= value <= n:
                    raise ValueError(f"number {value} out of range 1..{n}")
                if value in seen:
                    raise ValueError(f"duplicate number {value} in chain")
                seen.add(value)
                block.add(value)
            if not block and index > 0:
                raise ValueError("empty non-leading block")
            blocks.append(frozenset(block))

        missing = sorted(set(range(1, n + 1)) - seen)
        if missing:
            raise ValueError(f"numbers missing from chain: {missing}")

        return Chain(n=n, alpha0=blocks[0], blocks=tuple(blocks[1:]))

    @staticmethod
    def format_chain(chain: Chain, ascii: bool = False) -> str:
        """Render list notation with blocks sorted ascending."""
        left, right = _BRACKETS[1] if ascii else _BRACKETS[0]
        parts = [chain.alpha0] + list(chain.blocks)
        body = "|".join(",".join(str(x) for x in sorted(part)) for part in parts)
        return f"{left}{body}{right}"

    @staticmethod
    def chain_from_sequence(n: int, sequence: Sequence[int]) -> Chain:
        """Maximal chain ⟦α_0 | a_{n-k} | ... | a_n⟧ from its k+1 trailing numbers."""
        if len(set(sequence)) != len(sequence):
            raise ValueError("sequence entries must be distinct")
        if not 1 <= len(sequence) <= n - 1:
            raise ValueError(f"sequence length must lie in [1, {n - 1}]")
        alpha0 = set(range(1, n + 1)) - set(sequence)
        return Chain.from_sequence(n, alpha0, sequence)

    @staticmethod
    def cone_of_chain(chain: Chain) -> Cone:
        """Generators e_i (i in α_0) then e_{α_j} (j >= 1)."""
        return _cone(chain)

    @staticmethod
    def enumerate_chains(n: int, k: int, dim_filter: Optional[int] = None) -> List[Chain]:
        """Every (n,k)-valid chain exactly once, optionally of one dimension."""
        check_range(n, k)
        universe = list(range(1, n + 1))
        chains: List[Chain] = []

        def extend(alpha0: frozenset, uppers: List[frozenset]) -> None:
            chain = Chain.from_sets(n, alpha0, uppers)
            if dim_filter is None or chain.dimension == dim_filter:
                chains.append(chain)
            top = uppers[-1] if uppers else alpha0
            rest = [x for x in universe if x not in top]
            low = max(1, n - k - len(top))
            for size in range(low, n - len(top)):
                for added in combinations(rest, size):
                    extend(alpha0, uppers + [top | frozenset(added)])

        for size in range(0, n - k):
            for alpha0 in combinations(universe, size):
                extend(frozenset(alpha0), [])

        logger.debug(f"enumerated {len(chains)} chains for n={n}, k={k}, dim={dim_filter}")
        return chains

    @staticmethod
    def maximal_chains(n: int, k: int) -> List[Chain]:
        """Maximal chains in increasing reverse-lexicographic order."""
        check_range(n, k)
        chains = ChainService.enumerate_chains(n, k, dim_filter=n - 1)
        return sorted(chains, key=lambda c: tuple(reversed(c.sequence)))

    @staticmethod
    def intersect_chains(chain: Chain, other: Chain) -> Chain:
        """Greatest common subchain: α_0 ∩ α'_0 followed by the shared upper sets."""
        if chain.n != other.n:
            raise ValueError(f"cannot intersect chains on [{chain.n}] and [{other.n}]")
        shared = set(other.upper_sets)
        common = [u for u in chain.upper_sets if u in shared]
        return Chain.from_sets(chain.n, chain.alpha0 & other.alpha0, common)

    @staticmethod
    def _check_maximal(chain: Chain) -> None:
        if not chain.is_maximal:
            raise ValueError(f"not a maximal chain: {ChainService.format_chain(chain)}")

    @staticmethod
    def compare_chains(chain: Chain, other: Chain) -> int:
        """-1, 0 or 1; the greatest differing position decides."""
        ChainService._check_maximal(chain)
        ChainService._check_maximal(other)
        if chain.n != other.n or chain.order != other.order:
            raise ValueError("chains must be maximal for the same (n, k)")
        for a, b in zip(reversed(chain.sequence), reversed(other.sequence)):
            if a != b:
                return -1 if a < b else 1
        return 0

    @staticmethod
    def count_descents(chain: Chain) -> int:
        """α_0 elements above a_{n-k}, plus descents a_j > a_{j+1}."""
        ChainService._check_maximal(chain)
        sequence = chain.sequence
        head = sum(1 for a in chain.alpha0 if a > sequence[0])
        return head + sum(1 for x, y in zip(sequence, sequence[1:]) if x > y)

    @staticmethod
    def count_ascents(chain: Chain) -> int:
        """α_0 elements below a_{n-k}, plus ascents a_j < a_{j+1}."""
        ChainService._check_maximal(chain)
        sequence = chain.sequence
        head = sum(1 for a in chain.alpha0 if a < sequence[0])
        return head + sum(1 for x, y in zip(sequence, sequence[1:]) if x < y)

    @staticmethod
    def complement_chain(chain: Chain) -> Chain:
        """Apply a -> n+1-a to every entry."""
        def flip(subset):
            return frozenset(chain.n + 1 - a for a in subset)

        return Chain(
            n=chain.n,
            alpha0=flip(chain.alpha0),
            blocks=tuple(flip(b) for b in chain.blocks),
        )

    @staticmethod
    def tau_chain(chain: Chain) -> Chain:
        """Drop descending α_0 elements and the set α_j at every descent a_j > a_{j+1}."""
        ChainService._check_maximal(chain)
        sequence = chain.sequence
        alpha0 = frozenset(a for a in chain.alpha0 if a < sequence[0])
        kept = [
            upper
            for upper, x, y in zip(chain.upper_sets, sequence, sequence[1:])
            if x < y
        ]
        return Chain.from_sets(chain.n, alpha0, kept)

    @staticmethod
    def cone_membership(point: Sequence, chain: Chain) -> bool:
        """Exact test that point is a nonnegative combination of the generators."""
        if len(point) != chain.n - 1:
            raise ValueError(f"point has length {len(point)}, expected {chain.n - 1}")
        coordinates = ChainService.cone_coordinates(point, chain)
        return coordinates is not None and all(c >= 0 for c in coordinates)

    @staticmethod
    def cone_coordinates(point: Sequence, chain: Chain):
        """Coefficients of point in the cone generators, or None outside their span."""
        generators = _cone(chain).generators
        return solve_coordinates(generators, [to_rational(x) for x in point])

    @staticmethod
    def cone_is_face(chain: Chain, other: Chain) -> bool:
        """σ_C is a face of σ_C' exactly when C is a subchain of C'."""
        if chain.n != other.n:
            return False
        return chain.alpha0 <= other.alpha0 and set(chain.upper_sets) <= set(other.upper_sets)

    @staticmethod
    def later_neighbours(chain: Chain, chains: Sequence[Chain]) -> List[Chain]:
        """Chains C' > C among `chains` whose cones meet σ_C in a facet."""
        facet_dim = chain.n - 2
        return [
            other
            for other in chains
            if ChainService.compare_chains(other, chain) > 0
            and ChainService.intersect_chains(chain, other).dimension == facet_dim
        ]

    @staticmethod
    def fan_rays(n: int, k: int) -> List[tuple]:
        """e_α for |α| = 1 or n-k <= |α| <= n-1."""
        check_range(n, k)
        sizes = [1] + [s for s in range(max(2, n - k), n)]
        return [
            ray_of(n, alpha)
            for size in sizes
            for alpha in combinations(range(1, n + 1), size)
        ]
