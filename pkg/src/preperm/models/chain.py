"""
Chains of subsets of [n] and the simplicial cones they span.
"""
from typing import FrozenSet, Iterable, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

Ray = Tuple[int, ...]


def ray_of(n: int, alpha: Iterable[int]) -> Ray:
    """
    Generator e_α in Z^{n-1}.

    e_i is the i-th standard basis vector for i < n and e_n = -(1, ..., 1),
    extended additively over the subset α.
    """
    alpha = set(alpha)
    offset = -1 if n in alpha else 0
    return tuple((1 if i in alpha else 0) + offset for i in range(1, n))


class Chain(BaseModel):
    """
    Chain α_0 ⊊ α_1 ⊊ ... ⊊ α_p ⊊ [n].

    Stored as α_0 followed by the successive differences; the last block
    is the complement [n] \\ α_p, so blocks always partition [n] \\ α_0.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    alpha0: FrozenSet[int]
    blocks: Tuple[FrozenSet[int], ...]

    @field_validator("n")
    @classmethod
    def validate_n(cls, v: int) -> int:
        if v < 2:
            raise ValueError("chains need n >= 2")
        return v

    @model_validator(mode="after")
    def validate_partition(self) -> "Chain":
        if not self.blocks:
            raise ValueError("chain must end with a complement block")
        seen = set(self.alpha0)
        for block in self.blocks:
            if not block:
                raise ValueError("empty non-leading block")
            if seen & block:
                raise ValueError(f"element repeated in chain: {sorted(seen & block)}")
            seen |= block
        if seen != set(range(1, self.n + 1)):
            missing = sorted(set(range(1, self.n + 1)) - seen)
            extra = sorted(seen - set(range(1, self.n + 1)))
            raise ValueError(f"chain does not partition [{self.n}]: missing {missing}, out of range {extra}")
        return self

    @classmethod
    def from_sets(
        cls,
        n: int,
        alpha0: Iterable[int],
        upper_sets: Iterable[Iterable[int]] = (),
    ) -> "Chain":
        """Build a chain from α_0 and the increasing sets α_1, ..., α_p."""
        current = frozenset(alpha0)
        blocks = []
        for upper in sorted((frozenset(u) for u in upper_sets), key=len):
            if not current < upper:
                raise ValueError("sets do not form a strictly increasing chain")
            blocks.append(upper - current)
            current = upper
        blocks.append(frozenset(range(1, n + 1)) - current)
        return cls(n=n, alpha0=frozenset(alpha0), blocks=tuple(blocks))

    @classmethod
    def from_sequence(cls, n: int, alpha0: Iterable[int], sequence: Iterable[int]) -> "Chain":
        """Maximal chain ⟦α_0 | a_{n-k} | ... | a_n⟧."""
        return cls(
            n=n,
            alpha0=frozenset(alpha0),
            blocks=tuple(frozenset([a]) for a in sequence),
        )

    @property
    def p(self) -> int:
        """Number of sets above α_0."""
        return len(self.blocks) - 1

    @property
    def upper_sets(self) -> Tuple[FrozenSet[int], ...]:
        sets = []
        current = self.alpha0
        for block in self.blocks[:-1]:
            current = current | block
            sets.append(current)
        return tuple(sets)

    @property
    def dimension(self) -> int:
        return len(self.alpha0) + self.p

    @property
    def is_maximal(self) -> bool:
        return bool(self.alpha0) and all(len(b) == 1 for b in self.blocks)

    @property
    def order(self) -> Optional[int]:
        """k with σ_C a maximal cone of the fan of X^k, if the chain is maximal."""
        return len(self.blocks) - 1 if self.is_maximal else None

    @property
    def sequence(self) -> Tuple[int, ...]:
        """(a_{n-k}, ..., a_n) for a maximal chain."""
        if not self.is_maximal:
            raise ValueError("sequence is only defined for maximal chains")
        return tuple(next(iter(b)) for b in self.blocks)

    def is_valid_for(self, k: int) -> bool:
        """|α_0| <= n-k-1 and |α_j| >= n-k for every j >= 1."""
        if len(self.alpha0) > self.n - k - 1:
            return False
        return all(len(u) >= self.n - k for u in self.upper_sets)

    def generator_subsets(self) -> Tuple[FrozenSet[int], ...]:
        """Subsets indexing the generators: singletons of α_0, then α_1..α_p."""
        singles = tuple(frozenset([i]) for i in sorted(self.alpha0))
        return singles + self.upper_sets


class Cone(BaseModel):
    """Simplicial cone spanned by integer generators in Z^{n-1}."""

    model_config = ConfigDict(frozen=True)

    n: int
    generators: Tuple[Ray, ...]

    @model_validator(mode="after")
    def validate_dimensions(self) -> "Cone":
        for g in self.generators:
            if len(g) != self.n - 1:
                raise ValueError(f"generator {g} is not in Z^{self.n - 1}")
        return self

    @property
    def dimension(self) -> int:
        return len(self.generators)

    @property
    def rays(self) -> FrozenSet[Ray]:
        return frozenset(self.generators)
