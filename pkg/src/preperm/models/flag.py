"""
Diagonal operators, Hessenberg functions and partial flags over Q.
"""
from typing import Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from sympy import Rational

from preperm.utils.linalg import rank, to_rational, to_vector

HessenbergFunction = Tuple[int, ...]


def hessenberg_function(n: int, k: int) -> HessenbergFunction:
    """h_k(j) = j+1 for j <= k and n otherwise."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must lie in [0, {n - 1}], got {k}")
    return tuple(j + 1 if j <= k else n for j in range(1, n + 1))


def h_plus(n: int) -> HessenbergFunction:
    """h_+(j) = min(j+1, n)."""
    return tuple(min(j + 1, n) for j in range(1, n + 1))


def validate_hessenberg(h: Tuple[int, ...], n: int) -> HessenbergFunction:
    """Check that h is non-decreasing with j <= h(j) <= n."""
    h = tuple(int(x) for x in h)
    if len(h) != n:
        raise ValueError(f"Hessenberg function needs {n} values, got {len(h)}")
    for j, value in enumerate(h, start=1):
        if not j <= value <= n:
            raise ValueError(f"h({j}) = {value} outside [{j}, {n}]")
        if j > 1 and value < h[j - 2]:
            raise ValueError("Hessenberg function must be non-decreasing")
    return h


class DiagonalOperator(BaseModel):
    """diag(s_1, ..., s_n) with pairwise distinct rational entries."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: Tuple[Rational, ...]

    @field_validator("entries", mode="before")
    @classmethod
    def coerce_entries(cls, v):
        return to_vector(v)

    @model_validator(mode="after")
    def validate_distinct(self) -> "DiagonalOperator":
        if not self.entries:
            raise ValueError("operator needs at least one entry")
        if len(set(self.entries)) != len(self.entries):
            raise ValueError("diagonal entries must be pairwise distinct")
        return self

    @classmethod
    def standard(cls, n: int) -> "DiagonalOperator":
        """diag(1, 2, ..., n)."""
        return cls(entries=tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def apply(self, vector) -> Tuple[Rational, ...]:
        if len(vector) != self.n:
            raise ValueError(f"vector of length {len(vector)} for operator of size {self.n}")
        return tuple(s * to_rational(x) for s, x in zip(self.entries, vector))


class FlagSpec(BaseModel):
    """
    Partial flag V_1 ⊂ ... ⊂ V_m in Q^n given by an adapted basis.

    V_i is spanned by the first i basis vectors.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    basis: Tuple[Tuple[Rational, ...], ...] = ()

    @field_validator("basis", mode="before")
    @classmethod
    def coerce_basis(cls, v):
        return tuple(to_vector(vector) for vector in v)

    @model_validator(mode="after")
    def validate_basis(self) -> "FlagSpec":
        for vector in self.basis:
            if len(vector) != self.n:
                raise ValueError(f"basis vector of length {len(vector)} in Q^{self.n}")
        if rank(self.basis) != len(self.basis):
            raise ValueError("flag basis vectors are linearly dependent")
        return self

    @property
    def length(self) -> int:
        return len(self.basis)

    def subspace(self, i: int) -> Tuple[Tuple[Rational, ...], ...]:
        """Spanning vectors of V_i; V_n is the whole space."""
        if i >= self.n:
            return tuple(
                tuple(Rational(1 if r == c else 0) for c in range(self.n))
                for r in range(self.n)
            )
        if i > self.length:
            raise ValueError(f"V_{i} is not determined by a flag of length {self.length}")
        return self.basis[:i]

    def extended(self, vector) -> "FlagSpec":
        return FlagSpec(n=self.n, basis=self.basis + (to_vector(vector),))
