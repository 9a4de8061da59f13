"""
Symmetric functions with coefficients in Z[t].
"""
import enum
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from preperm.models.tpoly import TPoly

Partition = Tuple[int, ...]


class SymBasis(str, enum.Enum):
    """Multiplicative basis of the ring of symmetric functions."""
    H = "h"
    E = "e"


def make_partition(parts: Iterable[int]) -> Partition:
    """Normalize parts to a weakly decreasing tuple of positive integers."""
    values = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in values):
        raise ValueError(f"partition parts must be positive: {values}")
    return values


def format_partition(partition: Partition) -> str:
    return ",".join(str(p) for p in partition)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return make_partition(int(p) for p in text.split(","))


class SymSeries:
    """
    Finite Z[t]-linear combination of h_λ or of e_λ.

    Instances are immutable. Zero coefficients are never stored, so two
    series are equal exactly when their term maps agree.
    """

    __slots__ = ("_basis", "_terms")

    def __init__(
        self,
        basis: Union[SymBasis, str],
        terms: Optional[Mapping[Iterable[int], Union[TPoly, int]]] = None,
    ):
        self._basis = SymBasis(basis)
        collected: Dict[Partition, TPoly] = {}
        for parts, coefficient in (terms or {}).items():
            key = make_partition(parts)
            if isinstance(coefficient, int):
                coefficient = TPoly([coefficient])
            collected[key] = collected.get(key, TPoly.zero()) + coefficient
        self._terms = {k: v for k, v in collected.items() if not v.is_zero()}

    @classmethod
    def element(
        cls,
        basis: Union[SymBasis, str],
        parts: Iterable[int],
        coefficient: Union[TPoly, int] = 1,
    ) -> "SymSeries":
        """coefficient * b_λ for a single partition λ."""
        return cls(basis, {tuple(parts): coefficient})

    @classmethod
    def zero(cls, basis: Union[SymBasis, str]) -> "SymSeries":
        return cls(basis)

    @property
    def basis(self) -> SymBasis:
        return self._basis

    @property
    def terms(self) -> Dict[Partition, TPoly]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Partition, TPoly]]:
        """Terms in a deterministic order: by size, then reverse lexicographic."""
        for key in sorted(self._terms, key=lambda p: (sum(p), tuple(-x for x in p))):
            yield key, self._terms[key]

    def coefficient(self, parts: Iterable[int]) -> TPoly:
        return self._terms.get(make_partition(parts), TPoly.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set:
        """Set of symmetric-function degrees |λ| occurring."""
        return {sum(p) for p in self._terms}

    def is_positive(self) -> bool:
        """All coefficients are polynomials with non-negative coefficients."""
        return all(c.is_nonnegative() for c in self._terms.values())

    def _check_basis(self, other: "SymSeries") -> None:
        if other.basis != self.basis:
            raise ValueError(
                f"basis mismatch: {self.basis.value} and {other.basis.value}"
            )

    def __add__(self, other: "SymSeries") -> "SymSeries":
        if not isinstance(other, SymSeries):
            return NotImplemented
        self._check_basis(other)
        merged = dict(self._terms)
        for key, value in other._terms.items():
            merged[key] = merged.get(key, TPoly.zero()) + value
        return SymSeries(self.basis, merged)

    def __sub__(self, other: "SymSeries") -> "SymSeries":
        if not isinstance(other, SymSeries):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, factor: Union[TPoly, int]) -> "SymSeries":
        """Multiply every coefficient by a polynomial in t."""
        return SymSeries(self.basis, {k: v * factor for k, v in self._terms.items()})

    def __mul__(self, other) -> "SymSeries":
        if isinstance(other, (TPoly, int)):
            return self.scale(other)
        if not isinstance(other, SymSeries):
            return NotImplemented
        self._check_basis(other)
        product: Dict[Partition, TPoly] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                key = make_partition(left + right)
                product[key] = product.get(key, TPoly.zero()) + a * b
        return SymSeries(self.basis, product)

    def __rmul__(self, other) -> "SymSeries":
        if isinstance(other, (TPoly, int)):
            return self.scale(other)
        return NotImplemented

    def omega(self) -> "SymSeries":
        """Involution exchanging h_λ and e_λ."""
        other = SymBasis.E if self.basis == SymBasis.H else SymBasis.H
        return SymSeries(other, self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymSeries):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    __hash__ = None

    def __repr__(self) -> str:
        body = " + ".join(
            f"({coefficient}){self.basis.value}[{format_partition(key)}]"
            for key, coefficient in self.items()
        )
        return f"SymSeries({body or '0'})"
