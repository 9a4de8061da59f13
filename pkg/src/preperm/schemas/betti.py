"""
Betti number documents.
"""
from typing import Dict, List

from pydantic import BaseModel

from preperm.models.options import BettiMethod


class BettiTable(BaseModel):
    """Even Betti numbers β_0, β_2, ..., β_{2(n-1)} of X_k."""
    n: int
    k: int
    betti: List[int]
    method: BettiMethod

    @property
    def total(self) -> int:
        return sum(self.betti)

    @property
    def is_palindromic(self) -> bool:
        return self.betti == self.betti[::-1]


class BettiComparison(BaseModel):
    """Betti numbers of X_k computed every available way."""
    n: int
    k: int
    euler_characteristic: int
    tables: Dict[str, List[int]]
    agree: bool
