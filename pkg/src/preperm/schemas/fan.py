"""
Fan documents.
"""
from typing import List

from pydantic import BaseModel


class FanReport(BaseModel):
    """Outcome of the fan verifier."""
    n: int
    k: int
    maximal_cone_count: int
    simplicial_ok: bool
    completeness_ok: bool
    intersection_ok: bool
    star_ok: bool
    condition_ok: bool
    tau_ok: bool
    seed: int
    trials: int
    violations: List[str] = []

    @property
    def passed(self) -> bool:
        return (
            self.simplicial_ok
            and self.completeness_ok
            and self.intersection_ok
            and self.star_ok
            and self.condition_ok
            and self.tau_ok
        )


class ConeEntry(BaseModel):
    """One maximal cone of a fan dump."""
    chain: str
    generators: List[List[int]]
    descents: int
    tau: str
    tau_dimension: int


class FanDump(BaseModel):
    """Maximal cones of the fan of X_k in reverse-lexicographic order."""
    n: int
    k: int
    maximal_cones: List[ConeEntry]
    rays: List[List[int]]
