"""
Code listing documents.
"""
from typing import Dict, List

from pydantic import BaseModel

from preperm.models.code import Code


class CodeEntry(BaseModel):
    """Serialized marked sequence."""
    a: List[int]
    f: Dict[str, int]
    marked: str
    index: int
    mu: int

    @classmethod
    def from_code(cls, code: Code, marked: str) -> "CodeEntry":
        return cls(
            a=list(code.a),
            f={str(j): mark for j, mark in code.f.items()},
            marked=marked,
            index=code.index,
            mu=code.mu,
        )


class OrbitDatum(BaseModel):
    """S_n orbit of a code: representative, size and Young stabilizer type."""
    representative: Code
    orbit_size: int
    stabilizer_type: List[int]


class OrbitEntry(BaseModel):
    """Serialized orbit."""
    representative: CodeEntry
    orbit_size: int
    stabilizer_type: List[int]


class CodeListing(BaseModel):
    """Codes of length n with μ >= min_mu, or their orbits."""
    n: int
    min_mu: int
    count: int
    codes: List[CodeEntry] = []
    orbits: List[OrbitEntry] = []


class StageRow(BaseModel):
    """Orbit representatives added at one blowup stage in one degree."""
    degree: int
    stage: int
    representatives: List[str]


class StageTable(BaseModel):
    """Codes of length n arranged by cohomological degree and blowup stage."""
    n: int
    rows: List[StageRow]
