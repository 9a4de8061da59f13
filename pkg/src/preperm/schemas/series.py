"""
Symmetric function series documents.
"""
from typing import Dict, List, Optional

from pydantic import BaseModel


class SeriesTerm(BaseModel):
    """Coefficient of one basis element, ascending in t."""
    partition: List[int]
    coeff: List[int]


class SeriesDump(BaseModel):
    """A series in the h or e basis."""
    basis: str
    terms: List[SeriesTerm]


class CharSeriesReport(BaseModel):
    """Characteristic series A_{n-1,k}(t) of X_k."""
    n: int
    k: int
    source: str
    series: SeriesDump
    dimension_poly: List[int]
    hessenberg: Optional[SeriesDump] = None


class CsfReport(BaseModel):
    """Chromatic quasisymmetric function of one of the supported graphs."""
    graph: str
    n: int
    k: Optional[int] = None
    edges: List[List[int]]
    series: SeriesDump
    bruteforce_checked: bool = False
    bruteforce_agrees: Optional[bool] = None
    monomials: Dict[str, List[int]] = {}


class IdentityReport(BaseModel):
    """ω X_{L_{n-k,k}} = [n-k-1]_t! A_{n-1,k}(t), symbolically and by coloring."""
    n: int
    k: int
    symbolic: bool
    reindexed: bool
    coloring: Optional[bool] = None
    total_dimension: int
    passed: bool
