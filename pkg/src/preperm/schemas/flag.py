"""
Flag verification documents.
"""
from typing import List

from pydantic import BaseModel


class KrylovReport(BaseModel):
    """krylov_rank = min(depth, support) over seeded trials."""
    n: int
    trials: int
    seed: int
    checks: int
    violations: int
    failures: List[str] = []


class ForgetfulReport(BaseModel):
    """dim⟨V_k ∪ S V_k⟩ over seeded trials."""
    n: int
    k: int
    trials: int
    seed: int
    generic: int
    degenerate: int
    violations: int
    failures: List[str] = []


class TorusReport(BaseModel):
    """Products of torus points keep full Krylov rank."""
    n: int
    samples: int
    seed: int
    violations: int


class FlagVerification(BaseModel):
    """All flag checks for one n."""
    n: int
    trials: int
    seed: int
    krylov: KrylovReport
    forgetful: List[ForgetfulReport]
    torus: TorusReport
    hessenberg_ok: bool
    passed: bool
