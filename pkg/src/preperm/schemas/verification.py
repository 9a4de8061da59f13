"""
Verification suite documents.
"""
from typing import List

from pydantic import BaseModel


class CheckResult(BaseModel):
    """One acceptance check."""
    name: str
    passed: bool
    cases: int
    detail: List[str] = []


class VerificationReport(BaseModel):
    """Every acceptance check up to max_n."""
    max_n: int
    seed: int
    trials: int
    checks: List[CheckResult]
    passed: bool
