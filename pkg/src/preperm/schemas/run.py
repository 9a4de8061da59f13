"""
Command invocation document.
"""
from typing import Optional

from pydantic import BaseModel, Field, field_validator

from preperm.core.config import settings
from preperm.models.options import CharSource, GraphKind, OutputFormat


class RunConfig(BaseModel):
    """One parsed command line; flags override settings."""
    command: str
    n: Optional[int] = None
    k: int = 0
    method: str = "all"
    source: CharSource = CharSource.RECURSION
    min_mu: int = 1
    graph: GraphKind = GraphKind.LOLLIPOP
    orbits: bool = False
    stages: bool = False
    bruteforce: bool = False
    verify: bool = False
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED)
    trials: int = Field(default_factory=lambda: settings.DEFAULT_TRIALS)
    max_n: int = Field(default_factory=lambda: settings.DEFAULT_MAX_N)
    format: OutputFormat = Field(default_factory=lambda: OutputFormat(settings.OUTPUT_FORMAT))
    out: Optional[str] = None

    @field_validator("n")
    @classmethod
    def validate_n(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 2:
            raise ValueError(f"n must be at least 2, got {v}")
        return v

    @field_validator("k", "min_mu")
    @classmethod
    def validate_non_negative(cls, v: int) -> int:
        if v < 0:
            raise ValueError("k and min-mu must be non-negative")
        return v

    @field_validator("trials")
    @classmethod
    def validate_trials(cls, v: int) -> int:
        if v <= 0:
            raise ValueError("trials must be positive")
        return v

    def require_n(self) -> int:
        if self.n is None:
            raise ValueError(f"{self.command} needs --n")
        return self.n
