"""
Application configuration settings.
"""
from typing import Any

from pydantic import field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings."""

    # Project
    PROJECT_NAME: str = "Prepermutohedral Varieties Toolkit"
    PROJECT_DESCRIPTION: str = (
        "Exact computation and cross-validation of fans, Betti numbers, codes "
        "and characteristic series of prepermutohedral and Hessenberg varieties"
    )
    VERSION: str = "1.0.0"

    # Logging
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # Randomized verifiers
    DEFAULT_SEED: int = 1
    DEFAULT_TRIALS: int = 500
    RANDOM_NUMERATOR_BOUND: int = 1000
    RANDOM_DENOMINATOR_BOUND: int = 1000
    GENERIC_POINT_BOUND: int = 997

    # Enumeration bounds
    DEFAULT_MAX_N: int = 5
    EXHAUSTIVE_MAX_N: int = 6
    SYMBOLIC_MAX_N: int = 7
    COLORING_MAX_N: int = 7
    KRYLOV_MAX_N: int = 8
    KRYLOV_TRIALS: int = 200

    # Output
    OUTPUT_FORMAT: str = "json"

    @field_validator(
        "DEFAULT_TRIALS",
        "RANDOM_NUMERATOR_BOUND",
        "RANDOM_DENOMINATOR_BOUND",
        "GENERIC_POINT_BOUND",
        "DEFAULT_MAX_N",
        "EXHAUSTIVE_MAX_N",
        "SYMBOLIC_MAX_N",
        "COLORING_MAX_N",
        "KRYLOV_MAX_N",
        "KRYLOV_TRIALS",
    )
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v <= 0:
            raise ValueError("bounds and trial counts must be positive")
        return v

    @field_validator("GENERIC_POINT_BOUND")
    @classmethod
    def validate_generic_bound(cls, v: int) -> int:
        # generic points use odd numerators and denominators
        if v % 2 == 0:
            raise ValueError("GENERIC_POINT_BOUND must be odd")
        return v

    @field_validator("OUTPUT_FORMAT", mode="before")
    @classmethod
    def validate_output_format(cls, v: Any) -> str:
        """Normalize the output format name."""
        value = str(v).strip().lower()
        if value not in ("json", "table"):
            raise ValueError(f"Unknown output format: {v}")
        return value

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def validate_log_level(cls, v: Any) -> str:
        value = str(v).strip().upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level: {v}")
        return value

    class Config:
        env_file = ".env"
        env_prefix = "PREPERM_"
        case_sensitive = True
        extra = "ignore"


# Create settings instance
settings = Settings()
