"""
Pydantic documents emitted by the command line.
"""
from preperm.schemas.betti import BettiComparison, BettiTable
from preperm.schemas.code import (
    CodeEntry,
    CodeListing,
    OrbitDatum,
    OrbitEntry,
    StageRow,
    StageTable,
)
from preperm.schemas.fan import ConeEntry, FanDump, FanReport
from preperm.schemas.flag import FlagVerification, ForgetfulReport, KrylovReport, TorusReport
from preperm.schemas.run import RunConfig
from preperm.schemas.series import (
    CharSeriesReport,
    CsfReport,
    IdentityReport,
    SeriesDump,
    SeriesTerm,
)
from preperm.schemas.verification import CheckResult, VerificationReport

__all__ = [
    # Betti
    "BettiComparison",
    "BettiTable",
    # Codes
    "CodeEntry",
    "CodeListing",
    "OrbitDatum",
    "OrbitEntry",
    "StageRow",
    "StageTable",
    # Fans
    "ConeEntry",
    "FanDump",
    "FanReport",
    # Flags
    "FlagVerification",
    "ForgetfulReport",
    "KrylovReport",
    "TorusReport",
    # Command line
    "RunConfig",
    # Series
    "CharSeriesReport",
    "CsfReport",
    "IdentityReport",
    "SeriesDump",
    "SeriesTerm",
    # Verification
    "CheckResult",
    "VerificationReport",
]
