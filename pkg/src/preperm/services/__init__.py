"""
Computation services, one per subject area.
"""
from preperm.services.betti_service import BettiService, check_hessenberg_range
from preperm.services.chain_service import ChainService, check_range
from preperm.services.charseries_service import CharSeriesService
from preperm.services.code_service import CodeService
from preperm.services.fan_service import FanService
from preperm.services.flag_service import FlagService, KrylovDegeneracyError
from preperm.services.symfunc_service import SymFuncService
from preperm.services.verification_service import VerificationService

__all__ = [
    "BettiService",
    "ChainService",
    "CharSeriesService",
    "CodeService",
    "FanService",
    "FlagService",
    "KrylovDegeneracyError",
    "SymFuncService",
    "VerificationService",
    "check_hessenberg_range",
    "check_range",
]
