"""
Verification service: the cross-checks run by verify-all.
"""
from math import factorial, perm
from typing import Callable, List, Optional

from preperm.core.config import settings
from preperm.models.flag import DiagonalOperator
from preperm.schemas.series import IdentityReport
from preperm.schemas.verification import CheckResult, VerificationReport
from preperm.services.betti_service import BettiService
from preperm.services.chain_service import ChainService
from preperm.services.charseries_service import CharSeriesService
from preperm.services.fan_service import FanService
from preperm.services.flag_service import FlagService
from preperm.services.symfunc_service import SymFuncService
from preperm.utils.logger import logger


def _pairs(low: int, high: int, k_low: int = 0, k_gap: int = 2):
    for n in range(low, high + 1):
        for k in range(k_low, n - k_gap + 1):
            yield n, k


class VerificationService:
    """Verification service class."""

    @staticmethod
    def identity_report(n: int, k: int, coloring: Optional[bool] = None) -> IdentityReport:
        """Symbolic, reindexed and (optionally) coloring checks of the lollipop identity."""
        symbolic = CharSeriesService.verify_identity(n, k)
        reindexed = CharSeriesService.csf_lollipop(n, k) == CharSeriesService.csf_lollipop(
            n, k, reindexed=True
        )
        if coloring is None:
            coloring = n <= min(settings.DEFAULT_MAX_N, settings.COLORING_MAX_N)
        coloring_ok = CharSeriesService.csf_expansion_check(n, k) if coloring else None
        total = SymFuncService.specialize_dimension(CharSeriesService.hess_char_series(n, k)).at(1)
        return IdentityReport(
            n=n,
            k=k,
            symbolic=symbolic,
            reindexed=reindexed,
            coloring=coloring_ok,
            total_dimension=total,
            passed=symbolic and reindexed and coloring_ok is not False,
        )

    @staticmethod
    def check_euler(max_n: int) -> CheckResult:
        """Maximal-chain counts equal P(n, k+1)."""
        detail, cases = [], 0
        for n, k in _pairs(2, max(max_n, settings.SYMBOLIC_MAX_N)):
            cases += 1
            count = len(ChainService.enumerate_chains(n, k, dim_filter=n - 1))
            if count != BettiService.euler_characteristic(n, k):
                detail.append(f"n={n}, k={k}: {count} maximal chains")
        return CheckResult(name="euler_characteristic", passed=not detail, cases=cases, detail=detail)

    @staticmethod
    def check_betti(max_n: int) -> CheckResult:
        """All Betti methods agree; the top row is Eulerian."""
        detail, cases = [], 0
        for n, k in _pairs(2, max_n):
            cases += 1
            comparison = BettiService.compare_methods(n, k)
            if not comparison.agree:
                detail.append(f"n={n}, k={k}: {comparison.tables}")
            row = comparison.tables["recursion"]
            if sum(row) != comparison.euler_characteristic or row != row[::-1]:
                detail.append(f"n={n}, k={k}: total or palindromicity fails")
            if k == n - 2 and row != BettiService.eulerian_row(n):
                detail.append(f"n={n}: top row is not Eulerian")
        return CheckResult(name="betti_agreement", passed=not detail, cases=cases, detail=detail)

    @staticmethod
    def check_fans(max_n: int, trials: int, seed: int) -> List[CheckResult]:
        """Star subdivision oracle, condition (*), τ_C and randomized soundness."""
        star, condition, soundness = [], [], []
        cases = 0
        for n, k in _pairs(2, min(max_n, settings.EXHAUSTIVE_MAX_N)):
            cases += 1
            report = FanService.verify_fan(n, k, trials, seed)
            label = f"n={n}, k={k}"
            if not report.star_ok:
                star.append(label)
            if not (report.condition_ok and report.tau_ok):
                condition.append(label)
            if not (report.simplicial_ok and report.completeness_ok and report.intersection_ok):
                soundness.append(label)
        return [
            CheckResult(name="fan_star_subdivision", passed=not star, cases=cases, detail=star),
            CheckResult(name="fan_condition_tau", passed=not condition, cases=cases, detail=condition),
            CheckResult(name="fan_soundness", passed=not soundness, cases=cases, detail=soundness),
        ]

    @staticmethod
    def check_characters(max_n: int) -> CheckResult:
        """A_{n-1,k}(t) equals the orbit count of codes; dimensions give Poincaré polynomials."""
        detail, cases = [], 0
        for n, k in _pairs(2, max_n):
            cases += 1
            series = CharSeriesService.series_A(n, k)
            if series != CharSeriesService.ch_from_codes(n, k):
                detail.append(f"n={n}, k={k}: recursion and codes differ")
            if SymFuncService.specialize_dimension(series) != BettiService.poincare_poly(n, k):
                detail.append(f"n={n}, k={k}: dimension specialization fails")
        return CheckResult(name="character_agreement", passed=not detail, cases=cases, detail=detail)

    @staticmethod
    def check_identity(max_n: int) -> CheckResult:
        """Lollipop identity symbolically up to the symbolic bound, by colorings up to max_n."""
        detail, cases = [], 0
        coloring_max = min(max_n, settings.COLORING_MAX_N)
        for n, k in _pairs(4, max(max_n, settings.SYMBOLIC_MAX_N), k_low=1, k_gap=3):
            cases += 1
            report = VerificationService.identity_report(n, k, coloring=n <= coloring_max)
            if not report.passed:
                detail.append(f"n={n}, k={k}: {report.model_dump()}")
        for m in range(2, coloring_max + 1):
            cases += 1
            if not CharSeriesService.path_check(m):
                detail.append(f"path P_{m} differs from ω A_{m - 1}")
        return CheckResult(name="lollipop_identity", passed=not detail, cases=cases, detail=detail)

    @staticmethod
    def check_hessenberg_totals(max_n: int) -> CheckResult:
        """Dimension specialization of the Hessenberg series against hess_poincare."""
        detail, cases = [], 0
        for n, k in _pairs(4, max(max_n, settings.SYMBOLIC_MAX_N), k_low=1, k_gap=3):
            cases += 1
            dimension = SymFuncService.specialize_dimension(CharSeriesService.hess_char_series(n, k))
            poincare = BettiService.hess_poincare(n, k)
            if dimension != poincare:
                detail.append(f"n={n}, k={k}: specialization differs from hess_poincare")
            if poincare.at(1) != perm(n, k + 1) * factorial(n - k - 1):
                detail.append(f"n={n}, k={k}: total dimension wrong")
            if not poincare.is_palindromic() or poincare.degree != BettiService.hess_dimension(n, k):
                detail.append(f"n={n}, k={k}: hess_poincare not palindromic of the right degree")
        return CheckResult(name="hessenberg_totals", passed=not detail, cases=cases, detail=detail)

    @staticmethod
    def check_krylov(seed: int) -> CheckResult:
        """krylov_rank = min(depth, support) up to the Krylov bound."""
        detail, cases = [], 0
        for n in range(2, settings.KRYLOV_MAX_N + 1):
            report = FlagService.verify_krylov(
                n, settings.KRYLOV_TRIALS, seed, DiagonalOperator.standard(n)
            )
            cases += report.checks
            detail.extend(f"n={n}: {failure}" for failure in report.failures)
        return CheckResult(name="krylov_rank", passed=not detail, cases=cases, detail=detail)

    @staticmethod
    def verify_all(
        max_n: Optional[int] = None,
        seed: Optional[int] = None,
        trials: Optional[int] = None,
    ) -> VerificationReport:
        """Run every check; the report is identical for identical arguments."""
        max_n = settings.DEFAULT_MAX_N if max_n is None else max_n
        seed = settings.DEFAULT_SEED if seed is None else seed
        trials = settings.DEFAULT_TRIALS if trials is None else trials
        if max_n < 2:
            raise ValueError("max_n must be at least 2")

        steps: List[Callable[[], object]] = [
            lambda: VerificationService.check_euler(max_n),
            lambda: VerificationService.check_betti(max_n),
            lambda: VerificationService.check_fans(max_n, trials, seed),
            lambda: VerificationService.check_characters(max_n),
            lambda: VerificationService.check_identity(max_n),
            lambda: VerificationService.check_hessenberg_totals(max_n),
            lambda: VerificationService.check_krylov(seed),
        ]
        checks: List[CheckResult] = []
        for step in steps:
            outcome = step()
            for check in outcome if isinstance(outcome, list) else [outcome]:
                logger.info(f"{check.name}: {'passed' if check.passed else 'FAILED'} ({check.cases} cases)")
                checks.append(check)

        return VerificationReport(
            max_n=max_n,
            seed=seed,
            trials=trials,
            checks=checks,
            passed=all(check.passed for check in checks),
        )
