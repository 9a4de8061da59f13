"""
Flag service: Krylov flags, the Hessenberg condition and the forgetful map.
"""
from typing import List, Optional, Sequence, Tuple

from sympy import Rational

from preperm.models.flag import (
    DiagonalOperator,
    FlagSpec,
    h_plus,
    validate_hessenberg,
)
from preperm.schemas.flag import FlagVerification, ForgetfulReport, KrylovReport, TorusReport
from preperm.utils.linalg import in_span, prefix_ranks, rank, to_vector
from preperm.utils.logger import logger
from preperm.utils.sampling import random_rational, random_vector, trial_rng

Vector = Tuple[Rational, ...]


class KrylovDegeneracyError(ValueError):
    """v, Sv, ..., S^{m-1}v are dependent: v lies on a coordinate subspace."""

    def __init__(self, message: str, support: Tuple[int, ...]):
        super().__init__(message)
        self.support = support


def _support(vector: Sequence) -> Tuple[int, ...]:
    return tuple(i + 1 for i, x in enumerate(vector) if x != 0)


class FlagService:
    """Flag service class."""

    @staticmethod
    def krylov_vectors(operator: DiagonalOperator, v: Sequence, m: int) -> List[Vector]:
        """[v, Sv, ..., S^{m-1}v]."""
        vectors = [to_vector(v)]
        while len(vectors) < m:
            vectors.append(operator.apply(vectors[-1]))
        return vectors[:m]

    @staticmethod
    def krylov_rank(operator: DiagonalOperator, v: Sequence, m: int) -> int:
        """Exact rank of [v, Sv, ..., S^{m-1}v] over Q."""
        if len(v) != operator.n:
            raise ValueError(f"vector of length {len(v)} for operator of size {operator.n}")
        if not 1 <= m <= operator.n:
            raise ValueError(f"depth must lie in [1, {operator.n}], got {m}")
        return rank(FlagService.krylov_vectors(operator, v, m))

    @staticmethod
    def build_krylov_flag(operator: DiagonalOperator, v: Sequence, depth: int) -> FlagSpec:
        """⟨v⟩ ⊂ ⟨v, Sv⟩ ⊂ ... ⊂ ⟨v, ..., S^{depth-1}v⟩."""
        if FlagService.krylov_rank(operator, v, depth) != depth:
            support = _support(v)
            raise KrylovDegeneracyError(
                f"Krylov vectors of depth {depth} are dependent; v is supported on {list(support)}",
                support,
            )
        return FlagSpec(n=operator.n, basis=FlagService.krylov_vectors(operator, v, depth))

    @staticmethod
    def check_hessenberg(flag: FlagSpec, operator: DiagonalOperator, h: Sequence[int]) -> bool:
        """S V_i ⊆ V_{h(i)} wherever the flag determines V_{h(i)}."""
        h = validate_hessenberg(tuple(h), flag.n)
        if operator.n != flag.n:
            raise ValueError("operator and flag live in different dimensions")
        for i in range(1, flag.length + 1):
            target = h[i - 1]
            if target >= flag.n:
                continue
            if target > flag.length:
                logger.debug(f"V_{target} undetermined by a flag of length {flag.length}")
                continue
            images = [operator.apply(vector) for vector in flag.subspace(i)]
            span = flag.subspace(target)
            if rank(list(span) + images) != target:
                return False
        return True

    @staticmethod
    def forgetful_dimension(operator: DiagonalOperator, flag: FlagSpec) -> int:
        """dim⟨V_k ∪ S V_k⟩ for the last space of the flag."""
        vectors = list(flag.basis)
        return rank(vectors + [operator.apply(vector) for vector in vectors])

    @staticmethod
    def is_invariant(operator: DiagonalOperator, vectors: Sequence[Sequence]) -> bool:
        """S⟨vectors⟩ = ⟨vectors⟩."""
        vectors = [to_vector(v) for v in vectors]
        return rank(vectors + [operator.apply(v) for v in vectors]) == rank(vectors)

    @staticmethod
    def invariant_coordinate_set(
        operator: DiagonalOperator, vectors: Sequence[Sequence]
    ) -> Optional[Tuple[int, ...]]:
        """The α with ⟨vectors⟩ = Z_α when the span is S-invariant, else None."""
        if not FlagService.is_invariant(operator, vectors):
            return None
        support = sorted({i for v in vectors for i in _support(v)})
        if rank(vectors) != len(support):
            return None
        return tuple(support)

    @staticmethod
    def extend_flag(
        flag: FlagSpec,
        operator: DiagonalOperator,
        direction: Optional[Sequence] = None,
    ) -> FlagSpec:
        """
        Append the next space of the flag.

        When ⟨V_k ∪ S V_k⟩ has dimension k+1 it is the next space. Otherwise
        V_k = Z_α is S-invariant and a normal direction must be supplied.
        """
        if flag.length >= flag.n:
            raise ValueError("flag is already complete")
        if flag.length == 0:
            if direction is None:
                raise ValueError("an empty flag needs a starting vector")
            return flag.extended(direction)
        for vector in flag.basis:
            image = operator.apply(vector)
            if not in_span(flag.basis, image):
                return flag.extended(image)
        alpha = FlagService.invariant_coordinate_set(operator, flag.basis)
        if direction is None:
            raise KrylovDegeneracyError(
                f"V_{flag.length} is invariant; a normal direction is required",
                alpha or (),
            )
        direction = to_vector(direction)
        if in_span(flag.basis, direction):
            raise ValueError("direction lies in the current space")
        return flag.extended(direction)

    @staticmethod
    def torus_flag(operator: DiagonalOperator, z: Sequence, depth: int) -> FlagSpec:
        """Krylov flag of v = (1, z_1, ..., z_{n-1}) for nonzero z."""
        z = to_vector(z)
        if len(z) != operator.n - 1:
            raise ValueError(f"torus point needs {operator.n - 1} coordinates")
        if any(x == 0 for x in z):
            raise ValueError("torus coordinates must be nonzero")
        return FlagService.build_krylov_flag(operator, (Rational(1),) + z, depth)

    @staticmethod
    def torus_product_check(
        n: int,
        samples: int,
        seed: int,
        operator: Optional[DiagonalOperator] = None,
    ) -> TorusReport:
        """The coordinatewise product of two torus points has a full Krylov flag."""
        operator = operator or DiagonalOperator.standard(n)
        violations = 0
        for index in range(samples):
            rng = trial_rng(seed, index)
            z = [random_rational(rng, nonzero=True) for _ in range(n - 1)]
            z_prime = [random_rational(rng, nonzero=True) for _ in range(n - 1)]
            product = [a * b for a, b in zip(z, z_prime)]
            try:
                flag = FlagService.torus_flag(operator, product, n)
            except KrylovDegeneracyError:
                violations += 1
                continue
            if not FlagService.check_hessenberg(flag, operator, h_plus(n)):
                violations += 1
        return TorusReport(n=n, samples=samples, seed=seed, violations=violations)

    @staticmethod
    def forgetful_dim_check(
        operator: DiagonalOperator,
        k: int,
        trials: int,
        seed: int,
        v: Optional[Sequence] = None,
    ) -> ForgetfulReport:
        """dim⟨V_k ∪ S V_k⟩ is k+1, or k exactly when v has support of size k."""
        n = operator.n
        if not 1 <= k <= n - 1:
            raise ValueError(f"k must lie in [1, {n - 1}], got {k}")
        samples = []
        if v is not None:
            samples.append(to_vector(v))
        for index in range(trials):
            rng = trial_rng(seed, index)
            samples.append(random_vector(rng, n, rng.randint(k, n)))

        generic = degenerate = 0
        failures: List[str] = []
        for vector in samples:
            support = len(_support(vector))
            try:
                flag = FlagService.build_krylov_flag(operator, vector, k)
            except KrylovDegeneracyError as exc:
                failures.append(f"support {support}: no Krylov flag of depth {k} ({exc})")
                continue
            dimension = FlagService.forgetful_dimension(operator, flag)
            expected = k if support == k else k + 1
            if dimension == k:
                degenerate += 1
            else:
                generic += 1
            if dimension != expected:
                failures.append(f"support {support}: dimension {dimension}, expected {expected}")
        if failures:
            logger.warning(f"forgetful map check n={n}, k={k}: {len(failures)} violations")
        return ForgetfulReport(
            n=n,
            k=k,
            trials=len(samples),
            seed=seed,
            generic=generic,
            degenerate=degenerate,
            violations=len(failures),
            failures=failures,
        )

    @staticmethod
    def verify_krylov(
        n: int,
        trials: int,
        seed: int,
        operator: Optional[DiagonalOperator] = None,
    ) -> KrylovReport:
        """krylov_rank(S, v, j) = min(j, m) for every support size m and depth j."""
        operator = operator or DiagonalOperator.standard(n)
        checks = 0
        failures: List[str] = []
        for support in range(n + 1):
            for index in range(trials):
                rng = trial_rng(seed, support * trials + index)
                v = random_vector(rng, n, support)
                ranks = prefix_ranks(FlagService.krylov_vectors(operator, v, n))
                for depth, value in enumerate(ranks, start=1):
                    checks += 1
                    if value != min(depth, support):
                        failures.append(f"support {support}, depth {depth}: rank {value}")
        if failures:
            logger.warning(f"Krylov rank check n={n}: {len(failures)} violations")
        return KrylovReport(
            n=n,
            trials=trials,
            seed=seed,
            checks=checks,
            violations=len(failures),
            failures=failures,
        )

    @staticmethod
    def verify_flags(n: int, trials: int, seed: int) -> FlagVerification:
        """Krylov ranks, forgetful map, torus products and the h_+ condition for one n."""
        if n < 2:
            raise ValueError("flags need n >= 2")
        operator = DiagonalOperator.standard(n)
        krylov = FlagService.verify_krylov(n, trials, seed, operator)
        forgetful = [
            FlagService.forgetful_dim_check(operator, k, trials, seed)
            for k in range(1, n)
        ]
        torus = FlagService.torus_product_check(n, trials, seed, operator)

        hessenberg_ok = True
        for index in range(trials):
            rng = trial_rng(seed, index)
            v = random_vector(rng, n, n)
            flag = FlagService.build_krylov_flag(operator, v, n - 1)
            hessenberg_ok = hessenberg_ok and FlagService.check_hessenberg(flag, operator, h_plus(n))

        passed = (
            krylov.violations == 0
            and all(report.violations == 0 for report in forgetful)
            and torus.violations == 0
            and hessenberg_ok
        )
        return FlagVerification(
            n=n,
            trials=trials,
            seed=seed,
            krylov=krylov,
            forgetful=forgetful,
            torus=torus,
            hessenberg_ok=hessenberg_ok,
            passed=passed,
        )
