"""
Fan service: the star-subdivision oracle, fan dumps and the fan verifier.
"""
from itertools import combinations
from typing import FrozenSet, List, Optional, Set

from sympy import Rational

from preperm.core.config import settings
from preperm.models.chain import Chain, Ray, ray_of
from preperm.schemas.fan import ConeEntry, FanDump, FanReport
from preperm.services.chain_service import ChainService, check_range
from preperm.utils.linalg import rank, solve_coordinates
from preperm.utils.logger import logger
from preperm.utils.sampling import generic_point, random_rational, trial_rng

MaximalCone = FrozenSet[Ray]


def _ascii(chain: Chain) -> str:
    return ChainService.format_chain(chain, ascii=True)


def _star_subdivide(cones: Set[MaximalCone], ray: Ray) -> Set[MaximalCone]:
    subdivided: Set[MaximalCone] = set()
    for cone in cones:
        generators = sorted(cone)
        coordinates = solve_coordinates(generators, ray)
        if coordinates is None or any(c < 0 for c in coordinates):
            subdivided.add(cone)
            continue
        for generator, coefficient in zip(generators, coordinates):
            if coefficient > 0:
                subdivided.add(frozenset(set(generators) - {generator}) | {ray})
    return subdivided


class FanService:
    """Fan service class."""

    @staticmethod
    def build_fan_by_subdivision(n: int, k: int) -> Set[MaximalCone]:
        """Star-subdivide the fan of P^{n-1} at e_β for |β| = n-1 down to n-k."""
        check_range(n, k)
        cones = {
            frozenset(ray_of(n, {i}) for i in alpha)
            for alpha in combinations(range(1, n + 1), n - 1)
        }
        for size in range(n - 1, n - k - 1, -1):
            for beta in combinations(range(1, n + 1), size):
                cones = _star_subdivide(cones, ray_of(n, beta))
            logger.debug(f"after subdividing at |β|={size}: {len(cones)} maximal cones")
        return cones

    @staticmethod
    def chain_fan(n: int, k: int) -> Set[MaximalCone]:
        """Maximal cones of the chain description as generator sets."""
        return {
            ChainService.cone_of_chain(chain).rays
            for chain in ChainService.enumerate_chains(n, k, dim_filter=n - 1)
        }

    @staticmethod
    def dump_fan(n: int, k: int) -> FanDump:
        """Maximal cones in reverse-lexicographic order, with τ_C data."""
        entries = []
        for chain in ChainService.maximal_chains(n, k):
            tau = ChainService.tau_chain(chain)
            entries.append(
                ConeEntry(
                    chain=ChainService.format_chain(chain, ascii=True),
                    generators=[list(g) for g in ChainService.cone_of_chain(chain).generators],
                    descents=ChainService.count_descents(chain),
                    tau=ChainService.format_chain(tau, ascii=True),
                    tau_dimension=tau.dimension,
                )
            )
        return FanDump(
            n=n,
            k=k,
            maximal_cones=entries,
            rays=sorted(list(r) for r in ChainService.fan_rays(n, k)),
        )

    @staticmethod
    def _brute_force_tau(chain: Chain, maximal: List[Chain]) -> Chain:
        result = chain
        for other in ChainService.later_neighbours(chain, maximal):
            result = ChainService.intersect_chains(result, other)
        return result

    @staticmethod
    def _random_cone_point(rng, chain: Chain, allow_zero: bool = True):
        """Nonnegative combination of the generators; some coefficients may vanish."""
        generators = ChainService.cone_of_chain(chain).generators
        dim = chain.n - 1
        point = [Rational(0)] * dim
        for generator in generators:
            if allow_zero and rng.random() < 0.3:
                continue
            weight = abs(random_rational(rng, nonzero=True))
            for i in range(dim):
                point[i] += weight * generator[i]
        return point

    @staticmethod
    def verify_fan(
        n: int,
        k: int,
        trials: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> FanReport:
        """Exhaustive and randomized checks of the fan of X_k."""
        check_range(n, k)
        if n > settings.EXHAUSTIVE_MAX_N:
            raise ValueError(
                f"exhaustive fan checks are limited to n <= {settings.EXHAUSTIVE_MAX_N}"
            )
        trials = settings.DEFAULT_TRIALS if trials is None else trials
        seed = settings.DEFAULT_SEED if seed is None else seed
        violations: List[str] = []

        # simpliciality of every cone
        simplicial_ok = True
        for chain in ChainService.enumerate_chains(n, k):
            generators = ChainService.cone_of_chain(chain).generators
            if rank(generators) != len(generators):
                simplicial_ok = False
                violations.append(f"non-simplicial cone {_ascii(chain)}")

        maximal = ChainService.maximal_chains(n, k)

        # generic points lie in exactly one maximal cone
        completeness_ok = True
        for index in range(trials):
            rng = trial_rng(seed, index)
            while True:
                point = generic_point(rng, n - 1)
                containing = []
                on_boundary = False
                for chain in maximal:
                    coordinates = ChainService.cone_coordinates(point, chain)
                    if all(c >= 0 for c in coordinates):
                        containing.append(chain)
                        on_boundary = on_boundary or any(c == 0 for c in coordinates)
                if not on_boundary:
                    break
                logger.debug(f"trial {index}: boundary hit, resampling")
            if len(containing) != 1:
                completeness_ok = False
                violations.append(
                    f"point {[str(x) for x in point]} lies in {len(containing)} maximal cones"
                )

        # σ_{C∩C'} = σ_C ∩ σ_{C'} on sampled points
        intersection_ok = True
        for index in range(trials):
            rng = trial_rng(seed, trials + index)
            chain, other = rng.choice(maximal), rng.choice(maximal)
            meet = ChainService.intersect_chains(chain, other)
            inner = FanService._random_cone_point(rng, meet, allow_zero=False)
            if not (ChainService.cone_membership(inner, chain)
                    and ChainService.cone_membership(inner, other)):
                intersection_ok = False
                violations.append(f"point of {_ascii(meet)} escapes {_ascii(chain)} or {_ascii(other)}")
            outer = FanService._random_cone_point(rng, chain)
            if ChainService.cone_membership(outer, other) and not ChainService.cone_membership(outer, meet):
                intersection_ok = False
                violations.append(f"point of {_ascii(chain)} ∩ {_ascii(other)} outside {_ascii(meet)}")

        # chain description agrees with iterated star subdivision
        star_ok = FanService.build_fan_by_subdivision(n, k) == FanService.chain_fan(n, k)
        if not star_ok:
            violations.append("star subdivision and chain description differ")

        # condition (*) over all pairs, and τ_C against its definition
        condition_ok = True
        tau_ok = True
        for chain in maximal:
            tau = ChainService.tau_chain(chain)
            tau_generators = ChainService.cone_of_chain(tau).generators
            for other in maximal:
                contained = all(ChainService.cone_membership(g, other) for g in tau_generators)
                if contained and ChainService.compare_chains(other, chain) < 0:
                    condition_ok = False
                    violations.append(f"τ of {_ascii(chain)} lies in earlier cone {_ascii(other)}")
            if tau != FanService._brute_force_tau(chain, maximal):
                tau_ok = False
                violations.append(f"τ of {_ascii(chain)} differs from the facet intersection")
            if tau.dimension != ChainService.count_ascents(chain):
                tau_ok = False
                violations.append(f"dim τ of {_ascii(chain)} differs from its ascent count")

        report = FanReport(
            n=n,
            k=k,
            maximal_cone_count=len(maximal),
            simplicial_ok=simplicial_ok,
            completeness_ok=completeness_ok,
            intersection_ok=intersection_ok,
            star_ok=star_ok,
            condition_ok=condition_ok,
            tau_ok=tau_ok,
            seed=seed,
            trials=trials,
            violations=violations,
        )
        if report.passed:
            logger.info(f"fan of X_{k} for n={n}: all checks passed")
        else:
            logger.warning(f"fan of X_{k} for n={n}: {len(violations)} violations")
        return report
