"""
Characteristic series and chromatic quasisymmetric functions.
"""
from collections import Counter, defaultdict
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from preperm.core.config import settings
from preperm.models.flag import hessenberg_function, validate_hessenberg
from preperm.models.graph import Graph
from preperm.models.options import CharSource, GraphKind
from preperm.models.symfunc import SymBasis, SymSeries
from preperm.models.tpoly import TPoly
from preperm.services.betti_service import check_hessenberg_range
from preperm.services.chain_service import check_range
from preperm.services.code_service import CodeService
from preperm.services.symfunc_service import MonomialExpansion, SymFuncService
from preperm.utils.logger import logger


@lru_cache(maxsize=None)
def _series_a(n: int, k: int) -> SymSeries:
    q = SymFuncService.q_int
    h = SymFuncService.h
    total = h([n], q(n))
    for i in range(k):
        term = h([n - 1 - i]) * CharSeriesService.permutohedral_series(i)
        total = total + term.scale(q(n - i - 2).shift(1))
    return total


def _path_csf(m: int) -> SymSeries:
    """X_{P_m} in the e basis."""
    if m == 1:
        return SymFuncService.e([1])
    return CharSeriesService.series_A(m, m - 2).omega()


class CharSeriesService:
    """Characteristic series service class."""

    @staticmethod
    def permutohedral_series(i: int) -> SymSeries:
        """A_i: the series of the full permutohedral variety of dimension i; A_0 = h_1."""
        if i < 0:
            raise ValueError("dimension must be non-negative")
        if i == 0:
            return SymFuncService.h([1])
        return CharSeriesService.series_A(i + 1, i - 1)

    @staticmethod
    def series_A(n: int, k: int) -> SymSeries:
        """A_{n-1,k}(t) = h_n [n]_t + Σ_{i<k} h_{n-1-i} A_i t [n-i-2]_t."""
        if not (n == 1 and k == 0):
            check_range(n, k)
        return _series_a(n, k)

    @staticmethod
    def ch_from_codes(n: int, k: int) -> SymSeries:
        """Σ over code orbits of t^{ind} h_{stabilizer type}."""
        check_range(n, k)
        terms: Dict[Tuple[int, ...], TPoly] = defaultdict(TPoly.zero)
        for orbit in CodeService.orbits(n, n - k):
            key = tuple(orbit.stabilizer_type)
            terms[key] = terms[key] + TPoly.monomial(orbit.representative.index)
        return SymSeries(SymBasis.H, terms)

    @staticmethod
    def char_series(n: int, k: int, source: CharSource) -> SymSeries:
        if CharSource(source) == CharSource.CODES:
            return CharSeriesService.ch_from_codes(n, k)
        return CharSeriesService.series_A(n, k)

    @staticmethod
    def hess_char_series(n: int, k: int) -> SymSeries:
        """[n-k-1]_t! A_{n-1,k}(t): the dot action on H*(Hess(S, h_k))."""
        check_hessenberg_range(n, k)
        return CharSeriesService.series_A(n, k).scale(SymFuncService.q_factorial(n - k - 1))

    @staticmethod
    def hessenberg_graph(h: Sequence[int]) -> Graph:
        """Incomparability graph of h: {i, j} is an edge when i < j <= h(i)."""
        h = validate_hessenberg(tuple(h), len(h))
        n = len(h)
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, h[i - 1] + 1)]
        return Graph(n=n, edges=edges)

    @staticmethod
    def lollipop_graph(n: int, k: int) -> Graph:
        """Path on 1..k+1 glued to the complete graph on k+1..n; k=0 gives K_n."""
        if k != 0:
            check_hessenberg_range(n, k)
        elif n < 1:
            raise ValueError("lollipop needs at least one vertex")
        return CharSeriesService.hessenberg_graph(hessenberg_function(n, k))

    @staticmethod
    def path_graph(m: int) -> Graph:
        if m < 1:
            raise ValueError("path needs at least one vertex")
        return CharSeriesService.hessenberg_graph(tuple(min(j + 1, m) for j in range(1, m + 1)))

    @staticmethod
    def complete_graph(n: int) -> Graph:
        if n < 1:
            raise ValueError("complete graph needs at least one vertex")
        return CharSeriesService.hessenberg_graph((n,) * n)

    @staticmethod
    def graph(kind: GraphKind, n: int, k: int = 0) -> Graph:
        kind = GraphKind(kind)
        if kind == GraphKind.LOLLIPOP:
            return CharSeriesService.lollipop_graph(n, k)
        if kind == GraphKind.PATH:
            return CharSeriesService.path_graph(n)
        return CharSeriesService.complete_graph(n)

    @staticmethod
    def csf_bruteforce(graph: Graph, t_graded: bool = True) -> MonomialExpansion:
        """Σ over proper colorings κ: [n] -> [n] of t^{asc(κ)} x_κ."""
        n = graph.n
        if n > settings.COLORING_MAX_N:
            raise ValueError(f"coloring enumeration is limited to n <= {settings.COLORING_MAX_N}")
        below = [graph.neighbours_below(v) for v in range(1, n + 1)]
        tally: Counter = Counter()
        coloring = [0] * n

        def assign(vertex: int, ascents: int) -> None:
            if vertex == n:
                exponent = [0] * n
                for color in coloring:
                    exponent[color] += 1
                tally[(tuple(exponent), ascents if t_graded else 0)] += 1
                return
            for color in range(n):
                gained = 0
                for u in below[vertex]:
                    other = coloring[u - 1]
                    if other == color:
                        break
                    gained += other < color
                else:
                    coloring[vertex] = color
                    assign(vertex + 1, ascents + gained)

        assign(0, 0)
        grouped: Dict[Tuple[int, ...], Dict[int, int]] = defaultdict(dict)
        for (exponent, degree), count in tally.items():
            grouped[exponent][degree] = count
        logger.debug(f"{sum(tally.values())} proper colorings of a graph on {n} vertices")
        return {
            exponent: TPoly([by_degree.get(d, 0) for d in range(max(by_degree) + 1)])
            for exponent, by_degree in grouped.items()
        }

    @staticmethod
    def csf_lollipop(n: int, k: int, reindexed: bool = False) -> SymSeries:
        """X_{L_{n-k,k}}(x, t) in the e basis."""
        check_hessenberg_range(n, k)
        q = SymFuncService.q_int
        e = SymFuncService.e
        total = e([n], q(n))
        for i in range(k):
            if reindexed:
                # i' = k-1-i
                term = _path_csf(i + 1) * e([n - 1 - i])
                total = total + term.scale(q(n - i - 2).shift(1))
            else:
                term = _path_csf(k - i) * e([n - k + i])
                total = total + term.scale(q(n - k + i - 1).shift(1))
        return total.scale(SymFuncService.q_factorial(n - k - 1))

    @staticmethod
    def csf(kind: GraphKind, n: int, k: int = 0) -> SymSeries:
        """Closed form of X_G in the e basis for a supported graph."""
        kind = GraphKind(kind)
        if kind == GraphKind.LOLLIPOP:
            return CharSeriesService.csf_lollipop(n, k)
        if kind == GraphKind.PATH:
            return _path_csf(n)
        return SymFuncService.e([n], SymFuncService.q_factorial(n))

    @staticmethod
    def verify_identity(n: int, k: int) -> bool:
        """ω X_{L_{n-k,k}} = [n-k-1]_t! A_{n-1,k}(t) as exact series."""
        check_hessenberg_range(n, k)
        lhs = CharSeriesService.csf_lollipop(n, k).omega()
        return lhs == CharSeriesService.hess_char_series(n, k)

    @staticmethod
    def csf_expansion_check(n: int, k: int) -> bool:
        """Coloring oracle against the closed form of the lollipop."""
        closed = SymFuncService.expand_monomials(CharSeriesService.csf_lollipop(n, k), n)
        return closed == CharSeriesService.csf_bruteforce(CharSeriesService.lollipop_graph(n, k))

    @staticmethod
    def path_check(m: int) -> bool:
        """Coloring oracle for P_m against ω A_{m-1}."""
        closed = SymFuncService.expand_monomials(_path_csf(m), m)
        return closed == CharSeriesService.csf_bruteforce(CharSeriesService.path_graph(m))

    @staticmethod
    def graph_edges(graph: Graph) -> List[List[int]]:
        return [list(edge) for edge in graph.sorted_edges()]
