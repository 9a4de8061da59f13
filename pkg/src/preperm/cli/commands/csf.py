"""
csf: chromatic quasisymmetric functions of lollipops, paths and complete graphs.
"""
import argparse
from typing import Tuple

from pydantic import BaseModel

from preperm.cli.options import add_output_options
from preperm.models.options import GraphKind
from preperm.schemas.run import RunConfig
from preperm.schemas.series import CsfReport
from preperm.services.charseries_service import CharSeriesService
from preperm.services.symfunc_service import SymFuncService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("csf", help="chromatic quasisymmetric function in the e basis")
    parser.add_argument("--graph", choices=[kind.value for kind in GraphKind], default=GraphKind.LOLLIPOP.value)
    parser.add_argument("--n", type=int, required=True, help="number of vertices")
    parser.add_argument("--k", type=int, default=0, help="path length of the lollipop")
    parser.add_argument("--bruteforce", action="store_true", help="check against proper colorings")
    add_output_options(parser)
    parser.set_defaults(command="csf")


def handle(config: RunConfig) -> Tuple[BaseModel, bool]:
    n = config.require_n()
    kind = config.graph
    k = config.k if kind == GraphKind.LOLLIPOP else None
    graph = CharSeriesService.graph(kind, n, config.k)
    series = CharSeriesService.csf(kind, n, config.k)
    report = CsfReport(
        graph=kind.value,
        n=n,
        k=k,
        edges=CharSeriesService.graph_edges(graph),
        series=SymFuncService.dump_series(series),
    )
    if config.bruteforce:
        colorings = CharSeriesService.csf_bruteforce(graph)
        report.bruteforce_checked = True
        report.bruteforce_agrees = SymFuncService.expand_monomials(series, n) == colorings
        report.monomials = {
            " ".join(str(e) for e in exponent): colorings[exponent].coefficients
            for exponent in sorted(colorings, reverse=True)
        }
    return report, report.bruteforce_agrees is not False


HANDLERS = {"csf": handle}
