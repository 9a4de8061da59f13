"""
charseries: the S_n characteristic series of H*(X_k).
"""
import argparse
from typing import Tuple

from pydantic import BaseModel

from preperm.cli.options import add_output_options, add_size_options
from preperm.models.options import CharSource
from preperm.schemas.run import RunConfig
from preperm.schemas.series import CharSeriesReport
from preperm.services.charseries_service import CharSeriesService
from preperm.services.symfunc_service import SymFuncService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("charseries", help="characteristic series A_{n-1,k}(t)")
    add_size_options(parser)
    parser.add_argument(
        "--source",
        choices=[source.value for source in CharSource],
        default=CharSource.RECURSION.value,
    )
    add_output_options(parser)
    parser.set_defaults(command="charseries")


def handle(config: RunConfig) -> Tuple[BaseModel, bool]:
    n = config.require_n()
    series = CharSeriesService.char_series(n, config.k, config.source)
    hessenberg = None
    # the Hessenberg series is defined for 1 <= k <= n-3 only
    if 1 <= config.k <= n - 3:
        hessenberg = SymFuncService.dump_series(CharSeriesService.hess_char_series(n, config.k))
    report = CharSeriesReport(
        n=n,
        k=config.k,
        source=config.source.value,
        series=SymFuncService.dump_series(series),
        dimension_poly=SymFuncService.specialize_dimension(series).coefficients,
        hessenberg=hessenberg,
    )
    return report, True


HANDLERS = {"charseries": handle}
