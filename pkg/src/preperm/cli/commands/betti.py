"""
betti: Betti numbers of X_k by one method or all of them.
"""
import argparse
from typing import Tuple

from pydantic import BaseModel

from preperm.cli.options import add_output_options, add_size_options
from preperm.models.options import BettiMethod
from preperm.schemas.run import RunConfig
from preperm.services.betti_service import BettiService

ALL_METHODS = "all"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("betti", help="even Betti numbers of X_k")
    add_size_options(parser)
    parser.add_argument(
        "--method",
        choices=[method.value for method in BettiMethod] + [ALL_METHODS],
        default=ALL_METHODS,
    )
    add_output_options(parser)
    parser.set_defaults(command="betti")


def handle(config: RunConfig) -> Tuple[BaseModel, bool]:
    n = config.require_n()
    if config.method == ALL_METHODS:
        comparison = BettiService.compare_methods(n, config.k)
        return comparison, comparison.agree
    return BettiService.betti(n, config.k, BettiMethod(config.method)), True


HANDLERS = {"betti": handle}
