"""
fan: maximal cones of the fan of X_k, optionally verified.
"""
import argparse
from typing import Tuple

from pydantic import BaseModel

from preperm.cli.options import add_output_options, add_random_options, add_size_options
from preperm.schemas.run import RunConfig
from preperm.services.fan_service import FanService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("fan", help="maximal cones of the chain fan")
    add_size_options(parser)
    parser.add_argument("--verify", action="store_true", help="run the fan verifier instead")
    add_random_options(parser)
    add_output_options(parser)
    parser.set_defaults(command="fan")


def handle(config: RunConfig) -> Tuple[BaseModel, bool]:
    """Dump the fan, or verify it."""
    n = config.require_n()
    if config.verify:
        report = FanService.verify_fan(n, config.k, config.trials, config.seed)
        return report, report.passed
    return FanService.dump_fan(n, config.k), True


HANDLERS = {"fan": handle}
