"""
flags verify: Krylov ranks, the forgetful map and torus products.
"""
import argparse
from typing import Tuple

from pydantic import BaseModel

from preperm.cli.options import add_output_options, add_random_options
from preperm.schemas.run import RunConfig
from preperm.services.flag_service import FlagService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("flags", help="flag computations")
    actions = parser.add_subparsers(dest="action", required=True)
    verify = actions.add_parser("verify", help="seeded exact checks of Krylov flags")
    verify.add_argument("--n", type=int, required=True)
    add_random_options(verify)
    add_output_options(verify)
    verify.set_defaults(command="flags verify")


def handle_verify(config: RunConfig) -> Tuple[BaseModel, bool]:
    report = FlagService.verify_flags(config.require_n(), config.trials, config.seed)
    return report, report.passed


HANDLERS = {"flags verify": handle_verify}
