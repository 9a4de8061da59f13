"""
verify identity and verify-all.
"""
import argparse
from typing import Tuple

from pydantic import BaseModel

from preperm.cli.options import add_output_options, add_random_options, add_size_options
from preperm.schemas.run import RunConfig
from preperm.services.verification_service import VerificationService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="single identities")
    actions = parser.add_subparsers(dest="action", required=True)
    identity = actions.add_parser("identity", help="the lollipop identity for one (n, k)")
    add_size_options(identity)
    add_output_options(identity)
    identity.set_defaults(command="verify identity")

    every = subparsers.add_parser("verify-all", help="every acceptance check up to --max-n")
    every.add_argument("--max-n", type=int, dest="max_n", help="largest n for exhaustive checks")
    add_random_options(every)
    add_output_options(every)
    every.set_defaults(command="verify-all")


def handle_identity(config: RunConfig) -> Tuple[BaseModel, bool]:
    report = VerificationService.identity_report(config.require_n(), config.k)
    return report, report.passed


def handle_all(config: RunConfig) -> Tuple[BaseModel, bool]:
    report = VerificationService.verify_all(config.max_n, config.seed, config.trials)
    return report, report.passed


HANDLERS = {"verify identity": handle_identity, "verify-all": handle_all}
