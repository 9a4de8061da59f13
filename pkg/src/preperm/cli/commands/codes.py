"""
codes: admissible marked sequences, their orbits, or the stage table.
"""
import argparse
from typing import Tuple

from pydantic import BaseModel

from preperm.cli.options import add_output_options, add_size_options
from preperm.schemas.code import CodeEntry, CodeListing, OrbitEntry
from preperm.schemas.run import RunConfig
from preperm.services.code_service import CodeService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("codes", help="codes of length n with μ >= min-mu")
    add_size_options(parser, with_k=False)
    parser.add_argument("--min-mu", type=int, default=1, dest="min_mu")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--orbits", action="store_true", help="list S_n orbits instead of codes")
    group.add_argument("--stages", action="store_true", help="arrange orbits by degree and blowup stage")
    add_output_options(parser)
    parser.set_defaults(command="codes")


def _entry(code) -> CodeEntry:
    return CodeEntry.from_code(code, CodeService.format_marked(code))


def handle(config: RunConfig) -> Tuple[BaseModel, bool]:
    n = config.require_n()
    if config.stages:
        return CodeService.stage_table(n), True
    if config.orbits:
        orbits = [
            OrbitEntry(
                representative=_entry(orbit.representative),
                orbit_size=orbit.orbit_size,
                stabilizer_type=orbit.stabilizer_type,
            )
            for orbit in CodeService.orbits(n, config.min_mu)
        ]
        listing = CodeListing(n=n, min_mu=config.min_mu, count=len(orbits), orbits=orbits)
        return listing, True
    codes = [_entry(code) for code in CodeService.enumerate_codes(n, config.min_mu)]
    return CodeListing(n=n, min_mu=config.min_mu, count=len(codes), codes=codes), True


HANDLERS = {"codes": handle}
