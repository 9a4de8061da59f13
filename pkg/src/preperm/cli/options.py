"""
Argument groups shared by several commands.
"""
import argparse

from preperm.models.options import OutputFormat


def add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        help="output format (default from PREPERM_OUTPUT_FORMAT)",
    )
    parser.add_argument("--out", help="write the document to this file instead of stdout")


def add_size_options(parser: argparse.ArgumentParser, with_k: bool = True) -> None:
    parser.add_argument("--n", type=int, required=True, help="ambient size n")
    if with_k:
        parser.add_argument("--k", type=int, required=True, help="blowup order k")


def add_random_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, help="random seed (default PREPERM_DEFAULT_SEED)")
    parser.add_argument("--trials", type=int, help="randomized trials (default PREPERM_DEFAULT_TRIALS)")
