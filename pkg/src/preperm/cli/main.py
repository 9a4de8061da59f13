"""
Entry point of the preperm command line.
"""
import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from preperm import __version__
from preperm.cli.commands import COMMANDS, HANDLERS
from preperm.cli.render import emit
from preperm.core.config import settings
from preperm.schemas.run import RunConfig
from preperm.utils.logger import logger

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="preperm",
        description=settings.PROJECT_DESCRIPTION,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for module in COMMANDS:
        module.register(subparsers)
    return parser


def _usage_error(message: str) -> int:
    sys.stderr.write(f"preperm: error: {message}\n")
    return EXIT_USAGE


def run(config: RunConfig) -> int:
    """Dispatch one command and emit its document; returns the exit status."""
    handler = HANDLERS.get(config.command)
    if handler is None:
        return _usage_error(f"unknown command {config.command!r}")
    try:
        document, passed = handler(config)
    except ValueError as exc:
        logger.debug(f"{config.command} rejected: {exc}")
        return _usage_error(str(exc))

    emit(document, config.format, config.out)
    if not passed:
        logger.warning(f"{config.command}: verification failed")
        return EXIT_FAILED
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (None, 0) else EXIT_USAGE

    values = {key: value for key, value in vars(namespace).items() if value is not None}
    values.pop("action", None)
    try:
        config = RunConfig(**values)
    except ValidationError as exc:
        return _usage_error("; ".join(error["msg"] for error in exc.errors()))
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
