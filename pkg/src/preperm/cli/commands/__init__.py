"""
Command modules; each registers its parser and maps command names to handlers.
"""
from preperm.cli.commands import betti, charseries, codes, csf, fan, flags, verify

COMMANDS = [fan, betti, codes, charseries, csf, flags, verify]

HANDLERS = {
    name: handler
    for module in COMMANDS
    for name, handler in module.HANDLERS.items()
}

__all__ = ["COMMANDS", "HANDLERS"]
