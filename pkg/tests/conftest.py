"""
Test configuration and fixtures for the preperm toolkit.
"""
import json

import pytest

from preperm.cli.main import main
from preperm.core.config import settings
from preperm.models.flag import DiagonalOperator


@pytest.fixture
def operator4():
    """diag(1, 2, 3, 4)."""
    return DiagonalOperator.standard(4)


@pytest.fixture
def operator5():
    """diag(1, 2, 3, 4, 5)."""
    return DiagonalOperator.standard(5)


@pytest.fixture
def small_bounds(monkeypatch):
    """Shrink the enumeration bounds so suites that sweep them stay quick."""
    monkeypatch.setattr(settings, "SYMBOLIC_MAX_N", 5)
    monkeypatch.setattr(settings, "KRYLOV_MAX_N", 4)
    monkeypatch.setattr(settings, "KRYLOV_TRIALS", 10)
    monkeypatch.setattr(settings, "EXHAUSTIVE_MAX_N", 4)
    return settings


@pytest.fixture
def run_cli(capsys):
    """Run the command line in-process; returns (status, stdout, stderr)."""
    def _run(*argv):
        status = main([str(arg) for arg in argv])
        captured = capsys.readouterr()
        return status, captured.out, captured.err

    return _run


@pytest.fixture
def run_json(run_cli):
    """Run a command and parse its JSON document."""
    def _run(*argv):
        status, out, err = run_cli(*argv)
        return status, (json.loads(out) if out else None), err

    return _run
