"""
Settings, logging and linear algebra helper tests.
"""
import logging
import sys

import pytest
from pydantic import ValidationError
from sympy import Rational

from preperm.core.config import Settings
from preperm.utils.linalg import in_span, prefix_ranks, rank, solve_coordinates
from preperm.utils.logger import setup_logger
from preperm.utils.sampling import generic_point, random_vector, trial_rng


class TestSettings:
    """Test configuration loading and validation."""

    def test_defaults(self):
        """Test default settings."""
        config = Settings()
        assert config.DEFAULT_SEED == 1
        assert config.DEFAULT_TRIALS == 500
        assert config.DEFAULT_MAX_N == 5
        assert config.OUTPUT_FORMAT == "json"

    def test_environment_prefix(self, monkeypatch):
        """Test PREPERM_ environment overrides."""
        monkeypatch.setenv("PREPERM_DEFAULT_SEED", "9")
        monkeypatch.setenv("PREPERM_OUTPUT_FORMAT", "TABLE")
        config = Settings()
        assert config.DEFAULT_SEED == 9
        assert config.OUTPUT_FORMAT == "table"

    def test_log_level_normalized(self):
        """Test log level normalization."""
        assert Settings(LOG_LEVEL="info").LOG_LEVEL == "INFO"

    @pytest.mark.parametrize(
        "field,value",
        [
            ("DEFAULT_TRIALS", 0),
            ("COLORING_MAX_N", -1),
            ("GENERIC_POINT_BOUND", 100),
            ("OUTPUT_FORMAT", "xml"),
            ("LOG_LEVEL", "loud"),
        ],
    )
    def test_invalid_values(self, field, value):
        """Test rejection of invalid settings."""
        with pytest.raises(ValidationError):
            Settings(**{field: value})


class TestLogger:
    """Test logger setup."""

    def test_logs_to_stderr(self):
        """Test that logs go to stderr."""
        logger = setup_logger("preperm.tests")
        assert len(logger.handlers) == 1
        assert logger.handlers[0].stream is sys.stderr

    def test_setup_is_idempotent(self):
        """Test that setup adds one handler."""
        first = setup_logger("preperm.tests.idempotent")
        second = setup_logger("preperm.tests.idempotent")
        assert first is second
        assert len(second.handlers) == 1
        assert second.level == logging.WARNING


class TestLinearAlgebra:
    """Test exact rank and coordinate helpers."""

    def test_rank(self):
        """Test exact ranks."""
        assert rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
        assert rank([]) == 0
        assert rank([(Rational(1, 3), 1), (1, 3)]) == 1

    def test_prefix_ranks(self):
        """Test ranks of leading prefixes."""
        assert prefix_ranks([(1, 0), (2, 0), (0, 1)]) == [1, 1, 2]
        assert prefix_ranks([(0, 0), (0, 0)]) == [0, 0]

    def test_in_span(self):
        """Test span membership."""
        assert in_span([(1, 1, 0)], (2, 2, 0))
        assert not in_span([(1, 1, 0)], (1, 0, 0))
        assert in_span([], (0, 0))

    def test_solve_coordinates(self):
        """Test coordinates in a basis."""
        assert solve_coordinates([(1, 0), (1, 1)], (3, 1)) == [2, 1]
        assert solve_coordinates([(1, 0, 0), (0, 1, 0)], (1, 2, 0)) == [1, 2]
        assert solve_coordinates([(1, 0, 0)], (0, 1, 0)) is None


class TestSampling:
    """Test seeded sampling."""

    def test_reproducible(self):
        """Equal seeds give equal vectors."""
        assert random_vector(trial_rng(1, 3), 5, 2) == random_vector(trial_rng(1, 3), 5, 2)

    def test_support(self):
        """Test the support size of sampled vectors."""
        vector = random_vector(trial_rng(4, 0), 6, 4)
        assert sum(1 for x in vector if x != 0) == 4

    def test_generic_point_is_odd(self):
        """Generic points have odd numerators and denominators."""
        for x in generic_point(trial_rng(2, 0), 5):
            assert x.p % 2 and x.q % 2
