"""Test setup for rhombil."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
SRC = ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))


def pytest_configure(config: pytest.Config) -> None:
    """Register custom markers for pytest.

    Whole-grid sweeps are deselected by default:
        pytest -m slow        # run only the grid sweeps
        pytest -m ""          # run everything
    """
    config.addinivalue_line(
        "markers",
        "slow: marks tests that sweep whole parameter grids (minutes)",
    )


@pytest.fixture
def small_state_cap() -> int:
    """A frontier cap small enough to trip on any non-trivial region."""
    return 1
