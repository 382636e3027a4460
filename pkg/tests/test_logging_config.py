"""Tests for the loguru setup."""

from __future__ import annotations

import json
from collections.abc import Iterator
from fractions import Fraction

import pytest

from rhombil.utils.logging_config import configure_logging, get_logger


@pytest.fixture(autouse=True)
def _restore_logging() -> Iterator[None]:
    yield
    configure_logging()


def test_json_lines_carry_extras(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.setenv("LOG_FORMAT", "json")
    configure_logging("INFO")
    get_logger("rhombil.engine").info("Counted", value=Fraction(3, 2), cells=6)
    entry = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert entry["message"] == "Counted"
    assert entry["logger"] == "rhombil.engine"
    assert entry["value"] == "3/2"
    assert entry["cells"] == 6


def test_human_lines_append_extras(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.setenv("LOG_FORMAT", "human")
    configure_logging("INFO")
    get_logger("rhombil.verify").info("Verifying family", family="H2")
    line = capsys.readouterr().err.strip().splitlines()[-1]
    assert line.endswith('Verifying family | {"family":"H2"}')


def test_default_level_hides_info(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    monkeypatch.setenv("LOG_FORMAT", "json")
    configure_logging()
    get_logger("rhombil.lattice").info("Built region")
    assert capsys.readouterr().err == ""
