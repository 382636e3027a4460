"""Loguru setup for rhombil.

Records go to stderr so stdout carries only counts, values and reports.
``LOG_FORMAT=json`` writes one JSON object per record for long sweeps.
"""

from __future__ import annotations

import json
import os
import sys
from typing import Any

from loguru import logger

DEFAULT_LOG_LEVEL = "WARNING"

HUMAN_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> | "
    "{message}{extra[fields]}"
)


def _plain(value: Any) -> Any:  # noqa: ANN401
    # Fractions, cells and specs travel as their str().
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


def _fields(extra: dict[str, Any]) -> dict[str, Any]:
    return {k: _plain(v) for k, v in extra.items() if k not in ("name", "fields")}


def json_sink(message: Any) -> None:  # noqa: ANN401
    """Write one record as a JSON line on stderr."""
    record = message.record
    entry = {
        "time": record["time"].isoformat(),
        "level": record["level"].name,
        "logger": record["extra"].get("name", record["name"]),
        "message": record["message"],
        **_fields(record["extra"]),
    }
    if record["exception"]:
        entry["exception"] = f"{record['exception'].type.__name__}: {record['exception'].value}"
    sys.stderr.write(json.dumps(entry, separators=(",", ":")) + "\n")


def _with_fields(record: dict) -> bool:
    fields = _fields(record["extra"])
    record["extra"]["fields"] = f" | {json.dumps(fields, separators=(',', ':'))}" if fields else ""
    return True


def configure_logging(level: str | None = None) -> None:
    """Install the stderr sink.

    ``LOG_FORMAT`` picks ``human`` or ``json``; ``level`` (from ``--verbose``)
    wins over ``LOG_LEVEL``.
    """
    logger.remove()
    log_level = level or os.getenv("LOG_LEVEL", DEFAULT_LOG_LEVEL)
    if os.getenv("LOG_FORMAT", "human").lower() == "json":
        logger.add(json_sink, level=log_level, diagnose=False)
    else:
        logger.add(sys.stderr, format=HUMAN_FORMAT, filter=_with_fields, level=log_level, diagnose=False)


def get_logger(name: str | None = None) -> Any:  # noqa: ANN401
    """Logger bound to ``name``, normally the calling module."""
    return logger.bind(name=name) if name else logger


configure_logging()
