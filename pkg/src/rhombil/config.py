"""Local configuration for rhombil."""

from __future__ import annotations

import os

from dotenv import load_dotenv

load_dotenv()

DEFAULT_STATE_CAP = 2**24
DEFAULT_REFERENCE_CELL_CAP = 28
DEFAULT_CLAIM_SAMPLES = 50
DEFAULT_SEED = 0
DEFAULT_GRID_MAX = 2
DEFAULT_JOBS = 1

# Frontier DP gives up once this many live states exist at one sweep step.
RHOMBIL_STATE_CAP = int(os.getenv("RHOMBIL_STATE_CAP", str(DEFAULT_STATE_CAP)))
RHOMBIL_REFERENCE_CELL_CAP = int(os.getenv("RHOMBIL_REFERENCE_CELL_CAP", str(DEFAULT_REFERENCE_CELL_CAP)))
RHOMBIL_CLAIM_SAMPLES = int(os.getenv("RHOMBIL_CLAIM_SAMPLES", str(DEFAULT_CLAIM_SAMPLES)))
RHOMBIL_SEED = int(os.getenv("RHOMBIL_SEED", str(DEFAULT_SEED)))
RHOMBIL_GRID_MAX = int(os.getenv("RHOMBIL_GRID_MAX", str(DEFAULT_GRID_MAX)))
RHOMBIL_JOBS = int(os.getenv("RHOMBIL_JOBS", str(DEFAULT_JOBS)))


def state_cap() -> int:
    """Return the frontier cap, honouring a late override of RHOMBIL_STATE_CAP."""
    return int(os.getenv("RHOMBIL_STATE_CAP", str(RHOMBIL_STATE_CAP)))
