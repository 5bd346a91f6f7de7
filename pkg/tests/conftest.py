from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from distchroma import petersen, hoffman_singleton

DATA = Path(__file__).resolve().parent / "data"
CORPUS_PATH = DATA / "connected_le8.g6"


@pytest.fixture(scope="session")
def corpus_lines() -> list[str]:
    """Every connected graph on 1..8 vertices, canonical graph6."""
    return [ln.strip() for ln in CORPUS_PATH.read_text().splitlines() if ln.strip()]


@pytest.fixture(scope="session")
def petersen_graph():
    return petersen()


@pytest.fixture(scope="session")
def hoffman_singleton_graph():
    return hoffman_singleton()
