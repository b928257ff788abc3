from pathlib import Path

import pytest

from evoskyline import load_graph

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def toy_manifest() -> Path:
    return DATA_DIR / "toy" / "manifest.json"


@pytest.fixture(scope="session")
def toy_graph(toy_manifest):
    return load_graph(toy_manifest)
