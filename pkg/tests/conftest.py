"""Shared fixtures for the zbasis tests."""
import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from zbasis.parser import parse_ideal_file


def pytest_collection_modifyitems(config, items):
    if os.environ.get("ZBASIS_SLOW") == "1":
        return
    skip_slow = pytest.mark.skip(reason="slow; set ZBASIS_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def parse_polys(polys, ring="ZZ", variables="x,y", order="dp"):
    """Parse a comma-separated polynomial list in the given ring."""
    return parse_ideal_file(f"ring {ring}[{variables}] order {order}; ideal I = {polys};").generators


@pytest.fixture
def polys():
    """Factory: polys("x + 4, x*y + 9", ring="ZZ/12", order="ds")."""
    return parse_polys


@pytest.fixture
def poly():
    """Factory for a single polynomial."""
    def make(text, **kwargs):
        return parse_polys(text, **kwargs)[0]
    return make


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Keep tests away from the user's ~/.zbasis/config.json."""
    monkeypatch.setenv("ZBASIS_CONFIG", str(tmp_path / "missing-config.json"))
