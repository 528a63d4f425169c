from pathlib import Path

import pytest

from varietas.core.config import get_settings

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: degree-5 tree-ambient computations")


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def fresh_settings(monkeypatch):
    """Settings rebuilt from the environment; restored afterwards."""
    get_settings.cache_clear()
    yield monkeypatch
    get_settings.cache_clear()
