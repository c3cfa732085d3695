"""
Shared pytest setup: repo root on sys.path, the `slow` marker, and quiet logs.
"""
from __future__ import annotations

import sys
from pathlib import Path

import pytest

# Ensure repo root is on sys.path when running from tests/ directly
_ROOT = Path(__file__).resolve().parents[1]
if str(_ROOT) not in sys.path:
    sys.path.insert(0, str(_ROOT))


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "slow: Monte Carlo acceptance runs (seconds to a minute)")


@pytest.fixture(autouse=True)
def _quiet_env(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("FREECALC_QUIET", "1")
    for key in ("FREECALC_NC_CAP", "FREECALC_ALL_CAP", "FREECALC_ORDER", "FREECALC_MN_CAP",
                "FREECALC_INDUCE_CAP", "FREECALC_RESTRICT_CAP", "FREECALC_WORKERS", "FREECALC_PRECISION",
                "FREECALC_PRESET", "FREECALC_UNITARITY_TOL"):
        monkeypatch.delenv(key, raising=False)
