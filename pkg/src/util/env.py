"""
Author: Brian Gunnison

Brief: dotenv loader and environment helper utilities.

Details: Loads .env (without override), retrieves optional strings and
leniently parsed, clamped numbers for the FREECALC_* settings.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import os
from pathlib import Path
from dotenv import load_dotenv


def load_env(dotenv_path: str | Path | None = None) -> None:
    load_dotenv(dotenv_path if dotenv_path else None, override=False)


def get_env_str(key: str, default: str | None = None) -> str | None:
    return os.environ.get(key, default)


def get_env_int(key: str, default: int, lo: int | None = None, hi: int | None = None) -> int:
    """Integer setting; unparsable values fall back to the default, then clamp."""
    raw = (os.environ.get(key, "") or "").strip()
    try:
        val = int(float(raw)) if raw else int(default)
    except ValueError:
        val = int(default)
    if lo is not None:
        val = max(lo, val)
    if hi is not None:
        val = min(hi, val)
    return val


def get_env_float(key: str, default: float) -> float:
    raw = (os.environ.get(key, "") or "").strip()
    try:
        return float(raw) if raw else float(default)
    except ValueError:
        return float(default)


def get_env_bool(key: str, default: bool = False) -> bool:
    raw = (os.environ.get(key, "") or "").strip().lower()
    if not raw:
        return default
    return raw in ("1", "true", "on", "yes")
