"""
Author: Brian Gunnison

Brief: Repository path utilities (repo_root/presets_path).

Details: Presets resolve against the repository root, not the working
directory, so the CLI behaves the same from any folder.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from pathlib import Path


def repo_root() -> Path:
    # src/util/paths.py -> src -> repo
    return Path(__file__).resolve().parents[2]


def presets_path() -> Path:
    return repo_root() / "presets" / "experiments.json"
