"""
Author: Brian Gunnison

Brief: Toggle and emit verbose traces of intermediate computations.

Details: Global on/off flag with simple pretty logging used by the lattice,
oracle and Monte Carlo code when debugging.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from typing import Any, Dict, Iterable, Optional, Sequence

from . import log

_VERBOSE: bool = False


def set_verbose(v: bool) -> None:
    global _VERBOSE
    _VERBOSE = bool(v)
    log.info(f"Verbose tracing {'ENABLED' if _VERBOSE else 'disabled'}")


def is_verbose() -> bool:
    return _VERBOSE


def log_table(label: str, rows: Iterable[Sequence[Any]], extra: Optional[Dict[str, Any]] = None) -> None:
    if not _VERBOSE:
        return
    log.info(f"trace → {label}")
    for row in rows:
        log.info("  " + "  ".join(str(c) for c in row))
    if extra:
        for k, v in extra.items():
            log.info(f"[{label}:{k}] {v}")
