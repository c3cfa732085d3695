"""
Author: Brian Gunnison

Brief: Young diagrams, transition measures and symmetric-group character asymptotics.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

__all__ = []
