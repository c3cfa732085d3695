"""
Author: Brian Gunnison

Brief: Seeded Monte Carlo over Haar-rotated matrix models.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

__all__ = []
