"""
Author: Brian Gunnison

Brief: freecalc package init.

Details: Exposes package modules; kept minimal.
"""
# SPDX-License-Identifier: MIT
__all__ = []
