"""
Author: Brian Gunnison

Brief: Exception hierarchy shared by the library and the CLI.

Details: Each error carries the process exit code the CLI maps it to
(2 usage, 3 size cap, 4 numeric failure).
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SIZE_LIMIT = 3
EXIT_NUMERIC = 4


class FreeCalcError(Exception):
    exit_code: int = 1


class UsageError(FreeCalcError, ValueError):
    exit_code = EXIT_USAGE


class TruncationError(UsageError):
    """An order beyond the truncation K was requested."""


class SizeLimitError(FreeCalcError):
    exit_code = EXIT_SIZE_LIMIT


class NumericError(FreeCalcError, ArithmeticError):
    exit_code = EXIT_NUMERIC
