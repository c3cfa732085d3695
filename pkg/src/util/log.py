"""
Author: Brian Gunnison

Brief: Colored console logging helpers with timestamps.

Details: Thin wrapper around print() that uses colorama and a HH:MM:SS prefix.
Everything goes to stderr so stdout only carries command output.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import sys
from datetime import datetime
from colorama import Fore, Style, init as colorama_init

from src.util.env import get_env_bool


colorama_init()


def _ts() -> str:
    return datetime.now().strftime("%H:%M:%S")


def _quiet() -> bool:
    return get_env_bool("FREECALC_QUIET")


def info(msg: str) -> None:
    if _quiet():
        return
    print(f"{Fore.CYAN}[{_ts()}] INFO{Style.RESET_ALL} {msg}", file=sys.stderr)


def success(msg: str) -> None:
    if _quiet():
        return
    print(f"{Fore.GREEN}[{_ts()}] OK  {Style.RESET_ALL} {msg}", file=sys.stderr)


def warn(msg: str) -> None:
    print(f"{Fore.YELLOW}[{_ts()}] WARN{Style.RESET_ALL} {msg}", file=sys.stderr)


def error(msg: str) -> None:
    print(f"{Fore.RED}[{_ts()}] ERR {Style.RESET_ALL} {msg}", file=sys.stderr)
