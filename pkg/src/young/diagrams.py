"""
Author: Brian Gunnison

Brief: Young diagrams and their interlacing (min/max) coordinates.

Details: The profile uses content = row - column (0-indexed). Local minima of
the profile are the contents of the addable corners, local maxima the contents
of the removable corners. With this orientation 3+2+2+1 has minima
(-3,-1,2,4) and maxima (-2,1,3). It is the transpose of the English
labelling, so the character oracle is fed the conjugate diagram when the two
are compared.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Tuple

import numpy as np

from src.combinat.partitions import integer_partitions
from src.errors import UsageError


@dataclass(frozen=True)
class YoungDiagram:
    rows: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        if any(r < 1 for r in rows):
            raise UsageError(f"Row lengths must be positive: {rows}")
        if any(b > a for a, b in zip(rows, rows[1:])):
            raise UsageError(f"Row lengths must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        """'3,2,2,1' -> rows; '' or '0' is the empty diagram."""
        s = text.strip()
        if s in ("", "0", "()"):
            return cls(())
        try:
            return cls(tuple(int(p) for p in s.split(",")))
        except ValueError as e:
            raise UsageError(f"Bad diagram {text!r}: {e}") from e

    @classmethod
    def rectangle(cls, height: int, width: int) -> "YoungDiagram":
        return cls((width,) * height)

    @classmethod
    def square(cls, side: int) -> "YoungDiagram":
        return cls.rectangle(side, side)

    @classmethod
    def staircase(cls, k: int) -> "YoungDiagram":
        return cls(tuple(range(k, 0, -1)))

    @property
    def n(self) -> int:
        return sum(self.rows)

    def cells(self) -> Iterable[Tuple[int, int]]:
        for i, r in enumerate(self.rows):
            for j in range(r):
                yield i, j

    def conjugate(self) -> "YoungDiagram":
        if not self.rows:
            return self
        return YoungDiagram(tuple(sum(1 for r in self.rows if r > j) for j in range(self.rows[0])))

    def dilate(self, lam: int) -> "YoungDiagram":
        """Replace every box by a lam x lam block."""
        if lam < 1:
            raise UsageError(f"Dilation factor must be a positive integer, got {lam}")
        return YoungDiagram(tuple(r * lam for r in self.rows for _ in range(lam)))

    def hook_lengths(self) -> List[int]:
        cols = self.conjugate().rows
        return [(self.rows[i] - j - 1) + (cols[j] - i - 1) + 1 for i, j in self.cells()]

    def dimension(self) -> int:
        """Dimension of the irreducible representation (hook length formula)."""
        return math.factorial(self.n) // math.prod(self.hook_lengths())

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows) if self.rows else "0"


@dataclass(frozen=True)
class InterlacingCoords:
    minima: Tuple[int, ...]
    maxima: Tuple[int, ...]

    def __post_init__(self) -> None:
        xs = tuple(int(x) for x in self.minima)
        ys = tuple(int(y) for y in self.maxima)
        if len(xs) != len(ys) + 1:
            raise UsageError(f"Need one more minimum than maxima, got {len(xs)} and {len(ys)}")
        merged = [xs[0]]
        for y, x in zip(ys, xs[1:]):
            merged += [y, x]
        if any(b <= a for a, b in zip(merged, merged[1:])):
            raise UsageError(f"Coordinates do not interlace strictly: minima {xs}, maxima {ys}")
        if sum(xs) != sum(ys):
            raise UsageError(f"Coordinates are not centered: sum(minima)={sum(xs)}, sum(maxima)={sum(ys)}")
        object.__setattr__(self, "minima", xs)
        object.__setattr__(self, "maxima", ys)

    def dilate(self, lam: int) -> "InterlacingCoords":
        if lam == 0:
            raise UsageError("Dilation factor must be nonzero")
        xs, ys = [lam * x for x in self.minima], [lam * y for y in self.maxima]
        if lam < 0:
            xs, ys = xs[::-1], ys[::-1]
        return InterlacingCoords(tuple(xs), tuple(ys))


def diagram_to_interlacing(d: YoungDiagram) -> InterlacingCoords:
    rows = d.rows
    minima = [i - rows[i] for i in range(len(rows)) if i == 0 or rows[i - 1] > rows[i]]
    minima.append(len(rows))
    maxima = [i - (rows[i] - 1) for i in range(len(rows)) if i == len(rows) - 1 or rows[i + 1] < rows[i]]
    return InterlacingCoords(tuple(minima), tuple(maxima))


def interlacing_to_diagram(c: InterlacingCoords) -> YoungDiagram:
    """Walk the profile: down-steps between x_i and y_i, left-steps between y_i and x_(i+1)."""
    col = -c.minima[0]
    if col < 0:
        raise UsageError(f"First minimum must be <= 0, got {c.minima[0]}")
    rows: List[int] = []
    for x, y, x_next in zip(c.minima, c.maxima, c.minima[1:]):
        rows += [col] * (y - x)
        col -= x_next - y
    if col != 0 or c.minima[-1] != len(rows):
        raise UsageError(f"Coordinates {c.minima}/{c.maxima} do not describe a Young diagram")
    return YoungDiagram(tuple(rows))


def balanced_check(d: YoungDiagram, a: float) -> bool:
    """True when the longest row and the longest column are at most a*sqrt(n)."""
    if a <= 0:
        raise UsageError(f"Balance constant must be positive, got {a}")
    bound = a * math.sqrt(d.n)
    longest_row = d.rows[0] if d.rows else 0
    return longest_row <= bound and len(d.rows) <= bound


def random_diagram(n: int, rng: np.random.Generator) -> YoungDiagram:
    """Uniform draw among the integer partitions of n."""
    if n < 0:
        raise UsageError(f"Box count must be >= 0, got {n}")
    shapes = list(integer_partitions(n))
    return YoungDiagram(shapes[int(rng.integers(len(shapes)))])
