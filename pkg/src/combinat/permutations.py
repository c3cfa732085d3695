"""
Author: Brian Gunnison

Brief: Permutations of {1..n}, the Cayley (transposition) metric and the
embedding of NC(n) onto the geodesics from the identity to the long cycle.

Details: Products compose right to left, (s * t)(i) = s(t(i)), everywhere.
A block {b1 < ... < bk} maps to the cycle b1 -> b2 -> ... -> bk -> b1.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.combinat.partitions import SetPartition, is_noncrossing
from src.errors import UsageError


@dataclass(frozen=True)
class Permutation:
    n: int
    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if self.n < 1 or len(self.images) != self.n:
            raise UsageError(f"Permutation of size {self.n} needs {self.n} images, got {len(self.images)}")
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise UsageError(f"Images {self.images} are not a bijection of 1..{self.n}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def long_cycle(cls, n: int) -> "Permutation":
        """c(i) = i + 1 mod n."""
        return cls(n, tuple(range(2, n + 1)) + (1,))

    @classmethod
    def from_cycles(cls, n: int, cycles: List[Tuple[int, ...]]) -> "Permutation":
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(n, tuple(img))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse the one-line form "3,2,1,4"."""
        try:
            images = tuple(int(x) for x in text.strip().split(","))
        except ValueError as e:
            raise UsageError(f"Bad permutation text: {text!r}") from e
        return cls(len(images), images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise UsageError(f"Cannot compose permutations of sizes {self.n} and {other.n}")
        return Permutation(self.n, tuple(self.images[other.images[i] - 1] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(self.n, tuple(inv))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = [False] * (self.n + 1)
        out: List[Tuple[int, ...]] = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i - 1]
            out.append(tuple(cyc))
        return out

    def norm(self) -> int:
        """|s| = n - number of orbits (minimal transposition count)."""
        return self.n - len(self.cycles())

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.images)


def cayley_distance(s1: Permutation, s2: Permutation) -> int:
    if s1.n != s2.n:
        raise UsageError(f"Permutations of different sizes: {s1.n} vs {s2.n}")
    return (s1.inverse() * s2).norm()


def nc_to_permutation(p: SetPartition) -> Permutation:
    if not is_noncrossing(p):
        raise UsageError(f"Partition {p} is not noncrossing")
    return Permutation.from_cycles(p.n, list(p.blocks))


def is_geodesic(s: Permutation) -> bool:
    """|s| + |s^-1 c| = |c| = n - 1."""
    c = Permutation.long_cycle(s.n)
    return s.norm() + (s.inverse() * c).norm() == s.n - 1


def permutation_to_nc(s: Permutation) -> Optional[SetPartition]:
    """Orbit partition of s when s lies on a geodesic from the identity to c, else None."""
    if not is_geodesic(s):
        return None
    return SetPartition(s.n, tuple(tuple(sorted(cyc)) for cyc in s.cycles()))
