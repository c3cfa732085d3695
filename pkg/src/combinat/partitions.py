"""
Author: Brian Gunnison

Brief: Set partitions of {1..n}, the noncrossing test and exhaustive enumeration.

Details: SetPartition keeps a canonical form (blocks sorted, ordered by least
element) so partitions can be used as dictionary and cache keys. Both
enumerators walk restricted growth strings in lexicographic order, so NC(n)
is exactly the noncrossing subsequence of the full enumeration.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from src.errors import SizeLimitError, UsageError
from src.util.env import get_env_int

Block = Tuple[int, ...]

DEFAULT_NC_CAP = 14
DEFAULT_ALL_CAP = 12


def nc_cap() -> int:
    return get_env_int("FREECALC_NC_CAP", DEFAULT_NC_CAP, lo=1)


def all_cap() -> int:
    return get_env_int("FREECALC_ALL_CAP", DEFAULT_ALL_CAP, lo=1)


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: Tuple[Block, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise UsageError(f"Ground set size must be positive, got {self.n}")
        canon = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        seen: List[int] = [x for b in canon for x in b]
        if any(len(b) == 0 for b in canon):
            raise UsageError("Partition blocks must be nonempty")
        if sorted(seen) != list(range(1, self.n + 1)):
            raise UsageError(f"Blocks {canon} do not partition {{1..{self.n}}}")
        object.__setattr__(self, "blocks", canon)

    @classmethod
    def _trusted(cls, n: int, blocks: Tuple[Block, ...]) -> "SetPartition":
        # Caller guarantees canonical form.
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "blocks", blocks)
        return obj

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SetPartition":
        """Build from a label per element (labels[i-1] is the block id of i)."""
        groups: dict[int, List[int]] = {}
        for i, lab in enumerate(labels, 1):
            groups.setdefault(lab, []).append(i)
        blocks = tuple(sorted((tuple(g) for g in groups.values()), key=lambda b: b[0]))
        return cls._trusted(len(labels), blocks)

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def one_block(cls, n: int) -> "SetPartition":
        return cls(n, (tuple(range(1, n + 1)),))

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse "1,3/2/4"."""
        try:
            blocks = tuple(tuple(int(x) for x in part.split(",")) for part in text.strip().split("/"))
        except ValueError as e:
            raise UsageError(f"Bad partition text: {text!r}") from e
        n = sum(len(b) for b in blocks)
        return cls(n, blocks)

    def labels(self) -> List[int]:
        """Block index (0-based, canonical order) of every element 1..n."""
        lab = [0] * self.n
        for idx, b in enumerate(self.blocks):
            for x in b:
                lab[x - 1] = idx
        return lab

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return "/".join(",".join(str(x) for x in b) for b in self.blocks)


def is_noncrossing(p: SetPartition) -> bool:
    """True iff no i<j<k<l has i,k in one block and j,l in another."""
    lab = p.labels()
    for b in p.blocks:
        for lo, hi in zip(b, b[1:]):
            inside = {lab[x - 1] for x in range(lo + 1, hi)}
            if not inside:
                continue
            # Every block met inside a gap must live entirely inside that gap.
            for other in inside:
                ob = p.blocks[other]
                if ob[0] < lo or ob[-1] > hi:
                    return False
    return True


def _iter_rgs(n: int, noncrossing: bool) -> Iterator[SetPartition]:
    blocks: List[List[int]] = []
    owner = [0] * (n + 1)

    def rec(i: int) -> Iterator[SetPartition]:
        if i > n:
            yield SetPartition._trusted(n, tuple(tuple(b) for b in blocks))
            return
        for idx, b in enumerate(blocks):
            if noncrossing:
                last = b[-1]
                # Joining i to b crosses any block that started before `last`
                # and still has an element strictly between `last` and i.
                if any(blocks[owner[j]][0] < last for j in range(last + 1, i)):
                    continue
            b.append(i)
            owner[i] = idx
            yield from rec(i + 1)
            b.pop()
        blocks.append([i])
        owner[i] = len(blocks) - 1
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(1)


def iter_nc(n: int, cap: Optional[int] = None) -> Iterator[SetPartition]:
    limit = nc_cap() if cap is None else cap
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    if n > limit:
        raise SizeLimitError(f"NC({n}) exceeds the enumeration cap {limit}")
    return _iter_rgs(n, noncrossing=True)


def iter_all_partitions(n: int, cap: Optional[int] = None) -> Iterator[SetPartition]:
    limit = all_cap() if cap is None else cap
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    if n > limit:
        raise SizeLimitError(f"Partitions of {n} elements exceed the enumeration cap {limit}")
    return _iter_rgs(n, noncrossing=False)


def enumerate_nc(n: int, cap: Optional[int] = None) -> List[SetPartition]:
    return list(iter_nc(n, cap))


def enumerate_all_partitions(n: int, cap: Optional[int] = None) -> List[SetPartition]:
    return list(iter_all_partitions(n, cap))


def refines(p: SetPartition, q: SetPartition) -> bool:
    """True iff every block of p lies inside a block of q."""
    if p.n != q.n:
        raise UsageError(f"Partitions of different sizes: {p.n} vs {q.n}")
    lab = q.labels()
    return all(len({lab[x - 1] for x in b}) == 1 for b in p.blocks)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def integer_partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Integer partitions of n as weakly decreasing tuples, largest parts first."""
    top = n if largest is None else min(n, largest)
    if n == 0:
        yield ()
        return
    for first in range(top, 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest
