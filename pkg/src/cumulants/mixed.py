"""
Author: Brian Gunnison

Brief: Mixed moments and mixed free cumulants of several noncommutative variables.

Details: A MomentFunctional maps words over {1..a} to exact values and memoizes
each queried word. For a free family the functional is generated lazily from
the marginals: a mixed moment is the sum over noncrossing partitions whose
blocks are monochromatic in the word (mixed free cumulants vanish).
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

from src.combinat.lattice import NcInterval, moebius_nc
from src.combinat.partitions import SetPartition, iter_nc
from src.cumulants.sequences import CumulantSequence, MomentSequence
from src.cumulants.transforms import free_cumulants_from_moments
from src.errors import TruncationError, UsageError
from src.util.rational import Number

Word = Tuple[int, ...]


class MomentFunctional:
    """tau on words of length <= order over the letters 1..arity."""

    def __init__(self, arity: int, order: int, evaluate: Callable[[Word], Number]):
        if arity < 1 or order < 1:
            raise UsageError("A moment functional needs positive arity and order")
        self.arity = arity
        self.order = order
        self._evaluate = evaluate
        self._cache: Dict[Word, Number] = {}

    @classmethod
    def from_table(cls, arity: int, order: int, table: Mapping[Sequence[int], Number]) -> "MomentFunctional":
        data = {tuple(k): v for k, v in table.items()}

        def lookup(w: Word) -> Number:
            if w not in data:
                raise UsageError(f"Word {w} missing from the moment table")
            return data[w]

        return cls(arity, order, lookup)

    def check_word(self, word: Iterable[int]) -> Word:
        w = tuple(int(x) for x in word)
        if len(w) > self.order:
            raise TruncationError(f"Word of length {len(w)} exceeds truncation K={self.order}")
        bad = [x for x in w if x < 1 or x > self.arity]
        if bad:
            raise UsageError(f"Letters {bad} outside 1..{self.arity}")
        return w

    def __call__(self, word: Iterable[int]) -> Number:
        w = self.check_word(word)
        if not w:
            return Fraction(1)
        hit = self._cache.get(w)
        if hit is None:
            hit = self._cache.setdefault(w, self._evaluate(w))
        return hit


@dataclass(frozen=True)
class FreeFamilySpec:
    marginals: Tuple[MomentSequence, ...]
    cumulants: Tuple[CumulantSequence, ...] = field(init=False, repr=False, compare=False)
    functional: MomentFunctional = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.marginals:
            raise UsageError("A free family needs at least one variable")
        orders = {m.order for m in self.marginals}
        if len(orders) != 1:
            raise UsageError(f"Marginals must share one truncation order, got {sorted(orders)}")
        object.__setattr__(self, "cumulants", tuple(free_cumulants_from_moments(m) for m in self.marginals))
        object.__setattr__(self, "functional", MomentFunctional(self.arity, self.order, self._colored_sum))

    @property
    def arity(self) -> int:
        return len(self.marginals)

    @property
    def order(self) -> int:
        return self.marginals[0].order

    def _colored_sum(self, w: Word) -> Number:
        total: Number = 0
        for p in iter_nc(len(w)):
            term: Number = 1
            for b in p.blocks:
                color = w[b[0] - 1]
                if any(w[x - 1] != color for x in b):
                    term = 0
                    break
                term *= self.cumulants[color - 1].values[len(b) - 1]
            total += term
        return total


def free_mixed_moment(spec: FreeFamilySpec, word: Sequence[int]) -> Number:
    return spec.functional(word)


def mixed_free_cumulant(f: MomentFunctional, word: Sequence[int]) -> Number:
    """R^(n) of the tuple picked by the word, by the Möbius sum over NC(n)."""
    w = f.check_word(word)
    n = len(w)
    if n == 0:
        raise UsageError("Cumulants need a nonempty word")
    top = SetPartition.one_block(n)
    total: Number = 0
    for p in iter_nc(n):
        mu = moebius_nc(NcInterval(p, top))
        total += mu * prod((f(tuple(w[x - 1] for x in b)) for b in p.blocks), start=1)
    return total
