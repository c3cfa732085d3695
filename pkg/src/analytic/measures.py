"""
Author: Brian Gunnison

Brief: Discrete measures and the named laws (semicircle, arcsine on [0,2],
Bernoulli, point mass, projection spectrum, empirical).

Details: Moments are exact for exact parameters. Densities, CDFs and
quantiles of the continuous laws feed the Monte Carlo comparisons;
quadrature_moment cross-checks the closed-form moments numerically.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Literal, Optional, Tuple, Union

from scipy import integrate, optimize

from src.combinat.partitions import catalan
from src.cumulants.sequences import MomentSequence, coerce_like
from src.errors import UsageError
from src.util.rational import Number, format_rational, parse_rational

LawTag = Literal["semicircle", "arcsine02", "bernoulli", "point", "empirical"]

Atom = Tuple[Number, Number]


@dataclass(frozen=True)
class DiscreteMeasure:
    atoms: Tuple[Atom, ...]

    def __post_init__(self) -> None:
        atoms = tuple((x, w) for x, w in self.atoms)
        if not atoms:
            raise UsageError("A measure needs at least one atom")
        xs = [x for x, _ in atoms]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise UsageError("Atom positions must be strictly increasing")
        if any(w <= 0 for _, w in atoms):
            raise UsageError("Atom weights must be positive")
        total = sum(w for _, w in atoms)
        if self.exact:
            if total != 1:
                raise UsageError(f"Weights sum to {total}, not 1")
        elif abs(float(total) - 1.0) > 1e-12:
            raise UsageError(f"Weights sum to {float(total)!r}, not 1")
        object.__setattr__(self, "atoms", atoms)

    @property
    def exact(self) -> bool:
        return all(isinstance(x, Rational) and isinstance(w, Rational) for x, w in self.atoms)

    @classmethod
    def from_samples(cls, values: Iterable[Number]) -> "DiscreteMeasure":
        """Empirical measure of a finite list; repeated values merge into one atom."""
        counts = Counter(values)
        total = sum(counts.values())
        return cls(tuple((x, Fraction(c, total)) for x, c in sorted(counts.items())))

    def moments(self, order: int) -> MomentSequence:
        vals = [sum((w * x ** k for x, w in self.atoms), start=0) for k in range(1, order + 1)]
        return MomentSequence(coerce_like(vals, self.exact))

    def cdf(self, x: float) -> float:
        return float(sum(w for a, w in self.atoms if a <= x))


@dataclass(frozen=True)
class NamedLaw:
    tag: LawTag
    params: Tuple[Number, ...] = ()
    measure: Optional[DiscreteMeasure] = None

    def __post_init__(self) -> None:
        if self.tag == "semicircle":
            (v,) = self.params
            if v <= 0:
                raise UsageError(f"Semicircle variance must be positive, got {v}")
        elif self.tag == "bernoulli":
            p, a, b = self.params
            if not 0 < p < 1:
                raise UsageError(f"Bernoulli p must lie in (0,1), got {p}")
            if not a < b:
                raise UsageError(f"Bernoulli atoms need a < b, got {a}, {b}")
        elif self.tag == "point":
            if len(self.params) != 1:
                raise UsageError("point law takes one parameter")
        elif self.tag == "empirical":
            if self.measure is None:
                raise UsageError("empirical law needs a measure")
        elif self.tag != "arcsine02":
            raise UsageError(f"Unknown law tag: {self.tag!r}")

    @classmethod
    def semicircle(cls, variance: Number = 1) -> "NamedLaw":
        return cls("semicircle", (parse_rational(variance),))

    @classmethod
    def arcsine02(cls) -> "NamedLaw":
        return cls("arcsine02")

    @classmethod
    def bernoulli(cls, p: Number, a: Number = 0, b: Number = 1) -> "NamedLaw":
        """(1 - p) delta_a + p delta_b."""
        return cls("bernoulli", (parse_rational(p), parse_rational(a), parse_rational(b)))

    @classmethod
    def projection(cls, t: Number) -> "NamedLaw":
        """Spectrum of a projection of normalized rank t."""
        return cls.bernoulli(t, 0, 1)

    @classmethod
    def point(cls, a: Number) -> "NamedLaw":
        return cls("point", (parse_rational(a),))

    @classmethod
    def empirical(cls, measure: DiscreteMeasure) -> "NamedLaw":
        return cls("empirical", (), measure)

    @property
    def is_discrete(self) -> bool:
        return self.tag in ("bernoulli", "point", "empirical")

    def to_measure(self) -> DiscreteMeasure:
        if self.tag == "point":
            return DiscreteMeasure(((self.params[0], Fraction(1)),))
        if self.tag == "bernoulli":
            p, a, b = self.params
            return DiscreteMeasure(((a, 1 - p), (b, p)))
        if self.tag == "empirical":
            assert self.measure is not None
            return self.measure
        raise UsageError(f"{self} has no atoms")

    def __str__(self) -> str:
        if self.tag == "empirical":
            return f"empirical[{len(self.measure.atoms) if self.measure else 0} atoms]"
        return ":".join([self.tag] + [format_rational(p) for p in self.params])


def parse_law(text: str) -> NamedLaw:
    """semicircle:V | arcsine02 | bernoulli:P:A:B | point:A | proj:T"""
    parts = [s.strip() for s in text.strip().split(":")]
    name, args = parts[0].lower(), parts[1:]
    try:
        if name == "semicircle":
            return NamedLaw.semicircle(args[0] if args else 1)
        if name == "arcsine02":
            return NamedLaw.arcsine02()
        if name == "bernoulli":
            p = args[0] if args else "1/2"
            a = args[1] if len(args) > 1 else 0
            b = args[2] if len(args) > 2 else 1
            return NamedLaw.bernoulli(p, a, b)
        if name == "point":
            return NamedLaw.point(args[0])
        if name == "proj":
            return NamedLaw.projection(args[0])
    except IndexError as e:
        raise UsageError(f"Missing parameter in law {text!r}") from e
    except ValueError as e:
        raise UsageError(f"Bad law {text!r}: {e}") from e
    raise UsageError(f"Unknown law {text!r}")


def moments_of(source: Union[DiscreteMeasure, NamedLaw], order: int) -> MomentSequence:
    if order < 1:
        raise UsageError(f"Order must be at least 1, got {order}")
    if isinstance(source, DiscreteMeasure):
        return source.moments(order)
    if source.is_discrete:
        return source.to_measure().moments(order)
    if source.tag == "semicircle":
        (v,) = source.params
        vals = [Fraction(0) if k % 2 else catalan(k // 2) * Fraction(v) ** (k // 2) for k in range(1, order + 1)]
        return MomentSequence(tuple(vals))
    # arcsine on [0,2]: E[(1+Y)^k], Y standard arcsine with E[Y^2j] = binom(2j, j) / 4^j
    vals = [sum(Fraction(comb(k, 2 * j) * comb(2 * j, j), 4 ** j) for j in range(k // 2 + 1)) for k in range(1, order + 1)]
    return MomentSequence(tuple(vals))


def support(law: NamedLaw) -> Tuple[float, float]:
    if law.tag == "semicircle":
        r = 2.0 * math.sqrt(float(law.params[0]))
        return -r, r
    if law.tag == "arcsine02":
        return 0.0, 2.0
    atoms = law.to_measure().atoms
    return float(atoms[0][0]), float(atoms[-1][0])


def density(law: NamedLaw, x: float) -> float:
    if law.tag == "semicircle":
        v = float(law.params[0])
        return math.sqrt(max(4.0 * v - x * x, 0.0)) / (2.0 * math.pi * v)
    if law.tag == "arcsine02":
        if x <= 0.0 or x >= 2.0:
            return 0.0
        return 1.0 / (math.pi * math.sqrt(x * (2.0 - x)))
    raise UsageError(f"{law} has no density")


def cdf(law: NamedLaw, x: float) -> float:
    if law.tag == "semicircle":
        u = min(max(x / math.sqrt(float(law.params[0])), -2.0), 2.0)
        return 0.5 + u * math.sqrt(4.0 - u * u) / (4.0 * math.pi) + math.asin(u / 2.0) / math.pi
    if law.tag == "arcsine02":
        y = min(max(x, 0.0), 2.0)
        return 2.0 / math.pi * math.asin(math.sqrt(y / 2.0))
    return law.to_measure().cdf(x)


def quantile(law: NamedLaw, q: float) -> float:
    if not 0.0 <= q <= 1.0:
        raise UsageError(f"Quantile level must lie in [0,1], got {q}")
    if law.tag == "arcsine02":
        return 2.0 * math.sin(math.pi * q / 2.0) ** 2
    if law.tag == "semicircle":
        lo, hi = support(law)
        if q in (0.0, 1.0):
            return lo if q == 0.0 else hi
        return optimize.brentq(lambda x: cdf(law, x) - q, lo, hi, xtol=1e-14)
    acc = 0.0
    atoms = law.to_measure().atoms
    for x, w in atoms:
        acc += float(w)
        if acc >= q - 1e-15:
            return float(x)
    return float(atoms[-1][0])


def quadrature_moment(law: NamedLaw, k: int) -> float:
    """k-th moment by numerical integration of the density."""
    if law.tag == "arcsine02":
        # weight='alg' integrates f(x) * x^-1/2 * (2-x)^-1/2 exactly at the endpoint singularities
        val, _ = integrate.quad(lambda x: x ** k / math.pi, 0.0, 2.0, weight="alg", wvar=(-0.5, -0.5))
        return val
    if law.tag == "semicircle":
        lo, hi = support(law)
        val, _ = integrate.quad(lambda x: x ** k * density(law, x), lo, hi, epsabs=1e-13, epsrel=1e-13, limit=200)
        return val
    return float(moments_of(law, k).values[-1])
