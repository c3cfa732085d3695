"""
Author: Brian Gunnison

Brief: Truncated power series, the Cauchy-transform series and R-coefficients
by compositional inversion.

Details: With w = 1/z the Cauchy transform is G(1/w) = w * M(w), where
M(w) = 1 + sum m_k w^k. If h is the compositional inverse of g(w) = w M(w),
then K(u) = 1/h(u) = 1/u + sum_{k>=1} R_k u^(k-1), so the R_k are the
coefficients of u / h(u). Inversion is solved order by order.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import List, Tuple

from src.cumulants.sequences import CumulantSequence, MomentSequence, coerce_like
from src.errors import NumericError, UsageError
from src.util.rational import Number


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 x + ... + c_K x^K, modulo x^(K+1)."""

    coefficients: Tuple[Number, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise UsageError("A series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def exact(self) -> bool:
        return all(isinstance(c, Rational) for c in self.coefficients)

    def _wrap(self, coeffs: List[Number], exact: bool) -> "TruncatedSeries":
        return TruncatedSeries(coerce_like(coeffs, exact))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        k = min(self.order, other.order)
        return self._wrap([self.coefficients[i] + other.coefficients[i] for i in range(k + 1)], self.exact and other.exact)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        k = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        out = [sum((a[i] * b[n - i] for i in range(n + 1)), start=0) for n in range(k + 1)]
        return self._wrap(out, self.exact and other.exact)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(x)); inner must have no constant term."""
        if inner.coefficients[0] != 0:
            raise NumericError("Composition needs an inner series without constant term")
        k = min(self.order, inner.order)
        exact = self.exact and inner.exact
        inner = inner._wrap(list(inner.coefficients[: k + 1]), exact)
        acc = [self.coefficients[0]] + [0] * k
        power = self._wrap([1] + [0] * k, exact)
        for j in range(1, k + 1):
            power = power * inner
            cj = self.coefficients[j]
            for n in range(k + 1):
                acc[n] += cj * power.coefficients[n]
        return self._wrap(acc, exact)

    def reciprocal(self) -> "TruncatedSeries":
        c = self.coefficients
        if c[0] == 0:
            raise NumericError("Series with zero constant term has no reciprocal")
        inv: List[Number] = [Fraction(1) / c[0] if self.exact else 1.0 / c[0]]
        for n in range(1, self.order + 1):
            s = sum((c[i] * inv[n - i] for i in range(1, n + 1)), start=0)
            inv.append(-s * inv[0])
        return self._wrap(inv, self.exact)

    def reversion(self) -> "TruncatedSeries":
        """Compositional inverse h with self(h(x)) = x + O(x^(K+1))."""
        c = self.coefficients
        if c[0] != 0 or self.order < 1 or c[1] == 0:
            raise NumericError("Reversion needs c_0 = 0 and c_1 != 0")
        inv_c1 = Fraction(1) / c[1] if self.exact else 1.0 / c[1]
        h: List[Number] = [0, inv_c1] + [0] * (self.order - 1)
        for n in range(2, self.order + 1):
            # h_n is still 0 here; it enters the x^n coefficient only as c_1 * h_n.
            partial = self.compose(self._wrap(h, self.exact))
            h[n] = -partial.coefficients[n] * inv_c1
        return self._wrap(h, self.exact)


def cauchy_series(m: MomentSequence) -> TruncatedSeries:
    """Coefficients (1, m_1, ..., m_K) of M(w), where G(1/w) = w M(w)."""
    one = Fraction(1) if m.exact else 1.0
    return TruncatedSeries((one,) + m.values)


def r_coefficients_via_inversion(g: TruncatedSeries) -> CumulantSequence:
    if g.coefficients[0] != 1:
        raise NumericError(f"Cauchy series must start with 1 (G ~ 1/z), got {g.coefficients[0]}")
    if g.order < 1:
        raise NumericError("Cauchy series carries no moments")
    shifted = TruncatedSeries((0,) + g.coefficients)
    h = shifted.reversion()
    # u / h(u) = 1 / (h_1 + h_2 u + ...)
    c = TruncatedSeries(h.coefficients[1:]).reciprocal()
    return CumulantSequence(coerce_like(c.coefficients[1:], g.exact), "free")
