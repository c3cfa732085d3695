"""
Author: Brian Gunnison

Brief: Transition measure of a diagram and its free cumulants.

Details: The Cauchy transform of the transition measure is
prod(z - y_j) / prod(z - x_i); its atoms sit at the minima x_i with the
residues as weights. Everything here is exact.
"""
# SPDX-License-Identifier: MIT
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from src.analytic.measures import DiscreteMeasure, moments_of
from src.cumulants.sequences import CumulantSequence, MomentSequence
from src.cumulants.transforms import free_cumulants_from_moments
from src.errors import UsageError
from src.young.diagrams import InterlacingCoords, YoungDiagram, diagram_to_interlacing

Shape = Union[YoungDiagram, InterlacingCoords]


def _coords(shape: Shape) -> InterlacingCoords:
    return diagram_to_interlacing(shape) if isinstance(shape, YoungDiagram) else shape


def transition_measure(shape: Shape) -> DiscreteMeasure:
    c = _coords(shape)
    atoms = []
    for i, x in enumerate(c.minima):
        num = math.prod(x - y for y in c.maxima)
        den = math.prod(x - xk for k, xk in enumerate(c.minima) if k != i)
        atoms.append((Fraction(x), Fraction(num, den)))
    return DiscreteMeasure(tuple(atoms))


def diagram_moments(shape: Shape, k_max: int) -> MomentSequence:
    return moments_of(transition_measure(shape), k_max)


def diagram_free_cumulants(shape: Shape, k_max: int) -> CumulantSequence:
    if k_max < 1:
        raise UsageError(f"k_max must be at least 1, got {k_max}")
    return free_cumulants_from_moments(diagram_moments(shape, k_max))
