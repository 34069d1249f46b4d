"""Closed-form bound evaluators used alongside peeling traces."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .peeling import ALPHA

# ratio sqrt(33) / (2 sqrt(928)) that scales (t+1) into the excess cutoff
THETA_RATIO = math.sqrt(33) / (2 * math.sqrt(928))
C_CONST = 1 + math.sqrt(928 / 33)


def theta(t: float) -> float:
    return THETA_RATIO * (t + 1)


@dataclass(frozen=True)
class BoundsParams:
    t: float
    lam: int = 0
    alpha: Fraction = ALPHA

    @property
    def theta(self) -> float:
        return theta(self.t)

    @property
    def c(self) -> float:
        return C_CONST

    @property
    def greedy_target(self) -> int:
        """Size of the independent set the rewrite stage aims for."""
        return math.ceil(2 * self.alpha * self.lam) + 2


def b_upper_bound(f: int, t) -> Fraction:
    """Upper bound on an interval length given its starting maximizer degree."""
    if f < 1:
        raise ValueError(f"f must be at least 1, got {f}")
    if f == 1:
        return Fraction(3, 4) * Fraction(t)
    if f <= 7:
        return 6 * ALPHA * f + 7
    return 4 * ALPHA * f + 5


def decay_bound(j: int, start) -> float:
    """``alpha**(j-1) * start + 3``."""
    if j < 1:
        raise ValueError("j must be at least 1")
    return float(ALPHA ** (j - 1)) * float(start) + 3


def clique_count_bounds(t: float) -> tuple[float, float, float, float]:
    """Leading terms of the upper and lower estimates on the clique family
    size, plus ``theta(t)`` and the constant ``c``. Remainders are omitted."""
    if t < 2:
        raise ValueError("t must be at least 2")
    th = theta(t)
    upper = (928 / 33) * th + 0.75 * t
    lower = math.sqrt(928) / (2 * math.sqrt(33)) * (t + 1) + 0.75 * t
    return upper, lower, th, C_CONST
