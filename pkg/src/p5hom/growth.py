"""The sub-polynomial growth target and every threshold derived from it.

f(x) = 2**(c * (log2 x)**(2/3)) with c = 1/16 by default, f(0) = 0, and
eps(n) = (log2 n)**(-1/3), so f(n) = n**(c*eps(n)).  All size thresholds
used by the extraction pipeline are evaluated through this object and
recorded in traces.  Comparisons against integer set sizes round the
threshold toward the safe side: ceilings on lower bounds, floors on
upper bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class GrowthFunction:
    c: Fraction = Fraction(1, 16)

    def __post_init__(self) -> None:
        if self.c <= 0:
            raise ValueError("growth constant must be positive")

    def f(self, x: float) -> float:
        if x < 0:
            raise ValueError("f is defined for x >= 0")
        if x == 0:
            return 0.0
        if x < 1:
            raise ValueError("f is defined on {0} and [1, inf)")
        return 2.0 ** (float(self.c) * math.log2(x) ** (2.0 / 3.0))

    def eps(self, n: float) -> float:
        if n <= 1:
            raise ValueError("eps needs n >= 2")
        return math.log2(n) ** (-1.0 / 3.0)

    # Threshold formulas, all as plain floats.

    def medium_floor(self, n: int) -> float:
        """n**(1 - eps): below this a set is small."""
        return n ** (1.0 - self.eps(n))

    def large_floor(self, n: int) -> float:
        """2 * n**(1 - eps**2): the blue/red side requirement."""
        return 2.0 * n ** (1.0 - self.eps(n) ** 2)

    def win1_floor(self, n: int) -> float:
        """n**(1 - eps**2/c): both-sides size for the first win condition."""
        return n ** (1.0 - self.eps(n) ** 2 / float(self.c))

    def win2_side_floor(self, n: int) -> float:
        """n**(1 - eps/c): per-side size for the second win condition."""
        return n ** (1.0 - self.eps(n) / float(self.c))

    def win2_total_floor(self, n: int) -> float:
        """n - 7*n**(1 - eps**2): total size for the second win condition."""
        return n - 7.0 * n ** (1.0 - self.eps(n) ** 2)

    def blue_degree_cap(self, n: int, a_size: int) -> float:
        """n**(eps**2) * |A|: allowed blue degree into the blue side."""
        return n ** (self.eps(n) ** 2) * a_size

    def x_cap(self, n: int, a_size: int) -> float:
        """2 * n**(c*eps**2) * |A|: allowed size of the all-blue class."""
        return 2.0 * n ** (float(self.c) * self.eps(n) ** 2) * a_size

    def iteration_floor(self, n: int) -> float:
        """n - n**(1 - eps**2): keep iterating while the graph is this big."""
        return n - n ** (1.0 - self.eps(n) ** 2)


def at_least(size: int, threshold: float) -> bool:
    """size >= threshold with the lower bound rounded up."""
    return size >= math.ceil(threshold - 1e-12)


def at_most(size: int, threshold: float) -> bool:
    """size <= threshold with the upper bound rounded down."""
    return size <= math.floor(threshold + 1e-12)
