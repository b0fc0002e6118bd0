"""The Hölder (power) mean of order r of two positive numbers.

    H_r(a, b) = ((a**r + b**r) / 2) ** (1/r)   for r != 0
    H_0(a, b) = sqrt(a * b)

H_r is symmetric, idempotent, homogeneous of degree 1, bounded by
min(a, b) and max(a, b), and strictly increasing in r for a != b.
"""

import math
from dataclasses import dataclass
from typing import Union

from .errors import DomainError

# the r != 0 formula is numerically unstable near zero; route to the
# geometric branch below this
_ZERO_BAND = 1e-12


@dataclass(frozen=True)
class HolderOrder:
    """The mean's exponent; 0 encodes the geometric mean."""

    order: float

    def __post_init__(self):
        if not math.isfinite(self.order):
            raise DomainError(f"Hölder order must be a finite real, got {self.order!r}")


def holder_mean(order: Union[HolderOrder, float], a: float, b: float) -> float:
    """H_order(a, b) for positive a, b; always within [min(a,b), max(a,b)]."""
    r = order.order if isinstance(order, HolderOrder) else float(order)
    if not math.isfinite(r):
        raise DomainError(f"Hölder order must be a finite real, got {r!r}")
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"holder_mean needs positive arguments, got {a!r}, {b!r}")
    if a == b:
        return a
    if abs(r) < _ZERO_BAND:
        return math.exp(0.5 * (math.log(a) + math.log(b)))
    # factor out the dominant argument so the remaining ratio power is <= 1:
    # the larger one for positive orders, the smaller one for negative
    if r > 0.0:
        m, other = (a, b) if a > b else (b, a)
    else:
        m, other = (a, b) if a < b else (b, a)
    t = math.exp(r * (math.log(other) - math.log(m)))  # in (0, 1]
    mean = m * math.exp((math.log1p(t) - math.log(2.0)) / r)
    lo, hi = (a, b) if a < b else (b, a)
    return min(max(mean, lo), hi)
