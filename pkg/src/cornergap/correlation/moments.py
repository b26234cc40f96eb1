"""Moments of the terminating series with parameters -R, R over 1/2.

``moment_direct`` sums the series term by term.  ``moment_closed`` and
``descending_closed`` are the trigonometric closed forms at x = 1/4; the
trig factors come from the exact R mod 6 table, so everything stays
rational.  ``moment_from_descending`` rebuilds the power moments from the
falling-factorial ones through Stirling numbers of the second kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..exactmath import falling_factorial, pochhammer, trig_at

QUARTER = Fraction(1, 4)
MAX_ORDER = 5


@dataclass(frozen=True)
class MomentValue:
    k: int
    R: int
    value: Fraction


def series_term(R: int, i: int, x=QUARTER) -> Fraction:
    return Fraction(pochhammer(-R, i) * pochhammer(R, i)) / (pochhammer(1, i) * pochhammer(Fraction(1, 2), i)) * Fraction(x) ** i


def moment_direct(k: int, R: int, x=QUARTER) -> Fraction:
    if R < 0 or k < 0:
        raise ValueError("k and R must be non-negative")
    return sum((series_term(R, i, x) * i**k for i in range(R + 1)), Fraction(0))


def descending_direct(k: int, R: int, x=QUARTER) -> Fraction:
    if R < 0 or k < 0:
        raise ValueError("k and R must be non-negative")
    return sum((series_term(R, i, x) * falling_factorial(i, k) for i in range(R + 1)), Fraction(0))


def _check_order(k: int, R: int) -> None:
    if not 0 <= k <= MAX_ORDER:
        raise ValueError(f"closed forms cover k = 0..{MAX_ORDER}, got {k}")
    if R < 0:
        raise ValueError("R must be non-negative")


def moment_closed(k: int, R: int) -> Fraction:
    """Closed form of the k-th power moment at x = 1/4."""
    _check_order(k, R)
    t = trig_at(R)
    c, s = t.cos_val, t.sin_over_sqrt3
    R = Fraction(R)
    if k == 0:
        return c
    if k == 1:
        return -R * s
    if k == 2:
        return -R**2 / 3 * c - 2 * R / 3 * s
    if k == 3:
        return R * (R**2 - 2) / 3 * s - 2 * R**2 / 3 * c
    if k == 4:
        return R**2 * (R**2 - 12) / 9 * c + 2 * R * (6 * R**2 - 5) / 9 * s
    return -R * (3 * R**4 - 120 * R**2 + 74) / 27 * s + 10 * R**2 * (2 * R**2 - 9) / 27 * c


def descending_closed(k: int, R: int) -> Fraction:
    """Closed form of the k-th falling-factorial moment at x = 1/4."""
    _check_order(k, R)
    t = trig_at(R)
    c, s = t.cos_val, t.sin_over_sqrt3
    R = Fraction(R)
    if k == 0:
        return c
    if k == 1:
        return -R * s
    if k == 2:
        return -R**2 / 3 * c + R / 3 * s
    if k == 3:
        return R * (R**2 - 2) / 3 * s + R**2 / 3 * c
    if k == 4:
        return R**2 * (R**2 - 9) / 9 * c - 2 * R * (3 * R**2 - 7) / 9 * s
    return -R * (3 * R**4 - 75 * R**2 + 152) / 27 * s - 10 * R**2 * (R**2 - 9) / 27 * c


@lru_cache(maxsize=None)
def stirling2(k: int, j: int) -> int:
    if k == j:
        return 1
    if j == 0 or j > k:
        return 0
    return j * stirling2(k - 1, j) + stirling2(k - 1, j - 1)


def moment_from_descending(k: int, R: int) -> Fraction:
    """i^k = sum_j S(k, j) i(i-1)...(i-j+1), applied to the closed forms."""
    _check_order(k, R)
    return sum((stirling2(k, j) * descending_closed(j, R) for j in range(k + 1)), Fraction(0))


def moment_value(k: int, R: int) -> MomentValue:
    return MomentValue(k, R, moment_closed(k, R))
