"""Exact integer/rational kernel shared by every other module.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`;
both are arbitrary precision and immutable.  This module adds the special
functions the counting formulas need (factorials, binomials, Pochhammer
symbols) and an exact lookup for ``cos(R*pi/3)`` and ``sin(R*pi/3)``.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

# Tiling counts for n in the thousands have far more than 4300 digits.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

FACTORIAL_CACHE_CAP = 50_000

ExactInteger = int
ExactRational = Fraction


class InternalDisagreement(ArithmeticError):
    """Two routes to the same exact quantity produced different values."""


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"not an exact number: {value!r}")


def exact_int(value) -> int:
    """Return ``value`` as an int, raising if it is not integral."""
    q = as_fraction(value)
    if q.denominator != 1:
        raise InternalDisagreement(f"expected an integer, got {q}")
    return q.numerator


def set_factorial_cache_cap(cap: int) -> None:
    global FACTORIAL_CACHE_CAP
    if cap < 0:
        raise ValueError("cap must be non-negative")
    FACTORIAL_CACHE_CAP = cap


@lru_cache(maxsize=8192)
def _cached_factorial(n: int) -> int:
    return math.factorial(n)


def factorial(n: int) -> int:
    """n!, memoized for arguments up to ``FACTORIAL_CACHE_CAP``."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if n <= FACTORIAL_CACHE_CAP:
        return _cached_factorial(n)
    return math.factorial(n)


def pochhammer(a, k: int):
    """Rising factorial ``(a)_k``, extended to negative ``k``.

    For ``k >= 0`` this is ``a (a+1) ... (a+k-1)``; for ``k = -m < 0`` it is
    ``1 / ((a-m) (a-m+1) ... (a-1))``.  Raises ``ZeroDivisionError`` when a
    negative-index factor vanishes.

    Integer ``a`` with ``k >= 0`` gives an ``int``; everything else a
    ``Fraction``.
    """
    if k >= 0:
        if isinstance(a, int):
            if a > 0 and k > 64:
                return factorial(a + k - 1) // factorial(a - 1)
            return math.prod(range(a, a + k))
        a = as_fraction(a)
        out = Fraction(1)
        for t in range(k):
            out *= a + t
        return out
    m = -k
    a = as_fraction(a)
    den = Fraction(1)
    for t in range(1, m + 1):
        den *= a - t
    if den == 0:
        raise ZeroDivisionError(f"({a})_{k} has a vanishing factor")
    return 1 / den


def binomial(n, k: int):
    """Binomial coefficient with ``binomial(n, k) = 0`` for ``k < 0``.

    ``n`` may be any integer (negative values use the generalized
    definition) or a rational.
    """
    if k < 0:
        return 0
    if isinstance(n, int):
        if n >= 0:
            return math.comb(n, k)
        # (-1)^k C(k-n-1, k)
        return (-1) ** k * math.comb(k - n - 1, k)
    n = as_fraction(n)
    num = Fraction(1)
    for t in range(k):
        num *= n - t
    return num / factorial(k)


def falling_factorial(i: int, k: int) -> int:
    return math.prod(range(i - k + 1, i + 1)) if k > 0 else 1


@dataclass(frozen=True)
class TrigValue:
    """Exact ``cos(R*pi/3)`` and ``sin(R*pi/3)/sqrt(3)`` for ``R mod 6``."""

    residue: int
    cos_val: Fraction
    sin_over_sqrt3: Fraction


_HALF = Fraction(1, 2)
_TRIG_TABLE = (
    (Fraction(1), Fraction(0)),
    (_HALF, _HALF),
    (-_HALF, _HALF),
    (Fraction(-1), Fraction(0)),
    (-_HALF, -_HALF),
    (_HALF, -_HALF),
)


def trig_at(R: int) -> TrigValue:
    residue = R % 6
    c, s = _TRIG_TABLE[residue]
    return TrigValue(residue, c, s)


def to_exact_str(value) -> str:
    """Serialize an exact number as ``"p"`` or ``"p/q"``."""
    q = as_fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_exact(text: str):
    """Inverse of :func:`to_exact_str`; integral values come back as ``int``."""
    q = Fraction(text.strip())
    return q.numerator if q.denominator == 1 else q
