"""Finite-n approximations of the corner correlation.

For large n the tiling counts themselves have millions of digits, so the
doubly dented counts are used only through their ratios to the reference
count E(n; 1, 3).  Dividing the numerator and denominator of the E formula
by M(F(n-1; 1)) M(F(n; 1)) leaves short products of Pochhammer symbols.
"""

from __future__ import annotations

from fractions import Fraction

from ..enumeration import count_gapped
from ..formulas import f_ratio


def e_ratio_limit(i: int, j: int) -> Fraction:
    """Limit of M(E(n,1; i,j)) / M(E(n,1; 1,3)) as n grows."""
    if not 1 <= i < j:
        raise ValueError("need 1 <= i < j")
    return Fraction(i * j * (j - i) * (i * i + i * j + j * j - 2 * i - 2 * j - 1), 24)


def _scaled_e(n: int, i: int, j: int, x: int) -> Fraction:
    # E count times M(G(n-1)) / (M(F(n-1;1)) M(F(n;1)))
    return f_ratio(n - 1, x, i) * f_ratio(n, x, j) - f_ratio(n - 1, x, j) * f_ratio(n, x, i)


def e_ratio_finite(n: int, i: int, j: int, x: int = 1) -> Fraction:
    """M(E(n,x; i,j)) / M(E(n,x; 1,3)) exactly."""
    if n < 3 or not 1 <= i < j <= n:
        raise ValueError(f"need n >= 3 and 1 <= i < j <= n, got n={n}, i={i}, j={j}")
    return _scaled_e(n, i, j, x) / _scaled_e(n, 1, 3, x)


def finite_n_correlation(n: int, R: int, v: int) -> Fraction:
    """M(D(n,1; R, v)) / M(E(n,1; 1,3)) through the Laplace expansion."""
    if n < 3:
        raise ValueError("n must be at least 3")
    ref = _scaled_e(n, 1, 3, 1)

    def ratios(i, j):
        return _scaled_e(n, i, j, 1) / ref

    return Fraction(count_gapped(n, R, v, e_counts=ratios))
