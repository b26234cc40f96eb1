"""Exact corner correlation of the side-2 gap, by several independent routes.

* ``omega_double_sum``: the raw double sum over end-label offsets (a, b),
  cross-checked against the same sum separated into moments.
* ``omega_exact``: the piecewise polynomial in R mod 3.
* ``master_S``: one trigonometric expression covering all residues, which
  must reproduce the three branch polynomials.

Throughout, ``S`` denotes 24 R times the signed correlation, i.e. the
separated sum before the absolute value.
"""

from __future__ import annotations

from fractions import Fraction

from ..enumeration import gap_weight
from ..exactmath import InternalDisagreement, trig_at
from .expansion import expand_coefficients, pair_polynomial_value, separated_sum
from .moments import MAX_ORDER, moment_closed


def _check_rv(R: int, v: int) -> None:
    if R < 1 or v < 1:
        raise ValueError(f"R and v must be positive, got R={R}, v={v}")


def double_sum_summand(R: int, v: int, a: int, b: int) -> Fraction:
    sign = -1 if (a + b) % 2 else 1
    return sign * gap_weight(R, a) * gap_weight(R, b) * pair_polynomial_value(a, b, R, v)


def raw_double_sum(R: int, v: int) -> Fraction:
    """Signed full double sum over 0 <= a, b <= R (no prefactor)."""
    return sum(
        (double_sum_summand(R, v, a, b) for a in range(R + 1) for b in range(R + 1)),
        Fraction(0),
    )


def half_double_sum(R: int, v: int) -> Fraction:
    """Signed sum over 0 <= a < b <= R; half of :func:`raw_double_sum`."""
    return sum(
        (double_sum_summand(R, v, a, b) for a in range(R + 1) for b in range(a + 1, R + 1)),
        Fraction(0),
    )


def moment_form_S(R: int, v: int) -> Fraction:
    """sum over (lam, mu) of c_{lam,mu} S^(lam) S^(mu), with closed-form moments."""
    moments = [moment_closed(k, R) for k in range(MAX_ORDER + 1)]
    return separated_sum(expand_coefficients(), R, v, moments, moments)


def signed_double_sum(R: int, v: int) -> Fraction:
    """R/24 times the raw double sum, after checking it against the moment form."""
    _check_rv(R, v)
    raw = Fraction(R, 24) * raw_double_sum(R, v)
    separated = moment_form_S(R, v) / (24 * R)
    if raw != separated:
        raise InternalDisagreement(f"double sum {raw} != moment form {separated} at R={R}, v={v}")
    return raw


def omega_double_sum(R: int, v: int) -> Fraction:
    return abs(signed_double_sum(R, v))


# -- closed forms ------------------------------------------------------------------


def branch_S(R: int, v: int) -> Fraction:
    """The residue-class simplifications of S (R mod 3)."""
    R = Fraction(R)
    r = R % 3
    if r == 0:
        return Fraction(-8, 27) * R**2 * (R - 3 * v) * (2 * R - 3 * v) * (4 * R**2 - 12 * R * v + 12 * v**2 - 8 * R + 16 * v + 3)
    if r == 1:
        return Fraction(-4, 27) * R * (2 * R + 1) * (R - 3 * v - 1) * (4 * R - 6 * v - 1) * (2 * R**2 - 6 * R * v + 6 * v**2 - R - v)
    return Fraction(-4, 27) * R * (2 * R - 1) * (2 * R - 6 * v - 1) * (2 * R - 3 * v - 1) * (2 * R**2 - 6 * R * v + 6 * v**2 + 2 * R - v)


def _master_parts(R: int, v: int):
    R = Fraction(R)
    base = Fraction(-2, 27) * R**2 * (2 * R - 6 * v - 1) * (4 * R - 6 * v - 1) * (4 * R**2 - 2 * R * (6 * v + 1) + 4 * v * (3 * v + 1) - 2)
    cos_part = Fraction(2, 27) * R * (2 * R - 4 * v - 1) * (6 * R**2 - 3 * R * (12 * v + 1) + 36 * v**2 + 6 * v + 1)
    return R, base, cos_part


def master_S(R: int, v: int) -> Fraction:
    """Trigonometric form of S valid for every R, evaluated at angle 2R pi/3.

    The cosine part carries a factor 2R and the sine polynomial has
    +2R(12v+1)(36v^2+6v-1); with these the three branches are reproduced.
    """
    t = trig_at(2 * R)
    R, base, cos_part = _master_parts(R, v)
    sin_poly = (
        24 * R**4 - 24 * R**3 - 2 * R**2 * (216 * v**2 + 12 * v - 5)
        + 2 * R * (12 * v + 1) * (36 * v**2 + 6 * v - 1)
        - 4 * v * (3 * v + 1) * (6 * v - 1) * (6 * v + 1)
    )
    # sin(2R pi/3) = sqrt(3) * sin_over_sqrt3, so sqrt(3) * sqrt(3) / 81 = 1/27
    return base + 2 * R * cos_part * t.cos_val + Fraction(2, 27) * R * sin_poly * t.sin_over_sqrt3


def master_S_printed(R: int, v: int) -> Fraction:
    """The trigonometric form exactly as typeset in the source; kept for audit."""
    t = trig_at(2 * R)
    R, base, cos_part = _master_parts(R, v)
    sin_poly = (
        24 * R**4 - 24 * R**3 - 2 * R**2 * (216 * v**2 + 12 * v - 5)
        - 2 * R * (12 * v + 1) * (36 * v**2 + 6 * v - 1)
        - 4 * v * (3 * v + 1) * (6 * v - 1) * (6 * v + 1)
    )
    return base + cos_part * t.cos_val - Fraction(3, 81) * sin_poly * t.sin_over_sqrt3


def omega_branch_polynomial(R: int, v: int) -> Fraction:
    """Signed piecewise polynomial in R mod 3 (equal to -S / (24 R))."""
    r = R % 3
    if r == 0:
        return Fraction(1, 81) * R * (R - 3 * v) * (2 * R - 3 * v) * (4 * R * R - 12 * R * v + 12 * v * v - 8 * R + 16 * v + 3)
    if r == 1:
        return Fraction(1, 162) * (2 * R + 1) * (R - 3 * v - 1) * (4 * R - 6 * v - 1) * (2 * R * R - 6 * R * v + 6 * v * v - R - v)
    return Fraction(1, 162) * (2 * R - 1) * (2 * R - 6 * v - 1) * (2 * R - 3 * v - 1) * (2 * R * R - 6 * R * v + 6 * v * v + 2 * R - v)


def omega_branch_expanded(R: int, v: int) -> Fraction:
    """The same piecewise polynomial, multiplied out into monomials first.

    The expansion reuses :class:`Poly`; its last variable slot carries v.
    """
    from .expansion import Poly

    X, V = Poly.var("R"), Poly.var("u")
    r = R % 3
    if r == 0:
        p = X * (X - 3 * V) * (2 * X - 3 * V) * (4 * X * X - 12 * X * V + 12 * V * V - 8 * X + 16 * V + 3)
        den = 81
    elif r == 1:
        p = (2 * X + 1) * (X - 3 * V - 1) * (4 * X - 6 * V - 1) * (2 * X * X - 6 * X * V + 6 * V * V - X - V)
        den = 162
    else:
        p = (2 * X - 1) * (2 * X - 6 * V - 1) * (2 * X - 3 * V - 1) * (2 * X * X - 6 * X * V + 6 * V * V + 2 * X - V)
        den = 162
    return Fraction(p.evaluate(0, 0, R, v), den)


def omega_exact(R: int, v: int) -> Fraction:
    """Exact correlation from the piecewise closed form (absolute value)."""
    _check_rv(R, v)
    return abs(omega_branch_polynomial(R, v))


def omega_asymptotic(R: int, v: int) -> float:
    """Leading-order prediction (4/81) R (3v-R)(3v-2R)(R^2-3Rv+3v^2)."""
    if 3 * v - 2 * R <= 0:
        raise ValueError(f"gap must lie strictly inside the corner (3v > 2R), got R={R}, v={v}")
    return float(asymptotic_exact(R, v))


def asymptotic_exact(R: int, v: int) -> Fraction:
    return Fraction(4, 81) * R * (3 * v - R) * (3 * v - 2 * R) * (R * R - 3 * R * v + 3 * v * v)
