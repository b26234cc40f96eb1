"""Mirror images of the gap in the two sides of the 60-degree corner.

Points are stored as integer pairs ``(p, q)`` meaning ``(p, q*sqrt(3))`` in
a frame centred where the two mirror lines meet.  The western line is the
vertical axis; the north-eastern line makes 60 degrees with it.  Squared
distances are then integers, ``dp^2 + 3 dq^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import combinations

from ..exactmath import InternalDisagreement
from .omega import asymptotic_exact

Point = tuple[int, int]

GAP_CHARGE = 2
DECIMAL_DIGITS = 60


def reflect_west(pt: Point) -> Point:
    """Mirror in the western line (the vertical axis)."""
    p, q = pt
    return (-p, q)


def reflect_northeast(pt: Point) -> Point:
    """Mirror in the north-eastern line, direction (1, -sqrt(3))."""
    p, q = pt
    if (p + q) % 2:
        raise ValueError(f"point {pt} is not on the half-lattice")
    return ((p - 3 * q) // 2, -(p + q) // 2)


def squared_distance(P: Point, Q: Point) -> int:
    return (P[0] - Q[0]) ** 2 + 3 * (P[1] - Q[1]) ** 2


def listed_images(R: int, v: int) -> tuple[Point, ...]:
    """The six centres as explicit coordinate formulas."""
    return (
        (3 * v - 2 * R, -v),
        (3 * v - R, R - v),
        (2 * R - 3 * v, -v),
        (R - 3 * v, R - v),
        (R, 2 * v - R),
        (-R, 2 * v - R),
    )


@dataclass(frozen=True)
class ImageConfiguration:
    R: int
    v: int
    points: tuple[Point, ...]
    squared_distances: dict = field(compare=False)

    def distance(self, i: int, j: int) -> float:
        """Euclidean distance between 1-based image points i and j."""
        return math.sqrt(self.squared_distances[min(i, j), max(i, j)])

    def squared_product(self) -> int:
        return math.prod(self.squared_distances.values())


def image_configuration(R: int, v: int) -> ImageConfiguration:
    """Gap centre and its images, generated by reflections and checked against the listed formulas."""
    if R < 1 or v < 1:
        raise ValueError("R and v must be positive")
    o1 = (3 * v - 2 * R, -v)
    o2 = reflect_northeast(o1)
    o3 = reflect_west(o1)
    o4 = reflect_west(o2)
    o5 = reflect_northeast(o3)
    o6 = reflect_northeast(o4)
    if reflect_west(o5) != o6:
        raise InternalDisagreement("reflections of the fourth and fifth images disagree")
    points = (o1, o2, o3, o4, o5, o6)
    if points != listed_images(R, v):
        raise InternalDisagreement(f"reflected images {points} differ from the listed ones")
    dists = {(i + 1, j + 1): squared_distance(points[i], points[j]) for i, j in combinations(range(6), 2)}
    return ImageConfiguration(R, v, points, dists)


@dataclass(frozen=True)
class DistanceProductCheck:
    lhs: float
    rhs: float
    rel_error: float
    sixth_root_form: float
    exact_identity: bool


def distance_product_check(R: int, v: int) -> DistanceProductCheck:
    """Compare the polynomial asymptotic with the cube root of the 15 image distances.

    The product of squared distances is an exact integer, so the only
    irrational step is the root, done in high-precision decimal.  The
    charge-weighted form (each distance raised to q_i q_j / 2 under a sixth
    root) is evaluated separately.  ``exact_identity`` records whether
    (1944 * lhs)^6 equals the product of squared distances.
    """
    if 3 * v - 2 * R <= 0:
        raise ValueError(f"gap must lie strictly inside the corner (3v > 2R), got R={R}, v={v}")
    config = image_configuration(R, v)
    lhs_exact = asymptotic_exact(R, v)
    squared = config.squared_product()
    exponent = GAP_CHARGE * GAP_CHARGE // 2  # d^(q q / 2) with q = 2 is d^2
    with localcontext() as ctx:
        ctx.prec = DECIMAL_DIGITS
        dist_product = Decimal(squared).sqrt()
        cube_form = dist_product ** (Decimal(1) / Decimal(3)) / 1944
        weighted = Decimal(1)
        for d2 in config.squared_distances.values():
            weighted *= Decimal(d2).sqrt() ** exponent
        sixth_form = weighted ** (Decimal(1) / Decimal(6)) / 1944
        lhs = Decimal(lhs_exact.numerator) / Decimal(lhs_exact.denominator)
        rel = abs(lhs - cube_form) / abs(cube_form)
        form_gap = abs(sixth_form - cube_form) / abs(cube_form)
    if form_gap > Decimal(10) ** (-(DECIMAL_DIGITS - 10)):
        raise InternalDisagreement(f"sixth-root and cube-root forms differ by {form_gap}")
    exact = (1944 * lhs_exact) ** 6 == squared
    return DistanceProductCheck(float(lhs), float(cube_form), float(rel), float(sixth_form), exact)


def charge_exponent_rewrite_holds() -> bool:
    """With all charges 2, a sixth root of d^(q q / 2) is the cube root of d."""
    return Fraction(GAP_CHARGE * GAP_CHARGE, 2) / 6 == Fraction(1, 3)
