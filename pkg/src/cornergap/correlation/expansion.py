"""Monomial expansion of the pair polynomial in the end-label offsets a, b.

The pair polynomial is

    (b-a)^2 A B (A^2 + A B + B^2 - 2A - 2B - 1),   A = u - R + a,  B = u - R + b,

with ``u = 2v``.  Coefficients are kept in the variables (a, b, R, u); the
published 120-term table is written in these variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

VARS = ("a", "b", "R", "u")

Monomial = tuple[int, int, int, int]


class Poly:
    """Sparse integer polynomial in (a, b, R, u)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "Poly":
        e = [0, 0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1})

    def _coerce(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in self._coerce(other).terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def evaluate(self, a, b, R, u):
        total = 0
        for (ea, eb, er, eu), c in self.terms.items():
            total += c * a**ea * b**eb * R**er * u**eu
        return total

    def swap_ab(self) -> "Poly":
        return Poly({(m[1], m[0], m[2], m[3]): c for m, c in self.terms.items()})


def pair_polynomial_value(a, b, R, v):
    """The unexpanded product, evaluated directly."""
    A = 2 * v - R + a
    B = 2 * v - R + b
    return (b - a) ** 2 * A * B * (A * A + A * B + B * B - 2 * A - 2 * B - 1)


@dataclass(frozen=True)
class MonomialCoefficients:
    """Expanded pair polynomial; ``terms`` maps (deg a, deg b, deg R, deg u) to its coefficient."""

    terms: MappingProxyType

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, a_deg: int, b_deg: int, R_deg: int = 0, u_deg: int = 0) -> int:
        return self.terms.get((a_deg, b_deg, R_deg, u_deg), 0)

    def degrees(self) -> list[tuple[int, int]]:
        return sorted({(m[0], m[1]) for m in self.terms})

    def c_value(self, lam: int, mu: int, R, v):
        """Coefficient of a^lam b^mu as a number, at given R and v."""
        u = 2 * v
        return sum(c * R ** m[2] * u ** m[3] for m, c in self.terms.items() if m[0] == lam and m[1] == mu)

    def evaluate(self, a, b, R, v):
        return Poly(self.terms).evaluate(a, b, R, 2 * v)

    def in_v(self) -> dict[Monomial, int]:
        """Same expansion with u replaced by 2v (coefficient of v^k picks up 2^k)."""
        return {m: c * 2 ** m[3] for m, c in self.terms.items()}


@lru_cache(maxsize=1)
def expand_coefficients() -> MonomialCoefficients:
    a, b, R, u = (Poly.var(n) for n in VARS)
    A = u - R + a
    B = u - R + b
    poly = (b - a) ** 2 * A * B * (A * A + A * B + B * B - 2 * A - 2 * B - 1)
    return MonomialCoefficients(MappingProxyType(dict(sorted(poly.terms.items()))))


def separated_sum(coeffs: MonomialCoefficients, R, v, left, right) -> Fraction:
    """sum over (lam, mu) of c_{lam,mu}(R, v) * left[lam] * right[mu]."""
    total = Fraction(0)
    for lam, mu in coeffs.degrees():
        total += coeffs.c_value(lam, mu, R, v) * left[lam] * right[mu]
    return total
