"""Product formulas for the dented-region counts and the identities behind them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactmath import InternalDisagreement, binomial, exact_int, factorial, pochhammer


@lru_cache(maxsize=4096)
def m_G(n: int, x: int) -> int:
    """Tilings of G(n, x); 1 for n < 0 (empty region)."""
    if n < 0:
        return 1
    value = Fraction(1, 2**n)
    for k in range(1, n + 1):
        value *= Fraction(
            pochhammer(2 * x + 2 * k, k) * pochhammer(Fraction(2 * x + 4 * k + 1, 2), k - 1),
            pochhammer(k, k) * pochhammer(Fraction(2 * x + 2 * k + 1, 2), k - 1),
        )
    return exact_int(value)


def f_ratio(n: int, x: int, i: int) -> Fraction:
    """M(F(n,x,i)) / M(F(n,x,1)), with the value 0 for i > n."""
    if i > n:
        return Fraction(0)
    num = pochhammer(x + 1, i - 1) * pochhammer(n - i + 1, i - 1) * pochhammer(2 * x + 2 * n + i, i - 2) * (2 * x + 2 * n)
    den = pochhammer(2 * n - i, i - 1) * pochhammer(n + x, i - 1) * factorial(i - 1)
    return Fraction(num) / den


@lru_cache(maxsize=4096)
def m_F(n: int, x: int, i: int) -> int:
    """Tilings of F(n, x, i).

    Indices past the last bump give 0: the region would then have one
    surplus up-cell and no tilings.
    """
    if i > n:
        return 0
    if n < 1 or i < 1:
        raise ValueError(f"F needs n >= 1 and 1 <= i <= n, got n={n}, i={i}")
    return exact_int(m_G(n - 2, x + 3) * f_ratio(n, x, i))


def m_E(n: int, x: int, i: int, j: int) -> int:
    """Tilings of E(n, x, i, j), from the F and G counts."""
    if n < 2 or not 1 <= i < j <= n:
        raise ValueError(f"E needs 1 <= i < j <= n, got n={n}, i={i}, j={j}")
    num = m_F(n - 1, x, i) * m_F(n, x, j) - m_F(n - 1, x, j) * m_F(n, x, i)
    q = Fraction(num, m_G(n - 1, x))
    if q.denominator != 1:
        raise InternalDisagreement(f"E({n},{x},{i},{j}) is not an integer: {q}")
    return q.numerator


def c_matrix(n: int, x: int):
    from .enumeration import ExactMatrix

    return ExactMatrix([[binomial(x + i + j, 2 * j - i) for j in range(n)] for i in range(n)])


def c_determinant(n: int, x: int) -> int:
    """det( C(x+i+j, 2j-i) ) over 0 <= i, j <= n-1."""
    return exact_int(c_matrix(n, x).det())


def c_product(n: int, x: int) -> int:
    """Product evaluation of :func:`c_determinant`."""
    value = Fraction(1, 2 ** (n - 1))
    for k in range(1, n):
        value *= Fraction(
            pochhammer(2 * x + 2 * k + 2, k) * pochhammer(Fraction(2 * x + 4 * k + 3, 2), k - 1),
            pochhammer(k, k) * pochhammer(Fraction(2 * x + 2 * k + 3, 2), k - 1),
        )
    return exact_int(value)


def _f_or_zero(n: int, x: int, i: int) -> int:
    # dent index out of range on the low side: the term is absent
    return 0 if i < 1 else m_F(n, x, i)


def kuo_terms_F(n: int, x: int, i: int) -> tuple[int, int]:
    lhs = m_F(n, x, i) * m_G(n - 3, x + 3)
    rhs = m_G(n - 2, x + 3) * m_F(n - 1, x, i) + m_G(n - 1, x) * _f_or_zero(n - 2, x + 3, i - 2)
    return lhs, rhs


def kuo_check_F(n: int, x: int, i: int) -> bool:
    """Condensation recurrence linking F(n), F(n-1) and F(n-2) with shifted x."""
    if n < 3 or not 1 <= i <= n:
        raise ValueError(f"need n >= 3 and 1 <= i <= n, got n={n}, i={i}")
    lhs, rhs = kuo_terms_F(n, x, i)
    return lhs == rhs


def kuo_check_E(n: int, x: int, i: int, j: int, source: str = "lgv") -> bool:
    """G(n-1) E(n; i, j) = F(n-1; i) F(n; j) - F(n-1; j) F(n; i).

    ``source`` picks how E is counted: ``"lgv"`` (path determinant),
    ``"oracle"`` (matching count of the built region) or ``"formula"``.
    """
    if n < 2 or not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got n={n}, i={i}, j={j}")
    if source == "lgv":
        from .enumeration import e_count_lgv

        e = e_count_lgv(n, x, i, j)
    elif source == "oracle":
        from .enumeration import count_matchings
        from .region import E, build

        e = count_matchings(build(E(n, x, i, j)))
    elif source == "formula":
        e = m_E(n, x, i, j)
    else:
        raise ValueError(f"unknown source {source!r}")
    lhs = m_G(n - 1, x) * e
    rhs = m_F(n - 1, x, i) * m_F(n, x, j) - m_F(n - 1, x, j) * m_F(n, x, i)
    return lhs == rhs


@dataclass(frozen=True)
class FormulaValue:
    value: Fraction
    family: str
    params: tuple[int, ...]


def evaluate(family: str, *params: int) -> FormulaValue:
    funcs = {"G": m_G, "F": m_F, "E": m_E, "C-det": c_determinant}
    try:
        fn = funcs[family]
    except KeyError:
        raise ValueError(f"no closed form for family {family!r}") from None
    return FormulaValue(Fraction(fn(*params)), family, tuple(params))
