from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cornergap.exactmath import (
    InternalDisagreement,
    binomial,
    exact_int,
    factorial,
    falling_factorial,
    parse_exact,
    pochhammer,
    set_factorial_cache_cap,
    to_exact_str,
    trig_at,
)

small = st.integers(min_value=-20, max_value=20)
nonneg = st.integers(min_value=0, max_value=15)


def test_pochhammer_examples():
    assert pochhammer(7, 0) == 1
    assert pochhammer(Fraction(3, 2), 0) == 1
    assert pochhammer(2, 3) == 24
    assert pochhammer(5, -2) == Fraction(1, 12)
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)


def test_pochhammer_negative_index_zero_factor():
    with pytest.raises(ZeroDivisionError):
        pochhammer(2, -3)


def test_pochhammer_large_uses_factorials():
    assert pochhammer(10, 100) == factorial(109) // factorial(9)


@given(small, nonneg, nonneg)
def test_pochhammer_splits(a, k, m):
    assert pochhammer(a, k) * pochhammer(a + k, m) == pochhammer(a, k + m)


@given(st.integers(min_value=1, max_value=40), st.integers(min_value=1, max_value=10))
def test_pochhammer_negative_inverse(a, k):
    if any(a - t == 0 for t in range(1, k + 1)):
        return
    assert pochhammer(a, -k) * pochhammer(a - k, k) == 1


def test_binomial_conventions():
    assert binomial(5, -1) == 0
    assert binomial(4, 2) == 6
    assert binomial(0, 0) == 1
    assert binomial(2, 5) == 0
    assert binomial(-1, 3) == -1
    assert binomial(-3, 2) == 6
    assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)


@given(st.integers(min_value=-10, max_value=30), st.integers(min_value=0, max_value=12))
def test_binomial_pascal(n, k):
    assert binomial(n, k) + binomial(n, k + 1) == binomial(n + 1, k + 1)


def test_trig_table():
    t0, t1, t3 = trig_at(0), trig_at(1), trig_at(3)
    assert (t0.cos_val, t0.sin_over_sqrt3) == (1, 0)
    assert (t1.cos_val, t1.sin_over_sqrt3) == (Fraction(1, 2), Fraction(1, 2))
    assert (t3.cos_val, t3.sin_over_sqrt3) == (-1, 0)


@given(st.integers(min_value=0, max_value=10**6))
def test_trig_periodic(R):
    assert trig_at(R) == trig_at(R + 6)
    t = trig_at(R)
    # cos^2 + 3 (sin/sqrt3)^2 = 1
    assert t.cos_val**2 + 3 * t.sin_over_sqrt3**2 == 1


def test_trig_matches_floats():
    import math

    for R in range(12):
        t = trig_at(R)
        assert math.isclose(float(t.cos_val), math.cos(R * math.pi / 3), abs_tol=1e-12)
        assert math.isclose(float(t.sin_over_sqrt3) * math.sqrt(3), math.sin(R * math.pi / 3), abs_tol=1e-12)


fractions = st.fractions(max_denominator=10**6)


@given(fractions, fractions, fractions)
def test_rational_field_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert Fraction(x) == x


def test_serialization_roundtrip_huge():
    big = factorial(3000)
    assert len(str(big)) > 4300
    assert parse_exact(to_exact_str(big)) == big
    q = Fraction(big, factorial(2999) * 7 + 1)
    assert parse_exact(to_exact_str(q)) == q
    assert to_exact_str(Fraction(-3, 6)) == "-1/2"
    assert isinstance(parse_exact("10/5"), int)


def test_exact_int_rejects_fractions():
    assert exact_int(Fraction(6, 3)) == 2
    with pytest.raises(InternalDisagreement):
        exact_int(Fraction(1, 3))


def test_factorial_cache_cap():
    set_factorial_cache_cap(10)
    try:
        assert factorial(20) == 2432902008176640000
    finally:
        set_factorial_cache_cap(50_000)
    with pytest.raises(ValueError):
        factorial(-1)


def test_falling_factorial():
    assert [falling_factorial(5, k) for k in range(7)] == [1, 5, 20, 60, 120, 120, 0]
