from fractions import Fraction

import pytest

from cornergap.correlation.finite import e_ratio_finite, e_ratio_limit, finite_n_correlation
from cornergap.correlation.omega import omega_exact
from cornergap.enumeration import count_matchings
from cornergap.formulas import m_E
from cornergap.region import DGap, DZero, build, gap_fits


def test_limit_values():
    assert e_ratio_limit(1, 3) == 1
    assert e_ratio_limit(1, 2) == 0
    assert e_ratio_limit(2, 5) == 30
    with pytest.raises(ValueError):
        e_ratio_limit(3, 3)


def test_finite_ratio_is_exact_count_ratio():
    for n in range(3, 13):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                assert e_ratio_finite(n, i, j) == Fraction(m_E(n, 1, i, j), m_E(n, 1, 1, 3))


def test_finite_ratio_trivial_cases():
    for n in (5, 50, 500):
        assert e_ratio_finite(n, 1, 3) == 1
        assert e_ratio_finite(n, 1, 2) == 0


def test_finite_correlation_equals_count_ratio():
    for n in range(3, 7):
        ref = count_matchings(build(DZero(n, 1)))
        for R in range(1, 2 * n):
            for v in range(1, n + 1):
                if gap_fits(n, 1, R, v):
                    got = finite_n_correlation(n, R, v)
                    assert got == Fraction(count_matchings(build(DGap(n, 1, R, v))), ref)


def test_barely_fitting_gap_positive():
    # smallest n with the (2, 3) gap inside
    n = next(n for n in range(3, 20) if gap_fits(n, 1, 2, 3))
    value = finite_n_correlation(n, 2, 3)
    assert value > 0 and isinstance(value, Fraction)


def test_convergence_trend():
    target = omega_exact(2, 3)
    errs = [abs(finite_n_correlation(n, 2, 3) - target) for n in (10, 50, 200, 1000)]
    assert all(a > b for a, b in zip(errs, errs[1:]))


def test_zero_correlation_stays_zero():
    for n in (10, 50, 200):
        assert finite_n_correlation(n, 1, 1) == 0


def test_domain():
    with pytest.raises(ValueError):
        finite_n_correlation(4, 9, 1)
    with pytest.raises(ValueError):
        e_ratio_finite(5, 2, 6)
