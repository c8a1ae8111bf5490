from __future__ import annotations

import math
from fractions import Fraction

import pytest

from interp_mzv.arith import RatPoly, T
from interp_mzv.indices import InvalidIndex, admissible_indices_upto, dual
from interp_mzv.interp import IndexSum, interpolate
from interp_mzv.numeric import (
    NumericValue,
    check_ohno_numeric,
    check_sum_formula_numeric,
    eval_indexsum_numeric,
    mzsv_numeric,
    mzv_numeric,
    tail_bound,
)

N = 1_000_000
ZETA3 = 1.2020569031595942
# err_bound covers truncation only; float rounding over 10^6 summands is ~1e-11
ROUND = 1e-9


def test_single_values():
    z2 = mzv_numeric((2,), N)
    assert abs(z2.value - math.pi ** 2 / 6) <= z2.err_bound + ROUND
    z3 = mzv_numeric((3,), N)
    assert abs(z3.value - ZETA3) <= z3.err_bound + ROUND
    assert mzv_numeric((1, 2), N).close_to(z3, ROUND)


def test_compensated_agrees():
    a = mzv_numeric((1, 1, 2), 10_000)
    b = mzv_numeric((1, 1, 2), 10_000, compensated=True)
    assert abs(a.value - b.value) < 1e-10


def test_rejects_bad_input():
    with pytest.raises(InvalidIndex):
        mzv_numeric((2, 1), N)
    with pytest.raises(ValueError):
        mzv_numeric((2,), 5)


def test_eval_indexsum_examples():
    s = IndexSum([((1, 2), 1), ((3,), T)])
    v = eval_indexsum_numeric(s, 1, N)
    assert abs(v.value - 2 * ZETA3) <= v.err_bound + ROUND
    assert eval_indexsum_numeric(IndexSum(), 1, N) == NumericValue(0.0, 0.0)
    one_plus_t = IndexSum.single((3,), RatPoly((1, 1)))
    assert eval_indexsum_numeric(one_plus_t, 0, N) == mzv_numeric((3,), N)


@pytest.mark.parametrize("k", admissible_indices_upto(7))
def test_monotone_refinement(k):
    n = 2000
    diff = abs(mzv_numeric(k, 2 * n).value - mzv_numeric(k, n).value)
    assert diff <= tail_bound(k, n)


@pytest.mark.parametrize("k", admissible_indices_upto(7))
def test_duality(k):
    a, b = mzv_numeric(k, N), mzv_numeric(dual(k), N)
    assert a.close_to(b, ROUND)


@pytest.mark.parametrize("k", admissible_indices_upto(6))
def test_interpolation_at_one_is_the_star_sum(k):
    a = eval_indexsum_numeric(interpolate(k), 1, N)
    b = mzsv_numeric(k, N)
    assert a.close_to(b, ROUND)


def test_ohno_examples():
    assert check_ohno_numeric((2,), 1, 0, N)
    assert check_ohno_numeric((2,), 0, Fraction(1, 3), N, tol=ROUND)
    assert check_ohno_numeric((3,), 1, Fraction(1, 2), N, tol=1e-3)


def test_sum_formula_examples():
    for t in (0, Fraction(1, 2), 1):
        assert check_sum_formula_numeric(3, 2, t, N)
    assert check_sum_formula_numeric(2, 1, Fraction(1, 2), N, tol=ROUND)
    assert check_sum_formula_numeric(5, 2, 1, N, tol=1e-3)
    with pytest.raises(ValueError):
        check_sum_formula_numeric(3, 3, 0, N)
