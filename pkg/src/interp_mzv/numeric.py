"""Floating-point multiple zeta values by truncated nested sums.

Values are plain truncations ``n_r <= N`` of the defining series, evaluated
with a prefix-sum recursion in O(depth * N).  The attached error bound is a
heuristic tail estimate ``2 (ln N)^(r-1) / N^(k_r - 1)``; it sizes
tolerances and is not a rigorous enclosure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import RatPoly, Scalar, bernstein_basis, binom
from .indices import Index, InvalidIndex, admissible_indices, is_admissible
from .interp import CheckOutcome, IndexSum, G_poly, interpolate, ohno_rhs

TAIL_CONSTANT = 2.0
DEFAULT_TRUNC = 1_000_000
DEFAULT_TOL = 1e-2


@dataclass(frozen=True)
class NumericValue:
    value: float
    err_bound: float = 0.0

    def __add__(self, other: "NumericValue") -> "NumericValue":
        return NumericValue(self.value + other.value, self.err_bound + other.err_bound)

    def scale(self, c: float) -> "NumericValue":
        return NumericValue(c * self.value, abs(c) * self.err_bound)

    def close_to(self, other: "NumericValue", tol: float) -> bool:
        return abs(self.value - other.value) <= tol + self.err_bound + other.err_bound


def tail_bound(k: Index, N: int) -> float:
    r = len(k)
    return TAIL_CONSTANT * math.log(N) ** (r - 1) / float(N) ** (k[-1] - 1)


def _nested_sum(k: Index, N: int, star: bool, compensated: bool) -> float:
    dtype = np.longdouble if compensated else np.float64
    n = np.arange(1, N + 1, dtype=dtype)
    cum = None
    for a in k:
        term = n ** (-a)
        if cum is not None:
            if star:
                term = term * cum
            else:
                below = np.empty_like(cum)
                below[0] = 0
                below[1:] = cum[:-1]
                term = term * below
        cum = np.cumsum(term)
    return float(cum[-1])


@lru_cache(maxsize=4096)
def mzv_numeric(k: Index, N: int = DEFAULT_TRUNC, compensated: bool = False) -> NumericValue:
    """zeta(k) truncated at ``n_r <= N``."""
    k = tuple(k)
    if not k:
        return NumericValue(1.0)
    if not is_admissible(k):
        raise InvalidIndex(f"divergent: last entry must be >= 2, got {k}")
    if N < 10:
        raise ValueError("truncation N must be >= 10")
    return NumericValue(_nested_sum(k, N, False, compensated), tail_bound(k, N))


@lru_cache(maxsize=4096)
def mzsv_numeric(k: Index, N: int = DEFAULT_TRUNC) -> NumericValue:
    """Star value, ``n_1 <= ... <= n_r <= N``, summed directly."""
    k = tuple(k)
    if not k:
        return NumericValue(1.0)
    if not is_admissible(k):
        raise InvalidIndex(f"divergent: last entry must be >= 2, got {k}")
    # the truncated star sum is exactly the sum of the 2^(r-1) truncated merged
    # strict sums, each of depth <= r and last entry >= k_r
    bound = tail_bound(k, N) * 2 ** (len(k) - 1)
    return NumericValue(_nested_sum(k, N, True, False), bound)


def eval_indexsum_numeric(s: IndexSum, t_value: Scalar, N: int = DEFAULT_TRUNC) -> NumericValue:
    acc = NumericValue(0.0)
    for k, c in s:
        if not is_admissible(k):
            raise InvalidIndex(f"non-admissible index {k} in a numeric evaluation")
        coeff = float(c.eval(Fraction(t_value)))
        if coeff:
            acc = acc + mzv_numeric(k, N).scale(coeff)
    return acc


def check_ohno_numeric(k: Index, m: int, t_value: Scalar, N: int = DEFAULT_TRUNC,
                       tol: float = DEFAULT_TOL) -> CheckOutcome:
    """``zeta^t(g_m(k; t))`` against ``sum_e zeta^t((k^dagger + e)^dagger)`` at ``t = t_value``."""
    k = tuple(k)
    lhs = eval_indexsum_numeric(G_poly(m, k), t_value, N)
    rhs = eval_indexsum_numeric(ohno_rhs(k, m, True), t_value, N)
    return _numeric_outcome("numeric-ohno", lhs, rhs, tol)


def sum_formula_coefficient(k: int, r: int) -> RatPoly:
    acc = RatPoly()
    for j in range(r):
        acc = acc + bernstein_basis(j, r - 1) * binom(k - 1, j)
    return acc


def check_sum_formula_numeric(k: int, r: int, t_value: Scalar, N: int = DEFAULT_TRUNC,
                              tol: float = DEFAULT_TOL) -> CheckOutcome:
    if not k > r >= 1:
        raise ValueError(f"need k > r >= 1, got k={k}, r={r}")
    total = IndexSum((idx, 1) for idx in admissible_indices(k, r))
    lhs = eval_indexsum_numeric(interpolate(total), t_value, N)
    coeff = float(sum_formula_coefficient(k, r).eval(Fraction(t_value)))
    rhs = mzv_numeric((k,), N).scale(coeff)
    return _numeric_outcome("numeric-sum-formula", lhs, rhs, tol)


def _numeric_outcome(name: str, lhs: NumericValue, rhs: NumericValue, tol: float) -> CheckOutcome:
    diff = abs(lhs.value - rhs.value)
    return CheckOutcome(
        name,
        lhs.close_to(rhs, tol),
        lhs.value,
        rhs.value,
        {"diff": diff, "err_bound": lhs.err_bound + rhs.err_bound, "tol": tol},
    )
