from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from interp_mzv.arith import (
    ModPPoly,
    ONE,
    ONE_MINUS_T,
    RatPoly,
    T,
    ZERO,
    bernoulli,
    binom,
    parse_rational,
    rational_to_str,
    reduce_mod_p,
    reduce_scalar,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, max_size=5).map(RatPoly)
small_primes = st.sampled_from([5, 7, 11, 13, 47])


def test_ratpoly_examples():
    assert ONE_MINUS_T + T * 2 == RatPoly((1, 1))
    assert ONE_MINUS_T * (ONE + T) == RatPoly((1, 0, -1))
    assert RatPoly((3, 4)) * 0 == ZERO
    assert (ONE + T).eval(0) == 1
    assert (ONE + T).eval(1) == 2
    assert RatPoly((1, 0, -1)).eval(Fraction(1, 2)) == Fraction(3, 4)


def test_ratpoly_json_round_trip():
    p = RatPoly((1, Fraction(-2, 3), 0, 5))
    assert (ONE + T).to_json() == {"coeffs": ["1/1", "1/1"]}
    assert RatPoly.from_json(p.to_json()) == p
    assert ZERO.to_json() == {"coeffs": []}


def test_int_and_fraction_coefficients_compare_alike():
    a = RatPoly((Fraction(2, 1), Fraction(1, 2)))
    b = RatPoly((2, Fraction(1, 2)))
    assert a == b and hash(a) == hash(b)


def test_rational_strings():
    assert rational_to_str(3) == "3/1"
    assert rational_to_str(Fraction(-1, 2)) == "-1/2"
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-3") == -3
    with pytest.raises(ValueError):
        parse_rational("one half")


@pytest.mark.parametrize(
    "a,b,want",
    [(5, 2, 10), (4, 0, 1), (3, 5, 0), (2, -1, 0), (-1, 0, 1), (-1, 1, -1), (-1, 2, 1), (-3, 2, 6)],
)
def test_binom_convention(a, b, want):
    assert binom(a, b) == want


@pytest.mark.parametrize("n", range(0, 6))
def test_binom_n_minus_one_choose_n_is_delta(n):
    assert binom(n - 1, n) == (1 if n == 0 else 0)


@given(st.integers(0, 30), st.integers(-3, 30))
def test_binom_matches_math_comb(a, b):
    assert binom(a, b) == (math.comb(a, b) if b >= 0 else 0)


@given(polys, polys, polys)
@settings(max_examples=150)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == ZERO and a * ONE == a


@given(polys, polys, fractions)
def test_eval_is_a_homomorphism(a, b, v):
    assert (a * b).eval(v) == a.eval(v) * b.eval(v)
    assert (a + b).eval(v) == a.eval(v) + b.eval(v)


def _p_integral(p):
    dens = st.integers(1, 30).filter(lambda d: d % p)
    return st.builds(Fraction, st.integers(-40, 40), dens)


@given(small_primes.flatmap(lambda p: st.tuples(
    st.just(p),
    st.lists(_p_integral(p), max_size=4),
    st.lists(_p_integral(p), max_size=4),
)))
@settings(max_examples=150)
def test_reduce_mod_p_is_a_ring_homomorphism(args):
    p, ca, cb = args
    a, b = RatPoly(ca), RatPoly(cb)
    assert reduce_mod_p(a + b, p) == reduce_mod_p(a, p) + reduce_mod_p(b, p)
    assert reduce_mod_p(a * b, p) == reduce_mod_p(a, p) * reduce_mod_p(b, p)


def test_reduce_mod_p_examples():
    assert reduce_scalar(Fraction(1, 6), 7) == 6
    assert reduce_mod_p(T - 1, 5) == ModPPoly(5, [4, 1])
    with pytest.raises(ValueError, match="non-p-integral"):
        reduce_mod_p(Fraction(1, 5), 5)


def test_modp_poly_arithmetic():
    a = ModPPoly(7, [3, 5])
    assert a + ModPPoly(7, [4, 2]) == ModPPoly(7, [])
    assert (a * a).eval(1) == (8 * 8) % 7
    assert a.to_json() == {"p": 7, "coeffs": [3, 5]}


def test_bernoulli_known_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


@pytest.mark.parametrize("n", range(3, 50, 2))
def test_odd_bernoulli_vanish(n):
    assert bernoulli(n) == 0


def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1))


@pytest.mark.parametrize("n", range(2, 51, 2))
def test_von_staudt_clausen(n):
    # the denominator of B_n is the product of the primes p with (p-1) | n
    want = math.prod(p for p in range(2, n + 2) if _is_prime(p) and n % (p - 1) == 0)
    den = bernoulli(n).denominator
    assert den == want
    assert all(den % (q * q) for q in range(2, n + 2) if _is_prime(q))


@given(st.integers(0, 40))
def test_bernoulli_defining_recurrence(n):
    if n == 0:
        return
    assert sum(binom(n + 1, j) * bernoulli(j) for j in range(n + 1)) == 0
