"""Multiple harmonic sums mod p and the finite (mod p) Ohno-type checks.

Each prime is handled separately; a statement "holds in A" is checked as a
congruence for every prime in a finite range.  Polynomials in ``t`` stay
formal as :class:`ModPPoly`, so identities are decided exactly.
"""
from __future__ import annotations

from functools import lru_cache

from .arith import (
    ModPPoly,
    RatPoly,
    bernoulli,
    bernstein_basis,
    binom,
    inverse_table,
    reduce_mod_p,
    reduce_scalar,
)
from .indices import (
    Index,
    InvalidIndex,
    _compositions,
    admissible_indices,
    arrow_down,
    arrow_up,
    hoffman_dual,
    oplus,
)
from .interp import CheckOutcome, IndexSum, c2_coeff, g_poly, interpolate_index


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


@lru_cache(maxsize=None)
def _power_table(p: int, k: int) -> tuple[int, ...]:
    inv = inverse_table(p)
    return tuple(pow(inv[n], k, p) if n else 0 for n in range(p))


@lru_cache(maxsize=None)
def mhs_mod_p(k: Index, p: int, star: bool = False) -> int:
    """``sum 1/(n_1^k_1 ... n_r^k_r)`` over ``0 < n_1 < ... < n_r < p`` (or ``<=``) mod p."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"need an odd prime, got {p}")
    k = tuple(k)
    if not k:
        return 1
    # cum[n] = sum over chains ending at some n' <= n of the partial products
    cum = None
    for a in k:
        table = _power_table(p, a)
        nxt = [0] * p
        run = 0
        for n in range(1, p):
            if cum is None:
                below = 1
            else:
                below = cum[n] if star else cum[n - 1]
            run = (run + below * table[n]) % p
            nxt[n] = run
        cum = nxt
    return cum[p - 1]


@lru_cache(maxsize=None)
def zeta_A_t(k: Index, p: int) -> ModPPoly:
    """The p-component of the interpolated finite MZV, a polynomial in t mod p."""
    k = tuple(k)
    if not k:
        return ModPPoly.const(p, 1)
    coeffs = [0] * len(k)
    for j, c in interpolate_index(k).items():
        coeffs[c.degree] += c.coeffs[-1] * mhs_mod_p(j, p)
    return ModPPoly(p, coeffs)


def eval_indexsum_A(s: IndexSum, p: int) -> ModPPoly:
    acc = ModPPoly(p)
    for k, c in s.items():
        acc = acc + reduce_mod_p(c, p) * zeta_A_t(k, p)
    return acc


def frak_Z_A(k: int, p: int) -> int:
    """``B_(p-k) / k`` mod p."""
    if not 2 <= k <= p - 2:
        raise ValueError(f"B_{{p-k}} not p-integral for k={k}, p={p}")
    return reduce_scalar(bernoulli(p - k) / k, p)


def depth2_closed_form_check(a: int, b: int, p: int) -> bool:
    if a < 1 or b < 1 or not 2 <= a + b <= p - 2:
        raise ValueError(f"need 2 <= a+b <= p-2, got a={a}, b={b}, p={p}")
    want = (-1) ** b * binom(a + b, a) * frak_Z_A(a + b, p) % p
    return mhs_mod_p((a, b), p) == want


def _guard(k: Index, m: int, p: int) -> None:
    if not k:
        raise InvalidIndex("needs a non-empty index")
    if not is_prime(p) or p <= sum(k) + m + 2:
        raise ValueError(f"need a prime p > wt(k)+m+2, got p={p}")


def hoffman_ohno_sum(k: Index, m: int) -> list[Index]:
    """Indices ``(k^v + e)^v`` for ``wt(e) = m``, with multiplicity."""
    kv = hoffman_dual(k)
    return [hoffman_dual(oplus(kv, e)) for e in _compositions(m, len(kv))]


def check_finite_ohno(k: Index, m: int, p: int) -> CheckOutcome:
    k = tuple(k)
    _guard(k, m, p)
    lhs = sum(mhs_mod_p(oplus(k, e), p) for e in _compositions(m, len(k))) % p
    rhs = sum(mhs_mod_p(j, p) for j in hoffman_ohno_sum(k, m)) % p
    return CheckOutcome("finite-ohno", lhs == rhs, lhs, rhs)


def check_star_c2(k: Index, m: int, p: int) -> CheckOutcome:
    """c2-weighted star sums against the Hoffman-dual star sums, computed directly."""
    k = tuple(k)
    _guard(k, m, p)
    lhs = sum(c2_coeff(k, e) * mhs_mod_p(oplus(k, e), p, True) for e in _compositions(m, len(k))) % p
    rhs = sum(mhs_mod_p(j, p, True) for j in hoffman_ohno_sum(k, m)) % p
    return CheckOutcome("finite-star-ohno", lhs == rhs, lhs, rhs)


def interp_F_sides(k: Index, m: int, p: int) -> tuple[ModPPoly, ModPPoly]:
    k = tuple(k)
    g = g_poly(m, arrow_up(k))
    # support of g_m(k_up) is admissible, so arrow_down is defined on it
    lhs = eval_indexsum_A(g.map_indices(arrow_down), p)
    rhs = ModPPoly(p)
    for j in hoffman_ohno_sum(k, m):
        rhs = rhs + zeta_A_t(j, p)
    return lhs, rhs


def check_interp_F_ohno(k: Index, m: int, p: int) -> CheckOutcome:
    """Full polynomial identity in t mod p, plus its t=0 and t=1 specialisations."""
    k = tuple(k)
    _guard(k, m, p)
    lhs, rhs = interp_F_sides(k, m, p)
    plain = check_finite_ohno(k, m, p)
    star = check_star_c2(k, m, p)
    extra = {
        "t0_matches_plain": lhs.eval(0) == plain.lhs and rhs.eval(0) == plain.rhs and bool(plain),
        "t1_matches_star": lhs.eval(1) == star.lhs and rhs.eval(1) == star.rhs and bool(star),
    }
    ok = lhs == rhs and all(extra.values())
    return CheckOutcome("interp-finite-ohno", ok, lhs.to_json(), rhs.to_json(), extra)


def finite_sum_coefficient(k: int, r: int) -> RatPoly:
    acc = RatPoly()
    for j in range(r):
        c = binom(k - 1, j) + (-1) ** r * binom(k - 1, r - 1 - j)
        acc = acc + bernstein_basis(j, r - 1) * c
    return acc


def check_sum_formula_F(k: int, r: int, p: int) -> CheckOutcome:
    if not k > r >= 1:
        raise ValueError(f"need k > r >= 1, got k={k}, r={r}")
    if not is_prime(p) or p <= k + 2:
        raise ValueError(f"need a prime p > k+2, got p={p}")
    lhs = ModPPoly(p)
    for idx in admissible_indices(k, r):
        lhs = lhs + zeta_A_t(idx, p)
    rhs = reduce_mod_p(finite_sum_coefficient(k, r), p) * frak_Z_A(k, p)
    return CheckOutcome("finite-sum-formula", lhs == rhs, lhs.to_json(), rhs.to_json())


def binomial_identity_lhs(k: int, r: int) -> RatPoly:
    acc = RatPoly()
    for e in range(r - 1):
        inner = RatPoly()
        for j in range(e + 1):
            inner = inner + bernstein_basis(j, e) * binom(k - r + e, j)
        acc = acc + inner * ((-1) ** (r - e) * binom(k, r - e - 1))
    return acc


def binomial_identity_check(k: int, r: int) -> bool:
    """Binomial identity in Q[t] behind the finite sum formula."""
    if not k > r >= 2:
        raise ValueError(f"need k > r >= 2, got k={k}, r={r}")
    return binomial_identity_lhs(k, r) == finite_sum_coefficient(k, r)
