"""Q[t]-linear combinations of indices and the interpolation kernels on them.

:class:`IndexSum` is a canonical ``Index -> RatPoly`` map, so every identity
between kernels below is checked with a literal ``==``.  The kernels ``g``
and ``h`` are computed straight from their defining sums; the recurrences
they satisfy are only used as cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping

from .arith import ONE_MINUS_T, T, ZERO, RatPoly, Scalar, bernstein_basis, binom
from .indices import (
    ExpVector,
    Index,
    InvalidIndex,
    arrow_right,
    arrow_up,
    _compositions,
    compositions,
    dual,
    is_admissible,
    oplus,
    splittings,
)


class IndexSum:
    """Finite formal sum of indices with polynomial coefficients in ``t``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Index, RatPoly | Scalar] | Iterable = ()):
        # accumulate raw coefficient rows; RatPoly objects are built once at the end
        # terms seen once keep their RatPoly; repeated ones are summed as raw rows
        single: dict[Index, RatPoly] = {}
        rows: dict[Index, list] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            if not isinstance(c, RatPoly):
                c = RatPoly.const(c)
            k = tuple(k)
            row = rows.get(k)
            if row is None:
                first = single.pop(k, None)
                if first is None:
                    single[k] = c
                    continue
                row = rows[k] = list(first.coeffs)
            cs = c.coeffs
            if len(row) < len(cs):
                row.extend([0] * (len(cs) - len(row)))
            for i, x in enumerate(cs):
                row[i] += x
        for k, row in rows.items():
            single[k] = RatPoly(row)
        self._terms = {k: c for k, c in single.items() if c}

    @classmethod
    def single(cls, k: Index, coeff: RatPoly | Scalar = 1) -> "IndexSum":
        return cls({tuple(k): coeff})

    def __iter__(self) -> Iterator[tuple[Index, RatPoly]]:
        return iter(sorted(self._terms.items()))

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, k: Index) -> RatPoly:
        return self._terms.get(tuple(k), ZERO)

    def support(self) -> list[Index]:
        return sorted(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndexSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "IndexSum(0)"
        body = " + ".join(f"({c})*{k}" for k, c in self)
        return f"IndexSum({body})"

    def __add__(self, other: "IndexSum") -> "IndexSum":
        return IndexSum(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "IndexSum":
        return IndexSum({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "IndexSum") -> "IndexSum":
        return self + (-other)

    def __mul__(self, c: RatPoly | Scalar) -> "IndexSum":
        return IndexSum({k: v * c for k, v in self._terms.items()})

    __rmul__ = __mul__

    def map_indices(self, fn: Callable[[Index], Index]) -> "IndexSum":
        """Extend an index map linearly."""
        return IndexSum((fn(k), c) for k, c in self._terms.items())

    def up(self) -> "IndexSum":
        return self.map_indices(arrow_up)

    def right(self) -> "IndexSum":
        return self.map_indices(arrow_right)

    def to_json(self) -> list[dict]:
        return [{"index": list(k), "coeff": c.to_json()} for k, c in self]

    @classmethod
    def from_json(cls, obj: list[dict]) -> "IndexSum":
        return cls((tuple(d["index"]), RatPoly.from_json(d["coeff"])) for d in obj)


def linear_sum(terms: Iterable[IndexSum]) -> IndexSum:
    pairs = []
    for s in terms:
        pairs.extend(s.items())
    return IndexSum(pairs)


def interpolate_index(k: Index) -> IndexSum:
    """Sum over comma/plus patterns of ``k`` weighted by ``t**(#plus)``."""
    if not k:
        return IndexSum.single(())
    r = len(k)
    return IndexSum(
        (tuple(sum(b) for b in blocks), RatPoly.t_power(r - len(blocks)))
        for blocks in splittings(k)
    )


_interp_cache: dict[Index, list[tuple[Index, int]]] = {}


def interpolate(s: IndexSum | Index) -> IndexSum:
    if not isinstance(s, IndexSum):
        s = IndexSum.single(s)
    pairs = []
    for k, c in s.items():
        img = _interp_cache.get(k)
        if img is None:
            # every coefficient of I^t(k) is a bare power of t: store (index, power)
            img = _interp_cache.setdefault(k, [(j, d.degree) for j, d in interpolate_index(k).items()])
        for j, n in img:
            pairs.append((j, RatPoly._raw([0] * n + list(c.coeffs))))
    return IndexSum(pairs)


@lru_cache(maxsize=None)
def f_coeff(i: int, k: int, e: int) -> RatPoly:
    """``sum_j C(e-j, i) C(k+e-i-2, j) t^j (1-t)^(e-i-j)``; zero for ``e = -1``."""
    if e < 0:
        return ZERO
    acc = ZERO
    for j in range(e + 1):
        c = binom(e - j, i) * binom(k + e - i - 2, j)
        if c:
            # c != 0 forces e - j >= i, so the (1-t) power is non-negative
            acc = acc + bernstein_basis(j, e - i) * c
    return acc


@lru_cache(maxsize=None)
def g_poly(m: int, k: Index) -> IndexSum:
    """The kernel ``g_m(k; t)`` from its triple-sum definition."""
    k = tuple(k)
    if m < 0:
        return IndexSum()
    if not k:
        return IndexSum.single(()) if m == 0 else IndexSum()
    r = len(k)
    cross = -(T * ONE_MINUS_T)
    pairs = []
    for blocks in splittings(k):
        l = len(blocks)
        weights = [sum(b) for b in blocks]
        sign = cross ** (r - l)
        for e in compositions(m, l):
            coeff = sign
            for pos, (b, w, ei) in enumerate(zip(blocks, weights, e)):
                coeff = coeff * f_coeff(len(b) - 1, w + (pos == 0), ei)
                if not coeff:
                    break
            if coeff:
                pairs.append((oplus(tuple(weights), e), coeff))
    return IndexSum(pairs)


@lru_cache(maxsize=None)
def h_poly(m: int, k: Index) -> IndexSum:
    """The kernel ``h_m(k; t)`` from its definition (double exponent vectors)."""
    k = tuple(k)
    if not k:
        raise InvalidIndex("h_m needs a non-empty index")
    if m < 0:
        return IndexSum()
    r = len(k)
    acc: dict[Index, list[int]] = {}
    for blocks in splittings(k):
        l = len(blocks)
        weights = [sum(b) for b in blocks]
        shifts = [w - len(b) - 2 + (pos == 0) for pos, (b, w) in enumerate(zip(blocks, weights))]
        for ee in _compositions(m, 2 * l):
            e = ee[:l]
            c = 1
            for s, ei in zip(shifts, e):
                c *= binom(s + ei, ei)
                if not c:
                    break
            if c:
                idx = tuple(w + a + b for w, a, b in zip(weights, e, ee[l:]))
                power = r - l + sum(e)
                row = acc.setdefault(idx, [0] * (r + m))
                row[power] += c
    return IndexSum((idx, RatPoly(row)) for idx, row in acc.items())


@lru_cache(maxsize=None)
def G_poly(m: int, k: Index) -> IndexSum:
    return interpolate(g_poly(m, tuple(k)))


def c1_coeff(k: Index, e: ExpVector) -> int:
    if not k:
        return 1
    if len(k) != len(e):
        raise InvalidIndex(f"depth mismatch: {k} vs {e}")
    out = 1
    for i, (ki, ei) in enumerate(zip(k, e)):
        out *= binom(ki + ei + (i == 0) - 2, ei)
    return out


def c2_coeff(k: Index, e: ExpVector) -> int:
    if len(k) != len(e) or not k:
        raise InvalidIndex(f"depth mismatch: {k} vs {e}")
    r = len(k)
    out = 1
    for i, (ki, ei) in enumerate(zip(k, e)):
        out *= binom(ki + ei + (i == 0) + (i == r - 1) - 2, ei)
    return out


def composition_sum(k: Index, m: int, weight_fn: Callable[[Index, ExpVector], Scalar] | None = None) -> IndexSum:
    """``sum_{wt(e)=m} w(k, e) (k + e)``; ``w`` defaults to 1."""
    pairs = []
    for e in compositions(m, len(k)):
        c = 1 if weight_fn is None else weight_fn(k, e)
        pairs.append((oplus(k, e), c))
    return IndexSum(pairs)


@lru_cache(maxsize=None)
def ohno_rhs(k: Index, m: int, interpolated: bool = False) -> IndexSum:
    """``sum_{wt(e)=m} (k^dagger + e)^dagger``, optionally pushed through I^t."""
    k = tuple(k)
    if not k or not is_admissible(k):
        raise InvalidIndex(f"ohno_rhs needs a non-empty admissible index, got {k}")
    kd = dual(k)
    s = IndexSum((dual(oplus(kd, e)), 1) for e in compositions(m, len(kd)))
    return interpolate(s) if interpolated else s


def specialize_indexsum(s: IndexSum, v: Scalar) -> dict[Index, Fraction]:
    out = {}
    for k, c in s:
        val = c.eval(v)
        if val:
            out[k] = val
    return out


@dataclass
class CheckOutcome:
    """Result of comparing two sides of an identity."""

    name: str
    passed: bool
    lhs: object = None
    rhs: object = None
    extra: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


def _compare(name: str, lhs, rhs) -> CheckOutcome:
    ok = lhs == rhs
    return CheckOutcome(name, ok, None if ok else lhs, None if ok else rhs)


def g_specialize_checks(m: int, k: Index) -> list[CheckOutcome]:
    """``g_m(k; 0)`` is the plain sum over ``k + e``; ``g_m(k; 1)`` the c1-weighted one."""
    g = g_poly(m, k)
    at0 = specialize_indexsum(g, 0)
    at1 = specialize_indexsum(g, 1)
    want0 = specialize_indexsum(composition_sum(k, m), 0)
    want1 = specialize_indexsum(composition_sum(k, m, c1_coeff), 0)
    return [_compare("g-at-t0", at0, want0), _compare("g-at-t1", at1, want1)]


def dep1_closed_form(k: int, m: int) -> IndexSum:
    return IndexSum.single((k + m,), f_coeff(0, k + 1, m))


def dep2_closed_form(k1: int, k2: int, m: int) -> IndexSum:
    merged = (k1 + k2 + m,)
    pairs = [(merged, -(T * ONE_MINUS_T) * f_coeff(1, k1 + k2 + 1, m))]
    for e1, e2 in compositions(m, 2):
        c = f_coeff(0, k1 + 1, e1) * f_coeff(0, k2, e2)
        pairs.append(((k1 + e1, k2 + e2), c))
        pairs.append((merged, c * T))
    return IndexSum(pairs)


def dep_closed_form_check(k: Index, m: int) -> CheckOutcome:
    """Compare ``I^t(g_m(k))`` with the depth-1/depth-2 closed forms."""
    if len(k) == 1:
        want = dep1_closed_form(k[0], m)
    elif len(k) == 2:
        want = dep2_closed_form(k[0], k[1], m)
    else:
        raise InvalidIndex("closed forms exist only for depth 1 and 2")
    return _compare(f"depth{len(k)}-closed-form", G_poly(m, k), want)


def recurrence_checks(k: Index, m: int) -> list[CheckOutcome]:
    """Evaluate both sides of every recurrence for g, G and h at ``(k, m)``."""
    k = tuple(k)
    ku, kr = arrow_up(k), arrow_right(k)
    kru = arrow_up(kr)
    omt = ONE_MINUS_T
    out = [
        _compare("g-base", g_poly(m, (1,)), IndexSum.single((1 + m,))),
        _compare("G-base", G_poly(m, (1,)), IndexSum.single((1 + m,))),
        _compare("h-base", h_poly(m, (1,)), IndexSum.single((1 + m,))),
    ]
    if m >= 1:
        out.append(_compare(
            "g-up",
            g_poly(m, ku),
            g_poly(m, k).up() + g_poly(m - 1, ku).up() * T,
        ))
    out.append(_compare(
        "g-right",
        g_poly(m, kr),
        g_poly(m, k).up() * omt + g_poly(m, k).right()
        - g_poly(m, ku) * omt + g_poly(m - 1, kru) * omt,
    ))
    for name, fn in (("G", G_poly), ("h", h_poly)):
        out.append(_compare(
            f"{name}-up",
            fn(m, ku),
            fn(m, k).up() + fn(m - 1, ku).up() * T,
        ))
        out.append(_compare(
            f"{name}-right",
            fn(m, kr),
            fn(m, k).up() + fn(m, k).right()
            - fn(m, ku) * omt + fn(m - 1, kru) * omt,
        ))
    return out


def f_four_term_check(k: int, e: int, i: int) -> bool:
    """Four-term identity among the ``f`` polynomials vanishes identically."""
    expr = (
        f_coeff(i + 1, k + 1, e)
        - ONE_MINUS_T * f_coeff(i + 1, k + 2, e)
        + f_coeff(i, k, e)
        - f_coeff(i, k + 1, e)
    )
    return expr.is_zero()
