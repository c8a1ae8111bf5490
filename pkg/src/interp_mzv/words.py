"""Noncommutative words in x, y with coefficients in Q[t], truncated in u.

A word is a plain ``str`` over ``"xy"``; index ``(k_1, ..., k_r)`` corresponds
to ``y x^(k_1-1) ... y x^(k_r-1)``.  An :class:`NCSeries` holds one
``word -> RatPoly`` dict per power of ``u`` up to a fixed truncation order.
The variable ``u`` is only ever an array position, never a polynomial variable.
"""
from __future__ import annotations

from typing import Iterable, Mapping

from .arith import ONE, T, ZERO, RatPoly, Scalar, binom
from .indices import Index, InvalidIndex, _compositions, is_admissible, splittings
from .interp import IndexSum

NCPoly = dict  # word -> RatPoly, zero coefficients never stored


def word_of_index(k: Index) -> str:
    return "".join("y" + "x" * (a - 1) for a in k)


def index_of_word(w: str) -> Index:
    if not w:
        return ()
    if w[0] != "y" or set(w) - {"x", "y"}:
        raise InvalidIndex(f"not an index word: {w!r}")
    return tuple(len(part) + 1 for part in w.split("y")[1:])


def _add_into(acc: dict, word: str, c: RatPoly) -> None:
    new = acc.get(word, ZERO) + c
    if new:
        acc[word] = new
    else:
        acc.pop(word, None)


def ncpoly_of_indexsum(s: IndexSum) -> NCPoly:
    return {word_of_index(k): c for k, c in s.items()}


def indexsum_of_ncpoly(p: Mapping[str, RatPoly]) -> IndexSum:
    return IndexSum((index_of_word(w), c) for w, c in p.items())


class NCSeries:
    """Element of Q<x,y>[t][[u]] truncated after ``u**order``."""

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: Iterable[Mapping[str, RatPoly | Scalar]] = ()):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        self.order = order
        layers: list[dict] = [dict() for _ in range(order + 1)]
        for n, layer in enumerate(terms):
            if n > order:
                break
            for w, c in layer.items():
                if not isinstance(c, RatPoly):
                    c = RatPoly.const(c)
                _add_into(layers[n], w, c)
        self.terms = layers

    @classmethod
    def monomial(cls, order: int, word: str, coeff: RatPoly | Scalar = 1, u_power: int = 0) -> "NCSeries":
        layers = [dict() for _ in range(u_power + 1)]
        layers[u_power] = {word: coeff}
        return cls(order, layers)

    @classmethod
    def one(cls, order: int) -> "NCSeries":
        return cls.monomial(order, "")

    @classmethod
    def from_layers(cls, order: int, layers: Iterable[IndexSum]) -> "NCSeries":
        """Series whose ``u**m`` coefficient is the word image of ``layers[m]``."""
        return cls(order, [ncpoly_of_indexsum(s) for s in layers])

    def coefficient(self, n: int) -> NCPoly:
        return dict(self.terms[n])

    def _check(self, other: "NCSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"truncation order mismatch: {self.order} vs {other.order}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __repr__(self) -> str:
        parts = []
        for n, layer in enumerate(self.terms):
            for w, c in sorted(layer.items()):
                parts.append(f"({c})*{w or '1'}*u^{n}")
        return f"NCSeries[U={self.order}](" + (" + ".join(parts) or "0") + ")"

    def __add__(self, other: "NCSeries") -> "NCSeries":
        self._check(other)
        out = NCSeries(self.order, self.terms)
        for n, layer in enumerate(other.terms):
            for w, c in layer.items():
                _add_into(out.terms[n], w, c)
        return out

    def __neg__(self) -> "NCSeries":
        return self.scale(-1)

    def __sub__(self, other: "NCSeries") -> "NCSeries":
        return self + (-other)

    def scale(self, c: RatPoly | Scalar) -> "NCSeries":
        return NCSeries(self.order, [{w: v * c for w, v in layer.items()} for layer in self.terms])

    def __mul__(self, other) -> "NCSeries":
        if not isinstance(other, NCSeries):
            return self.scale(other)
        return nc_mul(self, other)

    def map_words(self, fn) -> "NCSeries":
        result = NCSeries(self.order)
        result.terms = [_collect((fn(w), c) for w, c in layer.items()) for layer in self.terms]
        return result

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "terms": [
                [{"word": w, "coeff": c.to_json()} for w, c in sorted(layer.items())]
                for layer in self.terms
            ],
        }


def _collect(pairs) -> dict:
    acc: dict = {}
    for w, c in pairs:
        _add_into(acc, w, c)
    return acc


def nc_mul(a: NCSeries, b: NCSeries) -> NCSeries:
    """Concatenation product; u-degrees add and orders above the truncation drop."""
    a._check(b)
    U = a.order
    out = [dict() for _ in range(U + 1)]
    for i, la in enumerate(a.terms):
        if not la:
            continue
        for j in range(U - i + 1):
            lb = b.terms[j]
            target = out[i + j]
            for wa, ca in la.items():
                for wb, cb in lb.items():
                    _add_into(target, wa + wb, ca * cb)
    result = NCSeries(U)
    result.terms = out
    return result


def nc_geom_inverse(s: NCSeries) -> NCSeries:
    """Inverse of ``1 - n`` with ``n`` divisible by u, as ``sum_j n**j``."""
    if s.terms[0] != {"": ONE}:
        raise ValueError("geometric inverse needs constant term exactly 1")
    n = NCSeries.one(s.order) - s
    result = NCSeries.one(s.order)
    power = NCSeries.one(s.order)
    for _ in range(s.order):
        power = nc_mul(power, n)
        result = result + power
    return result


def sigma(s: NCSeries) -> NCSeries:
    """Substitution x -> x, y -> y (1 - x u)^-1, applied letterwise."""
    U = s.order
    out = [dict() for _ in range(U + 1)]
    for n, layer in enumerate(s.terms):
        for w, c in layer.items():
            parts = w.split("y")
            head, tails = parts[0], parts[1:]
            for N in range(U - n + 1):
                for e in _compositions(N, len(tails)):
                    img = head + "".join("y" + "x" * ei + tail for ei, tail in zip(e, tails))
                    _add_into(out[n + N], img, c)
    result = NCSeries(U)
    result.terms = out
    return result


_SWAP = str.maketrans("xy", "yx")


def tau_word(w: str) -> str:
    return w[::-1].translate(_SWAP)


def tau(s: NCSeries) -> NCSeries:
    """Anti-automorphism exchanging x and y; t and u untouched."""
    result = NCSeries(s.order)
    result.terms = [{tau_word(w): c for w, c in layer.items()} for layer in s.terms]
    return result


def interp_word(s: NCSeries) -> NCSeries:
    """I^t on words: every y after the leading one becomes y + t x."""
    U = s.order
    out = [dict() for _ in range(U + 1)]
    for n, layer in enumerate(s.terms):
        for w, c in layer.items():
            if w and w[0] != "y":
                raise InvalidIndex(f"not an index word: {w!r}")
            if not w:
                _add_into(out[n], w, c)
                continue
            partial = {"y": c}
            for letter in w[1:]:
                nxt: dict = {}
                for pw, pc in partial.items():
                    if letter == "x":
                        _add_into(nxt, pw + "x", pc)
                    else:
                        _add_into(nxt, pw + "y", pc)
                        _add_into(nxt, pw + "x", pc * T)
                partial = nxt
            for pw, pc in partial.items():
                _add_into(out[n], pw, pc)
    result = NCSeries(U)
    result.terms = out
    return result


def _x_over_1_minus_xtu(U: int) -> NCSeries:
    # x (1 - x t u)^-1
    one_minus = NCSeries.one(U) - NCSeries.monomial(U, "x", T, 1)
    return nc_mul(NCSeries.monomial(U, "x"), nc_geom_inverse(one_minus))


def _power(s: NCSeries, n: int) -> NCSeries:
    out = NCSeries.one(s.order)
    for _ in range(n):
        out = nc_mul(out, s)
    return out


def _product_form(k: Index, U: int, first: NCSeries, joiner: NCSeries) -> NCSeries:
    body = _x_over_1_minus_xtu(U)
    out = nc_mul(first, _power(body, k[0] - 1))
    for a in k[1:]:
        out = nc_mul(nc_mul(out, joiner), _power(body, a - 1))
    return out


def X_series(k: Index, U: int, mode: str = "closed") -> NCSeries:
    """The generating series X(k), by its splitting sum or its product form."""
    k = tuple(k)
    if not k:
        raise InvalidIndex("X(k) needs a non-empty index")
    if mode == "direct":
        return _X_direct(k, U)
    if mode != "closed":
        raise ValueError(f"unknown mode {mode!r}")
    y = NCSeries.monomial(U, "y")
    # y (1 - x t u) + x t
    joiner = y - NCSeries.monomial(U, "yx", T, 1) + NCSeries.monomial(U, "x", T)
    return _product_form(k, U, y, joiner)


def _X_direct(k: Index, U: int) -> NCSeries:
    r = len(k)
    layers = [dict() for _ in range(U + 1)]
    for blocks in splittings(k):
        l = len(blocks)
        weights = [sum(b) for b in blocks]
        for N in range(U + 1):
            for e in _compositions(N, l):
                c = 1
                for pos, (b, w, ei) in enumerate(zip(blocks, weights, e)):
                    c *= binom(w - len(b) + ei + (pos == 0) - 2, ei)
                    if not c:
                        break
                if c:
                    word = "".join("y" + "x" * (w + ei - 1) for w, ei in zip(weights, e))
                    _add_into(layers[N], word, RatPoly.t_power(r - l + N, c))
    result = NCSeries(U)
    result.terms = layers
    return result


def genfun_h_closed(k: Index, U: int) -> NCSeries:
    """Product formula for sum_m u^m h_m(k; t) in word form."""
    k = tuple(k)
    if not k:
        raise InvalidIndex("needs a non-empty index")
    y = NCSeries.monomial(U, "y")
    inv_xu = nc_geom_inverse(NCSeries.one(U) - NCSeries.monomial(U, "x", 1, 1))
    one_minus_xtu = NCSeries.one(U) - NCSeries.monomial(U, "x", T, 1)
    first = nc_mul(y, inv_xu)
    # y (1 - x t u)(1 - x u)^-1 + x t
    joiner = nc_mul(nc_mul(y, one_minus_xtu), inv_xu) + NCSeries.monomial(U, "x", T)
    return _product_form(k, U, first, joiner)


def dual_side_series(k: Index, U: int) -> NCSeries:
    """tau sigma tau applied to X(k)."""
    k = tuple(k)
    if not k or not is_admissible(k):
        raise InvalidIndex(f"needs a non-empty admissible index, got {k}")
    return tau(sigma(tau(X_series(k, U, "closed"))))


__all__ = [
    "NCSeries", "dual_side_series", "genfun_h_closed", "index_of_word",
    "indexsum_of_ncpoly", "interp_word", "nc_geom_inverse", "nc_mul",
    "ncpoly_of_indexsum", "sigma", "tau", "tau_word", "word_of_index", "X_series",
]
