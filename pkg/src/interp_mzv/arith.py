"""Exact arithmetic: rationals, polynomials in ``t`` over Q and over Z/pZ.

Rationals are :class:`fractions.Fraction`. Polynomials are dense, immutable,
and stored in ascending powers of ``t`` with trailing zeros stripped.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def binom(a: int, b: int) -> int:
    """Binomial coefficient for any integer upper argument.

    ``a(a-1)...(a-b+1)/b!`` for ``b >= 0`` and 0 for ``b < 0``.  This gives
    C(n-1, n) = 1 if n == 0 else 0, and 0 whenever 0 <= a < b.
    """
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b) if a >= b else 0
    # C(a, b) = (-1)^b C(b-a-1, b) for negative a
    return (-1) ** b * comb(b - a - 1, b)


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"3/4"``, ``"2"``, ``"0.5"`` or a number into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def rational_to_str(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _norm(c):
    # integers stay ints (much faster than Fraction); others become Fractions
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _strip(coeffs: Iterable) -> tuple:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


class RatPoly:
    """Polynomial in ``t`` with exact rational coefficients.

    Integral coefficients are held as ``int`` and the rest as ``Fraction``;
    the two compare and hash alike, so the representation stays canonical.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: tuple[Scalar, ...] = _strip(_norm(c) for c in coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list) -> "RatPoly":
        # coeffs already normalised; only strip
        self = object.__new__(cls)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self._hash = None
        return self

    @classmethod
    def const(cls, c: Scalar) -> "RatPoly":
        return cls((c,))

    @classmethod
    def t_power(cls, n: int, c: Scalar = 1) -> "RatPoly":
        """``c * t**n``."""
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatPoly.const(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    @staticmethod
    def _coerce(other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.const(other)
        raise TypeError(f"cannot combine RatPoly with {type(other).__name__}")

    def __add__(self, other) -> "RatPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RatPoly._raw([_norm(x + y) for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other) -> "RatPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RatPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RatPoly":
        if type(other) is int:
            return RatPoly._raw([c * other for c in self.coeffs]) if other else ZERO
        if isinstance(other, Fraction):
            return RatPoly(c * other for c in self.coeffs)
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1 and type(b[0]) is int:
            return RatPoly._raw([x * b[0] for x in a])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RatPoly._raw([_norm(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = RatPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, v: Scalar) -> Fraction:
        return self.eval(v)

    def eval(self, v: Scalar) -> Fraction:
        """Horner evaluation at ``t = v``."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def to_json(self) -> dict:
        return {"coeffs": [rational_to_str(c) for c in self.coeffs]}

    def fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self.coeffs)

    @classmethod
    def from_json(cls, obj: dict) -> "RatPoly":
        return cls(parse_rational(c) for c in obj["coeffs"])


ZERO = RatPoly()
ONE = RatPoly.const(1)
T = RatPoly((0, 1))
ONE_MINUS_T = RatPoly((1, -1))


def ratpoly_arith(a: RatPoly, b: RatPoly, op: str) -> RatPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def ratpoly_eval(p: RatPoly, v: Scalar) -> Fraction:
    return p.eval(v)


class ModPPoly:
    """Polynomial in ``t`` with coefficients in Z/pZ."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        self.p = p
        self.coeffs: tuple[int, ...] = _strip(int(c) % p for c in coeffs)

    @classmethod
    def const(cls, p: int, c: int) -> "ModPPoly":
        return cls(p, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "ModPPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ModPPoly.const(self.p, other)
        if not isinstance(other, ModPPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"ModPPoly(p={self.p}, {list(self.coeffs)})"

    def __add__(self, other: "ModPPoly") -> "ModPPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return ModPPoly(self.p, (x + y for x, y in zip(a, b)))

    def __neg__(self) -> "ModPPoly":
        return ModPPoly(self.p, (-c for c in self.coeffs))

    def __sub__(self, other: "ModPPoly") -> "ModPPoly":
        return self + (-other)

    def __mul__(self, other) -> "ModPPoly":
        if isinstance(other, int):
            return ModPPoly(self.p, (c * other for c in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ModPPoly(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return ModPPoly(self.p, out)

    __rmul__ = __mul__

    def eval(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * v + c) % self.p
        return acc

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs)}


def reduce_mod_p(poly: RatPoly | Scalar, prime: int) -> ModPPoly:
    """Reduce a p-integral polynomial (or scalar) coefficientwise mod ``prime``."""
    if not isinstance(poly, RatPoly):
        poly = RatPoly.const(poly)
    out = []
    for c in poly.fractions():
        if c.denominator % prime == 0:
            raise ValueError(f"non-p-integral coefficient {c} for p={prime}")
        out.append(c.numerator * pow(c.denominator, -1, prime))
    return ModPPoly(prime, out)


def reduce_scalar(q: Scalar, prime: int) -> int:
    q = Fraction(q)
    if q.denominator % prime == 0:
        raise ValueError(f"non-p-integral coefficient {q} for p={prime}")
    return q.numerator * pow(q.denominator, -1, prime) % prime


_bern_lock = threading.Lock()
_bern_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2), from sum_{k<=n} C(n+1, k) B_k = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > 1 and n % 2:
        return Fraction(0)
    if n < len(_bern_cache):
        return _bern_cache[n]
    with _bern_lock:
        cache = _bern_cache
        for m in range(len(cache), n + 1):
            s = sum((comb(m + 1, k) * cache[k] for k in range(m)), Fraction(0))
            cache.append(-s / (m + 1))
        return cache[n]


@lru_cache(maxsize=None)
def bernstein_basis(j: int, n: int) -> RatPoly:
    """``t**j * (1-t)**(n-j)``; zero unless 0 <= j <= n."""
    if j < 0 or j > n:
        return ZERO
    return RatPoly.t_power(j) * ONE_MINUS_T ** (n - j)


def inverse_table(p: int) -> list[int]:
    """Inverses of 0..p-1 mod p (entry 0 unused)."""
    inv = [0, 1] + [0] * (p - 2)
    for a in range(2, p):
        inv[a] = (p - (p // a) * inv[p % a] % p) % p
    return inv


__all__ = [
    "Fraction", "RatPoly", "ModPPoly", "ZERO", "ONE", "T", "ONE_MINUS_T",
    "binom", "bernoulli", "bernstein_basis", "inverse_table",
    "parse_rational", "rational_to_str", "ratpoly_arith", "ratpoly_eval",
    "reduce_mod_p", "reduce_scalar",
]
