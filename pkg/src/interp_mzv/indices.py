"""Indices, exponent vectors and the combinatorial maps on them.

An index is a tuple of positive integers ``(k_1, ..., k_r)``, the empty tuple
included.  Exponent vectors are tuples of non-negative integers.  Everything
here is a pure function on tuples.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import accumulate, combinations
from typing import Iterator, Sequence

Index = tuple[int, ...]
ExpVector = tuple[int, ...]


class InvalidIndex(ValueError):
    """Raised for malformed indices or operations undefined on them."""


def make_index(parts: Sequence[int]) -> Index:
    k = tuple(int(x) for x in parts)
    if any(x < 1 for x in k):
        raise InvalidIndex(f"index entries must be positive: {k}")
    return k


def weight(k: Sequence[int]) -> int:
    return sum(k)


def depth(k: Sequence[int]) -> int:
    return len(k)


def is_admissible(k: Index) -> bool:
    return not k or k[-1] >= 2


def oplus(k: Index, e: ExpVector) -> Index:
    if len(k) != len(e):
        raise InvalidIndex(f"depth mismatch: {k} vs {e}")
    return tuple(a + b for a, b in zip(k, e))


def _blocks(k: Index) -> list[tuple[int, int]]:
    # (a, b) pairs for the decomposition k = (1^{a_1-1}, b_1+1, ..., 1^{a_s-1}, b_s+1)
    blocks = []
    ones = 0
    for x in k:
        if x == 1:
            ones += 1
        else:
            blocks.append((ones + 1, x - 1))
            ones = 0
    return blocks


def dual(k: Index) -> Index:
    """Dual index of an admissible index."""
    if not is_admissible(k):
        raise InvalidIndex(f"dual needs an admissible index, got {k}")
    out: list[int] = []
    for a, b in reversed(_blocks(k)):
        out.extend([1] * (b - 1))
        out.append(a + 1)
    return tuple(out)


def _cuts(k: Index) -> set[int]:
    # positions of the commas when k is written as a row of wt(k) ones
    return set(accumulate(k[:-1]))


def _from_cuts(total: int, cuts) -> Index:
    edges = [0, *sorted(cuts), total]
    return tuple(b - a for a, b in zip(edges, edges[1:]))


def hoffman_dual(k: Index) -> Index:
    """Swap commas and plusses in the all-ones expansion of ``k``."""
    if not k:
        raise InvalidIndex("Hoffman dual of the empty index is undefined")
    w = weight(k)
    return _from_cuts(w, set(range(1, w)) - _cuts(k))


def _nonempty(k: Index, what: str) -> None:
    if not k:
        raise InvalidIndex(f"{what} of the empty index is undefined")


def arrow_up(k: Index) -> Index:
    _nonempty(k, "arrow_up")
    return k[:-1] + (k[-1] + 1,)


def arrow_right(k: Index) -> Index:
    _nonempty(k, "arrow_right")
    return k + (1,)


def arrow_down(k: Index) -> Index:
    _nonempty(k, "arrow_down")
    if k[-1] < 2:
        raise InvalidIndex(f"arrow_down needs last entry >= 2, got {k}")
    return k[:-1] + (k[-1] - 1,)


def compositions(m: int, r: int) -> list[ExpVector]:
    """All ``r``-tuples of non-negative integers summing to ``m``, lexicographic."""
    return list(_compositions(m, r))


@lru_cache(maxsize=4096)
def _compositions(m: int, r: int) -> tuple[ExpVector, ...]:
    if m < 0:
        return ()
    if r == 0:
        return ((),) if m == 0 else ()
    out = []
    # bars-and-stars: choose r-1 bar positions among m+r-1 slots
    for bars in combinations(range(m + r - 1), r - 1):
        edges = (-1, *bars, m + r - 1)
        out.append(tuple(b - a - 1 for a, b in zip(edges, edges[1:])))
    out.sort()
    return tuple(out)


def all_indices(w: int, r: int | None = None) -> Iterator[Index]:
    """Indices of weight ``w`` (optionally of depth ``r``), lexicographic."""
    if w == 0:
        if r in (None, 0):
            yield ()
        return
    depths = range(1, w + 1) if r is None else [r]
    found = []
    for d in depths:
        if d < 1 or d > w:
            continue
        for cuts in combinations(range(1, w), d - 1):
            found.append(_from_cuts(w, cuts))
    yield from sorted(found)


def admissible_indices(w: int, r: int) -> list[Index]:
    if w <= r or r < 1:
        return []
    return [k for k in all_indices(w, r) if k[-1] >= 2]


def nonempty_indices_upto(max_weight: int) -> list[Index]:
    """All non-empty indices with weight <= ``max_weight``, by weight then lex."""
    return [k for w in range(1, max_weight + 1) for k in all_indices(w)]


def admissible_indices_upto(max_weight: int) -> list[Index]:
    return [k for k in nonempty_indices_upto(max_weight) if k[-1] >= 2]


def splittings(k: Index) -> Iterator[tuple[Index, ...]]:
    """Ways to cut ``k`` into consecutive non-empty blocks."""
    r = len(k)
    for n_cuts in range(r):
        for cuts in combinations(range(1, r), n_cuts):
            edges = (0, *cuts, r)
            yield tuple(k[a:b] for a, b in zip(edges, edges[1:]))
