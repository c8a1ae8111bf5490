from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from interp_mzv.indices import (
    InvalidIndex,
    admissible_indices,
    admissible_indices_upto,
    all_indices,
    arrow_down,
    arrow_right,
    arrow_up,
    compositions,
    depth,
    dual,
    hoffman_dual,
    is_admissible,
    make_index,
    nonempty_indices_upto,
    oplus,
    splittings,
    weight,
)

indices = st.lists(st.integers(1, 5), min_size=1, max_size=5).map(tuple)
admissible = indices.filter(is_admissible)


def test_oplus_examples():
    assert oplus((2, 1, 3), (0, 0, 0)) == (2, 1, 3)
    assert oplus((2,), (1,)) == (3,)
    assert oplus((), ()) == ()
    with pytest.raises(InvalidIndex, match="depth mismatch"):
        oplus((1, 2), (1,))


def test_dual_examples():
    assert dual((2, 1, 3)) == (1, 3, 2)
    assert dual(()) == ()
    assert dual((2,)) == (2,)
    assert dual((3,)) == (1, 2)
    with pytest.raises(InvalidIndex):
        dual((2, 1))


def test_hoffman_dual_examples():
    assert hoffman_dual((2, 1, 3)) == (1, 3, 1, 1)
    assert hoffman_dual((1, 3, 1, 1)) == (2, 1, 3)
    for k in range(1, 7):
        assert hoffman_dual((k,)) == (1,) * k


def test_arrow_examples():
    assert arrow_up((1, 2)) == (1, 3)
    assert arrow_right((2,)) == (2, 1)
    assert arrow_down((1, 3)) == (1, 2)
    with pytest.raises(InvalidIndex):
        arrow_up(())


def test_make_index_rejects_nonpositive():
    with pytest.raises(InvalidIndex):
        make_index([2, 0])


def test_composition_examples():
    assert compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert compositions(0, 3) == [(0, 0, 0)]
    assert len(compositions(3, 2)) == 4
    assert compositions(0, 0) == [()]
    assert compositions(1, 0) == []


@given(st.integers(0, 7), st.integers(1, 5))
def test_composition_count(m, r):
    vs = compositions(m, r)
    assert len(vs) == math.comb(m + r - 1, r - 1)
    assert vs == sorted(set(vs))
    assert all(sum(v) == m and len(v) == r for v in vs)


def test_admissible_enumeration_examples():
    assert admissible_indices(3, 2) == [(1, 2)]
    assert admissible_indices(4, 2) == [(1, 3), (2, 2)]
    assert admissible_indices(5, 3) == [(1, 1, 3), (1, 2, 2), (2, 1, 2)]


@pytest.mark.parametrize("w", range(1, 9))
def test_enumeration_counts(w):
    assert len(list(all_indices(w))) == 2 ** (w - 1)
    # admissible ones correspond to compositions of w - 1 with the last part bumped by one
    assert len([k for k in all_indices(w) if is_admissible(k)]) == (2 ** (w - 2) if w >= 2 else 0)


def test_upto_lists_are_sorted_by_weight_then_lex():
    ks = nonempty_indices_upto(4)
    assert len(ks) == 1 + 2 + 4 + 8
    assert ks == sorted(ks, key=lambda k: (sum(k), k))
    assert all(is_admissible(k) for k in admissible_indices_upto(6))


def test_splittings_of_three_ones():
    merged = sorted(tuple(sum(b) for b in blocks) for blocks in splittings((1, 1, 1)))
    assert merged == [(1, 1, 1), (1, 2), (2, 1), (3,)]


@given(admissible)
def test_dual_is_a_weight_preserving_involution(k):
    d = dual(k)
    assert dual(d) == k
    assert is_admissible(d)
    assert weight(d) == weight(k)
    assert depth(d) == weight(k) - depth(k)


@given(indices)
def test_hoffman_dual_is_an_involution(k):
    d = hoffman_dual(k)
    assert hoffman_dual(d) == k
    assert weight(d) == weight(k)
    assert depth(d) == weight(k) - depth(k) + 1


@given(indices)
def test_arrow_down_undoes_arrow_up(k):
    assert arrow_down(arrow_up(k)) == k
    assert arrow_right(k)[:-1] == k
