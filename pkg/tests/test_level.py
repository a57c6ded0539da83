import itertools

import pytest
from hypothesis import given, settings, strategies as st

from lecturehall.gorenstein import is_gorenstein
from lecturehall.level import (
    concatenate, cone_recurrence_level_scan, has_lift, is_gorenstein_via_level,
    level_by_inversions, level_by_socle, level_free_product, level_shortcut_prepend_one,
)
from lecturehall.seqcore import InversionSequence, SSequence

from conftest import small_grid

GRID = list(small_grid(3, 5))
small = st.lists(st.integers(1, 6), min_size=1, max_size=3).map(tuple)


@pytest.fixture(scope="module")
def example():
    return level_by_inversions((2, 3, 5, 9))


def test_example_not_level(example):
    assert example.verdict is False
    assert example.r == 4
    assert (3, (1, 1, 2, 4)) in example.witnesses
    assert example.witness_stratum == 3
    assert (3, 1) in example.inequality_violations


def test_first_witness_is_lexicographic(example):
    stratum3 = sorted(w for k, w in example.witnesses if k == 3)
    assert example.witness == stratum3[0] == (0, 1, 2, 4)


def test_witnesses_have_no_lift(example):
    s = SSequence((2, 3, 5, 9))
    for k, w in example.witnesses:
        e = InversionSequence(w, s)
        assert e.asc == k
        assert not has_lift(e)


def test_example_socle(example):
    socle = level_by_socle((2, 3, 5, 9))
    assert socle.verdict is False
    assert socle.socle_histogram() == {3: 18, 4: 1}
    low = {tuple((-x) % y for x, y in zip(p[:-1], (2, 3, 5, 9)))
           for p in socle.socle_points if p[-1] == 3}
    assert low == {w for _, w in example.witnesses}


def test_level_examples():
    assert level_by_inversions((7, 9)).verdict
    assert level_by_inversions((2, 3, 1, 4, 5)).verdict


@pytest.mark.parametrize("s", GRID)
def test_lift_search_matches_socle(s):
    fast = level_by_inversions(s)
    slow = level_by_socle(s)
    assert fast.verdict == slow.verdict
    # sequences with no lift are exactly the images of socle points below the top
    low = {tuple((-x) % y for x, y in zip(p[:-1], s))
           for p in slow.socle_points if p[-1] < slow.r}
    assert low == {w for _, w in fast.witnesses}


@given(small)
@settings(max_examples=40, deadline=None)
def test_has_lift_agrees_with_vectorised(s):
    report = level_by_inversions(s)
    bad = {w for _, w in report.witnesses}
    ss = SSequence(s)
    for e in itertools.product(*(range(x) for x in s)):
        inv = InversionSequence(e, ss)
        if 1 <= inv.asc < report.r:
            assert has_lift(inv) == (e not in bad)


@pytest.mark.parametrize("s", [s for s in GRID if len(s) == 2])
def test_two_dimensional_always_level(s):
    assert level_by_inversions(s).verdict


@pytest.mark.parametrize("s", [s for s in GRID if len(s) <= 2])
def test_padding_with_ones(s):
    base = level_by_inversions(s).verdict
    assert level_by_inversions((1,) + s).verdict == base
    assert level_by_inversions(s + (1,)).verdict == base
    if len(s) >= 1:
        assert level_shortcut_prepend_one((1,) + s) == base


@pytest.mark.parametrize("s,t", [((a,), (b, c)) for a in range(1, 5) for b in range(1, 4)
                                 for c in range(1, 4)])
def test_free_product_of_level_factors(s, t):
    if level_free_product(s, t):
        assert level_by_inversions(concatenate(s, t)).verdict


@pytest.mark.parametrize("s", GRID)
def test_gorenstein_via_level(s):
    assert is_gorenstein_via_level(s) == is_gorenstein(s)[0]


def test_cone_recurrence_scan_small_grid():
    out = cone_recurrence_level_scan(small_grid(3, 4))
    assert out.checked == 4 + 16 + 64
    assert out.counterexamples == []
