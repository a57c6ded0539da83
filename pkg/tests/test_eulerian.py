import pytest
from hypothesis import given, settings, strategies as st

from lecturehall.eulerian import (
    HStarPolynomial, check_level_inequalities, ehrhart_series_expand, hstar_by_ascents,
    hstar_by_parallelepiped, internal_zeros, is_palindromic, is_unimodal,
)
from lecturehall.geometry import count_dilate_points
from lecturehall.seqcore import SSequence

import oracles
from conftest import small_grid

small = st.lists(st.integers(1, 5), min_size=1, max_size=3).map(tuple)


def test_non_level_example_coefficients():
    h = hstar_by_ascents((2, 3, 5, 9))
    assert h.trimmed == (1, 48, 154, 66, 1)
    assert (3, 1) in check_level_inequalities(h)


def test_consecutive_integers_give_eulerian_numbers():
    # s = (1, 2, ..., n) recovers the Eulerian numbers
    assert hstar_by_ascents((1, 2, 3, 4)).trimmed == (1, 11, 11, 1)
    assert hstar_by_ascents((1, 2, 3, 4, 5)).trimmed == (1, 26, 66, 26, 1)


def test_constant_sequence():
    # s = (1,1,...) is the unimodular standard simplex
    assert hstar_by_ascents((1, 1, 1)).trimmed == (1,)


@pytest.mark.parametrize("s", list(small_grid(3, 3)))
def test_ascents_match_fraction_oracle(s):
    assert list(hstar_by_ascents(s).coeffs) == oracles.hstar_ascents_brute(s)
    assert list(hstar_by_parallelepiped(s).coeffs) == oracles.hstar_brute(s)


@given(small)
@settings(max_examples=80, deadline=None)
def test_two_routes_agree(s):
    assert hstar_by_ascents(s) == hstar_by_parallelepiped(s)


@given(small)
@settings(max_examples=80, deadline=None)
def test_structural_invariants(s):
    h = hstar_by_ascents(s)
    assert h.coeffs[0] == 1
    assert sum(h.coeffs) == SSequence(s).product
    assert h.validate(s) == internal_zeros(h)


@given(small)
@settings(max_examples=40, deadline=None)
def test_series_matches_dilate_counts(s):
    h = hstar_by_ascents(s)
    counts = ehrhart_series_expand(h, 4)
    assert counts == [count_dilate_points(s, t) for t in range(5)]


def test_polynomial_helpers():
    h = HStarPolynomial((1, 5, 5, 1, 0))
    assert h.degree == 3 and h.dim == 4
    assert h.trimmed == (1, 5, 5, 1)
    assert is_palindromic(h) and is_unimodal(h)
    assert str(h) == "1 + 5z + 5z^2 + z^3"
    assert not is_unimodal(HStarPolynomial((1, 0, 3)))
    assert internal_zeros(HStarPolynomial((1, 0, 3))) == [1]
    with pytest.raises(ValueError):
        HStarPolynomial((1, -1))
    with pytest.raises(ValueError):
        HStarPolynomial((2, 1)).validate()


def test_level_inequalities_empty_for_palindromic_rows():
    assert check_level_inequalities(HStarPolynomial((1, 26, 66, 26, 1))) == []
