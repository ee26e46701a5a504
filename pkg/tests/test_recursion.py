"""Transfer recursion against the census and its own collapsed forms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tqftdims.census import count_parities
from tqftdims.recursion import DimTable, delta_direct, delta_split, dim_table


def test_base_row_is_all_even():
    for p in (5, 7, 11, 13):
        t = dim_table(p, 1)
        d = (p - 1) // 2
        assert t.even[0] == tuple(d - c for c in range(d))
        assert t.odd[0] == tuple(0 for _ in range(d))


@pytest.mark.parametrize("p,gmax", [(5, 3), (7, 3), (11, 2)])
def test_recursion_matches_census(p, gmax):
    t = dim_table(p, gmax)
    for g in range(1, gmax + 1):
        for c in range(t.d):
            assert (t.n_even(g, c), t.n_odd(g, c)) == count_parities(p, g, c)


def test_frozen_p5_table():
    t = dim_table(5, 4)
    assert [(t.n_even(g, 0), t.n_odd(g, 0)) for g in range(1, 5)] == [
        (2, 0),
        (5, 0),
        (14, 1),
        (42, 8),
    ]
    assert [(t.n_even(g, 1), t.n_odd(g, 1)) for g in range(1, 5)] == [
        (1, 0),
        (4, 1),
        (14, 6),
        (48, 27),
    ]


def test_total_at_genus_two_matches_closed_form():
    for p in (5, 7, 11, 13, 17, 19):
        assert dim_table(p, 2).total(2, 0) == p * (p * p - 1) // 24


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_signed_recursions_agree(p):
    t = dim_table(p, 8)
    for g in range(1, 9):
        direct = delta_direct(p, g)
        split = delta_split(p, g)
        assert direct == split
        for c in range(t.d):
            assert t.delta(g, c, verify=True) == direct[c]


def test_delta_verification_raises_on_mismatch():
    good = dim_table(5, 2)
    bad = DimTable(5, 2, good.even, ((0, 0), (1, 1)))
    with pytest.raises(ArithmeticError):
        bad.delta(2, 0, verify=True)


def test_rows_iteration():
    t = dim_table(5, 2)
    rows = list(t.rows())
    assert rows == [
        (1, 0, 2, 0, 2, 2),
        (1, 1, 1, 0, 1, 1),
        (2, 0, 5, 0, 5, 5),
        (2, 1, 4, 1, 5, 3),
    ]


def test_bounds_checked():
    t = dim_table(5, 2)
    with pytest.raises(ValueError):
        t.n_even(3, 0)
    with pytest.raises(ValueError):
        t.n_odd(0, 0)
    with pytest.raises(ValueError):
        t.total(1, 2)
    with pytest.raises(ValueError):
        dim_table(8, 2)
    with pytest.raises(ValueError):
        dim_table(5, 0)
    with pytest.raises(ValueError):
        delta_direct(5, 0)


@given(
    p=st.sampled_from([5, 7, 11]),
    g=st.integers(min_value=1, max_value=6),
)
@settings(max_examples=30, deadline=None)
def test_totals_grow_with_genus(p, g):
    t = dim_table(p, g + 1)
    for c in range(t.d):
        assert t.total(g + 1, c) >= t.total(g, c)
        assert t.delta(g, c) >= 0


@given(p=st.sampled_from([5, 7, 11, 13]), g=st.integers(min_value=1, max_value=7))
@settings(max_examples=30, deadline=None)
def test_table_prefix_stability(p, g):
    # extending gmax never changes earlier rows
    small = dim_table(p, g)
    big = dim_table(p, g + 1)
    assert big.even[: g] == small.even
    assert big.odd[: g] == small.odd
