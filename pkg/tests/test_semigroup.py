"""Membership tables versus definitional brute force."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reesreg import build_membership

from oracles import semigroup_flags


def test_small_semigroup_membership():
    table = build_membership([3, 5], 20)
    hits = [m for m in range(21) if table.contains(m)]
    # <3, 5> misses exactly 1, 2, 4, 7
    assert hits == [0, 3, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20]


def test_members_listing():
    table = build_membership([2, 3], 10)
    assert table.members() == [0, 2, 3, 4, 5, 6, 7, 8, 9, 10]


def test_large_generator_boundaries():
    s = build_membership([35, 98, 157], 2000)
    t = build_membership([59, 122, 157], 2000)
    assert s.contains(1298)
    assert not s.contains(1299)
    assert t.contains(1841)
    assert not t.contains(1842)


def test_query_outside_range_raises():
    table = build_membership([2, 5], 30)
    with pytest.raises(ValueError, match="outside table range"):
        table.contains(-1)
    with pytest.raises(ValueError, match="outside table range"):
        table.contains(31)


def test_degenerate_generators():
    for gens in ([], [0], [0, 0]):
        table = build_membership(gens, 10)
        assert table.members() == [0]


def test_zero_bound_table():
    table = build_membership([4, 9], 0)
    assert table.contains(0)
    assert table.members() == [0]


def test_input_validation():
    with pytest.raises(ValueError, match="non-negative"):
        build_membership([3, -2], 10)
    with pytest.raises(ValueError, match="non-negative"):
        build_membership([2.5], 10)
    with pytest.raises(ValueError, match="non-negative"):
        build_membership([2], -1)
    # integral floats and duplicates are normalized
    table = build_membership([2.0, 2, 3], 10)
    assert table.generators == frozenset({0, 2, 3})


def test_extend_matches_cold_build():
    cold = build_membership([4, 7], 500)
    warm = build_membership([4, 7], 83).extend(500)
    assert warm.bound == 500
    assert warm.bits == cold.bits


def test_extend_to_smaller_bound_is_identity():
    table = build_membership([4, 7], 100)
    assert table.extend(50) is table
    assert table.extend(100) is table


@settings(derandomize=True, max_examples=80, deadline=None)
@given(
    gens=st.lists(st.integers(min_value=1, max_value=60), min_size=1, max_size=5),
    bound=st.integers(min_value=0, max_value=300),
)
def test_membership_matches_definition(gens, bound):
    table = build_membership(gens, bound)
    flags = semigroup_flags(gens, bound)
    assert [table.contains(m) for m in range(bound + 1)] == flags


@settings(derandomize=True, max_examples=40, deadline=None)
@given(
    gens=st.lists(st.integers(min_value=1, max_value=40), min_size=1, max_size=4),
    bound=st.integers(min_value=0, max_value=120),
    extra=st.integers(min_value=1, max_value=120),
)
def test_extend_is_exact(gens, bound, extra):
    cold = build_membership(gens, bound + extra)
    warm = build_membership(gens, bound).extend(bound + extra)
    assert warm.bits == cold.bits
