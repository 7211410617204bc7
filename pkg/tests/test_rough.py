"""Approximations, boundaries, and three-valued membership."""

import pytest
from hypothesis import given, strategies as st

from affordances.errors import UnknownObject
from affordances.rough import (MembershipStatus, RoughSet, approximate,
                               boundary, lower, membership_status, upper)

from conftest import make_table

# The playgrounds environments table gives a partition with both merged
# and singleton blocks, a good shape for property tests.
_subsets = st.sets(st.sampled_from(
    ["e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9", "e10"]))


def test_tv_upper(tv):
    s, _ = tv
    assert upper(s.objects.partition, {"2", "3", "4"}) == {"2", "3", "4", "5"}


def test_tv_lower(tv):
    s, _ = tv
    assert lower(s.objects.partition, {"2", "3", "4"}) == {"2", "3"}


def test_tv_boundary(tv):
    s, _ = tv
    assert boundary(s.objects.partition, {"2", "3", "4"}) == {"4", "5"}


def test_upper_of_empty_is_empty(tv):
    s, _ = tv
    assert upper(s.objects.partition, set()) == set()


def test_lower_of_full_is_full(tv):
    s, _ = tv
    full = set(s.objects.objects)
    assert lower(s.objects.partition, full) == full


def test_actors_upper(actors_bundle):
    s, _ = actors_bundle
    X = {"a1", "a3", "a4", "a5", "a9"}
    assert upper(s.actors.partition, X) == \
        {"a1", "a3", "a4", "a5", "a7", "a8", "a9"}


def test_actors_lower(actors_bundle):
    s, _ = actors_bundle
    X = {"a1", "a3", "a4", "a5", "a9"}
    assert lower(s.actors.partition, X) == {"a3", "a5", "a9"}


def test_boundary_of_saturated_set_is_empty(actors_bundle):
    s, _ = actors_bundle
    saturated = {"a1", "a8", "a2"}
    assert boundary(s.actors.partition, saturated) == set()


def test_membership_status_tv(tv):
    s, _ = tv
    p = s.objects.partition
    X = {"2", "3", "4"}
    assert membership_status(p, X, "2") is MembershipStatus.CERTAINLY_IN
    assert membership_status(p, X, "6") is MembershipStatus.CERTAINLY_OUT
    assert membership_status(p, X, "4") is MembershipStatus.POSSIBLY
    assert membership_status(p, X, "5") is MembershipStatus.POSSIBLY


def test_membership_status_unknown_element(tv):
    s, _ = tv
    with pytest.raises(UnknownObject):
        membership_status(s.objects.partition, {"2"}, "99")


def test_upper_rejects_unknown_member(tv):
    s, _ = tv
    with pytest.raises(UnknownObject):
        upper(s.objects.partition, {"2", "99"})


def test_approximate_bundles_all_three(tv):
    s, _ = tv
    result = approximate(s.objects.partition, {"2", "3", "4"})
    assert result == RoughSet(lower=frozenset({"2", "3"}),
                              upper=frozenset({"2", "3", "4", "5"}))
    assert result.boundary == {"4", "5"}


def test_rough_set_rejects_inverted_pair():
    with pytest.raises(ValueError):
        RoughSet(lower=frozenset({"x"}), upper=frozenset())


@given(_subsets)
def test_sandwich(playgrounds, X):
    p = playgrounds[0].environments.partition
    assert lower(p, X) <= X <= upper(p, X)


@given(_subsets)
def test_duality(playgrounds, X):
    p = playgrounds[0].environments.partition
    universe = set(p.universe)
    assert lower(p, X) == universe - upper(p, universe - X)


@given(_subsets)
def test_idempotence(playgrounds, X):
    p = playgrounds[0].environments.partition
    assert upper(p, upper(p, X)) == upper(p, X)
    assert lower(p, lower(p, X)) == lower(p, X)


@given(_subsets)
def test_approximations_are_block_unions(playgrounds, X):
    p = playgrounds[0].environments.partition
    for approx in (upper(p, X), lower(p, X)):
        for block in p.blocks:
            hit = set(block) & approx
            assert hit == set() or hit == set(block)


@given(_subsets, _subsets)
def test_monotonicity(playgrounds, X, Y):
    p = playgrounds[0].environments.partition
    small, large = X & Y, X | Y
    assert upper(p, small) <= upper(p, large)
    assert lower(p, small) <= lower(p, large)


@given(_subsets)
def test_status_trichotomy(playgrounds, X):
    p = playgrounds[0].environments.partition
    by_status = {status: set() for status in MembershipStatus}
    for z in p.universe:
        by_status[membership_status(p, X, z)].add(z)
    assert by_status[MembershipStatus.CERTAINLY_IN] == lower(p, X)
    assert by_status[MembershipStatus.POSSIBLY] == boundary(p, X)
    assert by_status[MembershipStatus.CERTAINLY_OUT] == \
        set(p.universe) - upper(p, X)


def test_same_code_path_for_corner_sets():
    table = make_table("t", {"x": "1", "y": "1", "z": "2"})
    p = table.partition
    assert upper(p, set()) == set() and lower(p, set()) == set()
    assert upper(p, {"x", "y", "z"}) == {"x", "y", "z"}
    assert lower(p, {"x", "y", "z"}) == {"x", "y", "z"}
