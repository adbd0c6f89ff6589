import pytest

from maxchains.bounds import lower_bound, upper_bound
from maxchains.errors import CapBelowLowerBoundError, InvalidProfileError
from maxchains.poset import Poset, chain
from maxchains.profile import ChainProfile, profile_matrix
from maxchains.search import enumerate_posets, minimal_poset, posets_of_size


def flat_minimum_sizes(max_size):
    """Least size per profile, by scanning every class of every size."""
    best = {}
    for t in range(1, max_size + 1):
        for p in posets_of_size(t):
            best.setdefault(profile_matrix(p), t)
    return best


def test_two_twos():
    result = minimal_poset([2, 2])
    assert result.exact and result.size == 3
    assert profile_matrix(result.witness) == ChainProfile([2, 2])
    assert not any(profile_matrix(p) == ChainProfile([2, 2]) for p in enumerate_posets(2))


@pytest.mark.parametrize("m", range(1, 9))
def test_single_chain(m):
    result = minimal_poset([m])
    assert result.exact and result.size == m
    assert result.witness == chain(m)


def test_search_finds_below_upper_bound():
    # 2 + sums({1,1}): lower bound 6, upper bound 7
    result = minimal_poset([2, 3, 3, 4])
    assert result.exact and result.size == 6 and not result.ceiling_used
    assert profile_matrix(result.witness) == ChainProfile([2, 3, 3, 4])


def test_pendant_profile_beats_trivial_construction():
    # the 9-element construction is not minimal for {2,3,3,5,5}
    result = minimal_poset([2, 3, 3, 5, 5])
    assert result.size == 8 == lower_bound([2, 3, 3, 5, 5])
    assert profile_matrix(result.witness) == ChainProfile([2, 3, 3, 5, 5])


def test_cap_and_budget():
    with pytest.raises(CapBelowLowerBoundError):
        minimal_poset([2, 3, 3, 5, 5], size_cap=7)
    with pytest.raises(InvalidProfileError):
        minimal_poset([])
    result = minimal_poset([1, 4, 5, 6], class_budget=100)
    assert result.status == "budget_exhausted"
    assert result.explored == 100 and result.witness is None
    capped = minimal_poset([1, 4, 5, 6], size_cap=8)
    assert capped.status == "budget_exhausted" and capped.size is None
    assert capped.explored == 16999


def test_deterministic():
    a = minimal_poset([2, 3, 3, 4])
    b = minimal_poset([2, 3, 3, 4])
    assert a == b


def test_optimal_on_small_profiles(corpus7):
    best = flat_minimum_sizes(7)
    for s, size in best.items():
        result = minimal_poset(s, size_cap=7)
        assert result.exact
        assert result.size == size, s
        assert lower_bound(s) <= result.size <= upper_bound(s)
        assert profile_matrix(result.witness) == s
        assert result.witness.n == result.size


def test_enumerated_posets_are_valid():
    for p in enumerate_posets(6):
        assert Poset(p.n, p.edges) == p
