import pytest
from hypothesis import given, settings, strategies as st

from rgsavoid.matching import (BadParams, InvalidTemplate, contains, family, incr_power,
                               leftmost_occurrence, occurrences, ones_two_ones, substitute,
                               tau112, tau121, topmost_occurrence)
from rgsavoid.rgs import Rgs, all_rgs, as_rgs, order_type

from oracles import naive_contains

HOST = "11233245466233"


def test_contains_examples():
    assert contains("12132431", "1212")
    assert contains("123", "")
    assert contains(HOST, "122")
    assert not contains("123", "11")


def test_contains_matches_naive():
    pats = [p for k in range(1, 5) for p in all_rgs(k)]
    for n in range(7):
        for h in all_rgs(n):
            for p in pats:
                assert contains(h, p) == naive_contains(h, p), (h, p)


def test_leftmost():
    assert leftmost_occurrence(HOST, "122") == (1, 4, 5)
    assert leftmost_occurrence("121", "121") == (1, 2, 3)
    assert leftmost_occurrence("123", "11") is None
    assert leftmost_occurrence("123", "") == ()


def test_topmost():
    assert topmost_occurrence(HOST, "122") == (8, 10, 11)
    assert topmost_occurrence("11", "11") == (1, 2)
    assert topmost_occurrence("1122", "11") == (3, 4)
    assert topmost_occurrence("12", "11") is None


def _brute_leftmost(h, p):
    occs = list(occurrences(h, p))
    return min(occs, key=lambda o: (o[-1], o)) if occs else None


def _brute_topmost(h, p):
    h = as_rgs(h)
    occs = list(occurrences(h, p))
    if not occs:
        return None
    top = max(h[o[0] - 1] for o in occs)
    first = h.first_positions[top - 1] + 1
    return min(o for o in occs if o[0] == first)


def test_occurrence_choices_match_definitions():
    pats = [p for k in range(1, 4) for p in all_rgs(k)]
    for n in range(1, 7):
        for h in all_rgs(n):
            for p in pats:
                assert leftmost_occurrence(h, p) == _brute_leftmost(h, p)
                assert topmost_occurrence(h, p) == _brute_topmost(h, p)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 7).flatmap(lambda n: st.sampled_from(list(all_rgs(n)))),
       st.integers(1, 3).flatmap(lambda k: st.sampled_from(list(all_rgs(k)))))
def test_occurrences_are_order_isomorphic(host, pat):
    for occ in occurrences(host, pat):
        assert list(occ) == sorted(set(occ))
        assert order_type([host[i - 1] for i in occ]) == tuple(pat)


def test_substitute():
    assert substitute("1[112]1") == as_rgs("12231")
    assert substitute("11[121][112]") == as_rgs("11232445")
    assert substitute("1[11]") == as_rgs("122")
    assert substitute("1[12]") == as_rgs("123")
    assert substitute("1[σ1]1", ["12"]) == as_rgs("1231")
    with pytest.raises(InvalidTemplate):
        substitute("1[12")
    with pytest.raises(InvalidTemplate):
        substitute("1[σ1]")


def test_families():
    assert tau112((2, 1, 2)) == as_rgs("12331")
    assert tau121((2, 1, 2)) == as_rgs("11233")
    assert ones_two_ones(1, 1) == as_rgs("121")
    assert incr_power(3, 2) == as_rgs("1233")
    assert family("ones", 4) == as_rgs("1111")
    assert family("incr", 3) == as_rgs("123")
    with pytest.raises(BadParams):
        tau112((2, 0))
    with pytest.raises(BadParams):
        family("nope", 1)


def test_tau_block_sizes():
    for a in [(1,), (2, 1), (1, 3, 2), (2, 2, 2)]:
        assert tau121(a).block_sizes == a
        assert tau112(a).block_sizes == a
