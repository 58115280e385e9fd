from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from rgsavoid.avoid import count_avoiders
from rgsavoid.compositions import (NotDominating, PreconditionViolated, bijection_multi1,
                                   bijection_multi2, compositions, count_dominating,
                                   count_dominating_dp, count_dominating_enum, dominates,
                                   first_separating_n, format_composition, integer_partitions,
                                   normalize_2free, parse_composition, search_simcomp,
                                   simcomp_check, swap, two_free_partitions, xi)
from rgsavoid.matching import tau112, tau121


def naive_dominates(a, b):
    # b dominates a: some subsequence of b is pointwise >= a
    return any(all(b[i] >= x for i, x in zip(idx, a))
               for idx in combinations(range(len(b)), len(a)))


def partition_count(n):
    # p(n) by the standard table recursion on largest part
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for m in range(n + 1):
        table[0][m] = 1
    for k in range(1, n + 1):
        for m in range(1, n + 1):
            table[k][m] = table[k][m - 1] + (table[k - m][m] if k >= m else 0)
    return table[n][n]


def test_parse_format():
    assert parse_composition("3,1,2") == (3, 1, 2)
    assert parse_composition("") == ()
    assert format_composition((3, 1, 2)) == "3,1,2"
    with pytest.raises(ValueError):
        parse_composition("1,0")


def test_compositions_count():
    for n in range(1, 11):
        cs = list(compositions(n))
        assert len(cs) == 2 ** (n - 1) == len(set(cs))
        assert all(sum(c) == n for c in cs)


def test_dominates():
    assert dominates((2, 2), (3, 1, 2))
    assert not dominates((2, 2), (2, 1, 1))
    assert dominates((), (1, 4))
    for na in range(0, 5):
        for a in compositions(na):
            for nb in range(0, 7):
                for b in compositions(nb):
                    assert dominates(a, b) == naive_dominates(a, b)


def test_count_dominating_examples():
    assert count_dominating((1,), 3) == 4
    assert count_dominating((2,), 2) == 1
    for n in range(15):
        assert count_dominating((2,), n) == count_dominating((1, 1), n)


def test_dp_equals_enumeration():
    for size in range(1, 7):
        for a in compositions(size):
            for n in range(17 if size <= 3 else 13):
                assert count_dominating_dp(a, n) == count_dominating_enum(a, n), (a, n)


def test_dominator_count_matches_pattern_count():
    # (112, tau) avoiders: 2^(n-1) minus the compositions dominating the block sizes
    for a in [(1, 2), (2, 1), (3, 1), (1, 1, 2), (2, 2)]:
        for sigma, tau in (("112", tau112(a)), ("121", tau121(a))):
            c = count_avoiders([sigma, tau], 11)
            for n in range(1, 12):
                assert c[n] == 2 ** (n - 1) - count_dominating(a, n), (sigma, a, n)


def test_xi():
    assert [xi(k) for k in range(4)] == [1, 1, 1, 2]
    assert xi(6) == 6
    for k in range(2, 16):
        assert xi(k) == partition_count(k) - partition_count(k - 2)
    for k in range(10):
        assert all(2 not in p for p in two_free_partitions(k))
    assert sum(1 for _ in integer_partitions(7)) == partition_count(7)


def test_simcomp():
    assert simcomp_check((1, 3), (3, 1), 12)
    for head in [(), (1,), (3, 1), (2, 4)]:
        assert simcomp_check(head + (2,), head + (1, 1), 12)
    assert not simcomp_check((3,), (1, 1, 1), 12)
    n = first_separating_n((3,), (1, 1, 1), 12)
    assert n is not None
    assert count_dominating((3,), n) != count_dominating((1, 1, 1), n)
    assert all(count_dominating((3,), m) == count_dominating((1, 1, 1), m) for m in range(n))


def test_normalize():
    assert normalize_2free((2, 3, 2)) == (3, 1, 1, 1, 1)
    assert normalize_2free((1, 1, 1)) == (1, 1, 1)
    assert normalize_2free((2,)) == (1, 1)
    assert simcomp_check((2, 3, 2), (3, 1, 1, 1, 1), 12)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_normal_form_same_counts(a):
    assert simcomp_check(tuple(a), normalize_2free(a), 12)


def test_multi1_examples():
    b = bijection_multi1((2, 1, 1, 2), (1, 2), 1)
    assert sum(b) == 6 and dominates((2, 1), b)
    b = bijection_multi1((1, 1, 1), (1, 1), 1)
    assert sum(b) == 3
    with pytest.raises(NotDominating):
        bijection_multi1((1,), (2, 2), 1)


def test_multi1_is_an_involution_pair():
    for size in range(2, 5):
        for a in compositions(size):
            for r in range(1, len(a)):
                a2 = swap(a, r)
                for n in range(9):
                    for b in compositions(n):
                        if dominates(a, b):
                            c = bijection_multi1(b, a, r)
                            assert dominates(a2, c)
                            assert bijection_multi1(c, a2, r) == b


def test_multi2():
    out = bijection_multi2((1, 1, 1), (2,))
    assert out == (3,)
    assert not dominates((1, 1), out)
    with pytest.raises(PreconditionViolated):
        bijection_multi2((3,), (2,))
    with pytest.raises(PreconditionViolated):
        bijection_multi2((1,), (1, 3))
    for a in [(2,), (1, 2), (3, 2), (1, 1, 2)]:
        for n in range(9):
            for b in compositions(n):
                if not dominates(a, b):
                    c = bijection_multi2(b, a)
                    assert sum(c) == n


def test_search_simcomp_small():
    for k in range(1, 9):
        assert search_simcomp(k, 12) == []
