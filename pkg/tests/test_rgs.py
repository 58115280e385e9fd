import pytest
from hypothesis import given, strategies as st

from rgsavoid.rgs import (InvalidBlockCover, InvalidRgs, NoAscent, Rgs, all_rgs, as_rgs,
                          components, concat, fasc, from_blocks, is_connected, standardize,
                          to_blocks, validate_rgs)
from rgsavoid import is_noncrossing

from oracles import bell, naive_contains


def test_validate():
    assert validate_rgs([])
    assert validate_rgs([1, 2, 1, 3, 2, 4, 3, 1])
    assert not validate_rgs([1, 3])
    assert not validate_rgs([2])
    assert not validate_rgs([1, 0])


def test_parse_and_reject():
    assert Rgs.parse("12132431") == (1, 2, 1, 3, 2, 4, 3, 1)
    assert as_rgs("1,2,3,4,5,6,7,8,9,10").num_blocks == 10
    with pytest.raises(InvalidRgs):
        as_rgs("13")
    with pytest.raises(InvalidRgs):
        Rgs([2, 1])


def test_from_blocks():
    assert from_blocks([{1, 3, 8}, {2, 5}, {4, 7}, {6}]) == as_rgs("12132431")
    assert from_blocks([{1}]) == as_rgs("1")
    assert from_blocks([{2, 3}, {1}]) == as_rgs("122")
    with pytest.raises(InvalidBlockCover):
        from_blocks([{1, 2}, {2, 3}])
    with pytest.raises(InvalidBlockCover):
        from_blocks([{1}, {3}])


def test_block_data():
    p = as_rgs("12132431")
    assert p.num_blocks == 4
    assert p.block_sizes == (3, 2, 2, 1)
    assert sum(p.block_sizes) == len(p)
    assert to_blocks(p) == [(1, 3, 8), (2, 5), (4, 7), (6,)]
    assert Rgs().num_blocks == 0


def test_components():
    assert components(as_rgs("1122")) == [as_rgs("11"), as_rgs("11")]
    assert components(as_rgs("121")) == [as_rgs("121")]
    assert components(Rgs()) == []
    assert concat("121", "1") == as_rgs("1213")
    assert is_connected("121") and not is_connected("12")


@given(st.lists(st.sampled_from(["1", "11", "121", "1221", "12321", "1211"]), min_size=1, max_size=4))
def test_components_invert_concat(parts):
    p = Rgs()
    for q in parts:
        p = concat(p, q)
    assert components(p) == [as_rgs(q) for q in parts]
    assert all(c.is_connected for c in components(p))


def test_fasc():
    assert fasc("123241355311") == 6
    assert fasc("12") == 2
    assert fasc("1223") == 2 and fasc("1213") == 2
    assert fasc("1231") == 3 and fasc("1232") == 3 and fasc("1233") == 3
    with pytest.raises(NoAscent):
        fasc("111")


def test_all_rgs_bell():
    for n in range(8):
        words = list(all_rgs(n))
        assert len(words) == bell(n)
        assert words == sorted(words)


def test_noncrossing():
    assert not is_noncrossing("1212")
    assert not is_noncrossing("12132431")
    assert is_noncrossing("12332")
    for n in range(7):
        for p in all_rgs(n):
            assert is_noncrossing(p) == (not naive_contains(p, "1212"))


def test_standardize():
    assert standardize([5, 3, 5, 9]) == as_rgs("1213")
