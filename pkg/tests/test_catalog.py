import pytest

from rgsavoid import catalog
from rgsavoid.avoid import count_avoiders
from rgsavoid.catalog import (CatalogEntry, UnknownEntry, expand_catalog, load_catalog,
                              oracle_counts, verify_entry)

from oracles import motzkin


def test_catalog_shape():
    cat = load_catalog()
    assert len(cat) >= 20
    for e in cat.values():
        assert e.kind in ("rational", "algebraic", "closed", "recurrence")
        assert e.oracles and e.anchor


def test_examples():
    assert expand_catalog("nc_12321", 5).integers() == (1, 1, 2, 5, 14, 41)
    assert expand_catalog("motzkin_nc111", 6).integers() == tuple(motzkin(n) for n in range(7))
    # quartic polynomial at n = 5: (625 - 750 + 475 - 110 + 16) / 8
    assert expand_catalog("pair_1211_1234", 5)[5] == 32
    assert expand_catalog("catalan_1212", 8).integers() == (1, 1, 2, 5, 14, 42, 132, 429, 1430)


def test_two_forms_of_the_headline_series():
    a = expand_catalog("tm1", 12)
    b = expand_catalog("tm2", 12)
    assert a == b
    assert a.integers() == tuple(count_avoiders(["1123", "1211"], 12))
    assert a.integers() == tuple(count_avoiders(["1123", "1222"], 12))


@pytest.mark.parametrize("entry_id", ["table1_row1", "table1_row4", "F_a_212", "incr_tau_m3_k5",
                                      "nc_cap_ends_121", "h_1221", "first_block_pair_1121_1211",
                                      "fibonacci_odd", "seq_w", "seq_L", "f_star_1122_1223"])
def test_selected_entries(entry_id):
    res = verify_entry(entry_id, 10)
    assert res.passed, res.mismatches
    assert res.to_json()["passed"]


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        expand_catalog("no_such_entry")


def test_wrong_formula_is_caught(monkeypatch):
    bad = CatalogEntry("bad", "rational", {"num": [1], "den": [[1, -2]]},
                       ({"patterns": ["123"]},), "deliberately off by one", 0)
    real = catalog.get_entry
    monkeypatch.setattr(catalog, "get_entry", lambda i: bad if i == "bad" else real(i))
    # 1/(1-2x) = 2^n, but the class is counted by 2^(n-1)
    res = verify_entry("bad", 6)
    assert not res.passed
    assert res.mismatches[0]["n"] == 1


def test_filter_oracle():
    full = oracle_counts(["1122", "1223"], 8)
    part = oracle_counts(["1122", "1223"], 8, "starts_with_all_blocks")
    assert all(p <= f for p, f in zip(part, full))
    assert part[3] < full[3]
