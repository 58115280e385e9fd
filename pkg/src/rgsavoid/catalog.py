"""Catalog of closed-form generating functions and their enumeration oracles.

Entries live in ``data/catalog.json``.  Each one has

* ``id``: lookup key.
* ``kind``: ``rational``, ``algebraic``, ``closed`` or ``recurrence``.
* ``recipe``: how to expand it (see the ``_expand_*`` functions).
* ``oracles``: avoidance classes whose counts the expansion must equal.
  Each is ``{"patterns": [...], "filter": optional name}``.
* ``anchor``: short human label of the statement being checked.
* ``valid_from``: first n at which the formula is claimed (default 0).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable

from . import recurrences as rec
from .avoid import count_avoiders, iter_avoiders, CountVector
from .rgs import Rgs
from .series import Series, evaluate, rational


class UnknownEntry(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: str
    recipe: dict
    oracles: tuple
    anchor: str
    valid_from: int = 0


@dataclass
class EntryResult:
    id: str
    anchor: str
    order: int
    expansion: tuple
    oracle_counts: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "order": self.order,
            "passed": self.passed,
            "expansion": [str(c) for c in self.expansion],
            "oracles": {k: list(v) for k, v in self.oracle_counts.items()},
            "mismatches": self.mismatches,
        }


@lru_cache(maxsize=None)
def load_catalog() -> dict[str, CatalogEntry]:
    text = resources.files("rgsavoid").joinpath("data/catalog.json").read_text()
    out = {}
    for raw in json.loads(text)["entries"]:
        e = CatalogEntry(
            id=raw["id"], kind=raw["kind"], recipe=raw["recipe"],
            oracles=tuple(raw["oracles"]), anchor=raw["anchor"],
            valid_from=raw.get("valid_from", 0))
        out[e.id] = e
    return out


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return load_catalog()[entry_id]
    except KeyError:
        raise UnknownEntry(entry_id) from None


# --- oracle side -------------------------------------------------------------

def _starts_with_all_blocks(p: Rgs) -> bool:
    # the first k letters are 1, 2, ..., k where k is the number of blocks
    k = p.num_blocks
    return tuple(p[:k]) == tuple(range(1, k + 1))


FILTERS: dict[str, Callable[[Rgs], bool]] = {
    "starts_with_all_blocks": _starts_with_all_blocks,
}


def oracle_counts(patterns, max_n: int, filter_name: str | None = None) -> CountVector:
    if filter_name is None:
        return count_avoiders(patterns, max_n)
    keep = FILTERS[filter_name]
    return CountVector(sum(1 for p in iter_avoiders(patterns, n) if keep(p))
                       for n in range(max_n + 1))


def _nc(pattern, order: int) -> Series:
    """Series of non-crossing partitions avoiding ``pattern``."""
    return Series(count_avoiders(["1212", pattern], order))


# --- expansion side ------------------------------------------------------------

def _expand_rational(recipe: dict, order: int) -> Series:
    return rational(recipe["num"], recipe["den"], order)


def _expand_algebraic(recipe: dict, order: int) -> Series:
    return evaluate(recipe["expr"], order, slack=recipe.get("slack", 8))


_CLOSED: dict[str, Callable] = {
    "quartic": rec.quartic,
    "quartic_binomial": rec.quartic_binomial,
    "one_plus_n_pow": rec.one_plus_n_pow,
    "quadratic_pow2": rec.quadratic_pow2,
    "nc12321": rec.nc12321,
    "fib_shifted": rec.fib_shifted,
    "partial_binomial_sum": rec.partial_binomial_sum,
    "n_plus_binom": lambda n: 1 if n == 0 else n + (n - 1) * (n - 2) // 2,
}


def _expand_closed(recipe: dict, order: int) -> Series:
    fn = _CLOSED[recipe["name"]]
    args = recipe.get("args", [])
    return Series(fn(n, *args) for n in range(order + 1))


def _expand_recurrence(recipe: dict, order: int) -> Series:
    name = recipe["name"]
    if name == "F_a":
        return rec.expand_F_a(tuple(recipe["a"]), order).at_y(1)
    if name == "incr_and_tau":
        return rec.incr_and_tau_series(recipe["m"], recipe["k"], order)
    if name == "bounded_blocks":
        return rec.bounded_blocks_series(recipe["k"], order)
    if name == "binomial_transform":
        base = count_avoiders(recipe["base"], order)
        return Series(rec.binomial_transform(base, order))
    if name == "one_a_two_one_b":
        base = count_avoiders(recipe["base"], order)
        return Series(rec.one_a_two_one_b(base, recipe["k"], order))
    if name == "first_block_pair":
        pair = recipe["pair"]
        base = count_avoiders(pair + recipe["base"], order)
        # only n >= 4 is claimed; the first four terms are counted directly
        initial = count_avoiders(pair + recipe["target"], 3)
        return Series(rec.first_block_pair(base, initial, order))
    if name == "h_successor":
        h_tau = Series(count_avoiders(["1213", recipe["tau"]], order))
        return rec.h_successor(h_tau)
    if name == "nc_one_over":
        # NC(1[s]) = 1 / (1 - x NC(s)) for connected s
        x = Series.x(order)
        return 1 / (1 - x * _nc(recipe["sigma"], order))
    if name == "nc_cap_ends":
        # NC(1[t]1) = (1 - x - C) / (1 - 2x - C + xC), C = 1 - 1/NC(t)
        x = Series.x(order)
        c = 1 - 1 / _nc(recipe["tau"], order)
        return (1 - x - c) / (1 - 2 * x - c + x * c)
    raise ValueError(f"unknown recurrence recipe {name!r}")


_EXPANDERS = {
    "rational": _expand_rational,
    "algebraic": _expand_algebraic,
    "closed": _expand_closed,
    "recurrence": _expand_recurrence,
}


def expand_catalog(entry_id: str, order: int = 16) -> Series:
    e = get_entry(entry_id)
    return _EXPANDERS[e.kind](e.recipe, order)


def oracle_label(oracle: dict) -> str:
    label = ",".join(oracle["patterns"]) or "-"
    if oracle.get("filter"):
        label += f"|{oracle['filter']}"
    return label


def verify_entry(entry_id: str, order: int = 12) -> EntryResult:
    e = get_entry(entry_id)
    s = expand_catalog(entry_id, order)
    res = EntryResult(e.id, e.anchor, order, tuple(s.coeffs))
    for oracle in e.oracles:
        counts = oracle_counts(oracle["patterns"], order, oracle.get("filter"))
        label = oracle_label(oracle)
        res.oracle_counts[label] = counts
        for n in range(e.valid_from, order + 1):
            if s[n] != counts[n]:
                res.mismatches.append({"oracle": label, "n": n,
                                       "expected": str(s[n]), "counted": counts[n]})
                break
    return res


def verify_all(order: int = 12) -> list[EntryResult]:
    return [verify_entry(i, order) for i in sorted(load_catalog())]

