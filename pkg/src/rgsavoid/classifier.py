"""Grouping pattern sets by counting signatures.

A *member* is a tuple of pattern literals.  Its signature under a notion:

* ``wilf``: counts of partitions avoiding every pattern of the member.
* ``nc``: the same with 1212 added, i.e. non-crossing avoiders.
* ``cc``: non-crossing avoiders counted by (size, number of components).
* ``strong``: avoiders counted by (size, block-size sequence).

Signatures are exact; equal signatures mean "equal up to max_n", nothing more.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations
from typing import Iterable, Sequence

from .avoid import count_avoiders, iter_avoiders, profile_counts
from .compositions import count_dominating, xi
from .matching import contains
from .rgs import Rgs, all_rgs, as_rgs

NOTIONS = ("wilf", "nc", "cc", "strong")
FAMILIES = ("three_k", "four_four", "nc_tau")


class UnknownFixture(KeyError):
    pass


class CrossingPattern(ValueError):
    pass


Member = tuple  # tuple of pattern literal strings


def member_label(m: Member) -> str:
    return "+".join(m)


def parse_member(text: str) -> Member:
    return tuple(str(as_rgs(t)) for t in text.split("+"))


# --- families ---------------------------------------------------------------------

def generate_pairs(family: str, k: int | None = None, size: int | None = None) -> list[Member]:
    if family == "three_k":
        if k is None or k < 1:
            raise ValueError("three_k needs k >= 1")
        return [(s, str(t)) for s in ("112", "121", "122", "123")
                for t in iter_avoiders([s], k)]
    if family == "four_four":
        return [(str(a), str(b)) for a, b in combinations(all_rgs(4), 2)]
    if family == "nc_tau":
        if size is None or size < 1:
            raise ValueError("nc_tau needs size >= 1")
        return [(str(t),) for t in iter_avoiders(["1212"], size)]
    raise ValueError(f"unknown family {family!r}")


# --- signatures -----------------------------------------------------------------------

def _composition_fast_path(member: Member, max_n: int):
    # (112, tau) and (121, tau) with tau avoiding the first pattern: the
    # avoiders of both are the 2^(n-1) avoiders of sigma minus those whose
    # block sizes dominate the block sizes of tau.
    if len(member) != 2 or member[0] not in ("112", "121"):
        return None
    tau = as_rgs(member[1])
    if contains(tau, member[0]):
        return None
    a = tau.block_sizes
    return tuple([1] + [2 ** (n - 1) - count_dominating(a, n) for n in range(1, max_n + 1)])


def wilf_signature(member: Member, max_n: int, fast: bool = True) -> tuple:
    if fast:
        sig = _composition_fast_path(member, max_n)
        if sig is not None:
            return sig
    return tuple(count_avoiders(member, max_n))


def nc_signature(member: Member, max_n: int) -> tuple:
    return tuple(count_avoiders(("1212",) + tuple(member), max_n))


def cc_signature(member: Member, max_n: int) -> tuple:
    rows = []
    for n in range(max_n + 1):
        c = Counter(len(p.components) for p in iter_avoiders(("1212",) + tuple(member), n))
        rows.append(tuple(sorted(c.items())))
    return tuple(rows)


def strong_signature(member: Member, max_n: int) -> tuple:
    return tuple(tuple(sorted(profile_counts(member, n).items())) for n in range(max_n + 1))


_SIGNATURES = {
    "wilf": wilf_signature,
    "nc": nc_signature,
    "cc": cc_signature,
    "strong": strong_signature,
}


def signature(notion: str, member: Member, max_n: int) -> tuple:
    try:
        fn = _SIGNATURES[notion]
    except KeyError:
        raise ValueError(f"unknown notion {notion!r}") from None
    return fn(member, max_n)


def _sig_task(args):
    notion, member, max_n = args
    return signature(notion, member, max_n)


def digest(sig: tuple) -> str:
    return hashlib.sha256(repr(sig).encode()).hexdigest()


def first_difference(sig_a: tuple, sig_b: tuple) -> int | None:
    """Smallest n where two signatures disagree (None if they agree)."""
    for n, (x, y) in enumerate(zip(sig_a, sig_b)):
        if x != y:
            return n
    return None


# --- classification -------------------------------------------------------------------

@dataclass
class EquivClass:
    members: list
    digest: str
    signature: tuple
    first_separating_n_vs_next: int | None = None

    @property
    def counts(self) -> tuple | None:
        """Plain count sequence (wilf and nc notions)."""
        if self.signature and isinstance(self.signature[0], int):
            return self.signature
        return None


@dataclass
class ClassificationReport:
    notion: str
    max_n: int
    classes: list
    diff: list | None = None

    @property
    def singletons(self) -> list:
        return [c for c in self.classes if len(c.members) == 1]

    def member_sets(self) -> list[list[str]]:
        return [[member_label(m) for m in c.members] for c in self.classes]

    def to_json(self) -> dict:
        return {
            "notion": self.notion,
            "max_n": self.max_n,
            "classes": [{
                "members": [member_label(m) for m in c.members],
                "digest": c.digest,
                "counts": list(c.counts) if c.counts is not None else None,
                "first_separating_n_vs_next_class": c.first_separating_n_vs_next,
            } for c in self.classes],
            "diff": self.diff,
        }


def compute_signatures(members: Sequence[Member], notion: str, max_n: int,
                       workers: int = 1) -> list[tuple]:
    tasks = [(notion, tuple(m), max_n) for m in members]
    if workers <= 1 or len(tasks) < 2:
        return [_sig_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_sig_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))


def _member_key(m: Member):
    return tuple((len(p), p) for p in m)


def classify(members: Iterable[Member], notion: str = "wilf", max_n: int = 12,
             workers: int = 1) -> ClassificationReport:
    """Group members by exact signature up to max_n.

    Members inside a class are sorted; classes are ordered by their smallest
    member, so the report does not depend on input order or worker count.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    members = sorted({tuple(m) for m in members}, key=_member_key)
    sigs = compute_signatures(members, notion, max_n, workers)
    groups: dict[str, list] = {}
    sig_of: dict[str, tuple] = {}
    for m, s in zip(members, sigs):
        d = digest(s)
        groups.setdefault(d, []).append(m)
        sig_of[d] = s
    classes = [EquivClass(sorted(ms, key=_member_key), d, sig_of[d]) for d, ms in groups.items()]
    classes.sort(key=lambda c: _member_key(c.members[0]))
    for c, nxt in zip(classes, classes[1:]):
        c.first_separating_n_vs_next = first_difference(c.signature, nxt.signature)
    return ClassificationReport(notion, max_n, classes)


# --- fixtures ----------------------------------------------------------------------------

@dataclass
class Fixture:
    id: str
    family: str
    params: dict
    notion: str
    classes: list  # list of (frozenset of member frozensets, anchor)
    rest_singletons: bool = False
    header: dict = field(default_factory=dict)


def _fixture_path(fixture_id: str):
    return resources.files("rgsavoid").joinpath(f"data/fixtures/{fixture_id}.txt")


def list_fixtures() -> list[str]:
    d = resources.files("rgsavoid").joinpath("data/fixtures")
    return sorted(p.name[:-4] for p in d.iterdir() if p.name.endswith(".txt"))


def parse_fixture(fixture_id: str, text: str) -> Fixture:
    """Fixture format.

    Header lines ``@key value`` (family, k, size, notion, rest).  Then one
    class per line: members joined by whitespace, each member a ``+``-joined
    pattern set, optionally followed by ``# anchor``.  ``@rest singletons``
    says every family member not listed forms a class on its own.
    """
    header: dict = {}
    classes = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("@"):
            key, _, value = line[1:].partition(" ")
            header[key] = value.strip()
            continue
        body, _, anchor = line.partition("#")
        members = frozenset(frozenset(parse_member(t)) for t in body.split())
        classes.append((members, anchor.strip()))
    params = {}
    if "k" in header:
        params["k"] = int(header["k"])
    if "size" in header:
        params["size"] = int(header["size"])
    return Fixture(fixture_id, header.get("family", ""), params, header.get("notion", "wilf"),
                   classes, header.get("rest") == "singletons", header)


def load_fixture(fixture_id: str) -> Fixture:
    path = _fixture_path(fixture_id)
    if not path.is_file():
        raise UnknownFixture(fixture_id)
    return parse_fixture(fixture_id, path.read_text())


def expected_partition(fx: Fixture, family_members: Sequence[Member]) -> list[frozenset]:
    expected = [c for c, _ in fx.classes]
    if fx.rest_singletons:
        listed = set().union(*expected) if expected else set()
        expected += [frozenset([frozenset(m)]) for m in family_members
                     if frozenset(m) not in listed]
    return expected


def verify_table(report: ClassificationReport, fixture, family_members=None) -> list[dict]:
    """Differences between computed classes and a fixture (empty list = exact match)."""
    fx = fixture if isinstance(fixture, Fixture) else load_fixture(fixture)
    got = [frozenset(frozenset(m) for m in c.members) for c in report.classes]
    if family_members is None:
        family_members = [m for c in report.classes for m in c.members]
    expected = expected_partition(fx, family_members)
    where = {m: i for i, c in enumerate(got) for m in c}
    got_set = set(got)
    diff = []

    def lab(ms):
        return sorted(member_label(tuple(sorted(m, key=lambda p: (len(p), p)))) for m in ms)

    for e in expected:
        if e in got_set:
            continue
        missing = [m for m in e if m not in where]
        hosts = {where[m] for m in e if m in where}
        entry = {"expected": lab(e)}
        if missing:
            entry["kind"] = "not_computed"
            entry["missing"] = lab(missing)
        elif len(hosts) > 1:
            entry["kind"] = "split"
            entry["computed"] = [lab(got[h]) for h in sorted(hosts)]
        else:
            entry["kind"] = "merged"
            entry["computed"] = [lab(got[h]) for h in hosts]
        diff.append(entry)
    listed = set().union(*expected) if expected else set()
    extra = [m for c in got for m in c if m not in listed]
    if extra:
        diff.append({"kind": "unexpected_members", "members": lab(extra)})
    report.diff = diff
    return diff


# --- specific checks ------------------------------------------------------------------------

def check_3k_bound(k: int, max_n: int, workers: int = 1) -> tuple[int, int]:
    """(number of wilf classes of (3,k)-pairs up to max_n, 1 + xi_k)."""
    if k < 3:
        raise ValueError("k must be >= 3")
    report = classify(generate_pairs("three_k", k=k), "wilf", max_n, workers)
    return len(report.classes), 1 + xi(k)


def strong_difference(sigma, tau, max_n: int):
    """First (n, profile, count_sigma, count_tau) where block-size profiles differ, else None."""
    for n in range(max_n + 1):
        a = profile_counts([sigma], n)
        b = profile_counts([tau], n)
        if a != b:
            prof = min(set(a) ^ set(b) | {p for p in a if a.get(p) != b.get(p)})
            return n, prof, a.get(prof, 0), b.get(prof, 0)
    return None


def strong_equiv_check(sigma, tau, max_n: int) -> bool:
    return strong_difference(sigma, tau, max_n) is None


def cc_equiv_check(sigma, tau, max_n: int) -> bool:
    for p in (sigma, tau):
        if contains(as_rgs(p), "1212"):
            raise CrossingPattern(f"{as_rgs(p)} contains 1212")
    s = (str(as_rgs(sigma)),)
    t = (str(as_rgs(tau)),)
    return cc_signature(s, max_n) == cc_signature(t, max_n)


def nc_equiv_check(sigma, tau, max_n: int) -> bool:
    return nc_signature((str(as_rgs(sigma)),), max_n) == nc_signature((str(as_rgs(tau)),), max_n)


def report_json(report: ClassificationReport) -> str:
    return json.dumps(report.to_json(), indent=1, sort_keys=True)
