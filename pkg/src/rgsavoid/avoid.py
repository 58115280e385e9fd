"""Enumerating and counting pattern-avoiding partitions.

Every pattern is compiled into a small automaton whose state is the set of
partial matches of the pattern into the current prefix.  A partial match is
summarised by how many pattern letters are matched, the host values of the
pattern symbols that still recur later in the pattern, and the largest host
value used so far (only when a fresh symbol is still to come).  Among partial
matches agreeing on the first two items only the one with the smallest top
value is kept; it can be completed whenever any of the others can.

Prefixes with equal block count and equal automaton states have identical
futures, which lets :func:`count_avoiders` merge them level by level.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from itertools import chain
from typing import Callable, Iterable, Iterator, Sequence

from .matching import contains
from .rgs import Rgs, as_rgs, fasc


class CountVector(tuple):
    """Exact counts p_0..p_N of one avoidance class."""

    @property
    def max_n(self) -> int:
        return len(self) - 1


def minimal_patterns(patterns: Iterable) -> tuple[Rgs, ...]:
    """Deduplicate and drop any pattern that contains another one."""
    pats = sorted({as_rgs(p) for p in patterns}, key=lambda p: (len(p), p))
    if any(len(p) == 0 for p in pats):
        raise ValueError("the empty pattern is contained in every partition")
    keep: list[Rgs] = []
    for p in pats:
        if not any(contains(p, q) for q in keep):
            keep.append(p)
    return tuple(keep)


class PatternAutomaton:
    """Incremental containment tracker for one pattern."""

    def __init__(self, pattern):
        p = as_rgs(pattern)
        self.pattern = p
        self.k = k = len(p)
        prefix_max = [0]
        for x in p:
            prefix_max.append(max(prefix_max[-1], x))
        need = []
        fresh = []
        for j in range(k + 1):
            later = set(p[j:])
            need.append(tuple(s for s in range(1, prefix_max[j] + 1) if s in later))
            fresh.append(any(s > prefix_max[j] for s in p[j:]))
        # trans[j] = (old symbol?, index of its value, projection, fresh after)
        self.trans = []
        for j in range(k):
            s = p[j]
            if s <= prefix_max[j]:
                src = need[j]
                self.trans.append((True, src.index(s),
                                   tuple(src.index(t) for t in need[j + 1]),
                                   fresh[j + 1]))
            else:
                src = need[j] + (s,)
                self.trans.append((False, -1,
                                   tuple(src.index(t) for t in need[j + 1]),
                                   fresh[j + 1]))

    def step(self, state: tuple, c: int):
        """Append host letter ``c``; return the new state, or None on a match."""
        k = self.k
        trans = self.trans
        best = {(j, nd): t for j, nd, t in state}
        for j, nd, top in chain(((0, (), 0),), state):
            old, eq, proj, nfresh = trans[j]
            if old:
                if nd[eq] != c:
                    continue
                nnd = tuple(nd[i] for i in proj)
                ntop = top if nfresh else 0
            else:
                if c <= top:
                    continue
                ext = nd + (c,)
                nnd = tuple(ext[i] for i in proj)
                ntop = c if nfresh else 0
            if j + 1 == k:
                return None
            key = (j + 1, nnd)
            prev = best.get(key)
            if prev is None or ntop < prev:
                best[key] = ntop
        return tuple(sorted((j, nd, t) for (j, nd), t in best.items()))


class AvoidanceAutomaton:
    """Product of pattern automata plus the current number of blocks.

    States are ``(m, s_1, ..., s_r)``; transitions are memoised.
    """

    def __init__(self, patterns: Iterable):
        self.patterns = minimal_patterns(patterns)
        self.autos = [PatternAutomaton(p) for p in self.patterns]
        self.start = (0,) + tuple(() for _ in self.autos)
        self._cache: dict = {}

    def step(self, state: tuple, c: int):
        key = (state, c)
        try:
            return self._cache[key]
        except KeyError:
            pass
        subs = []
        result = None
        for auto, s in zip(self.autos, state[1:]):
            ns = auto.step(s, c)
            if ns is None:
                break
            subs.append(ns)
        else:
            result = (max(state[0], c),) + tuple(subs)
        self._cache[key] = result
        return result

    def run(self, word: Sequence[int]):
        state = self.start
        for c in word:
            state = self.step(state, c)
            if state is None:
                return None
        return state


def iter_avoiders(patterns: Iterable, n: int, prefix: Sequence[int] = ()) -> Iterator[Rgs]:
    """Yield every member of P_n(patterns) in lexicographic order.

    With ``prefix`` only the words starting with it are produced, which is
    how a search is split into shards.
    """
    auto = patterns if isinstance(patterns, AvoidanceAutomaton) else AvoidanceAutomaton(patterns)
    prefix = tuple(prefix)
    if len(prefix) > n:
        return
    start = auto.run(prefix)
    if start is None:
        return
    word = list(prefix)

    def rec(state, depth):
        if depth == n:
            yield Rgs(word)
            return
        for c in range(1, state[0] + 2):
            ns = auto.step(state, c)
            if ns is None:
                continue
            word.append(c)
            yield from rec(ns, depth + 1)
            word.pop()

    yield from rec(start, len(prefix))


def enumerate_avoiders(patterns: Iterable, n: int, sink: Callable[[Rgs], object]) -> None:
    """Call ``sink`` once per member of P_n(patterns), lexicographically."""
    for p in iter_avoiders(patterns, n):
        sink(p)


def shard_prefixes(patterns: Iterable, n: int, depth: int) -> list[tuple[int, ...]]:
    """Avoiding prefixes of length min(depth, n), in lexicographic order.

    Running :func:`iter_avoiders` on each prefix and concatenating the results
    in this order reproduces the unsharded enumeration.
    """
    return [tuple(p) for p in iter_avoiders(patterns, min(depth, n))]


def _levels(patterns: Iterable, max_n: int):
    auto = AvoidanceAutomaton(patterns)
    level = {auto.start: 1}
    yield level
    for _ in range(max_n):
        nxt: dict = defaultdict(int)
        for state, cnt in level.items():
            for c in range(1, state[0] + 2):
                ns = auto.step(state, c)
                if ns is not None:
                    nxt[ns] += cnt
        level = nxt
        yield level


def count_avoiders(patterns: Iterable, max_n: int) -> CountVector:
    """counts[n] = |P_n(patterns)| for n = 0..max_n."""
    return CountVector(sum(level.values()) for level in _levels(patterns, max_n))


def count_avoiders_dfs(patterns: Iterable, max_n: int) -> CountVector:
    """Same as :func:`count_avoiders` but visiting every avoider."""
    auto = AvoidanceAutomaton(patterns)
    counts = [0] * (max_n + 1)

    def rec(state, depth):
        counts[depth] += 1
        if depth == max_n:
            return
        for c in range(1, state[0] + 2):
            ns = auto.step(state, c)
            if ns is not None:
                rec(ns, depth + 1)

    rec(auto.start, 0)
    return CountVector(counts)


def count_avoiders_by_blocks(patterns: Iterable, max_n: int) -> dict[tuple[int, int], int]:
    """{(n, k): p_{n,k}} for n <= max_n, nonzero entries only."""
    table: dict[tuple[int, int], int] = {}
    for n, level in enumerate(_levels(patterns, max_n)):
        for state, cnt in level.items():
            key = (n, state[0])
            table[key] = table.get(key, 0) + cnt
    return table


def profile_counts(patterns: Iterable, n: int) -> dict[tuple[int, ...], int]:
    """Number of avoiders of size n for each block-size sequence."""
    return dict(Counter(p.block_sizes for p in iter_avoiders(patterns, n)))


# --- fasc triangles -----------------------------------------------------

_TRIANGLES = {
    "A": (("1123", "1211"), None),
    "B": (("1123", "111"), None),
    "C": (("1123", "1222"), lambda p: p[-1] != 1),
}


class FascTriangle(dict):
    """Map (n, k, t) -> count, for one of the variants A, B, C."""

    def __init__(self, variant: str, entries=()):
        super().__init__(entries)
        self.variant = variant

    def __missing__(self, key):
        return 0

    def nonzero(self) -> dict:
        return {k: v for k, v in self.items() if v}


def fasc_triangle(variant: str, max_n: int) -> FascTriangle:
    """Counts of avoiders with k >= 2 blocks by fasc value, by enumeration.

    A avoids {1123, 1211}; B avoids {1123, 111}; C avoids {1123, 1222} and
    must not end in 1.
    """
    try:
        patterns, keep = _TRIANGLES[variant]
    except KeyError:
        raise ValueError(f"unknown triangle variant {variant!r}") from None
    tri = FascTriangle(variant)
    auto = AvoidanceAutomaton(patterns)
    for n in range(2, max_n + 1):
        for p in iter_avoiders(auto, n):
            if p.num_blocks < 2 or (keep and not keep(p)):
                continue
            key = (n, p.num_blocks, fasc(p))
            tri[key] = tri.get(key, 0) + 1
    return tri
