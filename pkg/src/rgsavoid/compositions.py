"""Integer compositions, domination, and 2-free normal forms."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

Composition = tuple  # tuple of positive ints


class NotDominating(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if not text:
        return ()
    parts = tuple(int(t) for t in text.split(","))
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {text!r}")
    return parts


def format_composition(a: Sequence[int]) -> str:
    return ",".join(map(str, a))


def compositions(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of n (just the empty one for n = 0)."""
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        parts = []
        run = 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def integer_partitions(n: int, largest: int | None = None) -> Iterator[Composition]:
    """Weakly decreasing compositions of n."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def two_free_partitions(n: int) -> list[Composition]:
    return [p for p in integer_partitions(n) if 2 not in p]


def xi(k: int) -> int:
    """Number of integer partitions of k with no part equal to 2."""
    return len(two_free_partitions(k))


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``b`` dominates ``a``.

    Greedy: scan ``b`` left to right and match the next part of ``a``
    whenever the current part of ``b`` is large enough.
    """
    j = 0
    m = len(a)
    for x in b:
        if j == m:
            break
        if x >= a[j]:
            j += 1
    return j == m


def _greedy_prefix(a, b) -> int:
    """Smallest i such that b[:i] dominates a (len(b)+1 if none)."""
    if not a:
        return 0
    j = 0
    for i, x in enumerate(b):
        if x >= a[j]:
            j += 1
            if j == len(a):
                return i + 1
    return len(b) + 1


def count_dominating_enum(a: Sequence[int], n: int) -> int:
    return sum(1 for b in compositions(n) if dominates(a, b))


def count_dominating_dp(a: Sequence[int], n: int) -> int:
    a = tuple(a)
    return _dp(a, n, 0)


@lru_cache(maxsize=None)
def _dp(a: tuple, r: int, j: int) -> int:
    # compositions of r that finish the greedy match of a[j:]
    m = len(a)
    if j == m:
        return 1 << (r - 1) if r > 0 else 1
    total = 0
    need = a[j]
    for p in range(1, r + 1):
        total += _dp(a, r - p, j + 1 if p >= need else j)
    return total


def count_dominating(a: Sequence[int], n: int) -> int:
    """Number of compositions of n dominating ``a``."""
    if n <= 12:
        return count_dominating_enum(a, n)
    return count_dominating_dp(a, n)


def dominating_counts(a: Sequence[int], max_n: int) -> tuple[int, ...]:
    return tuple(count_dominating_dp(a, n) for n in range(max_n + 1))


def first_separating_n(a: Sequence[int], b: Sequence[int], max_n: int) -> int | None:
    for n in range(max_n + 1):
        if count_dominating_dp(a, n) != count_dominating_dp(b, n):
            return n
    return None


def simcomp_check(a: Sequence[int], b: Sequence[int], max_n: int) -> bool:
    """Dominator counts of ``a`` and ``b`` agree for every n <= max_n."""
    return first_separating_n(a, b, max_n) is None


def bijection_multi1(b: Sequence[int], a: Sequence[int], r: int) -> Composition:
    """Map a dominator of ``a`` to a dominator of ``a`` with parts r, r+1 swapped.

    ``r`` is 1-based.  The block of ``b`` between the greedy match of
    a[:r-1] from the left and the greedy match of a[r+1:] from the right is
    reversed.  Applying the map again with the swapped ``a`` undoes it.
    """
    b, a = tuple(b), tuple(a)
    m = len(a)
    if not 1 <= r < m:
        raise ValueError(f"r must satisfy 1 <= r < {m}")
    if not dominates(a, b):
        raise NotDominating(f"{b} does not dominate {a}")
    i = _greedy_prefix(a[:r - 1], b)
    j = len(b) - _greedy_prefix(a[r + 1:][::-1], b[::-1])
    return b[:i] + b[i:j][::-1] + b[j:]


def swap(a: Sequence[int], r: int) -> Composition:
    a = list(a)
    a[r - 1], a[r] = a[r], a[r - 1]
    return tuple(a)


def bijection_multi2(b: Sequence[int], a: Sequence[int]) -> Composition:
    """Map a non-dominator of ``a`` (ending in 2) to a non-dominator of a[:-1]+(1,1).

    If ``b`` dominates a[:-1], the trailing parts after the shortest
    dominating prefix are all 1 and get merged into one part.
    """
    b, a = tuple(b), tuple(a)
    if not a or a[-1] != 2:
        raise PreconditionViolated("a must end in 2")
    if dominates(a, b):
        raise PreconditionViolated(f"{b} dominates {a}")
    head = a[:-1]
    if not dominates(head, b):
        return b
    i = _greedy_prefix(head, b)
    if i == len(b):
        return b
    return b[:i] + (sum(b[i:]),)


def normalize_2free(a: Sequence[int]) -> Composition:
    """Weakly decreasing, 2-free representative of the class of ``a``."""
    parts = []
    for x in sorted(a, reverse=True):
        parts.extend((1, 1) if x == 2 else (x,))
    return tuple(sorted(parts, reverse=True))


def search_simcomp(k: int, max_n: int) -> list[tuple[Composition, Composition]]:
    """Pairs of distinct 2-free partitions of k with equal counts up to max_n."""
    sig: dict[tuple, list] = {}
    for p in two_free_partitions(k):
        sig.setdefault(dominating_counts(p, max_n), []).append(p)
    out = []
    for group in sig.values():
        out.extend(combinations(group, 2))
    return out
