"""Slow, independent reference implementations used only by the tests.

Nothing here imports the counting code of the package: partitions are built
from set partitions of [n] and containment is checked over all index subsets.
"""

from itertools import combinations
from math import comb


def set_partitions(n):
    # every partition of [n] as a restricted growth word, built block by block
    if n == 0:
        yield ()
        return
    for w in set_partitions(n - 1):
        top = max(w, default=0)
        for c in range(1, top + 2):
            yield w + (c,)


def _rank(seq):
    r = {v: i for i, v in enumerate(sorted(set(seq)))}
    return tuple(r[x] for x in seq)


def naive_contains(host, pat):
    pat = tuple(int(c) for c in pat) if isinstance(pat, str) else tuple(pat)
    target = _rank(pat)
    return any(_rank([host[i] for i in idx]) == target
               for idx in combinations(range(len(host)), len(pat)))


def naive_avoiders(patterns, n):
    return [w for w in set_partitions(n)
            if not any(naive_contains(w, p) for p in patterns)]


def naive_counts(patterns, max_n):
    return [len(naive_avoiders(patterns, n)) for n in range(max_n + 1)]


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def stirling2(n, k):
    return sum((-1) ** (k - j) * comb(k, j) * j ** n for j in range(k + 1)) // _fact(k)


def _fact(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def motzkin(n):
    return sum(comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))
