"""Containment, leftmost/topmost occurrences, and the bracket notation.

Occurrences are reported as 1-based index tuples.
"""

from __future__ import annotations

import re
from typing import Iterator, Sequence

from .rgs import Rgs, as_rgs, validate_rgs


class InvalidTemplate(ValueError):
    pass


class BadParams(ValueError):
    pass


def _occurrences0(host: Sequence[int], pat: Sequence[int],
                  first: int | None = None) -> Iterator[tuple[int, ...]]:
    # 0-based occurrences in lexicographic order.  Pattern symbols are
    # introduced in increasing order, so a fresh symbol must land on a host
    # value above every value assigned so far.  ``first`` pins the first index.
    n, k = len(host), len(pat)
    if k == 0:
        yield ()
        return
    idx = [0] * k
    vals: list[int] = []
    if first is not None:
        if first > n - k:
            return
        idx[0] = first
        vals.append(host[first])

    def rec(j, start):
        if j == k:
            yield tuple(idx)
            return
        s = pat[j]
        for i in range(start, n - (k - j) + 1):
            c = host[i]
            if s <= len(vals):
                if c != vals[s - 1]:
                    continue
                idx[j] = i
                yield from rec(j + 1, i + 1)
            else:
                if vals and c <= vals[-1]:
                    continue
                idx[j] = i
                vals.append(c)
                yield from rec(j + 1, i + 1)
                vals.pop()

    if first is None:
        yield from rec(0, 0)
    else:
        yield from rec(1, first + 1)


def occurrences(host, pattern) -> Iterator[tuple[int, ...]]:
    """All occurrences of ``pattern`` in ``host`` (1-based, lexicographic)."""
    host, pattern = as_rgs(host), as_rgs(pattern)
    for occ in _occurrences0(host, pattern):
        yield tuple(i + 1 for i in occ)


def contains(host, pattern) -> bool:
    host, pattern = as_rgs(host), as_rgs(pattern)
    if len(pattern) > len(host) or pattern.num_blocks > host.num_blocks:
        return False
    for _ in _occurrences0(host, pattern):
        return True
    return False


def avoids(host, pattern) -> bool:
    return not contains(host, pattern)


def leftmost_occurrence(host, pattern) -> tuple[int, ...] | None:
    """Occurrence with the smallest last index; ties go lexicographic."""
    host, pattern = as_rgs(host), as_rgs(pattern)
    if not pattern:
        return ()
    for end in range(len(pattern), len(host) + 1):
        # lexicographic order, so the first hit ending at end - 1 is the answer
        for occ in _occurrences0(host[:end], pattern):
            if occ[-1] == end - 1:
                return tuple(i + 1 for i in occ)
    return None


def topmost_occurrence(host, pattern) -> tuple[int, ...] | None:
    """Occurrence whose first letter has the largest host value.

    The first index is moved to the first position of its block; remaining
    ties go lexicographic.
    """
    host, pattern = as_rgs(host), as_rgs(pattern)
    if not pattern:
        return ()
    # any occurrence can start at the first position of its starting block
    for b in range(host.num_blocks, 0, -1):
        for occ in _occurrences0(host, pattern, host.first_positions[b - 1]):
            return tuple(i + 1 for i in occ)
    return None


# --- bracket notation --------------------------------------------------

_TOKEN = re.compile(r"\s*(\[|\]|,|\d+)")


def _tokenize(text: str) -> list[str]:
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InvalidTemplate(f"unexpected character at {pos} in {text!r}")
        out.append(m.group(1))
        pos = m.end()
    multi = "," in out
    tokens = []
    for t in out:
        if t == ",":
            continue
        if t.isdigit() and not multi:
            tokens.extend(t)  # one symbol per digit
        else:
            tokens.append(t)
    return tokens


def _parse_expr(tokens: list[str], pos: int) -> tuple[list, int]:
    items: list = []
    while pos < len(tokens) and tokens[pos] != "]":
        t = tokens[pos]
        if t == "[":
            inner, pos = _parse_expr(tokens, pos + 1)
            if pos >= len(tokens) or tokens[pos] != "]":
                raise InvalidTemplate("unbalanced '['")
            items.append(inner)
            pos += 1
        else:
            items.append(int(t))
            pos += 1
    return items, pos


def _build(items: list) -> list[int]:
    skeleton = [x for x in items if isinstance(x, int)]
    if not validate_rgs(skeleton):
        raise InvalidTemplate(f"skeleton {skeleton} is not a restricted growth word")
    out: list[int] = []
    seen: set[int] = set()
    for it in items:
        if isinstance(it, int):
            out.append(it)
            seen.add(it)
        else:
            shift = len(seen)
            part = [x + shift for x in _build(it)]
            out.extend(part)
            seen.update(part)
    return out


def substitute(template: str, parts: Sequence = ()) -> Rgs:
    """Expand a bracket template such as ``"1[112]1"`` or ``"1[σ1]1[σ2]"``.

    A bracketed part is shifted up by the number of distinct symbols that
    occur before it.  Placeholders ``σ1, σ2, ...`` are replaced textually by
    the corresponding entries of ``parts`` before parsing.
    """
    text = template
    for i in range(len(parts), 0, -1):
        text = text.replace(f"σ{i}", str(as_rgs(parts[i - 1])))
    if "σ" in text:
        raise InvalidTemplate(f"unfilled placeholder in {template!r}")
    tokens = _tokenize(text)
    items, pos = _parse_expr(tokens, 0)
    if pos != len(tokens):
        raise InvalidTemplate("unbalanced ']'")
    word = _build(items)
    if not validate_rgs(word):
        raise InvalidTemplate(f"{template!r} expands to {word}, not a partition")
    return Rgs(word)


# --- pattern families --------------------------------------------------

def _positive(*xs):
    if any((not isinstance(x, int)) or x < 1 for x in xs):
        raise BadParams(f"parameters must be positive integers: {xs}")


def tau121(a: Sequence[int]) -> Rgs:
    """1^a1 2^a2 ... m^am."""
    _positive(*a)
    return Rgs(i for i, ai in enumerate(a, start=1) for _ in range(ai))


def tau112(a: Sequence[int]) -> Rgs:
    """12...m m^(am-1) ... 1^(a1-1)."""
    _positive(*a)
    m = len(a)
    word = list(range(1, m + 1))
    for i in range(m, 0, -1):
        word.extend([i] * (a[i - 1] - 1))
    return Rgs(word)


def ones_two_ones(j: int, k: int) -> Rgs:
    """1^j 2 1^k."""
    _positive(j)
    if k < 0:
        raise BadParams("k must be >= 0")
    return Rgs([1] * j + [2] + [1] * k)


def incr_power(k: int, a: int) -> Rgs:
    """12...(k-1) k^a."""
    _positive(k, a)
    return Rgs(list(range(1, k)) + [k] * a)


def ones(k: int) -> Rgs:
    _positive(k)
    return Rgs([1] * k)


def incr(k: int) -> Rgs:
    _positive(k)
    return Rgs(range(1, k + 1))


_FAMILIES = {
    "tau112": tau112,
    "tau121": tau121,
    "ones_two_ones": ones_two_ones,
    "incr_power": incr_power,
    "ones": ones,
    "incr": incr,
}


def family(kind: str, *params) -> Rgs:
    try:
        fn = _FAMILIES[kind]
    except KeyError:
        raise BadParams(f"unknown family {kind!r}") from None
    return fn(*params)
