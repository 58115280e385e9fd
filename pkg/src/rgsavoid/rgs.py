"""Set partitions in canonical sequential form (restricted growth words)."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence


class InvalidRgs(ValueError):
    pass


class InvalidBlockCover(ValueError):
    pass


class NoAscent(ValueError):
    pass


def validate_rgs(word: Iterable[int]) -> bool:
    """Return True iff ``word`` is a restricted growth word.

    The empty word is valid (the partition of the empty set).
    """
    top = 0
    for x in word:
        if not isinstance(x, int) or x < 1 or x > top + 1:
            return False
        if x > top:
            top = x
    return True


class Rgs(tuple):
    """A set partition written as its restricted growth word.

    Instances are immutable tuples of positive ints, so they hash, compare
    lexicographically and slice like tuples.  Slicing returns a plain tuple.

    >>> Rgs.parse("12132431").num_blocks
    4
    """

    def __new__(cls, word: Iterable[int] = ()):
        word = tuple(word)
        if not validate_rgs(word):
            raise InvalidRgs(f"not a restricted growth word: {word!r}")
        return super().__new__(cls, word)

    @classmethod
    def parse(cls, text: str) -> "Rgs":
        """Parse ``"1212"`` or ``"1,2,3,10,2"``."""
        text = text.strip()
        if "," in text:
            try:
                word = [int(t) for t in text.split(",")]
            except ValueError:
                raise InvalidRgs(f"bad partition literal: {text!r}") from None
        else:
            if text and not text.isdigit():
                raise InvalidRgs(f"bad partition literal: {text!r}")
            word = [int(ch) for ch in text]
        return cls(word)

    def __repr__(self) -> str:
        return f"Rgs({str(self)!r})"

    def __str__(self) -> str:
        return format_word(self)

    @cached_property
    def num_blocks(self) -> int:
        return max(self, default=0)

    @cached_property
    def block_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.num_blocks
        for x in self:
            sizes[x - 1] += 1
        return tuple(sizes)

    @cached_property
    def max_prefix(self) -> tuple[int, ...]:
        """max(word[:i]) for i = 0..n."""
        out = [0]
        for x in self:
            out.append(max(out[-1], x))
        return tuple(out)

    @cached_property
    def first_positions(self) -> tuple[int, ...]:
        """0-based index of the first letter of each block."""
        pos = []
        for i, x in enumerate(self):
            if x > len(pos):
                pos.append(i)
        return tuple(pos)

    @cached_property
    def components(self) -> tuple["Rgs", ...]:
        return tuple(components(self))

    @cached_property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    def shifted(self, k: int) -> tuple[int, ...]:
        return tuple(x + k for x in self)

    def to_blocks(self) -> list[tuple[int, ...]]:
        return to_blocks(self)


Pattern = Rgs


def format_word(word: Sequence[int]) -> str:
    if all(x <= 9 for x in word):
        return "".join(map(str, word))
    return ",".join(map(str, word))


def as_rgs(p) -> Rgs:
    if isinstance(p, Rgs):
        return p
    if isinstance(p, str):
        return Rgs.parse(p)
    return Rgs(p)


def standardize(word: Sequence[int]) -> Rgs:
    """Relabel an arbitrary word so that it becomes a restricted growth word.

    Values are renumbered by order of first appearance.  This is *not*
    order-isomorphism; use :func:`order_type` for that.
    """
    labels: dict[int, int] = {}
    out = []
    for x in word:
        if x not in labels:
            labels[x] = len(labels) + 1
        out.append(labels[x])
    return Rgs(out)


def order_type(word: Sequence[int]) -> tuple[int, ...]:
    """Replace each value by its rank among the distinct values of ``word``."""
    rank = {v: i + 1 for i, v in enumerate(sorted(set(word)))}
    return tuple(rank[x] for x in word)


def from_blocks(blocks: Iterable[Iterable[int]]) -> Rgs:
    """Canonical word of a partition of [n] given as blocks in any order."""
    blocks = [sorted(set(b)) for b in blocks]
    if any(not b for b in blocks):
        raise InvalidBlockCover("empty block")
    elems = [x for b in blocks for x in b]
    n = len(elems)
    if sorted(elems) != list(range(1, n + 1)):
        raise InvalidBlockCover(f"blocks do not partition [1..{n}]")
    blocks.sort(key=lambda b: b[0])
    word = [0] * n
    for label, b in enumerate(blocks, start=1):
        for x in b:
            word[x - 1] = label
    return Rgs(word)


def to_blocks(p: Sequence[int]) -> list[tuple[int, ...]]:
    p = as_rgs(p)
    blocks: list[list[int]] = [[] for _ in range(max(p, default=0))]
    for i, x in enumerate(p, start=1):
        blocks[x - 1].append(i)
    return [tuple(b) for b in blocks]


def concat(left: Sequence[int], right: Sequence[int]) -> Rgs:
    """``left[right]``: ``right`` placed after ``left`` on fresh, larger blocks."""
    left, right = as_rgs(left), as_rgs(right)
    k = max(left, default=0)
    return Rgs(tuple(left) + tuple(x + k for x in right))


def components(p: Sequence[int]) -> list[Rgs]:
    """Unique factorisation p = c1[c2]...[cm] into connected pieces.

    A cut after position i is allowed when every later letter exceeds every
    earlier letter.  Defined for crossing partitions too.
    """
    p = as_rgs(p)
    n = len(p)
    if n == 0:
        return []
    suffix_min = [0] * (n + 1)
    suffix_min[n] = float("inf")
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(p[i], suffix_min[i + 1])
    out = []
    start = 0
    top = 0
    for i in range(n):
        top = max(top, p[i])
        if suffix_min[i + 1] > top:
            offset = max(p[:start], default=0)
            out.append(Rgs(x - offset for x in p[start:i + 1]))
            start = i + 1
    return out


def is_connected(p: Sequence[int]) -> bool:
    return len(components(p)) == 1


def fasc(p: Sequence[int]) -> int:
    """n - m + 1, where m is the (1-based) position of the last ascent."""
    p = as_rgs(p)
    n = len(p)
    for m in range(n - 1, 0, -1):
        if p[m - 1] < p[m]:
            return n - m + 1
    raise NoAscent("fasc needs a partition with at least two blocks")


def all_rgs(n: int):
    """Every restricted growth word of length n, in lexicographic order."""
    if n == 0:
        yield Rgs()
        return
    word = [1] * n
    top = [1] * n  # top[i] = max(word[:i+1])

    def rec(i):
        if i == n:
            yield Rgs(word)
            return
        for c in range(1, top[i - 1] + 2):
            word[i] = c
            top[i] = max(top[i - 1], c)
            yield from rec(i + 1)

    yield from rec(1)
