"""Exact enumeration of pattern-avoiding set partitions."""

from .rgs import (
    Rgs, Pattern, InvalidRgs, InvalidBlockCover, NoAscent,
    validate_rgs, from_blocks, to_blocks, components, is_connected, fasc, all_rgs, concat,
)
from .matching import (
    contains, avoids, occurrences, leftmost_occurrence, topmost_occurrence,
    substitute, family, InvalidTemplate, BadParams,
)
from .avoid import (
    CountVector, FascTriangle, AvoidanceAutomaton,
    enumerate_avoiders, iter_avoiders, count_avoiders, count_avoiders_by_blocks,
    profile_counts, fasc_triangle, shard_prefixes,
)
from .matching import contains as _contains


def is_noncrossing(p) -> bool:
    """True iff ``p`` avoids 1212."""
    return not _contains(p, "1212")


from .series import Series, BiSeries, evaluate
from .catalog import expand_catalog, verify_entry, load_catalog
from .recurrences import expand_F_a, recurrence_eval
from .classifier import classify, generate_pairs, verify_table, check_3k_bound

__version__ = "0.1.0"
