"""Counting set partitions that avoid patterns.

A partition of [n] is written as its restricted growth word: element i gets
the label of its block, blocks numbered by their smallest element.  A pattern
occurs when some subsequence has the same equalities and order as the
pattern word.
"""

from rgsavoid import contains, count_avoiders, iter_avoiders
from rgsavoid.rgs import as_rgs, from_blocks
from rgsavoid.matching import leftmost_occurrence, topmost_occurrence


def show(label, counts):
    print(f"  {label:28s} {', '.join(map(str, counts))}")


p = from_blocks([{1, 3, 8}, {2, 5}, {4, 7}, {6}])
print("blocks 138/25/47/6 ->", p, "block sizes", p.block_sizes)
print("contains 1212?", contains(p, "1212"))
print()

host = as_rgs("11233245466233")
print("host", host)
print("  leftmost 122:", leftmost_occurrence(host, "122"))
print("  topmost 122: ", topmost_occurrence(host, "122"))
print()

print("counts for n = 0..10")
show("no pattern (Bell)", count_avoiders([], 10))
for s in ("112", "121", "122", "123"):
    show(f"avoid {s}", count_avoiders([s], 10))
show("avoid 1212 (non-crossing)", count_avoiders(["1212"], 10))
show("avoid 1212, 111 (Motzkin)", count_avoiders(["1212", "111"], 10))
show("avoid 123, 1111", count_avoiders(["123", "1111"], 10))
print()

print("the 1212,1221-avoiders of size 4:")
print("  " + " ".join(str(w) for w in iter_avoiders(["1212", "1221"], 4)))
