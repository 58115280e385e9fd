"""Exact power series and the formula catalog.

Series are truncated lists of Fractions.  Catalog entries describe a
generating function (rational, algebraic, closed form or recurrence) and the
avoidance classes it should count; verify_entry compares the two.
"""

from rgsavoid.avoid import count_avoiders
from rgsavoid.catalog import expand_catalog, load_catalog, verify_entry
from rgsavoid.series import Series, evaluate

x = Series.x(12)
catalan = (1 - (1 - 4 * x).sqrt()) / (2 * x)
print("Catalan        ", catalan.integers())
print("1/(1-x-x^2-x^3)", (1 / (1 - x - x * x - x ** 3)).integers())
print("Motzkin        ", evaluate("(/ (- [1,-1] (sqrt [1,-2,-3])) (* 2 (^ x 2)))", 10).integers())
print()

# two different-looking expressions for the same algebraic series
a = expand_catalog("tm1", 12)
b = expand_catalog("tm2", 12)
print("tm1 == tm2:", a == b)
print("  series          ", a.integers())
print("  avoid 1123,1211 ", tuple(count_avoiders(["1123", "1211"], 12)))
print("  avoid 1123,1222 ", tuple(count_avoiders(["1123", "1222"], 12)))
print()

print(f"{len(load_catalog())} catalog entries; a few of them:")
for entry_id in ("nc_12321", "pair_1211_1234", "table1_row3", "h_1223", "seq_w"):
    r = verify_entry(entry_id, 10)
    print(f"  {'ok ' if r.passed else 'BAD'} {entry_id:16s} {r.anchor}")
