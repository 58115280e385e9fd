"""Classes of non-crossing patterns.

Two patterns are nc-equivalent when the non-crossing partitions avoiding
them are equinumerous for every n, and cc-equivalent when this still holds
after splitting by the number of components (p = c1[c2]...[cm], where each
later piece sits on fresh, larger blocks).
"""

from rgsavoid import classifier as cls
from rgsavoid.rgs import components, concat

p = concat(concat("121", "1"), "11")
print(p, "splits into", [str(c) for c in components(p)])
print()

report = cls.classify(cls.generate_pairs("nc_tau", size=4), "nc", 10)
print(f"size-4 patterns: {len(report.classes)} nc classes")
for c in report.classes:
    print("  " + " ".join(m[0] for m in c.members).ljust(22), c.counts[:9])
print("matches stored table:", cls.verify_table(report, "sec3.size4") == [])
print()

print("121[1] vs 1[121], cc up to n=10:", cls.cc_equiv_check(concat("121", "1"), concat("1", "121"), 10))
print("112 vs 121, cc up to n=10:      ", cls.cc_equiv_check("112", "121", 10))
print("122 vs 123, nc up to n=10:      ", cls.nc_equiv_check("122", "123", 10))
