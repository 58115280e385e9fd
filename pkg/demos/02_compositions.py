"""Pairs (112, tau) and (121, tau) reduce to compositions.

A partition avoids 112 exactly when it looks like 12..m followed by
decreasing runs, so it is determined by its block sizes, a composition of n.
Avoiding tau as well then means: the composition does not dominate the block
sizes of tau.  Two compositions giving the same counts for every n give
Wilf-equivalent pairs.
"""

from rgsavoid.avoid import count_avoiders
from rgsavoid.classifier import check_3k_bound
from rgsavoid.compositions import (count_dominating, dominates, normalize_2free, search_simcomp,
                                   simcomp_check, two_free_partitions, xi)
from rgsavoid.matching import tau112

a = (2, 1, 2)
tau = tau112(a)
direct = count_avoiders(["112", tau], 12)
via = [1] + [2 ** (n - 1) - count_dominating(a, n) for n in range(1, 13)]
print(f"tau = {tau}, block sizes {a}")
print("  direct count    ", list(direct))
print("  via compositions", via)
print()

print("(3,1,2) dominates (2,2):", dominates((2, 2), (3, 1, 2)))
print("(1,3) and (3,1) agree up to n=14:", simcomp_check((1, 3), (3, 1), 14))
print("(2,) and (1,1) agree up to n=14:", simcomp_check((2,), (1, 1), 14))
print("(3,) and (1,1,1) agree up to n=14:", simcomp_check((3,), (1, 1, 1), 14))
print("normal form of (2,3,2):", normalize_2free((2, 3, 2)))
print()

print("k  2-free partitions  (3,k) classes  1 + xi_k  equal-count collisions")
for k in range(3, 8):
    observed, bound = check_3k_bound(k, 14)
    print(f"{k}  {len(two_free_partitions(k)):17d}  {observed:13d}  {1 + xi(k):8d}  "
          f"{len(search_simcomp(k, 14))}")
