"""Explicit bijections, checked exhaustively for small n."""

from rgsavoid.avoid import iter_avoiders
from rgsavoid.bijections import (f_122_to_123, block_map_prime, verify_composition_bijections,
                                 verify_f_bijection, verify_lemma_122, verify_block_maps)
from rgsavoid.compositions import bijection_multi1, bijection_multi2

print("122-avoiders to 123-avoiders: keep the 1s, send the rest to 2")
for w in list(iter_avoiders(["122"], 4))[:6]:
    print(f"  {w} -> {f_122_to_123(w)}")
print("  all bijective up to n=9:", all(r.is_bijective for r in verify_f_bijection(9)))
r = verify_lemma_122("1213", 8)
print("  containment of 1213 carried to 1212:", r.is_bijective, f"({r.details['checked']} partitions)")
print()

b = (1, 1, 3)
print(f"reverse the middle of {b} for a=(1,2), r=1 ->", bijection_multi1(b, (1, 2), 1))
print("merge trailing ones of (1,1,1) for a=(2,) ->", bijection_multi2((1, 1, 1), (2,)))
reps = verify_composition_bijections(5, 8)
print(f"{len(reps)} composition maps checked, all bijective:", all(r.is_bijective for r in reps))
print()

w = next(iter_avoiders(["1231", "1233"], 7, prefix=(1, 1, 2, 1, 3)))
print(f"block-count preserving map: {w} -> {block_map_prime(w)}")
print("bijective up to n=9:", all(r.is_bijective for r in verify_block_maps(9)))
