# Searching for the minimal Jordan index of a group ring.
#
# The search never touches the full element space: circle products are
# additive in every slot, so vanishing over spanning monomials is the
# same as vanishing everywhere.  For small contexts we also run the
# full-space decision and show the two agree.

import time

from jrl import GroupRing, builtin_group, builtin_ring
from jrl.groupring import format_element
from jrl.nilpotency import (
    exhaustive_check,
    minimal_jordan_index,
    spanning_set,
    vanishes_left_normed,
)

for ring, group in [("Z2", "C2"), ("Z4", "C2"), ("Z2", "D4"), ("Z8", "C4")]:
    rg = GroupRing(builtin_ring(ring), builtin_group(group))
    S = spanning_set(rg)
    idx = minimal_jordan_index(S)
    print(f"{rg.name}: spanning set {len(S)}, minimal Jordan index {idx}")
    for n in (2, 3, 4):
        spanning = bool(vanishes_left_normed(S, n))
        full = exhaustive_check(rg, n)
        tag = "ok" if spanning == full else "MISMATCH"
        print(f"  degree {n}: spanning={spanning}  full-space={full}  {tag}")

# a failing degree comes with the first violating monomial tuple
rg = GroupRing(builtin_ring("Z4"), builtin_group("D4"))
S = spanning_set(rg)
res = vanishes_left_normed(S, 3)
parts = " , ".join(format_element(m) for m in res.witness)
print(f"\n{rg.name} at degree 3: vanishes={res.vanishes}")
print(f"first counterexample: {parts}")

# a 4096-dimensional coefficient space is still fast
rg = GroupRing(builtin_ring("Z2"), builtin_group("D4xD4"))
start = time.perf_counter()
idx = minimal_jordan_index(spanning_set(rg))
print(f"\n{rg.name}: minimal index {idx} "
      f"({time.perf_counter() - start:.3f}s, 64 spanning monomials)")
