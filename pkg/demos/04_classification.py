# Predicting the minimal Jordan index from structure alone.
#
# classify() looks only at the ring (characteristic, commutativity,
# circle conditions) and the group (derived subgroup and its position),
# never at tuples.  explain() spells out which clause fired and why.

from jrl import builtin_group, builtin_ring
from jrl.classify import classify, explain

pairs = [
    ("Z2", "C2"),      # index 2: the only way to get there
    ("Z4", "C2"),      # characteristic 4 pushes it to 3
    ("Z2", "D4"),      # small derived subgroup keeps it at 3
    ("Z8", "C4"),      # characteristic 8 over abelian: 4
    ("H32", "D4"),     # circle conditions + derived C2: 4
    ("Z2", "S3"),      # derived C3 is fatal
    ("M2F2", "D4"),    # full matrix coefficients: never nilpotent
]

for ring, group in pairs:
    res = classify(builtin_ring(ring), builtin_group(group))
    print(f"{ring}[{group}] -> {res.index if res.within_four else 'not within 4'}")

print("\nfull explanation for H32[D4]:")
print(explain(classify(builtin_ring("H32"), builtin_group("D4"))))

print("\nfull explanation for Z2[S3]:")
print(explain(classify(builtin_ring("Z2"), builtin_group("S3"))))
