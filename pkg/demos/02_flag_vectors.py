"""
Flag f- and h-vectors
=====================

Chains in the lattice of flats counted by the ranks they visit, and the
descent statistics of the minimal edge labeling.
"""

import numpy as np

from latgeom._bits import fmt_set
from latgeom.lattice import ab_index, build_lattice, flag_f_vector, flag_h, flag_h_vector, h_vector
from latgeom.matroid import make_boolean, make_near_pencil, make_uniform

###########################################################################
# Rank 3, four atoms: the two extremes and everything in between share
# f_{1} = 4 but differ elsewhere.

for name, m in [("near pencil", make_near_pencil(3, 4)), ("uniform", make_uniform(3, 4))]:
    L = build_lattice(m)
    f, h = flag_f_vector(L), flag_h_vector(L)
    print(name)
    for s, v in f.items():
        print(f"  {fmt_set(s):8} f={v:3d} h={h.values[s]:3d}")
    print("  ab-index:", ab_index(L))

###########################################################################
# h_S counts maximal chains with descent set S.  Inclusion-exclusion on
# the flag f-vector gives the same numbers.

L = build_lattice(make_uniform(4, 6))
agree = all(flag_h(L, s) == flag_h(L, s, "inclusion-exclusion") for s, _ in flag_h_vector(L).items())
print("two routes agree:", agree)

###########################################################################
# The h-vector of the order complex, and how far it is from symmetric.

for k in range(2, 6):
    h = np.array(h_vector(build_lattice(make_uniform(k, k + 2))).entries)
    print(k, h, "reversed:", h[::-1])

###########################################################################
# Boolean lattices: h-vectors are Eulerian numbers.

print([h_vector(build_lattice(make_boolean(n))).entries for n in range(1, 6)])
