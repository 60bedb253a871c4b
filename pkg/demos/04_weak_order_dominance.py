"""
Dominance between descent classes
=================================

S dominates T when the permutations with descent set T can be sent
injectively to permutations with descent set S, each one going up in
weak order.  Deciding it is a bipartite matching problem.
"""

import numpy as np

from latgeom._bits import fmt_set, to_mask
from latgeom.bruhat import Permutation, boolean_flag_h, build_hall_matching, dominates, verify_conjecture
from latgeom.bruhat.perms import class_arrays

###########################################################################
# The descent classes involved, and a witness injection.

res = dominates(4, to_mask([1, 2]), to_mask([1]), witness=True)
for a, b in res.witness.pairs:
    print(Permutation(a), "->", Permutation(b))

###########################################################################
# Class sizes come straight from the Boolean lattice.

perms, inv = class_arrays(6, to_mask([2, 4]))
print(perms.shape, boolean_flag_h(6, to_mask([2, 4])))
print("mean inversions:", np.mean([bin(int(x)).count("1") for x in inv]))

###########################################################################
# Sweep every qualifying T for a few ranks.

for r in range(3, 8):
    rep = verify_conjecture(r)
    print(r, rep.passed, len(rep.rows), f"{rep.elapsed:.2f}s")

###########################################################################
# Matching whole layers of subsets: fine for small i, blocked for large i.

for i in range(1, 6):
    h = build_hall_matching(6, i)
    print(i, h.saturating, "" if h.saturating else [fmt_set(t) for t in h.violator])
