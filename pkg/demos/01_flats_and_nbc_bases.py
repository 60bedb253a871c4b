"""
Flats and nbc-bases
===================

A small rank-3 matroid on five points: 1, 2, 3 are collinear and so are
3, 4, 5.
"""

###########################################################################
# Build it from its bases.

from itertools import combinations

from latgeom._bits import fmt_set, to_mask
from latgeom.lattice import build_lattice
from latgeom.matroid import Matroid

bases = [b for b in combinations(range(1, 6), 3) if set(b) not in ({1, 2, 3}, {3, 4, 5})]
m = Matroid.from_bases(5, bases)

print("circuits:", [fmt_set(c) for c in m.circuits])
print("closure of {1,2}:", fmt_set(m.closure(to_mask([1, 2]))))

###########################################################################
# Broken circuits drop the least atom of each circuit.  A basis that
# contains none of them is an nbc-basis.

print("broken circuits:", [fmt_set(c) for c in m.broken_circuits()])
print("nbc-bases:", [fmt_set(b) for b in m.nbc_bases()])
print("{1,4,5} contains", fmt_set(m.find_broken_circuit(to_mask([1, 4, 5]))))

###########################################################################
# Reordering the atoms changes which bases are nbc, but never how many.

for order in [(1, 2, 3, 4, 5), (5, 4, 3, 2, 1), (3, 1, 4, 5, 2)]:
    print(order, [fmt_set(b) for b in m.nbc_bases(order)])

###########################################################################
# The lattice of flats, rank by rank.

L = build_lattice(m)
for k, layer in enumerate(L.flats):
    print(k, " ".join(fmt_set(f) for f in layer))
