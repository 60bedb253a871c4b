"""
Ear decomposition of the order complex
======================================

Each nbc-basis contributes the orderings whose partial joins carry
exactly that ordering as their minimal labeling.
"""

from latgeom._bits import fmt_set
from latgeom.eardecomp import build_ears, g_vector, verify_boundary, verify_ears, verify_shelling
from latgeom.lattice import build_lattice
from latgeom.matroid import make_near_pencil, make_uniform

L = build_lattice(make_uniform(3, 5))
dec = build_ears(L)

###########################################################################
# The first ear is a sphere; later ears are balls glued on along their
# boundaries.

for ear in dec.ears:
    line = f"ear {ear.index}: basis {fmt_set(ear.basis)}, {len(ear.facets)} facets"
    if ear.index > 1:
        line += f", shelling {verify_shelling(L, ear).ok}, boundary {verify_boundary(dec, ear.index).ok}"
    print(line)

###########################################################################
# One facet up close: its flats and labels.

chain = dec.ear(2).facets[0]
print([fmt_set(f) for f in chain.flats], chain.labels)

###########################################################################
# The full report, then g-vectors for a few near pencils.

print(verify_ears(L))
for n in range(4, 8):
    print(n, g_vector(build_lattice(make_near_pencil(4, n))))
