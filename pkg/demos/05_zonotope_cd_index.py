"""
cd-index of zonotopes
=====================

The ab-index of the lattice of flats determines the cd-index of the
zonotope of any realization, via a simple substitution.
"""

from latgeom.cdindex import CdRewriteError, compare_coefficientwise, to_cd, zonotope_c2d
from latgeom.lattice import ab_index, build_lattice
from latgeom.matroid import make_boolean, make_near_pencil, make_uniform

###########################################################################
# Generic hyperplanes in dimension d give the d-cube.

for d in range(1, 5):
    print(d, zonotope_c2d(build_lattice(make_boolean(d))))

###########################################################################
# A lattice of flats is not Eulerian, so its own ab-index has no
# cd-form; the rewrite stops with a residual.

try:
    to_cd(ab_index(build_lattice(make_near_pencil(3, 4))))
except CdRewriteError as exc:
    print("residual:", exc.residual)

###########################################################################
# Between the extremes at fixed rank and atom count.

lo = zonotope_c2d(build_lattice(make_near_pencil(3, 5)))
hi = zonotope_c2d(build_lattice(make_uniform(3, 5)))
print(lo, "|", hi, "|", compare_coefficientwise(lo, hi))
