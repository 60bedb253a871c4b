"""Flag vectors, ear decompositions and weak-order dominance for geometric lattices."""

from .lattice import GeometricLattice, ab_index, build_lattice, flag_f, flag_h, h_vector
from .matroid import Matroid, make_boolean, make_near_pencil, make_uniform

__version__ = "0.1.0"

__all__ = [
    "GeometricLattice",
    "Matroid",
    "ab_index",
    "build_lattice",
    "flag_f",
    "flag_h",
    "h_vector",
    "make_boolean",
    "make_near_pencil",
    "make_uniform",
]
