"""Convex ear decomposition of the order complex of a geometric lattice.

The ears come from the nbc-bases B_1, ..., B_m in lexicographic order: ear
j consists of the facets reached by ordering B_j whose minimal labeling
equals that ordering.  Faces of the order complex are frozensets of flat
masks (the flats are pairwise distinct, so no rank tag is needed).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Sequence

from ._bits import from_mask, iter_bits, to_mask
from .lattice import GeometricLattice, MaximalChain, h_vector

Face = frozenset


class EarError(ValueError):
    pass


def basis_labeling_facet(L: GeometricLattice, ordered_basis: Sequence[int]) -> MaximalChain:
    """Chain of partial joins b_1 < b_1 v b_2 < ... < 1 of an ordered basis.

    The returned chain carries its *minimal* labeling; it coincides with
    ``ordered_basis`` exactly when the ordering lies in the basis's ear.
    """
    b = to_mask(ordered_basis)
    if len(ordered_basis) != L.rank or not L.matroid.is_basis(b):
        raise EarError(f"{tuple(ordered_basis)} is not an ordered basis")
    flats = [0]
    for a in ordered_basis:
        flats.append(L.join(flats[-1], 1 << a))
    return L.chain_from_flats(flats)


def is_minimal_labeling(L: GeometricLattice, labels: Sequence[int]) -> bool:
    try:
        return basis_labeling_facet(L, labels).labels == tuple(labels)
    except EarError:
        return False


def switching(L: GeometricLattice, labels: Sequence[int], i: int) -> tuple[int, ...]:
    """Swap positions i and i+1 (1-based) of a minimal labeling at an ascent.

    The result is checked to be a minimal labeling again; a failure here
    would contradict the switching property and raises :class:`EarError`.
    """
    labels = tuple(labels)
    if not 1 <= i < len(labels):
        raise EarError(f"position {i} out of range")
    if not is_minimal_labeling(L, labels):
        raise EarError(f"{labels} is not a minimal labeling")
    if not L.less(labels[i - 1], labels[i]):
        raise EarError(f"position {i} is a descent of {labels}")
    out = labels[: i - 1] + (labels[i], labels[i - 1]) + labels[i + 1 :]
    if not is_minimal_labeling(L, out):
        raise EarError(f"switching {labels} at {i} left the minimal labelings")
    return out


@dataclass
class Ear:
    index: int
    basis: int
    facets: list[MaximalChain]

    @property
    def orderings(self) -> list[tuple[int, ...]]:
        return [f.labels for f in self.facets]


@dataclass
class EarDecomposition:
    lattice: GeometricLattice
    ears: list[Ear] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.ears)

    def ear(self, j: int) -> Ear:
        return self.ears[j - 1]


def build_ears(L: GeometricLattice) -> EarDecomposition:
    dec = EarDecomposition(L)
    for j, b in enumerate(L.matroid.nbc_bases(L.order), start=1):
        atoms = sorted(iter_bits(b), key=L.pos.__getitem__)
        facets = []
        for perm in permutations(atoms):
            chain = basis_labeling_facet(L, perm)
            if chain.labels == perm:
                facets.append(chain)
        dec.ears.append(Ear(j, b, facets))
    return dec


def facet_face(chain: MaximalChain) -> Face:
    return frozenset(chain.interior)


def downward_closure(facets: Iterable[Face]) -> set[Face]:
    out: set[Face] = set()
    for f in facets:
        items = sorted(f)
        for k in range(len(items) + 1):
            for sub in combinations(items, k):
                out.add(frozenset(sub))
    return out


def partition_defects(dec: EarDecomposition) -> tuple[list[MaximalChain], list[MaximalChain]]:
    """Facets of the order complex missing from every ear, and facets in several ears."""
    seen = Counter(facet_face(c) for ear in dec.ears for c in ear.facets)
    all_faces = {facet_face(c): c for c in dec.lattice.maximal_chains}
    missing = [c for f, c in all_faces.items() if seen[f] == 0]
    repeated = [all_faces.get(f) for f, k in seen.items() if k > 1]
    stray = [f for f in seen if f not in all_faces]
    if stray:
        raise EarError(f"ear facets {stray} are not maximal chains")
    return missing, repeated


def reverse_lex_order(L: GeometricLattice, ear: Ear) -> list[MaximalChain]:
    return sorted(ear.facets, key=lambda c: [L.pos[a] for a in c.labels], reverse=True)


def property_m_violations(facets: Sequence[Face]) -> list[tuple[int, int]]:
    """Pairs (i, j), i < j, of positions in the facet order breaking Property M.

    Property M: for every earlier F' there is an earlier F'' with
    F' & F contained in F'' & F and |F'' & F| = |F| - 1.
    """
    bad = []
    for j, f in enumerate(facets):
        ridges = [f & facets[k] for k in range(j) if len(f & facets[k]) == len(f) - 1]
        for i in range(j):
            common = f & facets[i]
            if not any(common <= ridge for ridge in ridges):
                bad.append((i, j))
    return bad


@dataclass
class ShellingResult:
    ok: bool
    order: list[MaximalChain]
    violations: list[tuple[MaximalChain, MaximalChain]]

    def __bool__(self) -> bool:
        return self.ok


def verify_shelling(L: GeometricLattice, ear: Ear, order: Sequence[MaximalChain] | None = None) -> ShellingResult:
    """Check that ``order`` (default: reverse lex on basis labels) satisfies Property M.

    Violations are listed as (F', F) pairs for which no suitable F'' exists.
    """
    order = list(order) if order is not None else reverse_lex_order(L, ear)
    faces = [facet_face(c) for c in order]
    bad = property_m_violations(faces)
    return ShellingResult(not bad, order, [(order[i], order[j]) for i, j in bad])


def ear_complex(ear: Ear) -> set[Face]:
    return downward_closure(facet_face(c) for c in ear.facets)


def boundary(facets: Sequence[Face]) -> set[Face]:
    """Faces of codimension-one faces lying in exactly one facet (downward closed)."""
    counts: Counter = Counter()
    for f in facets:
        for v in f:
            counts[f - {v}] += 1
    return downward_closure(ridge for ridge, k in counts.items() if k == 1)


@dataclass
class BoundaryResult:
    ok: bool
    intersection: set[Face]
    boundary: set[Face]

    def __bool__(self) -> bool:
        return self.ok


def verify_boundary(dec: EarDecomposition, j: int) -> BoundaryResult:
    """Compare (ear j) & (ears 1..j-1) with the boundary of ear j, as face sets."""
    if not 2 <= j <= len(dec.ears):
        raise EarError(f"ear index must be in 2..{len(dec.ears)}, got {j}")
    earlier: set[Face] = set()
    for ear in dec.ears[: j - 1]:
        earlier |= ear_complex(ear)
    mine = ear_complex(dec.ear(j))
    left = mine & earlier
    right = boundary([facet_face(c) for c in dec.ear(j).facets])
    return BoundaryResult(left == right, left, right)


def euler_characteristic(faces: Iterable[Face]) -> int:
    """Non-reduced Euler characteristic; the empty face is ignored."""
    return sum((-1) ** (len(f) - 1) for f in faces if f)


def is_sphere_like(ear: Ear, r: int) -> bool:
    """Pseudomanifold without boundary with the Euler characteristic of S^(r-1)."""
    faces = [facet_face(c) for c in ear.facets]
    counts: Counter = Counter()
    for f in faces:
        for v in f:
            counts[f - {v}] += 1
    if any(k != 2 for k in counts.values()):
        return False
    return euler_characteristic(downward_closure(faces)) == 1 + (-1) ** (r - 1)


def verify_h_inequalities(L: GeometricLattice) -> bool:
    """h_{i-1} <= h_i and h_i <= h_{r-i} for all i <= r/2."""
    h = h_vector(L).entries
    r = L.r
    for i in range(0, r // 2 + 1):
        if i >= 1 and h[i - 1] > h[i]:
            return False
        if h[i] > h[r - i]:
            return False
    return True


def g_vector(L: GeometricLattice) -> tuple[int, ...]:
    """(g_0, ..., g_ceil(r/2)) with g_0 = h_0 and g_i = h_i - h_{i-1}."""
    h = h_vector(L).entries
    top = -(-L.r // 2)
    return tuple(h[0] if i == 0 else h[i] - h[i - 1] for i in range(top + 1))


def macaulay_representation(a: int, i: int) -> list[tuple[int, int]]:
    """The i-binomial expansion a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j).

    Returned as [(a_i, i), (a_{i-1}, i-1), ...] with a_i > a_{i-1} > ... >= j >= 1.
    """
    from math import comb

    if a < 0 or i < 1:
        raise ValueError("need a >= 0 and i >= 1")
    out = []
    k = i
    while a > 0 and k >= 1:
        top = k
        while comb(top + 1, k) <= a:
            top += 1
        out.append((top, k))
        a -= comb(top, k)
        k -= 1
    return out


def macaulay_bound(a: int, i: int) -> int:
    """a^<i>: the largest possible next value after ``a`` in degree i."""
    from math import comb

    return sum(comb(top + 1, k + 1) for top, k in macaulay_representation(a, i))


def is_m_vector(g: Sequence[int]) -> bool:
    if not g or g[0] != 1:
        return False
    if any(x < 0 for x in g):
        return False
    return all(g[i + 1] <= macaulay_bound(g[i], i) for i in range(1, len(g) - 1))


def g_is_m_vector(L: GeometricLattice) -> bool:
    return is_m_vector(g_vector(L))


@dataclass
class EarReport:
    rows: list[tuple[int, str, int, bool, bool | None]]
    partition_ok: bool
    sphere_ok: bool
    inequalities_ok: bool
    m_vector_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.partition_ok
            and self.sphere_ok
            and self.inequalities_ok
            and self.m_vector_ok
            and all(row[3] and row[4] is not False for row in self.rows)
        )


def verify_ears(L: GeometricLattice) -> EarReport:
    """Run every ear check; row = (j, basis, #facets, shelling ok, boundary ok or None for j = 1)."""
    dec = build_ears(L)
    missing, repeated = partition_defects(dec)
    rows = []
    for ear in dec.ears:
        shell = verify_shelling(L, ear).ok if ear.index >= 2 else True
        bnd = verify_boundary(dec, ear.index).ok if ear.index >= 2 else None
        rows.append((ear.index, ",".join(map(str, from_mask(ear.basis))), len(ear.facets), shell, bnd))
    return EarReport(
        rows,
        partition_ok=not missing and not repeated,
        sphere_ok=is_sphere_like(dec.ears[0], L.r),
        inequalities_ok=verify_h_inequalities(L),
        m_vector_ok=g_is_m_vector(L),
    )
