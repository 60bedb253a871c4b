"""Lattice of flats, the minimal edge labeling, and flag vectors.

Subsets ``S`` of ``[r]`` (rank sets, descent sets) are int masks with bit
``i`` standing for ``i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Iterator, Sequence

from ._bits import as_mask, fmt_set, from_mask, full_mask, iter_bits, submasks
from .matroid import AtomOrder, Matroid, check_order, make_boolean, make_near_pencil, make_uniform, order_position
from .ncpoly import NcPolynomial


class LatticeError(RuntimeError):
    """Raised when two routes to the same quantity disagree."""


@dataclass(frozen=True)
class MaximalChain:
    """A maximal chain 0 = x_0 < x_1 < ... < x_{r+1} = 1 with its labels.

    ``labels[i-1]`` is the label of the cover (x_{i-1}, x_i); ``descents``
    is the mask of positions ``i`` in ``[r]`` with labels[i-1] > labels[i]
    in the atom order.
    """

    flats: tuple[int, ...]
    labels: tuple[int, ...]
    descents: int

    @property
    def interior(self) -> tuple[int, ...]:
        """The facet of the order complex: the flats strictly between 0 and 1."""
        return self.flats[1:-1]

    @property
    def descent_set(self) -> tuple[int, ...]:
        return from_mask(self.descents)


class GeometricLattice:
    """Lattice of flats of a simple matroid, built rank by rank.

    Every flat of rank k+1 is ``closure(F + x)`` for a flat F of rank k,
    so building upward finds all flats and all cover relations at once.
    Edge (x, y) is labelled with the least atom j (in the atom order) with
    ``x v j = y``; in a geometric lattice that is simply the least atom of
    ``y - x``.
    """

    def __init__(self, matroid: Matroid, order: Sequence[int] | None = None):
        self.matroid = matroid
        self.order: AtomOrder = check_order(order, matroid.n)
        self.pos = order_position(self.order)
        self.n = matroid.n
        self.rank = matroid.rank
        self.r = matroid.rank - 1

        flats: list[list[int]] = [[0]]
        up: dict[int, list[int]] = {}
        for k in range(self.rank):
            layer: set[int] = set()
            for f in flats[k]:
                covers = set()
                for x in iter_bits(matroid.ground & ~f):
                    covers.add(matroid.closure(f | (1 << x)))
                up[f] = sorted(covers, key=lambda y, f=f: self.pos[self.edge_label(f, y)])
                layer |= covers
            flats.append(sorted(layer, key=from_mask))
        for f in flats[-1]:
            up[f] = []
        if flats[-1] != [matroid.ground]:
            raise LatticeError("top rank does not consist of the ground set alone")
        self.flats = flats
        self.up = up
        self.rank_of = {f: k for k, layer in enumerate(flats) for f in layer}

    def edge_label(self, x: int, y: int) -> int:
        diff = y & ~x
        return min(iter_bits(diff), key=self.pos.__getitem__)

    def join(self, x: int, y: int) -> int:
        return self.matroid.closure(x | y)

    def meet(self, x: int, y: int) -> int:
        return x & y

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.matroid.ground

    def flat_counts(self) -> list[int]:
        return [len(layer) for layer in self.flats]

    def covers(self) -> Iterator[tuple[int, int]]:
        for x, ys in self.up.items():
            for y in ys:
                yield x, y

    def less(self, a: int, b: int) -> bool:
        """Label comparison in the atom order."""
        return self.pos[a] < self.pos[b]

    def descents_of(self, labels: Sequence[int]) -> int:
        mask = 0
        for i in range(1, len(labels)):
            if self.pos[labels[i - 1]] > self.pos[labels[i]]:
                mask |= 1 << i
        return mask

    def saturated_chains(self, x: int, y: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        """(flats, labels) of saturated chains x = z_0 < ... < z_k = y, label-lex order."""
        stack: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((x,), ())]
        while stack:
            path, labels = stack.pop()
            last = path[-1]
            if last == y:
                yield path, labels
                continue
            nxt = [z for z in self.up[last] if z & y == z]
            for z in reversed(nxt):
                stack.append((path + (z,), labels + (self.edge_label(last, z),)))

    @cached_property
    def maximal_chains(self) -> list[MaximalChain]:
        return [
            MaximalChain(path, labels, self.descents_of(labels))
            for path, labels in self.saturated_chains(self.bottom, self.top)
        ]

    def chain_from_flats(self, flats: Sequence[int]) -> MaximalChain:
        labels = tuple(self.edge_label(a, b) for a, b in zip(flats, flats[1:]))
        return MaximalChain(tuple(flats), labels, self.descents_of(labels))

    @cached_property
    def descent_counts(self) -> Counter:
        return Counter(c.descents for c in self.maximal_chains)

    def __repr__(self) -> str:
        return f"GeometricLattice(n={self.n}, rank={self.rank}, flats={self.flat_counts()})"


def build_lattice(m: Matroid, order: Sequence[int] | None = None) -> GeometricLattice:
    return GeometricLattice(m, order)


def maximal_chains(L: GeometricLattice) -> list[MaximalChain]:
    return L.maximal_chains


def rank_subsets(r: int) -> list[int]:
    """All subsets of [r] as masks, ordered by size then lexicographically."""
    return sorted(submasks(full_mask(r)), key=lambda s: (s.bit_count(), from_mask(s)))


@dataclass(frozen=True)
class FlagVector:
    r: int
    values: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, s: int | Iterable[int]) -> int:
        return self.values[as_mask(s)]

    def items(self):
        return ((s, self.values[s]) for s in rank_subsets(self.r))


@dataclass(frozen=True)
class HVector:
    entries: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)


def _check_subset(L: GeometricLattice, s: int) -> None:
    if s & ~full_mask(L.r):
        raise ValueError(f"{fmt_set(s)} is not a subset of [{L.r}]")


def flag_f(L: GeometricLattice, s: int | Iterable[int]) -> int:
    """Number of chains of flats whose ranks are exactly ``s``.

    Computed by propagating chain counts through containments between the
    selected rank layers; no chain enumeration is involved.
    """
    s = as_mask(s)
    _check_subset(L, s)
    counts = {L.bottom: 1}
    for k in list(iter_bits(s)) + [L.rank]:
        new = {}
        for y in L.flats[k]:
            total = sum(c for x, c in counts.items() if x & y == x)
            if total:
                new[y] = total
        counts = new
    return sum(counts.values())


def flag_h(L: GeometricLattice, s: int | Iterable[int], method: str = "descents") -> int:
    """Flag h-number h_S.

    ``method="descents"`` counts maximal chains whose minimal labeling has
    descent set exactly S; ``method="inclusion-exclusion"`` alternates over
    flag f-numbers of the subsets of S.
    """
    s = as_mask(s)
    _check_subset(L, s)
    if method == "descents":
        return L.descent_counts.get(s, 0)
    if method == "inclusion-exclusion":
        k = s.bit_count()
        return sum((-1) ** (k - t.bit_count()) * flag_f(L, t) for t in submasks(s))
    raise ValueError(f"unknown method {method!r}")


def flag_f_vector(L: GeometricLattice) -> FlagVector:
    return FlagVector(L.r, {s: flag_f(L, s) for s in rank_subsets(L.r)})


def flag_h_vector(L: GeometricLattice, method: str = "descents") -> FlagVector:
    if method == "inclusion-exclusion":
        f = flag_f_vector(L)
        vals = {}
        for s in rank_subsets(L.r):
            k = s.bit_count()
            vals[s] = sum((-1) ** (k - t.bit_count()) * f.values[t] for t in submasks(s))
        return FlagVector(L.r, vals)
    return FlagVector(L.r, {s: flag_h(L, s, method) for s in rank_subsets(L.r)})


def flag_h_mismatches(L: GeometricLattice) -> list[tuple[int, int, int]]:
    """Subsets where the two flag-h routes disagree, as (S, by_descents, by_incl_excl)."""
    a = flag_h_vector(L, "descents")
    b = flag_h_vector(L, "inclusion-exclusion")
    return [(s, a.values[s], b.values[s]) for s in a.values if a.values[s] != b.values[s]]


def order_complex_f_vector(L: GeometricLattice) -> tuple[int, ...]:
    """(f_0, ..., f_r) where f_i counts faces with i vertices (f_0 = 1)."""
    fv = flag_f_vector(L)
    out = [0] * (L.r + 1)
    for s, v in fv.values.items():
        out[s.bit_count()] += v
    return tuple(out)


def h_from_f(f: Sequence[int]) -> tuple[int, ...]:
    """Coefficients of sum f_i (x-1)^(r-i) read off as sum h_i x^(r-i)."""
    r = len(f) - 1
    h = [0] * (r + 1)
    for i, fi in enumerate(f):
        # (x-1)^(r-i) contributes to x^(r-k) for k >= i
        for k in range(i, r + 1):
            h[k] += fi * comb(r - i, k - i) * (-1) ** (k - i)
    return tuple(h)


def h_vector(L: GeometricLattice) -> HVector:
    """h-vector of the order complex, computed two ways and cross-checked."""
    poly = h_from_f(order_complex_f_vector(L))
    refined = [0] * (L.r + 1)
    for s, v in flag_h_vector(L).values.items():
        refined[s.bit_count()] += v
    if tuple(refined) != poly:
        raise LatticeError(f"h-vector mismatch: transform {poly} vs flag-h sums {tuple(refined)}")
    return HVector(poly)


def ab_word(s: int, r: int) -> str:
    """The ab-word of length r with b exactly at the positions of S."""
    return "".join("b" if s >> i & 1 else "a" for i in range(1, r + 1))


def word_to_set(word: str) -> int:
    return sum(1 << (i + 1) for i, ch in enumerate(word) if ch in "bd")


def ab_index(L: GeometricLattice) -> NcPolynomial:
    h = flag_h_vector(L)
    return NcPolynomial("ab", {ab_word(s, L.r): v for s, v in h.values.items()})


@dataclass
class ExtremalReport:
    rank: int
    n: int
    violations: list[tuple[str, int, int, int]] = field(default_factory=list)
    upper_tight: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_extremal_bounds(L: GeometricLattice) -> ExtremalReport:
    """Compare h_S(L) against the near pencil, truncated Boolean and Boolean lattices.

    Checks h(near pencil) <= h(L) <= h(B_{r+1,n}) and h(B_{r+1}) <= h(L)
    for every S in [r].  Violations are reported as (bound, S, lhs, rhs)
    with lhs <= rhs the failed inequality.
    """
    rank, n = L.rank, L.n
    hl = flag_h_vector(L).values
    upper = flag_h_vector(build_lattice(make_uniform(rank, n))).values
    boolean = flag_h_vector(build_lattice(make_boolean(rank))).values
    rep = ExtremalReport(rank, n)
    if rank >= 2:
        lower = flag_h_vector(build_lattice(make_near_pencil(rank, n))).values
    else:
        lower = hl
    for s in rank_subsets(L.r):
        if not lower[s] <= hl[s]:
            rep.violations.append(("near-pencil", s, lower[s], hl[s]))
        if not hl[s] <= upper[s]:
            rep.violations.append(("truncated-boolean", s, hl[s], upper[s]))
        if not boolean[s] <= hl[s]:
            rep.violations.append(("boolean", s, boolean[s], hl[s]))
    rep.upper_tight = all(hl[s] == upper[s] for s in hl)
    return rep


def el_violations(L: GeometricLattice) -> list[tuple[int, int]]:
    """Intervals [x, y] where the minimal labeling fails the EL condition.

    The condition: exactly one saturated chain with increasing labels, and
    it comes first lexicographically among all saturated chains.
    """
    bad = []
    flats = [f for layer in L.flats for f in layer]
    for x in flats:
        for y in flats:
            if x == y or x & y != x:
                continue
            rising = []
            first = None
            for _, labels in L.saturated_chains(x, y):
                key = [L.pos[a] for a in labels]
                if first is None or key < first:
                    first = key
                if all(a < b for a, b in zip(key, key[1:])):
                    rising.append(key)
            if len(rising) != 1 or rising[0] != first:
                bad.append((x, y))
    return bad


def semimodular_violations(L: GeometricLattice) -> list[tuple[int, int]]:
    bad = []
    flats = [f for layer in L.flats for f in layer]
    for i, x in enumerate(flats):
        for y in flats[i + 1 :]:
            j = L.join(x, y)
            m = L.meet(x, y)
            if m not in L.rank_of:
                bad.append((x, y))
            elif L.rank_of[j] + L.rank_of[m] > L.rank_of[x] + L.rank_of[y]:
                bad.append((x, y))
    return bad
