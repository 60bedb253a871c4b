"""Corpus-wide verification sweeps shared by the CLI and the test suite."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from ._bits import fmt_set, to_mask
from .bruhat import dominates, grouped_inequality_holds
from .cdindex import compare_coefficientwise, zonotope_c2d
from .corpus import CorpusEntry
from .eardecomp import g_is_m_vector, verify_ears, verify_h_inequalities
from .lattice import (
    GeometricLattice,
    build_lattice,
    el_violations,
    flag_h_mismatches,
    flag_h_vector,
    semimodular_violations,
    verify_extremal_bounds,
)
from .matroid import make_boolean, make_near_pencil, make_uniform


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        detail = "; ".join(self.failures[:5])
        return f"{self.name}\t{status}\t{self.checked}\t{self.elapsed:.2f}s\t{detail}"


Lattices = Sequence[tuple[str, GeometricLattice]]


def lattices_of(entries: Iterable[CorpusEntry]) -> list[tuple[str, GeometricLattice]]:
    return [(e.name, build_lattice(e.matroid)) for e in entries]


def _run(name: str, lattices: Lattices, test: Callable[[GeometricLattice], str | None],
         keep: Callable[[GeometricLattice], bool] = lambda L: True) -> CheckResult:
    res = CheckResult(name)
    start = time.monotonic()
    for label, L in lattices:
        if not keep(L):
            continue
        res.checked += 1
        problem = test(L)
        if problem:
            res.failures.append(f"{label}: {problem}")
    res.elapsed = time.monotonic() - start
    return res


def check_flag_h(lattices: Lattices) -> CheckResult:
    def test(L):
        bad = flag_h_mismatches(L)
        return f"S={fmt_set(bad[0][0])} {bad[0][1]} vs {bad[0][2]}" if bad else None

    return _run("flag-h-two-routes", lattices, test)


def check_extremal(lattices: Lattices) -> CheckResult:
    def test(L):
        rep = verify_extremal_bounds(L)
        if rep.ok:
            return None
        bound, s, lhs, rhs = rep.violations[0]
        return f"{bound} bound fails at S={fmt_set(s)}: {lhs} > {rhs}"

    return _run("extremal-bounds", lattices, test)


def check_ears(lattices: Lattices, max_rank: int = 4, max_atoms: int = 7) -> CheckResult:
    def test(L):
        rep = verify_ears(L)
        if rep.ok:
            return None
        bad_rows = [row for row in rep.rows if not row[3] or row[4] is False]
        return (
            f"partition={rep.partition_ok} sphere={rep.sphere_ok} "
            f"inequalities={rep.inequalities_ok} m_vector={rep.m_vector_ok} bad_ears={[r[0] for r in bad_rows]}"
        )

    return _run("ear-decomposition", lattices, test, lambda L: L.rank <= max_rank and L.n <= max_atoms)


def check_h_inequalities(lattices: Lattices) -> CheckResult:
    def test(L):
        if not verify_h_inequalities(L):
            return "h-vector inequalities fail"
        if not g_is_m_vector(L):
            return "g-vector is not an M-vector"
        return None

    return _run("h-inequalities-and-m-vector", lattices, test)


def check_grouped(lattices: Lattices) -> CheckResult:
    def test(L):
        return None if grouped_inequality_holds(flag_h_vector(L).values) else "h3 + h2 > h23 + h13"

    return _run("grouped-inequality", lattices, test, lambda L: L.rank >= 4)


@lru_cache(maxsize=None)
def _zonotope_of(kind: str, rank: int, n: int):
    if kind == "boolean":
        m = make_boolean(rank)
    elif kind == "uniform":
        m = make_uniform(rank, n)
    else:
        m = make_near_pencil(rank, n)
    return zonotope_c2d(build_lattice(m))


def check_zonotopes(lattices: Lattices) -> CheckResult:
    def test(L):
        z = zonotope_c2d(L)
        if any(c < 0 for c in z.terms.values()):
            return "negative coefficient"
        lo = _zonotope_of("near-pencil", L.rank, L.n)
        hi = _zonotope_of("uniform", L.rank, L.n)
        cube = _zonotope_of("boolean", L.rank, L.rank)
        if compare_coefficientwise(lo, z) not in ("<=", "="):
            return "below the near-pencil zonotope"
        if compare_coefficientwise(z, hi) not in ("<=", "="):
            return "above the uniform zonotope"
        if compare_coefficientwise(cube, z) not in ("<=", "="):
            return "below the cube"
        return None

    return _run("zonotope-extremes", lattices, test)


def check_structure(lattices: Lattices, max_atoms: int = 7) -> CheckResult:
    def test(L):
        if semimodular_violations(L):
            return "not semimodular"
        if el_violations(L):
            return "minimal labeling is not EL"
        labels = [c.labels for c in L.maximal_chains]
        if len(set(labels)) != len(labels):
            return "two chains share a label sequence"
        return None

    return _run("lattice-structure", lattices, test, lambda L: L.n <= max_atoms)


@lru_cache(maxsize=None)
def dominance_pairs(r: int) -> tuple[tuple[int, int], ...]:
    """All (T, S) with S = T + one element and S dominating T, for permutations of [r+1]."""
    out = []
    for k in range(r):
        for t in combinations(range(1, r + 1), k):
            tm = to_mask(t)
            for x in range(1, r + 1):
                if not tm >> x & 1 and dominates(r + 1, tm | (1 << x), tm).dominated:
                    out.append((tm, tm | (1 << x)))
    return tuple(out)


def check_dominance_consequence(lattices: Lattices) -> CheckResult:
    """h_T <= h_S for dominance pairs at the lattice's own rank."""

    def test(L):
        h = flag_h_vector(L).values
        for t, s in dominance_pairs(L.r):
            if h[t] > h[s]:
                return f"h{fmt_set(t)}={h[t]} > h{fmt_set(s)}={h[s]}"
        return None

    return _run("dominance-implies-inequality", lattices, test, lambda L: L.r >= 1 and L.r <= 6)


def run_all(entries: Sequence[CorpusEntry], budget_secs: float | None = None) -> tuple[list[CheckResult], bool]:
    """Run every corpus check; the flag is False when the budget ran out."""
    start = time.monotonic()
    lattices = lattices_of(entries)
    checks = [
        check_structure,
        check_flag_h,
        check_extremal,
        check_ears,
        check_h_inequalities,
        check_grouped,
        check_zonotopes,
        check_dominance_consequence,
    ]
    results = []
    for check in checks:
        if budget_secs is not None and time.monotonic() - start > budget_secs:
            return results, False
        results.append(check(lattices))
    return results, True
