"""Test corpus: every labelled simple matroid in a small box plus the named families.

Simple matroids on [n+1] are produced from those on [n] by adding atom
n+1, either as a coloop or as a new element whose bases are some family
of (independent (rank-1)-set + new atom); candidates are kept when they
are simple and satisfy basis exchange.  Deleting the last atom of any
simple matroid gives a simple matroid, so this reaches all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from ._bits import from_mask, iter_bits
from .matroid import Matroid, make_boolean, make_near_pencil, make_uniform

EXHAUSTIVE_MAX_RANK = 4
EXHAUSTIVE_MAX_ATOMS = 6


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    matroid: Matroid


def _exchange_ok(bases: frozenset[int], fresh: list[int]) -> bool:
    """Basis exchange, checked only for pairs involving a freshly added basis."""
    everything = list(bases)
    for b1 in fresh:
        for b2 in everything:
            if b1 != b2 and not _pair_ok(bases, b1, b2) or b1 != b2 and not _pair_ok(bases, b2, b1):
                return False
    return True


def _pair_ok(bases: frozenset[int], b1: int, b2: int) -> bool:
    for x in iter_bits(b1 & ~b2):
        rest = b1 & ~(1 << x)
        if not any(rest | (1 << y) in bases for y in iter_bits(b2 & ~b1)):
            return False
    return True


def _extensions(m: Matroid, max_rank: int) -> list[Matroid]:
    n = m.n + 1
    e = 1 << n
    out = []
    if m.rank + 1 <= max_rank:
        out.append(Matroid(n, m.rank + 1, tuple(b | e for b in m.bases)))
    k = m.rank
    indep = sorted({s for b in m.bases for s in (b & ~(1 << x) for x in iter_bits(b))})
    old = frozenset(m.bases)
    for size in range(1, len(indep) + 1):
        for chosen in combinations(indep, size):
            if k >= 2:
                covered = 0
                for s in chosen:
                    covered |= s
                if covered != m.ground:
                    continue  # some atom would be parallel to the new one
            elif m.n >= 1:
                continue  # rank 1 with two atoms is never simple
            fresh = [s | e for s in chosen]
            if _exchange_ok(old | frozenset(fresh), fresh):
                out.append(Matroid(n, k, tuple(old) + tuple(fresh)))
    return out


@lru_cache(maxsize=None)
def simple_matroids(max_atoms: int, max_rank: int) -> tuple[Matroid, ...]:
    """All labelled simple matroids with n <= max_atoms and rank <= max_rank."""
    if max_atoms > EXHAUSTIVE_MAX_ATOMS or max_rank > EXHAUSTIVE_MAX_RANK:
        raise ValueError(
            f"exhaustive enumeration is limited to {EXHAUSTIVE_MAX_ATOMS} atoms and rank {EXHAUSTIVE_MAX_RANK}"
        )
    level = [Matroid(1, 1, (1 << 1,))]
    found = list(level)
    for _ in range(1, max_atoms):
        nxt = []
        for m in level:
            nxt.extend(_extensions(m, max_rank))
        level = sorted(set(nxt), key=_key)
        found.extend(level)
    return tuple(sorted(found, key=_key))


def _key(m: Matroid) -> tuple:
    return (m.n, m.rank, tuple(from_mask(b) for b in m.bases))


def named_families(max_rank: int, max_atoms: int, min_rank: int = 2) -> list[CorpusEntry]:
    out = []
    for k in range(min_rank, max_rank + 1):
        out.append(CorpusEntry(f"boolean({k})", make_boolean(k)))
        for n in range(k, max_atoms + 1):
            out.append(CorpusEntry(f"uniform({k},{n})", make_uniform(k, n)))
            out.append(CorpusEntry(f"near-pencil({k},{n})", make_near_pencil(k, n)))
    return out


def generate_corpus(
    max_rank: int = 4,
    max_atoms: int = 6,
    family_max_rank: int = 5,
    family_max_atoms: int = 8,
    min_rank: int = 2,
) -> list[CorpusEntry]:
    """Deterministic corpus, deduplicated on (n, bases).

    Named families come first (they carry readable names); the exhaustive
    part follows in (n, rank, bases) order.
    """
    entries: list[CorpusEntry] = []
    seen: set[tuple] = set()
    for entry in named_families(family_max_rank, family_max_atoms, min_rank):
        key = (entry.matroid.n, entry.matroid.bases)
        if key not in seen:
            seen.add(key)
            entries.append(entry)
    counter: dict[tuple[int, int], int] = {}
    for m in simple_matroids(max_atoms, max_rank):
        if m.rank < min_rank:
            continue
        key = (m.n, m.bases)
        if key in seen:
            continue
        seen.add(key)
        idx = counter.get((m.n, m.rank), 0)
        counter[(m.n, m.rank)] = idx + 1
        entries.append(CorpusEntry(f"simple(n={m.n},rank={m.rank})#{idx}", m))
    return entries


def corpus_text(entries: list[CorpusEntry]) -> str:
    """One line per matroid: name, n, rank, bases."""
    lines = []
    for e in entries:
        bases = " ".join("".join(map(str, b)) if e.matroid.n <= 9 else ",".join(map(str, b)) for b in e.matroid.basis_lists())
        lines.append(f"{e.name}\t{e.matroid.n}\t{e.matroid.rank}\t{bases}")
    return "\n".join(lines) + "\n"
