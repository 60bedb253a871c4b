"""The dominance relation between descent sets.

S dominates T when some injection phi: D(T) -> D(S) satisfies
pi <=_w phi(pi) for every pi.  That is exactly a D(T)-saturating matching
in the bipartite graph of weak-order comparabilities, which is what
:func:`dominates` decides.
"""

from __future__ import annotations

import logging
import os
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix

from .._bits import as_mask, fmt_set, from_mask, full_mask
from ..matching import max_matching
from .perms import (
    Permutation,
    boolean_flag_h,
    class_arrays,
    descent_class_seqs,
    descent_mask,
    inversion_mask,
)

log = logging.getLogger(__name__)

MAX_MATCHING_N = 9
BLOCK_ROWS = 256
CACHE_ENV = "LATGEOM_CACHE"


class DominanceUndecided(RuntimeError):
    """Neither pruning nor matching (size limit) could settle an instance."""


@dataclass
class DominanceWitness:
    pairs: list[tuple[tuple[int, ...], tuple[int, ...]]]

    def to_tsv(self) -> str:
        from .perms import format_perm

        return "".join(f"{format_perm(a)}\t{format_perm(b)}\n" for a, b in self.pairs)


@dataclass
class DominanceResult:
    n: int
    s: int
    t: int
    dominated: bool
    method: str
    witness: DominanceWitness | None = None

    def __bool__(self) -> bool:
        return self.dominated


class DominanceCache:
    """Memo of decided instances keyed by (n, S mask, T mask).

    File format: TSV lines ``n<TAB>S_mask<TAB>T_mask<TAB>0|1`` with masks
    using bit i for element i.  Writes of distinct keys are safe from
    several threads; identical keys simply overwrite with the same value.
    """

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path else None
        self._data: dict[tuple[int, int, int], bool] = {}
        self._lock = threading.Lock()
        self.hits = 0
        if self.path is not None and self.path.exists():
            self.load(self.path)

    @classmethod
    def from_env(cls) -> "DominanceCache":
        return cls(os.environ.get(CACHE_ENV) or None)

    def load(self, path: str | Path) -> None:
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 4 or parts[3] not in ("0", "1"):
                raise ValueError(f"{path}:{lineno}: malformed cache line {line!r}")
            n, s, t = (int(x) for x in parts[:3])
            self._data[(n, s, t)] = parts[3] == "1"

    def get(self, n: int, s: int, t: int) -> bool | None:
        val = self._data.get((n, s, t))
        if val is not None:
            self.hits += 1
            log.info("cache hit n=%d S=%s T=%s", n, fmt_set(s), fmt_set(t))
        return val

    def put(self, n: int, s: int, t: int, value: bool) -> None:
        with self._lock:
            self._data[(n, s, t)] = bool(value)

    def __len__(self) -> int:
        return len(self._data)

    def to_tsv(self) -> str:
        return "".join(f"{n}\t{s}\t{t}\t{int(v)}\n" for (n, s, t), v in sorted(self._data.items()))

    def save(self, path: str | Path | None = None) -> None:
        path = Path(path) if path else self.path
        if path is None:
            return
        with self._lock:
            path.write_text(self.to_tsv(), encoding="utf-8")


def comparability_graph(n: int, s: int, t: int) -> csr_matrix:
    """Biadjacency of D(T) x D(S) with an edge when pi <=_w sigma.

    Built in row blocks so the dense comparison never exceeds
    BLOCK_ROWS x |D(S)| booleans.
    """
    _, left = class_arrays(n, t)
    _, right = class_arrays(n, s)
    indptr = [0]
    chunks = []
    for start in range(0, len(left), BLOCK_ROWS):
        blk = left[start : start + BLOCK_ROWS, None]
        hit = (right[None, :] & blk) == blk
        rows, cols = np.nonzero(hit)
        counts = np.bincount(rows, minlength=hit.shape[0])
        indptr.extend((indptr[-1] + np.cumsum(counts)).tolist())
        chunks.append(cols.astype(np.int32))
    indices = np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.int32)
    data = np.ones(len(indices), dtype=np.int8)
    return csr_matrix((data, indices, np.array(indptr, dtype=np.int64)), shape=(len(left), len(right)))


def _check_args(n: int, s: int, t: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    for x in (s, t):
        if x & ~full_mask(n - 1):
            raise ValueError(f"{fmt_set(x)} is not a subset of [{n - 1}]")


def dominates(
    n: int,
    s: int | Iterable[int],
    t: int | Iterable[int],
    *,
    witness: bool = False,
    prune: bool = True,
    cache: DominanceCache | None = None,
) -> DominanceResult:
    """Decide whether S dominates T among permutations of [n].

    With ``prune`` the two necessary conditions T <= S and
    |D(T)| <= |D(S)| are tried first; only if both hold is the matching
    built.  Instances past ``MAX_MATCHING_N`` that pruning cannot settle
    raise :class:`DominanceUndecided`.
    """
    s, t = as_mask(s), as_mask(t)
    _check_args(n, s, t)
    if cache is not None and not witness:
        hit = cache.get(n, s, t)
        if hit is not None:
            return DominanceResult(n, s, t, hit, "cache")
    if prune:
        if t & ~s:
            return _record(cache, DominanceResult(n, s, t, False, "subset"))
        if boolean_flag_h(n, t) > boolean_flag_h(n, s):
            return _record(cache, DominanceResult(n, s, t, False, "count"))
    if n > MAX_MATCHING_N:
        raise DominanceUndecided(f"n={n} is beyond the matching limit {MAX_MATCHING_N}")
    graph = comparability_graph(n, s, t)
    match = max_matching(graph)
    ok = bool(np.all(match >= 0))
    res = DominanceResult(n, s, t, ok, "matching")
    if ok and witness:
        lseq, _ = class_arrays(n, t)
        rseq, _ = class_arrays(n, s)
        res.witness = DominanceWitness(
            [(tuple(int(x) for x in lseq[i]), tuple(int(x) for x in rseq[j])) for i, j in enumerate(match)]
        )
    return _record(cache, res)


def _record(cache: DominanceCache | None, res: DominanceResult) -> DominanceResult:
    if cache is not None:
        cache.put(res.n, res.s, res.t, res.dominated)
    return res


def validate_witness(
    n: int,
    s: int | Iterable[int],
    t: int | Iterable[int],
    pairs: Sequence[tuple[Sequence[int], Sequence[int]]],
    *,
    complete: bool = True,
) -> list[str]:
    """Problems with a claimed injection D(T) -> D(S); empty list means valid.

    Checks descent sets on both sides, pi <=_w phi(pi), injectivity, and
    (when ``complete``) that the domain is all of D(T).
    """
    s, t = as_mask(s), as_mask(t)
    problems = []
    images = set()
    domain = set()
    for a, b in pairs:
        a, b = tuple(a), tuple(b)
        if len(a) != n or len(b) != n:
            problems.append(f"{a} -> {b}: wrong length")
            continue
        if descent_mask(a) != t:
            problems.append(f"{a} has descent set {from_mask(descent_mask(a))}, expected {fmt_set(t)}")
        if descent_mask(b) != s:
            problems.append(f"{b} has descent set {from_mask(descent_mask(b))}, expected {fmt_set(s)}")
        ia, ib = inversion_mask(a), inversion_mask(b)
        if ia & ~ib:
            problems.append(f"{a} is not below {b} in weak order")
        if b in images:
            problems.append(f"{b} is hit twice")
        if a in domain:
            problems.append(f"{a} is mapped twice")
        images.add(b)
        domain.add(a)
    if complete and domain != set(descent_class_seqs(n, t)):
        problems.append("domain is not the whole descent class")
    return problems


def set_from_word(word: str) -> int:
    """Descent set of an ab-monomial (b at position i means i is a descent)."""
    return sum(1 << (i + 1) for i, ch in enumerate(word) if ch == "b")


def word_from_set(s: int, r: int) -> str:
    return "".join("b" if s >> i & 1 else "a" for i in range(1, r + 1))


def _standardize(block: Sequence[int]) -> tuple[tuple[int, ...], list[int]]:
    values = sorted(block)
    rank = {v: k + 1 for k, v in enumerate(values)}
    return tuple(rank[v] for v in block), values


def lift_witness(
    pairs: Sequence[tuple[Sequence[int], Sequence[int]]],
    r: int,
    t: int,
    prefix: str,
    suffix: str,
) -> tuple[int, int, int, list[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """Extend an injection for (S, T) on [r+1] to the padded words.

    ``prefix`` is either empty or ``u + "a"`` and ``suffix`` is either
    empty or ``"a" + v``.  Each permutation whose ab-monomial is
    prefix + m(T) + suffix has its block of r+1 middle entries replaced
    via the given map on standardized values; everything outside the block
    is untouched.  Returns (N, S', T', pairs) for the padded instance.
    """
    if prefix and not prefix.endswith("a"):
        raise ValueError("a non-empty prefix must end with 'a'")
    if suffix and not suffix.startswith("a"):
        raise ValueError("a non-empty suffix must start with 'a'")
    phi = {tuple(a): tuple(b) for a, b in pairs}
    s_img = {descent_mask(b) for b in phi.values()}
    if len(s_img) != 1:
        raise ValueError("images do not share one descent set")
    s = s_img.pop()
    big_n = len(prefix) + r + 1 + len(suffix)
    word_t = prefix + word_from_set(t, r) + suffix
    word_s = prefix + word_from_set(s, r) + suffix
    t_big, s_big = set_from_word(word_t), set_from_word(word_s)
    start = len(prefix)
    lifted = []
    for seq in descent_class_seqs(big_n, t_big):
        block = seq[start : start + r + 1]
        std, values = _standardize(block)
        image = phi[std]
        new_block = tuple(values[k - 1] for k in image)
        lifted.append((seq, seq[:start] + new_block + seq[start + r + 1 :]))
    return big_n, s_big, t_big, lifted
