"""Permutations, inversion sets and descent classes.

Inversions are encoded over *value* pairs: the pair {lo < hi} owns bit
``(hi-1)(hi-2)/2 + lo - 1``, independent of n.  With this encoding the
weak order is a single mask-containment test.  Descent sets are masks with
bit i for a descent at position i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

import numpy as np

from .._bits import as_mask, from_mask, full_mask, submasks

MAX_ARRAY_N = 11  # C(11, 2) = 55 inversion bits fit in uint64


def pair_bit(lo: int, hi: int) -> int:
    return (hi - 1) * (hi - 2) // 2 + lo - 1


def inversion_mask(seq: Sequence[int]) -> int:
    mask = 0
    for i, a in enumerate(seq):
        for b in seq[i + 1 :]:
            if a > b:
                mask |= 1 << pair_bit(b, a)
    return mask


def descent_mask(seq: Sequence[int]) -> int:
    mask = 0
    for i in range(1, len(seq)):
        if seq[i - 1] > seq[i]:
            mask |= 1 << i
    return mask


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation ``a_1 ... a_n``."""

    seq: tuple[int, ...]
    inv: int = field(init=False, compare=False, repr=False)
    des: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        seq = tuple(self.seq)
        if sorted(seq) != list(range(1, len(seq) + 1)):
            raise ValueError(f"{seq} is not a permutation of 1..{len(seq)}")
        object.__setattr__(self, "seq", seq)
        object.__setattr__(self, "inv", inversion_mask(seq))
        object.__setattr__(self, "des", descent_mask(seq))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text:
            return cls(tuple(int(x) for x in text.split(",")))
        return cls(tuple(int(ch) for ch in text))

    @property
    def n(self) -> int:
        return len(self.seq)

    def inversions(self) -> set[tuple[int, int]]:
        """I(pi) = {(a_i, a_j): a_i > a_j, i < j}."""
        s = self.seq
        return {(s[i], s[j]) for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j]}

    def descent_set(self) -> tuple[int, ...]:
        return from_mask(self.des)

    def __call__(self, i: int) -> int:
        return self.seq[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self o other)(i) = self(other(i))."""
        return Permutation(tuple(self.seq[j - 1] for j in other.seq))

    def __str__(self) -> str:
        return format_perm(self.seq)


def format_perm(seq: Sequence[int]) -> str:
    if len(seq) <= 9:
        return "".join(map(str, seq))
    return ",".join(map(str, seq))


def weak_leq(p: Permutation, q: Permutation) -> bool:
    """p <=_w q iff I(p) is a subset of I(q)."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    return p.inv & ~q.inv == 0


def reversal(n: int) -> Permutation:
    """beta: i -> n + 1 - i."""
    return Permutation(tuple(range(n, 0, -1)))


def t_circ_beta(r: int, t: int | Iterable[int]) -> int:
    """T o beta = {i in [r] : r - i + 1 not in T}."""
    t = as_mask(t)
    return sum(1 << i for i in range(1, r + 1) if not t >> (r - i + 1) & 1)


def r_minus(r: int, t: int | Iterable[int]) -> int:
    """r - [T] = {i : r - i + 1 in T}."""
    t = as_mask(t)
    return sum(1 << i for i in range(1, r + 1) if t >> (r - i + 1) & 1)


def complement(r: int, t: int | Iterable[int]) -> int:
    return full_mask(r) & ~as_mask(t)


def beta_transforms(p: Permutation) -> tuple[Permutation, Permutation, Permutation]:
    """(beta o p, p o beta, beta o p o beta), each checked against its descent formula."""
    n = p.n
    r = n - 1
    beta = reversal(n)
    left = beta.compose(p)
    right = p.compose(beta)
    both = beta.compose(p).compose(beta)
    t = p.des
    expected = (complement(r, t), t_circ_beta(r, t), r_minus(r, t))
    for q, want in zip((left, right, both), expected):
        if q.des != want:
            raise AssertionError(f"descent set of {q} is {from_mask(q.des)}, expected {from_mask(want)}")
    return left, right, both


def _backtrack(n: int, t: int) -> Iterator[tuple[int, ...]]:
    seq: list[int] = []
    used = [False] * (n + 1)

    def rec() -> Iterator[tuple[int, ...]]:
        k = len(seq)
        if k == n:
            yield tuple(seq)
            return
        last = seq[-1] if seq else None
        down = bool(t >> k & 1)
        if last is None:
            candidates = range(1, n + 1)
        elif down:
            candidates = range(1, last)
        else:
            candidates = range(last + 1, n + 1)
        for v in candidates:
            if used[v]:
                continue
            used[v] = True
            seq.append(v)
            yield from rec()
            seq.pop()
            used[v] = False

    yield from rec()


@lru_cache(maxsize=4096)
def descent_class_seqs(n: int, t: int) -> tuple[tuple[int, ...], ...]:
    """All permutations of [n] with descent set exactly T, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    if t & ~full_mask(n - 1):
        raise ValueError(f"{from_mask(t)} is not a subset of [{n - 1}]")
    return tuple(_backtrack(n, t))


@dataclass(frozen=True)
class DescentClass:
    n: int
    t: int
    members: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.members)


def descent_class(n: int, t: int | Iterable[int]) -> DescentClass:
    t = as_mask(t)
    return DescentClass(n, t, tuple(Permutation(s) for s in descent_class_seqs(n, t)))


@lru_cache(maxsize=1024)
def class_arrays(n: int, t: int) -> tuple[np.ndarray, np.ndarray]:
    """(one-line array of shape (k, n), uint64 inversion masks) for D(T)."""
    if n > MAX_ARRAY_N:
        raise ValueError(f"array encoding supports n <= {MAX_ARRAY_N}")
    seqs = descent_class_seqs(n, t)
    perms = np.array(seqs, dtype=np.int8).reshape(len(seqs), n)
    inv = np.zeros(len(seqs), dtype=np.uint64)
    for i in range(n):
        for j in range(i + 1, n):
            a = perms[:, i].astype(np.int64)
            b = perms[:, j].astype(np.int64)
            lo = np.minimum(a, b)
            hi = np.maximum(a, b)
            bits = ((hi - 1) * (hi - 2) // 2 + lo - 1).astype(np.uint64)
            inv |= np.where(a > b, np.left_shift(np.uint64(1), bits), np.uint64(0))
    perms.setflags(write=False)
    inv.setflags(write=False)
    return perms, inv


def composition_count(n: int, s: int) -> int:
    """f_S(B_n): multinomial coefficient of the composition of n cut at S."""
    cuts = [0, *from_mask(s), n]
    out = factorial(n)
    for a, b in zip(cuts, cuts[1:]):
        out //= factorial(b - a)
    return out


def boolean_flag_h(n: int, s: int | Iterable[int]) -> int:
    """h_S of the Boolean lattice B_n, i.e. the number of permutations of [n] with descent set S."""
    s = as_mask(s)
    if s & ~full_mask(n - 1):
        raise ValueError(f"{from_mask(s)} is not a subset of [{n - 1}]")
    k = s.bit_count()
    return sum((-1) ** (k - t.bit_count()) * composition_count(n, t) for t in submasks(s))


def count_orderings_before(r: int, i: int, s: int | Iterable[int]) -> int:
    """Orderings of 1..r+1 with descent set S in which r+1 comes before i."""
    s = as_mask(s)
    if not 1 <= i < r + 1:
        raise ValueError(f"need 1 <= i <= {r}")
    count = 0
    for p in permutations(range(1, r + 2)):
        if descent_mask(p) == s and p.index(r + 1) < p.index(i):
            count += 1
    return count


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]
