"""Simple matroids given by their list of bases.

Atom sets are int bit masks (atom ``i`` in bit ``i``).  A linear order on
the atoms is a tuple listing the atoms from least to greatest; ``None``
everywhere means the natural order ``1 < 2 < ... < n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from ._bits import from_mask, full_mask, iter_bits, to_mask

MAX_ATOMS = 16

AtomOrder = tuple[int, ...]


class MatroidError(ValueError):
    """Invalid matroid data or arguments."""


def natural_order(n: int) -> AtomOrder:
    return tuple(range(1, n + 1))


def check_order(order: Sequence[int] | None, n: int) -> AtomOrder:
    if order is None:
        return natural_order(n)
    order = tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise MatroidError(f"order {order} is not a permutation of 1..{n}")
    return order


def order_position(order: AtomOrder) -> dict[int, int]:
    """Map atom -> its position (0-based) in the linear order."""
    return {a: k for k, a in enumerate(order)}


def sort_atoms(mask: int, order: AtomOrder) -> tuple[int, ...]:
    pos = order_position(order)
    return tuple(sorted(iter_bits(mask), key=pos.__getitem__))


@dataclass(frozen=True)
class Matroid:
    """A simple matroid on atoms ``1..n``.

    ``bases`` are stored sorted and deduplicated.  Construction rejects
    bases of the wrong size, loops and parallel pairs.  The basis exchange
    axiom is not checked here because it is quadratic in the number of
    bases; call :meth:`satisfies_exchange` for that.
    """

    n: int
    rank: int
    bases: tuple[int, ...]
    _basis_set: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ATOMS:
            raise MatroidError(f"atom count must be in 1..{MAX_ATOMS}, got {self.n}")
        if not 1 <= self.rank <= self.n:
            raise MatroidError(f"rank must be in 1..{self.n}, got {self.rank}")
        bases = tuple(sorted(set(self.bases)))
        if not bases:
            raise MatroidError("a matroid needs at least one basis")
        ground = full_mask(self.n)
        for b in bases:
            if b & ~ground:
                raise MatroidError(f"basis {from_mask(b)} uses atoms outside 1..{self.n}")
            if b.bit_count() != self.rank:
                raise MatroidError(f"basis {from_mask(b)} does not have {self.rank} atoms")
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "_basis_set", frozenset(bases))
        self._check_simple()

    def _check_simple(self) -> None:
        covered = 0
        for b in self.bases:
            covered |= b
        if covered != full_mask(self.n):
            loops = from_mask(full_mask(self.n) & ~covered)
            raise MatroidError(f"not simple: loops {loops}")
        if self.rank >= 2:
            for x, y in combinations(range(1, self.n + 1), 2):
                pair = (1 << x) | (1 << y)
                if not any(b & pair == pair for b in self.bases):
                    raise MatroidError(f"not simple: atoms {x} and {y} are parallel")
        elif self.n > 1:
            raise MatroidError("not simple: a rank-1 matroid on several atoms has parallel atoms")

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[Iterable[int]], check_exchange: bool = True) -> "Matroid":
        masks = [to_mask(b) for b in bases]
        if not masks:
            raise MatroidError("a matroid needs at least one basis")
        m = cls(n, masks[0].bit_count(), tuple(masks))
        if check_exchange and not m.satisfies_exchange():
            raise MatroidError("bases violate the exchange axiom")
        return m

    @property
    def ground(self) -> int:
        return full_mask(self.n)

    def basis_lists(self) -> list[tuple[int, ...]]:
        return [from_mask(b) for b in self.bases]

    def is_basis(self, a: int) -> bool:
        return a in self._basis_set

    def rank_of(self, a: int) -> int:
        """Size of a largest independent subset of ``a``."""
        return max((a & b).bit_count() for b in self.bases)

    def is_independent(self, a: int) -> bool:
        return any(a & b == a for b in self.bases)

    def closure(self, a: int) -> int:
        """Smallest flat containing ``a``."""
        if a & ~self.ground:
            raise MatroidError("atom set outside the ground set")
        rk = self.rank_of(a)
        out = a
        for x in range(1, self.n + 1):
            bit = 1 << x
            if not a & bit and self.rank_of(a | bit) == rk:
                out |= bit
        return out

    def is_flat(self, a: int) -> bool:
        return self.closure(a) == a

    def satisfies_exchange(self) -> bool:
        """Exhaustive check of the basis exchange axiom."""
        for b1 in self.bases:
            for b2 in self.bases:
                if b1 == b2:
                    continue
                for x in iter_bits(b1 & ~b2):
                    rest = b1 & ~(1 << x)
                    if not any(rest | (1 << y) in self._basis_set for y in iter_bits(b2 & ~b1)):
                        return False
        return True

    def fundamental_circuit(self, e: int, b: int) -> int:
        """The unique circuit inside ``b + e`` for a basis ``b`` and ``e`` not in ``b``."""
        if not self.is_basis(b):
            raise MatroidError(f"{from_mask(b)} is not a basis")
        if not 1 <= e <= self.n or b >> e & 1:
            raise MatroidError(f"atom {e} must lie outside the basis")
        ebit = 1 << e
        circuit = ebit
        for x in iter_bits(b):
            if (b & ~(1 << x)) | ebit in self._basis_set:
                circuit |= 1 << x
        return circuit

    @cached_property
    def circuits(self) -> tuple[int, ...]:
        """All circuits, sorted by size then lexicographically.

        Every circuit is a fundamental circuit for some basis (extend
        ``C - e`` to a basis), so collecting those finds all of them.
        """
        found: set[int] = set()
        for b in self.bases:
            for e in iter_bits(self.ground & ~b):
                found.add(self.fundamental_circuit(e, b))
        return tuple(sorted(found, key=lambda c: (c.bit_count(), from_mask(c))))

    def broken_circuits(self, order: Sequence[int] | None = None) -> tuple[int, ...]:
        order = check_order(order, self.n)
        pos = order_position(order)
        out = []
        for c in self.circuits:
            least = min(iter_bits(c), key=pos.__getitem__)
            out.append(c & ~(1 << least))
        return tuple(out)

    def find_broken_circuit(self, b: int, order: Sequence[int] | None = None) -> int | None:
        """A broken circuit contained in ``b``, or None."""
        for bc in self.broken_circuits(order):
            if bc & b == bc:
                return bc
        return None

    def nbc_bases(self, order: Sequence[int] | None = None) -> list[int]:
        """Bases containing no broken circuit, in lexicographic order.

        Bases are compared as increasing atom sequences under ``order``.
        """
        order = check_order(order, self.n)
        pos = order_position(order)
        broken = self.broken_circuits(order)
        keep = [b for b in self.bases if not any(bc & b == bc for bc in broken)]
        return sorted(keep, key=lambda b: sorted(pos[a] for a in iter_bits(b)))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "rank": self.rank, "bases": self.basis_lists()})

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")


def closure(m: Matroid, a: int | Iterable[int]) -> int:
    return m.closure(a if isinstance(a, int) else to_mask(a))


def circuits(m: Matroid) -> list[int]:
    return list(m.circuits)


def fundamental_circuit(m: Matroid, e: int, b: int | Iterable[int]) -> int:
    return m.fundamental_circuit(e, b if isinstance(b, int) else to_mask(b))


def nbc_bases(m: Matroid, order: Sequence[int] | None = None) -> list[int]:
    return m.nbc_bases(order)


def make_uniform(rank: int, n: int) -> Matroid:
    """Uniform matroid U(rank, n): the truncated Boolean algebra B(rank, n)."""
    if not 1 <= rank <= n:
        raise MatroidError(f"need 1 <= rank <= n, got rank={rank}, n={n}")
    return Matroid(n, rank, tuple(to_mask(c) for c in combinations(range(1, n + 1), rank)))


def make_boolean(n: int) -> Matroid:
    return make_uniform(n, n)


def make_near_pencil(rank: int, n: int) -> Matroid:
    """Near pencil of the given rank on ``n`` atoms.

    Atoms ``1..rank-2`` are coloops and ``rank-1..n`` form one line, i.e.
    the direct sum of a free matroid with U(2, n-rank+2).  For rank 2 this
    is U(2, n).
    """
    if rank < 2 or n < rank:
        raise MatroidError(f"need 2 <= rank <= n, got rank={rank}, n={n}")
    coloops = to_mask(range(1, rank - 1))
    line = range(rank - 1, n + 1)
    bases = tuple(coloops | (1 << x) | (1 << y) for x, y in combinations(line, 2))
    return Matroid(n, rank, bases)


def from_vectors(vectors: Sequence[Sequence[int | Fraction]]) -> Matroid:
    """Linear matroid of a list of column vectors (atom i = vectors[i-1]).

    Bases are the maximal linearly independent subsets, found with exact
    rational elimination.
    """
    n = len(vectors)
    cols = [[Fraction(x) for x in v] for v in vectors]
    rk = _rank([cols[i] for i in range(n)])
    bases = []
    for c in combinations(range(n), rk):
        if _rank([cols[i] for i in c]) == rk:
            bases.append(to_mask(i + 1 for i in c))
    return Matroid(n, rk, tuple(bases))


def _rank(cols: list[list[Fraction]]) -> int:
    rows = [list(r) for r in cols]
    rank = 0
    if not rows:
        return 0
    width = len(rows[0])
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def parse_matroid(text: str) -> Matroid:
    """Parse the JSON matroid format ``{"n": .., "rank": .., "bases": [[..], ..]}``."""
    try:
        data = json.loads(text)
        n = int(data["n"])
        rank = int(data["rank"])
        bases = [to_mask(int(a) for a in b) for b in data["bases"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise MatroidError(f"malformed matroid file: {exc}") from exc
    m = Matroid(n, rank, tuple(bases))
    if not m.satisfies_exchange():
        raise MatroidError("bases violate the exchange axiom")
    return m


def load_matroid(path: str | Path) -> Matroid:
    return parse_matroid(Path(path).read_text(encoding="utf-8"))
