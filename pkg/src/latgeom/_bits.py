"""Small helpers for sets of positive integers encoded as Python ints.

Element ``i`` lives in bit ``i``; bit 0 is never used.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def to_mask(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        if i < 1:
            raise ValueError(f"elements must be positive, got {i}")
        mask |= 1 << i
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    mask >>= 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    """Mask of ``{1, ..., n}``."""
    return ((1 << n) - 1) << 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def fmt_set(mask: int) -> str:
    return "{" + ",".join(map(str, from_mask(mask))) + "}"


def as_mask(s: int | Iterable[int]) -> int:
    """Accept either a ready mask or an iterable of elements."""
    if isinstance(s, int):
        return s
    return to_mask(s)
