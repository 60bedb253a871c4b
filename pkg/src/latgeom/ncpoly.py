"""Integer polynomials in noncommuting letters.

Words are plain strings over a two-letter alphabet, either ``"ab"`` or
``"cd"``.  Degrees: a, b, c have degree 1 and d has degree 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

ALPHABETS = ("ab", "cd")


def word_degree(word: str) -> int:
    return len(word) + word.count("d")


@dataclass(frozen=True)
class NcPolynomial:
    alphabet: str
    terms: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.alphabet not in ALPHABETS:
            raise ValueError(f"alphabet must be one of {ALPHABETS}, got {self.alphabet!r}")
        clean = {}
        for w, c in self.terms.items():
            if set(w) - set(self.alphabet):
                raise ValueError(f"word {w!r} is not over {self.alphabet!r}")
            if c:
                clean[w] = int(c)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def from_pairs(cls, alphabet: str, pairs: Iterable[tuple[int, str]]) -> "NcPolynomial":
        terms: dict[str, int] = {}
        for c, w in pairs:
            terms[w] = terms.get(w, 0) + c
        return cls(alphabet, terms)

    def coeff(self, word: str) -> int:
        return self.terms.get(word, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {word_degree(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def _check(self, other: "NcPolynomial") -> None:
        if not isinstance(other, NcPolynomial):
            raise TypeError(f"expected NcPolynomial, got {type(other).__name__}")
        if other.alphabet != self.alphabet:
            raise ValueError(f"alphabet mismatch: {self.alphabet!r} vs {other.alphabet!r}")

    def __add__(self, other: "NcPolynomial") -> "NcPolynomial":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return NcPolynomial(self.alphabet, terms)

    def __neg__(self) -> "NcPolynomial":
        return NcPolynomial(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NcPolynomial") -> "NcPolynomial":
        return self + (-other)

    def __mul__(self, other: "int | NcPolynomial") -> "NcPolynomial":
        if isinstance(other, int):
            return NcPolynomial(self.alphabet, {w: c * other for w, c in self.terms.items()})
        self._check(other)
        terms: dict[str, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                terms[w1 + w2] = terms.get(w1 + w2, 0) + c1 * c2
        return NcPolynomial(self.alphabet, terms)

    __rmul__ = __mul__

    def left_multiply(self, word: str) -> "NcPolynomial":
        return NcPolynomial(self.alphabet, {word + w: c for w, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for w, c in self.terms.items():
            body = w or "1"
            mag = body if abs(c) == 1 and w else f"{abs(c)}{w}"
            if not out:
                out = mag if c > 0 else f"-{mag}"
            else:
                out += f" + {mag}" if c > 0 else f" - {mag}"
        return out

    def to_tsv(self) -> str:
        return "".join(f"{c}\t{w}\n" for w, c in self.terms.items())


def parse(alphabet: str, text: str) -> NcPolynomial:
    """Parse ``"aa + 3ab - 2bb"`` style input."""
    body = text.replace(" ", "")
    if not body or body == "0":
        return NcPolynomial(alphabet)
    if not _FULL.fullmatch(body):
        raise ValueError(f"cannot parse {text!r}")
    pairs = []
    for sign, digits, word in _TERM.findall(body):
        coef = int(digits) if digits else 1
        pairs.append((-coef if sign == "-" else coef, word))
    return NcPolynomial.from_pairs(alphabet, pairs)


_TERM = re.compile(r"([+-]?)(\d*)([a-z]+)")
_FULL = re.compile(r"(?:[+-]?\d*[a-z]+)+")
