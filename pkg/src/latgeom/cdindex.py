"""ab/cd polynomial rewriting and the c-2d-index of zonotopes.

The zonotope value is produced as an ordinary cd-polynomial: every d
arising from an ``ab`` factor carries its factor 2 in the integer
coefficient (so the square is ``cc + 2d``).
"""

from __future__ import annotations

from .lattice import GeometricLattice, ab_index
from .ncpoly import NcPolynomial, parse

__all__ = [
    "CdRewriteError",
    "NcPolynomial",
    "compare_coefficientwise",
    "expand",
    "omega",
    "omega_poly",
    "parse",
    "to_cd",
    "zonotope_c2d",
]


class CdRewriteError(ValueError):
    """The ab-polynomial is not a polynomial in c = a+b and d = ab+ba."""

    def __init__(self, residual: NcPolynomial, partial: NcPolynomial):
        super().__init__(f"not expressible in c, d; residual {residual}")
        self.residual = residual
        self.partial = partial


_EXPAND = {"c": ("a", "b"), "d": ("ab", "ba")}


def expand_word(word: str) -> NcPolynomial:
    words = [""]
    for ch in word:
        words = [w + piece for w in words for piece in _EXPAND[ch]]
    return NcPolynomial.from_pairs("ab", ((1, w) for w in words))


def expand(p: NcPolynomial) -> NcPolynomial:
    """Substitute c -> a+b and d -> ab+ba."""
    if p.alphabet != "cd":
        raise ValueError("expand takes a cd-polynomial")
    out = NcPolynomial("ab")
    for w, c in p.terms.items():
        out = out + expand_word(w) * c
    return out


def _leading_cd_word(word: str) -> str | None:
    """The cd-word whose expansion has ``word`` as its lex-least term, if any.

    The lex-least term of a cd-word replaces c by a and d by ab, so the
    preimage exists iff ``word`` starts with a and contains no bb.
    """
    out = []
    i = 0
    while i < len(word):
        if word[i] != "a":
            return None
        if word[i + 1 : i + 2] == "b":
            out.append("d")
            i += 2
        else:
            out.append("c")
            i += 1
    return "".join(out)


def to_cd(p: NcPolynomial) -> NcPolynomial:
    """Rewrite an ab-polynomial in c and d by leading-term elimination.

    Repeatedly take the lexicographically least word (a < b) of the
    residual and subtract the matching cd-word's expansion.  Raises
    :class:`CdRewriteError` carrying the residual when a leading word has
    no cd preimage.
    """
    if p.alphabet != "ab":
        raise ValueError("to_cd takes an ab-polynomial")
    if not p.is_homogeneous():
        raise ValueError("polynomial is not homogeneous")
    residual = p
    result: dict[str, int] = {}
    while not residual.is_zero():
        lead = min(residual.terms)
        coef = residual.terms[lead]
        cd = _leading_cd_word(lead)
        if cd is None:
            raise CdRewriteError(residual, NcPolynomial("cd", result))
        result[cd] = result.get(cd, 0) + coef
        residual = residual - expand_word(cd) * coef
    return NcPolynomial("cd", result)


def omega(word: str) -> tuple[int, str]:
    """Scan left to right: each ``ab`` factor becomes d (coefficient x2), other letters c."""
    out = []
    coef = 1
    i = 0
    while i < len(word):
        if word[i : i + 2] == "ab":
            out.append("d")
            coef *= 2
            i += 2
        else:
            out.append("c")
            i += 1
    return coef, "".join(out)


def omega_poly(p: NcPolynomial) -> NcPolynomial:
    if p.alphabet != "ab":
        raise ValueError("omega takes an ab-polynomial")
    pairs = []
    for w, c in p.terms.items():
        k, cd = omega(w)
        pairs.append((c * k, cd))
    return NcPolynomial.from_pairs("cd", pairs)


def zonotope_c2d(L: GeometricLattice) -> NcPolynomial:
    """omega(a * ab_index(L))."""
    return omega_poly(ab_index(L).left_multiply("a"))


def compare_coefficientwise(p: NcPolynomial, q: NcPolynomial) -> str:
    """Partial-order comparison of coefficient vectors: '=', '<=', '>=' or 'incomparable'."""
    if p.alphabet != q.alphabet:
        raise ValueError(f"alphabet mismatch: {p.alphabet!r} vs {q.alphabet!r}")
    if p.degrees() | q.degrees() and len(p.degrees() | q.degrees()) > 1:
        raise ValueError("polynomials have different degrees")
    words = set(p.terms) | set(q.terms)
    le = all(p.coeff(w) <= q.coeff(w) for w in words)
    ge = all(p.coeff(w) >= q.coeff(w) for w in words)
    if le and ge:
        return "="
    if le:
        return "<="
    if ge:
        return ">="
    return "incomparable"
