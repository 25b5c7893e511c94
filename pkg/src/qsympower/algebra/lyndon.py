"""Writing Psi_alpha as a polynomial in the Psi_L with L a Lyndon composition.

The index-shuffle of the Chen-Fox-Lyndon factors of w contains w as its
lexicographically largest word, so w can be peeled off and the remainder
rewritten recursively.  An index-shuffle of Psi's differs from their product
by the factor z_(concatenation) / prod z_(factor).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache

from ..compositions import Composition, is_lyndon, lyndon_factorization, shuffles, z
from ..errors import DomainError
from .element import PSI, Element
from .operations import psi_product


def _multi_shuffle(words) -> Counter:
    acc = Counter({Composition(): 1})
    for w in words:
        nxt = Counter()
        for u, m in acc.items():
            for v, k in shuffles(u, w).items():
                nxt[v] += m * k
        acc = nxt
    return acc


@lru_cache(maxsize=None)
def _index_shuffle_form(w: Composition) -> dict:
    """w as a combination of index-shuffles of Lyndon words: {factors (nonincreasing): coeff}."""
    if is_lyndon(w):
        return {(w,): Fraction(1)}
    factors = tuple(lyndon_factorization(w))
    sh = _multi_shuffle(factors)
    lead = sh[w]
    acc = defaultdict(Fraction)
    acc[factors] += Fraction(1, lead)
    for u, m in sh.items():
        if u == w:
            continue
        assert tuple(u) < tuple(w), (u, w)
        for mono, c in _index_shuffle_form(u).items():
            acc[mono] -= Fraction(m, lead) * c
    return {k: v for k, v in acc.items() if v}


class LyndonPolynomial:
    """A rational combination of products Psi_L1 * ... * Psi_Lk of Lyndon-indexed power sums.

    ``terms`` maps a tuple of Lyndon compositions (in nonincreasing order) to its coefficient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        acc = defaultdict(Fraction)
        for mono, c in terms.items():
            mono = tuple(sorted((Composition(L) for L in mono), key=tuple, reverse=True))
            for L in mono:
                if not is_lyndon(L):
                    raise DomainError(f"{L} is not a Lyndon composition")
            acc[mono] += Fraction(c)
        order = sorted(acc, key=lambda m: (sum(m, ()), len(m)), reverse=True)
        self.terms = {m: acc[m] for m in order if acc[m]}

    def expand(self) -> Element:
        """Multiply out through the shuffle product rule, landing in the Psi basis."""
        total = Element(PSI)
        for mono, c in self.terms.items():
            prod = Element(PSI, {Composition(): 1})
            for L in mono:
                step = defaultdict(Fraction)
                for alpha, a in prod.items():
                    for gamma, b in psi_product(alpha, L).items():
                        step[gamma] += a * b
                prod = Element(PSI, step)
            total = total + c * prod
        return total

    def __eq__(self, other):
        if not isinstance(other, LyndonPolynomial):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self.terms.items():
            label = "*".join(f"Psi[{L}]" for L in mono)
            mag = abs(c)
            body = label if mag == 1 else f"{mag} {label}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def to_json(self) -> dict:
        return {
            "basis": "Psi",
            "terms": [
                {"factors": [list(L) for L in mono], "coeff": str(c)}
                for mono, c in self.terms.items()
            ],
        }

    __str__ = to_text

    def __repr__(self):
        return f"LyndonPolynomial({self.to_text()})"


def lyndon_rewrite(alpha) -> LyndonPolynomial:
    """Psi_alpha as a polynomial in the Lyndon-indexed Psi_L."""
    alpha = Composition(alpha)
    if not alpha:
        raise DomainError("the empty composition has no Lyndon rewriting")
    za = z(alpha)
    out = {}
    for mono, c in _index_shuffle_form(alpha).items():
        scale = Fraction(za)
        for L in mono:
            scale /= z(L)
        out[mono] = c * scale
    return LyndonPolynomial(out)
