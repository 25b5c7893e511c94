"""Compositions, the refinement order, and the integer statistics attached to them.

A composition is stored as an immutable tuple of positive integers.  Refinement
is written ``refines(finer, coarser)``; every statistic that depends on a pair
of compositions takes the finer one first.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InvalidSubsetError, RefinementError, ResourceError, SizeError, DomainError

DEFAULT_MAX_N = 12


class Composition(tuple):
    """A finite sequence of positive integers.

    >>> Composition([2, 3, 2]).n
    7
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Composition):
            return parts
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"composition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse the comma-separated text form, e.g. ``"2,3,2"``; ``""`` is empty."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(p) for p in text.split(","))

    @property
    def n(self) -> int:
        return sum(self)

    size = n

    @property
    def length(self) -> int:
        return len(self)

    def partition(self) -> "Composition":
        """The parts sorted into weakly decreasing order."""
        return Composition(sorted(self, reverse=True))

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __add__(self, other):
        return Composition(tuple(self) + tuple(other))

    def __getitem__(self, item):
        result = tuple.__getitem__(self, item)
        if isinstance(item, slice):
            return Composition(result)
        return result

    def __repr__(self):
        return f"Composition({list(self)})"

    def __str__(self):
        return ",".join(map(str, self))


EMPTY = Composition(())


def sort_key(alpha):
    """Canonical order: size ascending, then longer first, then lexicographically larger first.

    Within a degree this lists the finest compositions first, matching the
    way expansions such as ``2 M[2,3,2] + 6/5 M[5,2] + ...`` are written.
    """
    return (sum(alpha), -len(alpha), tuple(-p for p in alpha))


def canonical(comps: Iterable) -> list:
    return sorted((Composition(c) for c in comps), key=sort_key)


def check_cap(n: int, max_n: int | None, what: str = "enumeration"):
    limit = DEFAULT_MAX_N if max_n is None else max_n
    if n > limit:
        raise ResourceError(f"{what} at n={n} exceeds the cap n<={limit}; raise max_n to override")


# ---------------------------------------------------------------------------
# subsets <-> compositions


@dataclass(frozen=True)
class SubsetIndex:
    """A subset of {1, ..., n-1}, kept as a strictly increasing tuple."""

    n: int
    elements: tuple

    def __post_init__(self):
        els = tuple(self.elements)
        if list(els) != sorted(set(els)):
            raise InvalidSubsetError(f"subset elements must be strictly increasing: {els}")
        for a in els:
            if a <= 0 or a >= self.n:
                raise InvalidSubsetError(f"element {a} outside [1, {self.n - 1}]")
        object.__setattr__(self, "elements", els)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def set_of(alpha) -> SubsetIndex:
    alpha = Composition(alpha)
    partial = list(itertools.accumulate(alpha))[:-1]
    return SubsetIndex(alpha.n, tuple(partial))


def comp_of(subset, n: int | None = None) -> Composition:
    if isinstance(subset, SubsetIndex):
        if n is not None and n != subset.n:
            raise InvalidSubsetError(f"subset is for n={subset.n}, not n={n}")
        n = subset.n
        elements = subset.elements
    else:
        if n is None:
            raise InvalidSubsetError("n is required when passing a bare subset")
        elements = sorted(subset)
        if len(set(elements)) != len(elements):
            raise InvalidSubsetError(f"repeated elements in {subset}")
        for a in elements:
            if a <= 0 or a >= n:
                raise InvalidSubsetError(f"element {a} outside [1, {n - 1}]")
    if n == 0:
        return EMPTY
    points = [0, *elements, n]
    return Composition(b - a for a, b in zip(points, points[1:]))


def _set(alpha) -> frozenset:
    return frozenset(itertools.accumulate(alpha[:-1])) if alpha else frozenset()


def _from_set(s, n) -> Composition:
    if n == 0:
        return EMPTY
    points = [0, *sorted(s), n]
    return Composition(b - a for a, b in zip(points, points[1:]))


# ---------------------------------------------------------------------------
# refinement order


def refines(beta, alpha) -> bool:
    """True when ``beta`` refines ``alpha`` (alpha is a coarsening of beta)."""
    if sum(beta) != sum(alpha):
        return False
    return _set(alpha) <= _set(beta)


def split(beta, alpha) -> list:
    """Blocks of ``beta`` summing, in order, to the parts of ``alpha``."""
    beta, alpha = Composition(beta), Composition(alpha)
    blocks = []
    i = 0
    for part in alpha:
        total = 0
        start = i
        while total < part and i < len(beta):
            total += beta[i]
            i += 1
        if total != part:
            raise RefinementError(f"{tuple(beta)} does not refine {tuple(alpha)}")
        blocks.append(beta[start:i])
    if i != len(beta):
        raise RefinementError(f"{tuple(beta)} does not refine {tuple(alpha)}")
    return blocks


def compositions(n: int, max_n: int | None = None) -> list:
    """All compositions of ``n`` in canonical order."""
    check_cap(n, max_n, "composition enumeration")
    return list(_compositions(n))


@lru_cache(maxsize=None)
def _compositions(n):
    if n == 0:
        return (EMPTY,)
    cuts = range(1, n)
    out = [
        _from_set(s, n)
        for k in range(n)
        for s in itertools.combinations(cuts, k)
    ]
    return tuple(canonical(out))


def partitions(n: int, max_n: int | None = None) -> list:
    """Partitions of ``n`` as weakly decreasing compositions, in canonical order."""
    check_cap(n, max_n, "partition enumeration")
    return canonical({c.partition() for c in _compositions(n)})


def rearrangements(lam) -> list:
    """Compositions whose parts sort to ``lam``."""
    lam = Composition(lam)
    target = lam.partition()
    return [c for c in _compositions(lam.n) if c.partition() == target]


def coarsenings(alpha, max_n: int | None = None) -> list:
    alpha = Composition(alpha)
    check_cap(alpha.n, max_n, "coarsening enumeration")
    return list(_coarsenings(alpha))


@lru_cache(maxsize=None)
def _coarsenings(alpha):
    s = sorted(_set(alpha))
    out = [
        _from_set(sub, alpha.n)
        for k in range(len(s) + 1)
        for sub in itertools.combinations(s, k)
    ]
    return tuple(canonical(out))


def refinements(alpha, max_n: int | None = None) -> list:
    alpha = Composition(alpha)
    check_cap(alpha.n, max_n, "refinement enumeration")
    return list(_refinements(alpha))


@lru_cache(maxsize=None)
def _refinements(alpha):
    base = _set(alpha)
    free = [i for i in range(1, alpha.n) if i not in base]
    out = [
        _from_set(base | set(extra), alpha.n)
        for k in range(len(free) + 1)
        for extra in itertools.combinations(free, k)
    ]
    return tuple(canonical(out))


def interval(finer, coarser) -> list:
    """All delta with finer <= delta <= coarser in the refinement order."""
    lo, hi = _set(Composition(coarser)), _set(Composition(finer))
    if not lo <= hi or sum(finer) != sum(coarser):
        return []
    free = sorted(hi - lo)
    n = sum(finer)
    out = [
        _from_set(lo | set(extra), n)
        for k in range(len(free) + 1)
        for extra in itertools.combinations(free, k)
    ]
    return canonical(out)


# ---------------------------------------------------------------------------
# transforms and lattice operations


def complement(alpha) -> Composition:
    alpha = Composition(alpha)
    n = alpha.n
    return _from_set(set(range(1, n)) - _set(alpha), n)


def reverse(alpha) -> Composition:
    return Composition(reversed(tuple(alpha)))


def transpose(alpha) -> Composition:
    return reverse(complement(alpha))


_TRANSFORMS = {"complement": complement, "reverse": reverse, "transpose": transpose}


def transform(alpha, kind: str) -> Composition:
    try:
        return _TRANSFORMS[kind](alpha)
    except KeyError:
        raise DomainError(f"unknown transform {kind!r}; expected one of {sorted(_TRANSFORMS)}") from None


def meet(alpha, beta) -> Composition:
    """Finest common coarsening (intersection of sets)."""
    _same_size(alpha, beta)
    return _from_set(_set(alpha) & _set(beta), sum(alpha))


def join(alpha, beta) -> Composition:
    """Coarsest common refinement (union of sets)."""
    _same_size(alpha, beta)
    return _from_set(_set(alpha) | _set(beta), sum(alpha))


def lattice_ops(alpha, beta) -> tuple:
    return meet(alpha, beta), join(alpha, beta)


def _same_size(alpha, beta):
    if sum(alpha) != sum(beta):
        raise SizeError(f"{tuple(alpha)} and {tuple(beta)} have different sizes")


# ---------------------------------------------------------------------------
# scalar statistics


def z(alpha) -> int:
    """Order of the centralizer of a permutation of cycle type ``alpha``."""
    out = 1
    for part, mult in Counter(alpha).items():
        out *= part**mult * math.factorial(mult)
    return out


def _partial_sum_product(parts) -> int:
    return math.prod(itertools.accumulate(parts))


def pi(alpha, beta) -> int:
    """Product over the blocks of alpha (split by beta) of their running partial sums."""
    return math.prod(_partial_sum_product(b) for b in split(alpha, beta))


def lp(beta, alpha) -> int:
    """Product of the last parts of the blocks of beta split by alpha."""
    return math.prod(b[-1] for b in split(beta, alpha))


def ell_prod(beta, alpha) -> int:
    """Product of the block lengths of beta split by alpha."""
    return math.prod(len(b) for b in split(beta, alpha))


def sp(beta, alpha) -> int:
    return math.prod(math.factorial(len(b)) * math.prod(b) for b in split(beta, alpha))


def c_coeff(alpha, beta) -> int:
    a, b = Counter(alpha), Counter(beta)
    return math.prod(math.comb(a[j] + b[j], a[j]) for j in set(a) | set(b))


def multinomial(counts) -> int:
    counts = list(counts)
    out = math.factorial(sum(counts))
    for c in counts:
        out //= math.factorial(c)
    return out


# ---------------------------------------------------------------------------
# shuffles


def shuffles(alpha, beta) -> Counter:
    """Interleavings of alpha and beta, as a multiset (composition -> multiplicity)."""
    alpha, beta = tuple(alpha), tuple(beta)
    k = len(alpha) + len(beta)
    out = Counter()
    for pos in itertools.combinations(range(k), len(alpha)):
        pos = set(pos)
        ia, ib = iter(alpha), iter(beta)
        out[Composition(next(ia) if i in pos else next(ib) for i in range(k))] += 1
    return out


def overlapping_shuffles(delta, eta) -> Counter:
    """Quasi-shuffles: interleavings where a part of each factor may merge by addition."""
    return Counter(_quasi_shuffle(tuple(delta), tuple(eta)))


@lru_cache(maxsize=None)
def _quasi_shuffle(u, v):
    if not u:
        return {Composition(v): 1}
    if not v:
        return {Composition(u): 1}
    out = Counter()
    for head, rest in (
        (u[0], _quasi_shuffle(u[1:], v)),
        (v[0], _quasi_shuffle(u, v[1:])),
        (u[0] + v[0], _quasi_shuffle(u[1:], v[1:])),
    ):
        for w, mult in rest.items():
            out[Composition((head,) + w)] += mult
    return dict(out)


# ---------------------------------------------------------------------------
# Lyndon words


def is_lyndon(w) -> bool:
    w = tuple(w)
    if not w:
        raise DomainError("the empty word has no Lyndon factorization")
    return all(w < w[i:] for i in range(1, len(w)))


def lyndon_factorization(w) -> list:
    """Chen-Fox-Lyndon factorization via Duval's algorithm."""
    w = tuple(w)
    if not w:
        raise DomainError("the empty word has no Lyndon factorization")
    factors = []
    i, n = 0, len(w)
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            factors.append(Composition(w[i:i + j - k]))
            i += j - k
    return factors


def lyndon(w) -> tuple:
    """Return ``(is_lyndon, factorization)``."""
    return is_lyndon(w), lyndon_factorization(w)


def lyndon_words(n: int) -> list:
    """All Lyndon compositions of n."""
    return [c for c in _compositions(n) if c and is_lyndon(c)]
