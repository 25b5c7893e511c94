"""Basis identifiers and finitely supported linear combinations over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from ..compositions import Composition, sort_key
from ..errors import SideError, UsageError

QSYM = "qsym"
NSYM = "nsym"


@dataclass(frozen=True)
class Basis:
    name: str
    side: str

    def __call__(self, *parts, coeff=1) -> "Element":
        """``PSI(2, 3, 2)`` or ``PSI((2, 3, 2))`` is the basis vector indexed by (2,3,2)."""
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        return Element(self, {Composition(parts): coeff})

    def __str__(self):
        return self.name


M = Basis("M", QSYM)
F = Basis("F", QSYM)
PSI = Basis("Psi", QSYM)
PHI = Basis("Phi", QSYM)
psi = Basis("psi", QSYM)
phi = Basis("phi", QSYM)

H = Basis("h", NSYM)
E = Basis("e", NSYM)
R = Basis("r", NSYM)
NPSI = Basis("NPsi", NSYM)
NPHI = Basis("NPhi", NSYM)

BASES = {b.name: b for b in (M, F, PSI, PHI, psi, phi, H, E, R, NPSI, NPHI)}
ALIASES = {"Psi1": "Psi", "Phi2": "Phi", "psi1": "psi", "phi2": "phi"}


def get_basis(name) -> Basis:
    if isinstance(name, Basis):
        return name
    key = ALIASES.get(name, name)
    try:
        return BASES[key]
    except KeyError:
        raise UsageError(f"unknown basis {name!r}; expected one of {sorted(BASES)}") from None


def _scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Element:
    """A linear combination of basis vectors of one basis, with rational coefficients.

    Terms are kept in canonical composition order and zero coefficients are
    dropped.  Elements compare equal across bases of the same side (the right
    operand is converted first).
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis, terms=None):
        basis = get_basis(basis)
        acc = {}
        for alpha, c in (terms or {}).items():
            alpha = Composition(alpha)
            acc[alpha] = acc.get(alpha, 0) + _scalar(c)
        self.basis = basis
        self._terms = {a: acc[a] for a in sorted(acc, key=sort_key) if acc[a] != 0}

    @classmethod
    def zero(cls, basis) -> "Element":
        return cls(basis)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def side(self) -> str:
        return self.basis.side

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, alpha) -> Fraction:
        return self._terms.get(Composition(alpha), Fraction(0))

    def degrees(self) -> set:
        return {a.n for a in self._terms}

    @property
    def degree(self):
        """The common degree of all terms, ``None`` if mixed or zero."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def component(self, n: int) -> "Element":
        return Element(self.basis, {a: c for a, c in self._terms.items() if a.n == n})

    def map_terms(self, fn) -> "Element":
        """Apply ``fn(alpha, coeff) -> {beta: c}`` term by term in this basis."""
        acc = {}
        for alpha, c in self._terms.items():
            for beta, d in fn(alpha, c).items():
                acc[beta] = acc.get(beta, 0) + d
        return Element(self.basis, acc)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        if other.side != self.side:
            raise SideError(f"cannot combine {self.side} and {other.side} elements")
        if other.basis != self.basis:
            from .expansions import convert

            other = convert(other, self.basis)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for a, c in other._terms.items():
            acc[a] = acc.get(a, 0) + c
        return Element(self.basis, acc)

    def __neg__(self):
        return Element(self.basis, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            from .operations import multiply

            return multiply(self, other)
        try:
            c = _scalar(other)
        except TypeError:
            return NotImplemented
        return Element(self.basis, {a: c * v for a, v in self._terms.items()})

    def __rmul__(self, other):
        if isinstance(other, Element):
            return NotImplemented
        return self.__mul__(other)

    def __truediv__(self, other):
        return self * (1 / _scalar(other))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.side != self.side:
            return False
        other = self._coerce(other)
        return self._terms == other._terms

    __hash__ = None

    def __repr__(self):
        return f"Element({self.basis.name}, {format_text(self)})"

    def __str__(self):
        return format_text(self)


def format_coeff(c: Fraction) -> str:
    return str(c)


def format_text(f: Element) -> str:
    """Render as ``2 M[2,3,2] + 6/5 M[5,2]``; the zero element renders as ``0``."""
    if not f._terms:
        return "0"
    pieces = []
    for alpha, c in f._terms.items():
        label = f"{f.basis.name}[{alpha}]"
        mag = abs(c)
        body = label if mag == 1 else f"{format_coeff(mag)} {label}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


class SymFunction:
    """A symmetric function in the power sum (``p``) or monomial (``m``) basis, indexed by partitions."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms):
        if basis not in ("p", "m"):
            raise UsageError(f"symmetric functions use the 'p' or 'm' basis, not {basis!r}")
        acc = {}
        for lam, c in terms.items():
            lam = Composition(lam)
            if list(lam) != sorted(lam, reverse=True):
                from ..errors import PartitionError

                raise PartitionError(f"{tuple(lam)} is not a partition")
            acc[lam] = acc.get(lam, 0) + _scalar(c)
        self.basis = basis
        self.terms = {k: v for k, v in acc.items() if v != 0}

    def to_qsym(self) -> Element:
        """Expand into the quasisymmetric monomial basis."""
        from .operations import p_to_M
        from ..compositions import rearrangements

        out = Element(M)
        for lam, c in self.terms.items():
            if self.basis == "p":
                out = out + c * p_to_M(lam)
            else:
                out = out + Element(M, {a: c for a in rearrangements(lam)})
        return out
