"""Products, antipode, omega, the Hall pairing and symmetric power sums."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from ..combinatorics import count_R
from ..compositions import (
    Composition,
    c_coeff,
    compositions,
    overlapping_shuffles,
    pi,
    rearrangements,
    refinements,
    shuffles,
    sp,
    transpose,
)
from ..errors import PartitionError, SideError, UsageError
from .element import NSYM, QSYM, Element, F, H, M, NPHI, NPSI, PHI, PSI, R, get_basis
from .expansions import convert


def _require(f, side, what):
    if f.side != side:
        raise SideError(f"{what} takes a {side} element, got {f.side}")


def multiply(f: Element, g: Element) -> Element:
    """Product in QSym, computed on monomial expansions by quasi-shuffle; result in f's basis."""
    _require(f, QSYM, "multiply")
    _require(g, QSYM, "multiply")
    fm, gm = convert(f, M), convert(g, M)
    acc = defaultdict(Fraction)
    for delta, a in fm.items():
        for eta, b in gm.items():
            for zeta, mult in overlapping_shuffles(delta, eta).items():
                acc[zeta] += a * b * mult
    return convert(Element(M, acc), f.basis)


def _shuffle_product(basis, alpha, beta) -> Element:
    scale = Fraction(1, c_coeff(alpha, beta))
    return Element(basis, {g: scale * m for g, m in shuffles(alpha, beta).items()})


def psi_product(alpha, beta) -> Element:
    """Psi_alpha * Psi_beta as (1/C(alpha, beta)) times the sum of Psi over shuffles."""
    return _shuffle_product(PSI, Composition(alpha), Composition(beta))


def phi_product(alpha, beta) -> Element:
    return _shuffle_product(PHI, Composition(alpha), Composition(beta))


def _sign(k):
    return -1 if k % 2 else 1


def antipode(f: Element) -> Element:
    """S(F_a) = (-1)^|a| F_{a^t} on QSym; S(r_a) = (-1)^|a| r_{a^t} on NSym."""
    ribbon = F if f.side == QSYM else R
    g = convert(f, ribbon)
    image = Element(ribbon, {transpose(a): _sign(a.n) * c for a, c in g.items()})
    return convert(image, f.basis)


def omega(f: Element) -> Element:
    """omega(F_a) = F_{a^t}."""
    _require(f, QSYM, "omega")
    g = convert(f, F)
    return convert(Element(F, {transpose(a): c for a, c in g.items()}), f.basis)


def hall_pair(f: Element, g: Element) -> Fraction:
    """Bilinear pairing with <M_a, h_b> = delta_ab."""
    if f.side == g.side:
        raise SideError(f"pairing needs one qsym and one nsym element, got two {f.side}")
    if f.side == NSYM:
        f, g = g, f
    fm, gh = convert(f, M), convert(g, H)
    return sum((c * gh.coefficient(a) for a, c in fm.items()), Fraction(0))


def h_in_power_basis(alpha, kind: str) -> Element:
    """h_alpha as a combination of noncommutative power sums of the given kind."""
    alpha = Composition(alpha)
    if kind in ("NPsi", "Psi", "Psi1"):
        return Element(NPSI, {b: Fraction(1, pi(b, alpha)) for b in refinements(alpha)})
    if kind in ("NPhi", "Phi", "Phi2"):
        return Element(NPHI, {b: Fraction(1, sp(b, alpha)) for b in refinements(alpha)})
    raise UsageError(f"unknown power sum kind {kind!r}")


def _check_partition(lam):
    lam = Composition(lam)
    if list(lam) != sorted(lam, reverse=True):
        raise PartitionError(f"{tuple(lam)} is not a partition")
    return lam


def p_to_M(lam) -> Element:
    """The symmetric power sum p_lambda in the quasisymmetric monomial basis."""
    lam = _check_partition(lam)
    return Element(M, {a: count_R(lam, a) for a in compositions(lam.n)})


def refine_sum(lam, kind: str) -> Element:
    """Sum of the power sum basis vectors over all rearrangements of lambda."""
    lam = _check_partition(lam)
    basis = get_basis(kind)
    if basis not in (PSI, PHI):
        raise UsageError(f"refine_sum is defined for Psi and Phi, not {kind!r}")
    return Element(basis, {a: 1 for a in rearrangements(lam)})
