"""Change of basis through a pivot: M on the quasisymmetric side, h on the noncommutative side.

Each basis has one direction given by an explicit formula.  The other direction
is obtained by exact inversion of the (triangular) transition matrix, one row
at a time, with results memoised per index.
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from ..compositions import (
    Composition,
    coarsenings,
    ell_prod,
    lp,
    pi,
    refinements,
    sp,
    z,
)
from ..errors import SideError
from .element import NSYM, QSYM, Element, SymFunction, get_basis

PIVOT = {QSYM: "M", NSYM: "h"}


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# Rows of the form  basis_alpha = sum_beta c_beta pivot_beta.

def _F_in_M(alpha):
    return {beta: Fraction(1) for beta in refinements(alpha)}


def _psi_in_M(alpha):
    return {beta: Fraction(1, pi(alpha, beta)) for beta in coarsenings(alpha)}


def _Psi_in_M(alpha):
    za = z(alpha)
    return {beta: Fraction(za, pi(alpha, beta)) for beta in coarsenings(alpha)}


def _phi_in_M(alpha):
    return {beta: Fraction(1, sp(alpha, beta)) for beta in coarsenings(alpha)}


def _Phi_in_M(alpha):
    za = z(alpha)
    return {beta: Fraction(za, sp(alpha, beta)) for beta in coarsenings(alpha)}


def _r_in_h(alpha):
    return {beta: Fraction(_sign(len(alpha) - len(beta))) for beta in coarsenings(alpha)}


def _NPsi_in_h(alpha):
    return {
        beta: Fraction(_sign(len(beta) - len(alpha)) * lp(beta, alpha))
        for beta in refinements(alpha)
    }


def _NPhi_in_h(alpha):
    top = math.prod(alpha)
    return {
        beta: Fraction(_sign(len(beta) - len(alpha)) * top, ell_prod(beta, alpha))
        for beta in refinements(alpha)
    }


# Rows of the form  pivot_alpha = sum_beta c_beta basis_beta.

def _h_in_e(alpha):
    n = sum(alpha)
    return {beta: Fraction(_sign(n - len(beta))) for beta in refinements(alpha)}


def _identity(alpha):
    return {alpha: Fraction(1)}


TO_PIVOT = {
    "M": _identity,
    "F": _F_in_M,
    "psi": _psi_in_M,
    "Psi": _Psi_in_M,
    "phi": _phi_in_M,
    "Phi": _Phi_in_M,
    "h": _identity,
    "r": _r_in_h,
    "NPsi": _NPsi_in_h,
    "NPhi": _NPhi_in_h,
}

FROM_PIVOT = {
    "M": _identity,
    "h": _identity,
    "e": _h_in_e,
}


def _clean(acc) -> dict:
    return {k: v for k, v in acc.items() if v != 0}


@lru_cache(maxsize=None)
def _inverse_row(name: str, known_is_to_pivot: bool, alpha: Composition) -> dict:
    """Row ``alpha`` of the inverse of a triangular matrix whose rows are given by a formula."""
    row = (TO_PIVOT if known_is_to_pivot else FROM_PIVOT)[name](alpha)
    diag = row[alpha]
    acc = defaultdict(Fraction)
    acc[alpha] += 1 / diag
    for beta, c in row.items():
        if beta == alpha:
            continue
        for gamma, d in _inverse_row(name, known_is_to_pivot, beta).items():
            acc[gamma] -= c * d / diag
    return _clean(acc)


@lru_cache(maxsize=None)
def to_pivot_row(name: str, alpha: Composition) -> dict:
    """``name_alpha`` expanded in the pivot basis of its side."""
    alpha = Composition(alpha)
    if name in TO_PIVOT:
        return TO_PIVOT[name](alpha)
    return _inverse_row(name, False, alpha)


@lru_cache(maxsize=None)
def from_pivot_row(name: str, alpha: Composition) -> dict:
    """The pivot vector indexed by ``alpha`` expanded in basis ``name``."""
    alpha = Composition(alpha)
    if name in FROM_PIVOT:
        return FROM_PIVOT[name](alpha)
    return _inverse_row(name, True, alpha)


def _apply(f: Element, row, target) -> Element:
    acc = defaultdict(Fraction)
    for alpha, c in f.items():
        for beta, d in row(alpha).items():
            acc[beta] += c * d
    return Element(target, acc)


def convert(f, target) -> Element:
    """Express ``f`` in the ``target`` basis (same side, or a symmetric function into QSym)."""
    target = get_basis(target)
    if isinstance(f, SymFunction):
        f = f.to_qsym()
    if f.side != target.side:
        raise SideError(f"cannot convert a {f.side} element to the {target.side} basis {target.name}")
    if f.basis == target:
        return f
    pivot = get_basis(PIVOT[f.side])
    if f.basis != pivot:
        f = _apply(f, lambda a: to_pivot_row(f.basis.name, a), pivot)
    if target == pivot:
        return f
    return _apply(f, lambda a: from_pivot_row(target.name, a), target)


def expand_to_M(f) -> Element:
    if not isinstance(f, SymFunction) and f.side != QSYM:
        raise SideError("expand_to_M takes a quasisymmetric element")
    return convert(f, "M")


def nsym_expand_to_h(g: Element) -> Element:
    if g.side != NSYM:
        raise SideError("nsym_expand_to_h takes a noncommutative element")
    return convert(g, "h")


def transition_matrix(source, target, n: int) -> tuple:
    """Return ``(index, rows)`` with ``rows[i][j]`` the coefficient of target_index[j] in source_index[i]."""
    from ..compositions import compositions

    source, target = get_basis(source), get_basis(target)
    index = compositions(n)
    rows = []
    for alpha in index:
        image = convert(source(alpha), target)
        rows.append([image.coefficient(beta) for beta in index])
    return index, rows
