"""Direct closed-form expansions, kept separate from the pivot engine so the two can check each other."""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from fractions import Fraction

from ..combinatorics import count_osp, enumerate_cons, hat
from ..compositions import (
    Composition,
    check_cap,
    coarsenings,
    complement,
    ell_prod,
    interval,
    join,
    lp,
    meet,
    multinomial,
    pi,
    refines,
    sp,
    z,
)
from ..errors import RefinementError, UsageError
from .element import F, PHI, PSI, Element, get_basis

DEFAULT_CONS_CAP = 7


def _sign(k):
    return -1 if k % 2 else 1


def hat_counts(alpha, max_n: int | None = DEFAULT_CONS_CAP) -> Counter:
    """How many sigma in Cons(alpha <= alpha) have each coarsening gamma as their hat."""
    alpha = Composition(alpha)
    return Counter(hat(alpha, s) for s in enumerate_cons(alpha, alpha, max_n=max_n))


def psi_F_terms(alpha, max_n: int | None = DEFAULT_CONS_CAP) -> list:
    """The raw (gamma, eta, coefficient) triples of the F-expansion of Psi_alpha, before collecting."""
    alpha = Composition(alpha)
    scale = Fraction(z(alpha), math.factorial(alpha.n))
    out = []
    counts = hat_counts(alpha, max_n)
    for gamma in coarsenings(alpha):
        k = counts.get(gamma, 0)
        if not k:
            continue
        for eta in coarsenings(complement(alpha)):
            out.append((gamma, eta, scale * k * _sign(len(eta) - 1)))
    return out


def psi_F_collisions(alpha, max_n: int | None = DEFAULT_CONS_CAP) -> list:
    """Indices gamma v eta reached by more than one (gamma, eta) pair; empty when the sum is collision free."""
    seen = Counter(join(g, e) for g, e, _ in psi_F_terms(alpha, max_n))
    return [d for d, k in seen.items() if k > 1]


def power_to_F(alpha, kind: str, max_n: int | None = DEFAULT_CONS_CAP) -> Element:
    """Psi_alpha or Phi_alpha in the fundamental basis via the closed forms."""
    alpha = Composition(alpha)
    basis = get_basis(kind)
    acc = defaultdict(Fraction)
    if basis == PSI:
        for gamma, eta, c in psi_F_terms(alpha, max_n):
            acc[join(gamma, eta)] += c
    elif basis == PHI:
        check_cap(alpha.n, max_n, "F-expansion")
        scale = Fraction(1, multinomial(alpha.multiplicities().values()))
        above = coarsenings(alpha)
        from ..compositions import compositions

        for gamma in compositions(alpha.n):
            low = meet(gamma, alpha)
            total = sum(
                _sign(len(gamma) - len(beta)) * count_osp(alpha, beta)
                for beta in above
                if refines(low, beta)
            )
            acc[gamma] += scale * total
    else:
        raise UsageError(f"power_to_F is defined for Psi and Phi, not {kind!r}")
    return Element(F, acc)


def interval_M_to_F(alpha, beta) -> Element:
    """The sum of M_delta over alpha <= delta <= beta, written directly in the fundamental basis."""
    alpha, beta = Composition(alpha), Composition(beta)
    if not refines(alpha, beta):
        raise RefinementError(f"{tuple(alpha)} does not refine {tuple(beta)}")
    low = join(beta, complement(alpha))
    return Element(F, {d: _sign(len(beta) - len(d)) for d in interval(low, beta)})


def psi_phi_transition(alpha, direction: str) -> Element:
    """Psi_alpha in the Phi basis (``Psi->Phi``) or Phi_alpha in the Psi basis (``Phi->Psi``).

    Double sum over alpha <= beta <= gamma.  The inner coefficients come from
    expanding M_beta in the unscaled duals, hence the 1/z_gamma factor.
    """
    alpha = Composition(alpha)
    src, _, dst = direction.replace("→", "->").partition("->")
    src, dst = get_basis(src.strip()), get_basis(dst.strip())
    za = z(alpha)
    acc = defaultdict(Fraction)
    if (src, dst) == (PSI, PHI):
        for beta in coarsenings(alpha):
            head = Fraction(za, pi(alpha, beta))
            for gamma in coarsenings(beta):
                inner = Fraction(math.prod(gamma), ell_prod(beta, gamma) * z(gamma))
                acc[gamma] += _sign(len(beta) - len(gamma)) * head * inner
        return Element(PHI, acc)
    if (src, dst) == (PHI, PSI):
        for beta in coarsenings(alpha):
            head = Fraction(za, sp(alpha, beta))
            for gamma in coarsenings(beta):
                inner = Fraction(lp(beta, gamma), z(gamma))
                acc[gamma] += _sign(len(beta) - len(gamma)) * head * inner
        return Element(PSI, acc)
    raise UsageError(f"unknown direction {direction!r}; use Psi->Phi or Phi->Psi")
