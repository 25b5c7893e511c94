"""Graded elements of QSym and NSym with exact rational coefficients."""

from .closed_forms import interval_M_to_F, power_to_F, psi_F_collisions, psi_phi_transition
from .element import (
    BASES,
    E,
    F,
    H,
    M,
    NPHI,
    NPSI,
    NSYM,
    PHI,
    PSI,
    QSYM,
    R,
    Basis,
    Element,
    SymFunction,
    format_text,
    get_basis,
    phi,
    psi,
)
from .expansions import convert, expand_to_M, nsym_expand_to_h, transition_matrix
from .lyndon import LyndonPolynomial, lyndon_rewrite
from .operations import (
    antipode,
    h_in_power_basis,
    hall_pair,
    multiply,
    omega,
    p_to_M,
    phi_product,
    psi_product,
    refine_sum,
)
