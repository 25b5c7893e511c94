import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsympower.algebra import (
    BASES,
    E,
    F,
    H,
    M,
    NPHI,
    NPSI,
    PHI,
    PSI,
    R,
    Element,
    SymFunction,
    antipode,
    convert,
    expand_to_M,
    get_basis,
    h_in_power_basis,
    hall_pair,
    interval_M_to_F,
    lyndon_rewrite,
    multiply,
    nsym_expand_to_h,
    omega,
    p_to_M,
    phi,
    phi_product,
    power_to_F,
    psi,
    psi_F_collisions,
    psi_phi_transition,
    psi_product,
    refine_sum,
    transition_matrix,
)
from qsympower.compositions import (
    Composition,
    coarsenings,
    compositions,
    partitions,
    refines,
    reverse,
    z,
)
from qsympower.errors import DomainError, PartitionError, RefinementError, SideError, UsageError

QSYM_NAMES = ["M", "F", "Psi", "Phi", "psi", "phi"]
NSYM_NAMES = ["h", "e", "r", "NPsi", "NPhi"]


def sign(k):
    return -1 if k % 2 else 1


# -- elements ------------------------------------------------------------------

def test_element_basics():
    f = Element(M, {(2, 1): Fraction(1, 2), (3,): 0, (1, 2): 2})
    assert len(f) == 2 and f.coefficient((3,)) == 0
    assert str(f) == "1/2 M[2,1] + 2 M[1,2]"
    assert str(Element(M)) == "0"
    assert str(-M(1, 1)) == "-M[1,1]"
    assert f.degree == 3
    assert (M(1) + M(2)).degree is None
    assert (M(1) + M(2)).component(2) == M(2)
    with pytest.raises(TypeError):
        f.terms[(1,)] = 3


def test_element_arithmetic_converts_within_a_side():
    assert F(2) - M(1, 1) == M(2)
    assert 2 * M(1) == M(1) + M(1)
    assert M(1) / 2 == Element(M, {(1,): Fraction(1, 2)})
    with pytest.raises(SideError):
        M(1) + H(1)
    assert (M(1) == H(1)) is False


def test_rejects_floats():
    with pytest.raises(TypeError):
        Element(M, {(1,): 0.5})


def test_get_basis():
    assert get_basis("Psi1") is PSI and get_basis("Phi2") is PHI
    assert get_basis("psi1") is psi and get_basis("phi2") is phi
    with pytest.raises(UsageError):
        get_basis("Q")


# -- expansions ----------------------------------------------------------------

def test_psi_232_golden():
    expected = Element(M, {
        (2, 3, 2): 2, (5, 2): Fraction(6, 5), (2, 5): Fraction(4, 5), (7,): Fraction(12, 35),
    })
    got = expand_to_M(PSI(2, 3, 2))
    assert got.terms == expected.terms
    assert str(got) == "2 M[2,3,2] + 6/5 M[5,2] + 4/5 M[2,5] + 12/35 M[7]"


def test_phi_322_golden():
    got = expand_to_M(PHI(3, 2, 2))
    assert str(got) == "2 M[3,2,2] + M[5,2] + M[3,4] + 1/3 M[7]"


@pytest.mark.parametrize("n", range(1, 7))
def test_single_part_power_sums_are_monomials(n):
    assert expand_to_M(PSI(n)) == M(n)
    assert expand_to_M(PHI(n)) == M(n)


def test_expand_to_M_side_error():
    with pytest.raises(SideError):
        expand_to_M(H(1))
    with pytest.raises(SideError):
        nsym_expand_to_h(M(1))


def test_convert_examples():
    assert convert(F(2), M).terms == {(1, 1): 1, (2,): 1}
    assert convert(PSI(1, 1), F).terms == {(1, 1): 1, (2,): 1}
    back = convert(convert(M(2), PSI), M)
    assert back.basis == M and back.terms == {(2,): 1}


def test_unscaled_bases():
    for n in range(1, 6):
        for a in compositions(n):
            assert convert(psi(a), M) * z(a) == convert(PSI(a), M)
            assert convert(phi(a), M) * z(a) == convert(PHI(a), M)


def test_convert_round_trips_all_bases():
    for names in (QSYM_NAMES, NSYM_NAMES):
        for n in range(1, 6):
            for a in compositions(n):
                for src in names:
                    f = get_basis(src)(a)
                    for dst in names:
                        g = convert(f, dst)
                        assert g.basis.name == dst
                        back = convert(g, src)
                        assert back.basis.name == src and back.terms == f.terms


def test_convert_across_sides():
    with pytest.raises(SideError):
        convert(M(1), "h")


def test_triangularity_and_diagonal():
    for n in range(1, 7):
        for a in compositions(n):
            diag = math.prod(math.factorial(k) for k in a.multiplicities().values())
            for b in (PSI, PHI):
                row = convert(b(a), M)
                assert all(refines(a, beta) for beta in row)
                assert row.coefficient(a) == diag


def test_transition_matrix_identity():
    index, rows = transition_matrix("M", "M", 3)
    assert rows == [[int(i == j) for j in range(len(index))] for i in range(len(index))]


# -- noncommutative side ----------------------------------------------------------

def test_nsym_examples():
    assert nsym_expand_to_h(NPSI(2)).terms == {(1, 1): -1, (2,): 2}
    assert nsym_expand_to_h(NPHI(2)).terms == {(1, 1): -1, (2,): 2}
    for n in range(1, 6):
        assert nsym_expand_to_h(R(n)) == H(n)


def test_h_in_e():
    assert convert(H(2), E).terms == {(1, 1): 1, (2,): -1}
    assert convert(E(2), H).terms == {(1, 1): 1, (2,): -1}


def test_h_in_power_basis():
    assert h_in_power_basis((2,), "NPsi").terms == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}
    row = h_in_power_basis((4,), "NPhi")
    for beta, c in row.items():
        assert c == Fraction(1, math.factorial(len(beta)) * math.prod(beta))
    with pytest.raises(UsageError):
        h_in_power_basis((2,), "Q")


def test_h_power_basis_round_trip():
    for n in range(1, 8):
        for a in compositions(n):
            for kind in ("NPsi", "NPhi"):
                assert nsym_expand_to_h(h_in_power_basis(a, kind)) == H(a)


# -- products --------------------------------------------------------------------

def test_multiply_examples():
    assert multiply(M(1), M(1)).terms == {(1, 1): 2, (2,): 1}
    unit = Element(M, {(): 1})
    assert multiply(PSI(2, 1), unit) == PSI(2, 1)
    assert multiply(PSI(1), PSI(2)).terms == {(2, 1): 1, (1, 2): 1}
    assert (PSI(1) * PSI(2)).basis == PSI
    with pytest.raises(SideError):
        multiply(M(1), H(1))


def test_shuffle_product_examples():
    assert psi_product((1,), (1,)) == PSI(1, 1)
    assert psi_product((2, 3), (1,)).terms == {(1, 2, 3): 1, (2, 1, 3): 1, (2, 3, 1): 1}
    assert phi_product((1,), (1,)) == PHI(1, 1)
    assert phi_product((3,), ()) == PHI(3)


def test_shuffle_products_agree_with_quasi_shuffle():
    for total in range(2, 8):
        for a in range(1, total):
            for alpha in compositions(a):
                for beta in compositions(total - a):
                    assert psi_product(alpha, beta) == multiply(PSI(alpha), PSI(beta))
                    assert phi_product(alpha, beta) == multiply(PHI(alpha), PHI(beta))


# -- antipode and omega ------------------------------------------------------------

def test_antipode_examples():
    assert antipode(F(2)) == F(1, 1)
    assert antipode(PSI(2, 3, 2)).terms == {(2, 3, 2): -1}
    assert omega(F(2)) == F(1, 1)
    assert omega(PSI(2)).terms == {(2,): -1}
    with pytest.raises(SideError):
        omega(H(1))


def test_antipode_and_omega_on_power_sums():
    for n in range(1, 7):
        for a in compositions(n):
            r = reverse(a)
            for b in (PSI, PHI):
                s = antipode(b(a))
                assert s.basis == b and s.terms == {r: sign(len(a))}
                w = omega(b(a))
                assert w.terms == {r: sign(n - len(a))}
                assert antipode(s) == b(a) and omega(w) == b(a)


def test_antipode_of_phi_stays_in_phi():
    # S(Phi_a) is a multiple of Phi_{a^r}; it is not the corresponding Psi
    f = antipode(PHI(2, 1, 1))
    assert f.terms == {(1, 1, 2): -1}
    assert f != -PSI(1, 1, 2)


def test_omega_is_signed_antipode():
    for n in range(1, 6):
        for a in compositions(n):
            for b in (M, F, PSI, PHI):
                assert omega(b(a)) == antipode(b(a)) * sign(n)


def test_nsym_antipode_is_an_involution():
    for n in range(1, 6):
        for a in compositions(n):
            for name in NSYM_NAMES:
                f = get_basis(name)(a)
                assert antipode(antipode(f)) == f


# -- pairing ---------------------------------------------------------------------

def test_pairing_examples():
    assert hall_pair(PSI(2, 3, 2), NPSI(2, 3, 2)) == 24
    assert hall_pair(NPSI(2, 3, 2), PSI(2, 3, 2)) == 24
    assert hall_pair(M(1), H(2)) == 0
    with pytest.raises(SideError):
        hall_pair(M(1), M(1))


def test_dual_pairs():
    for n in range(1, 6):
        cs = compositions(n)
        for a in cs:
            for b in cs:
                d = int(a == b)
                assert hall_pair(M(a), H(b)) == d
                assert hall_pair(F(a), R(b)) == d
                assert hall_pair(PSI(a), NPSI(b)) == z(a) * d
                assert hall_pair(PHI(a), NPHI(b)) == z(a) * d


def test_pairing_is_basis_independent():
    for n in range(1, 5):
        for a in compositions(n):
            for b in compositions(n):
                value = hall_pair(PSI(a), E(b))
                for q in QSYM_NAMES:
                    for h in NSYM_NAMES:
                        assert hall_pair(convert(PSI(a), q), convert(E(b), h)) == value


# -- symmetric functions --------------------------------------------------------

def test_p_to_M_examples():
    assert p_to_M((1, 1)).terms == {(1, 1): 2, (2,): 1}
    assert p_to_M((4,)) == M(4)
    assert p_to_M((2, 1)).terms == {(2, 1): 1, (1, 2): 1, (3,): 1}
    with pytest.raises(PartitionError):
        p_to_M((1, 2))


def test_symfunction_injection():
    f = SymFunction("p", {(2, 1): 1})
    assert convert(f, M) == p_to_M((2, 1))
    g = SymFunction("m", {(2, 1): 1})
    assert convert(g, M).terms == {(2, 1): 1, (1, 2): 1}
    with pytest.raises(PartitionError):
        SymFunction("p", {(1, 2): 1})


def test_refine_sum_examples():
    s = refine_sum((2, 2, 1), "Psi1")
    assert s.terms == {(2, 2, 1): 1, (2, 1, 2): 1, (1, 2, 2): 1}
    assert convert(s, M) == p_to_M((2, 2, 1))
    assert convert(refine_sum((2, 2, 1), "Phi2"), M) == p_to_M((2, 2, 1))
    assert refine_sum((5,), "Psi") == PSI(5)


def test_refinement_theorems_up_to_8():
    for n in range(1, 9):
        for lam in partitions(n):
            p = p_to_M(lam)
            assert convert(refine_sum(lam, "Psi"), M) == p
            assert convert(refine_sum(lam, "Phi"), M) == p


# -- closed forms ----------------------------------------------------------------

def test_power_to_F_examples():
    assert power_to_F((1, 1), "Psi1").terms == {(1, 1): 1, (2,): 1}
    assert power_to_F((4,), "Psi") == convert(M(4), F)
    with pytest.raises(UsageError):
        power_to_F((1,), "M")


def test_power_to_F_matches_pivot():
    for n in range(1, 7):
        for a in compositions(n):
            assert power_to_F(a, "Psi") == convert(PSI(a), F)
            assert power_to_F(a, "Phi") == convert(PHI(a), F)
            assert psi_F_collisions(a) == []


def test_interval_M_to_F():
    assert interval_M_to_F((1, 1), (2,)) == F(2)
    assert interval_M_to_F((2, 1), (2, 1)) == M(2, 1)
    with pytest.raises(RefinementError):
        interval_M_to_F((2, 2), (1, 3))
    for n in range(1, 7):
        for a in compositions(n):
            for b in coarsenings(a):
                direct = Element(M, {d: 1 for d in coarsenings(a) if refines(d, b)})
                assert interval_M_to_F(a, b) == direct


def test_psi_phi_transition():
    assert psi_phi_transition((4,), "Psi->Phi") == PHI(4)
    assert psi_phi_transition((1, 1), "Psi1→Phi2").terms == {(1, 1): 1}
    assert psi_phi_transition((1, 1), "Phi->Psi").terms == {(1, 1): 1}
    with pytest.raises(UsageError):
        psi_phi_transition((1,), "M->F")
    for n in range(1, 7):
        for a in compositions(n):
            assert psi_phi_transition(a, "Psi->Phi") == convert(PSI(a), PHI)
            assert psi_phi_transition(a, "Phi->Psi") == convert(PHI(a), PSI)


# -- Lyndon ----------------------------------------------------------------------

def test_lyndon_worked_example():
    poly = lyndon_rewrite((2, 3, 1))
    assert poly.to_text() == "Psi[2,3]*Psi[1] - Psi[2]*Psi[1,3] + Psi[1,3,2]"
    assert poly.expand() == PSI(2, 3, 1)


def test_lyndon_small_cases():
    assert lyndon_rewrite((2, 1)).to_text() == "Psi[2]*Psi[1] - Psi[1,2]"
    assert lyndon_rewrite((1, 3, 2)).to_text() == "Psi[1,3,2]"
    assert lyndon_rewrite((1, 1)).to_text() == "Psi[1]*Psi[1]"
    with pytest.raises(DomainError):
        lyndon_rewrite(())


def test_lyndon_completeness():
    for n in range(1, 7):
        for a in compositions(n):
            assert lyndon_rewrite(a).expand() == PSI(a)


# -- properties ------------------------------------------------------------------

# kept small: products in F or Phi go through M and grow quickly with degree
small_comp = st.lists(st.integers(1, 2), min_size=1, max_size=2).map(Composition)
qsym_basis = st.sampled_from([BASES[n] for n in QSYM_NAMES])


@settings(max_examples=40, deadline=None)
@given(qsym_basis, small_comp, small_comp)
def test_multiplication_is_commutative(b, alpha, beta):
    assert multiply(b(alpha), b(beta)) == multiply(b(beta), b(alpha))


@settings(max_examples=40, deadline=None)
@given(qsym_basis, small_comp, st.sampled_from(QSYM_NAMES))
def test_conversion_is_linear_and_invertible(b, alpha, target):
    f = b(alpha) * Fraction(3, 7) + b(alpha)
    g = convert(f, target)
    assert convert(g, b) == f
