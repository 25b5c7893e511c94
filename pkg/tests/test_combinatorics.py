import itertools
import math

import pytest

from qsympower.combinatorics import (
    CycleForm,
    OrderedSetPartition,
    Permutation,
    br_forward,
    br_inverse,
    canonical_cycle_form,
    count_osp,
    count_R,
    enumerate_cons,
    enumerate_osp,
    g_forward,
    g_inverse,
    hat,
    is_consistent,
    ordered_groupings,
    permutations_of_type,
    sh_forward,
    sh_inverse,
    size_position_sets,
    split_word,
)
from qsympower.compositions import Composition, coarsenings, compositions, partitions, pi, refines, split, z
from qsympower.errors import ConsistencyError, DomainError, PartitionError, RefinementError, ResourceError, SizeError

OSP = OrderedSetPartition.parse
P = Permutation.parse


def brute_cons(alpha, beta):
    """Filter all of S_n with a direct reading of the consistency definition."""
    n = sum(alpha)
    out = []
    for w in itertools.permutations(range(1, n + 1)):
        pos, ok = 0, True
        for block in split(alpha, beta):
            prev = 0
            for a in block:
                seg = w[pos:pos + a]
                pos += a
                if seg[-1] != max(seg) or seg[-1] < prev:
                    ok = False
                prev = seg[-1]
        if ok:
            out.append(Permutation(w))
    return out


def shift_vectors(alpha, beta):
    ranges = [range(a) for block in split(alpha, beta) for a in itertools.accumulate(block)]
    sizes = [len(b) for b in split(alpha, beta)]
    for flat in itertools.product(*ranges):
        out, i = [], 0
        for s in sizes:
            out.append(tuple(flat[i:i + s]))
            i += s
        yield tuple(out)


def refinement_pairs(n_max):
    for n in range(1, n_max + 1):
        for beta in compositions(n):
            for alpha in compositions(n):
                if refines(alpha, beta):
                    yield alpha, beta


# -- notation ------------------------------------------------------------------

def test_cycle_forms():
    sigma = CycleForm.parse("(26)(397)(54)(1)(8)")
    assert str(canonical_cycle_form(sigma, "standard")) == "(1)(4 5)(2 6)(8)(7 3 9)"
    assert str(canonical_cycle_form(sigma, "partition")) == "(7 3 9)(4 5)(2 6)(1)(8)"
    ident = Permutation.identity(4)
    assert str(canonical_cycle_form(ident, "standard")) == "(1)(2)(3)(4)"
    assert canonical_cycle_form(ident, "partition") == canonical_cycle_form(ident, "standard")


def test_cycle_form_round_trip():
    for w in itertools.permutations(range(1, 6)):
        sigma = Permutation(w)
        for mode in ("standard", "partition"):
            assert canonical_cycle_form(sigma, mode).to_permutation() == sigma


@pytest.mark.parametrize("sigma, beta, expected", [
    ("571423689", (2, 2, 5), [(5, 7), (1, 4), (2, 3, 6, 8, 9)]),
    ("4132", (4,), [(4, 1, 3, 2)]),
    ("739628451", (5, 4), [(7, 3, 9, 6, 2), (8, 4, 5, 1)]),
])
def test_split_word(sigma, beta, expected):
    assert [tuple(x) for x in split_word(P(sigma), beta)] == expected


def test_split_word_size_mismatch():
    with pytest.raises(SizeError):
        split_word(P("123"), (2, 2))


# -- consistency ---------------------------------------------------------------

TABLE_ALPHA, TABLE_BETA = (1, 1, 2, 1, 3, 1), (2, 2, 5)


@pytest.mark.parametrize("sigma, expected", [
    ("571423689", True),
    ("571428369", False),
    ("571493682", False),
])
def test_is_consistent_table(sigma, expected):
    assert is_consistent(P(sigma), TABLE_ALPHA, TABLE_BETA) is expected


def test_is_consistent_needs_refinement():
    with pytest.raises(RefinementError):
        is_consistent(P("1234"), (2, 2), (1, 3))


@pytest.mark.parametrize("beta, expected", [
    ((1, 2, 1), ["1234", "1243", "1342", "2134", "2143", "2341", "3124", "3142", "3241", "4123", "4132", "4231"]),
    ((1, 3), ["1234", "2134", "3124", "4123"]),
    ((3, 1), ["1234", "1243", "1342", "2134", "2143", "2341", "3142", "3241"]),
    ((4,), ["1234", "2134"]),
])
def test_enumerate_cons_example(beta, expected):
    assert [str(s) for s in enumerate_cons((1, 2, 1), beta)] == expected


def test_enumerate_cons_matches_brute_force():
    for alpha, beta in refinement_pairs(5):
        assert enumerate_cons(alpha, beta) == brute_cons(alpha, beta)


def test_cons_count_lemma():
    for alpha, beta in refinement_pairs(7):
        assert len(enumerate_cons(alpha, beta)) * pi(alpha, beta) == math.factorial(alpha.n)


def test_cons_monotone_along_intervals():
    for alpha, beta in refinement_pairs(6):
        outer = set(enumerate_cons(alpha, beta))
        for gamma in coarsenings(alpha):
            if refines(gamma, beta):
                assert outer <= set(enumerate_cons(alpha, gamma))


def test_enumerate_cons_cap():
    with pytest.raises(ResourceError):
        enumerate_cons((8,), (8,), max_n=7)


@pytest.mark.parametrize("alpha, sigma, expected", [
    ((3, 2, 2), "1352467", (3, 4)),
    ((1, 2, 1), "3241", (3, 1)),
    ((1, 1, 1), "123", (3,)),
])
def test_hat(alpha, sigma, expected):
    assert hat(alpha, P(sigma)) == expected


def test_hat_is_coarsest():
    for n in range(1, 6):
        for alpha in compositions(n):
            for sigma in enumerate_cons(alpha, alpha):
                h = hat(alpha, sigma)
                ok = [b for b in coarsenings(alpha) if is_consistent(sigma, alpha, b)]
                assert h in ok and all(refines(b, h) for b in ok)


def test_hat_rejects_inconsistent():
    with pytest.raises(ConsistencyError):
        hat((2,), P("21"))


# -- Sh --------------------------------------------------------------------------

def test_sh_worked_example():
    alpha, beta = (2, 3, 2, 2), (5, 4)
    assert str(sh_forward(P("267394518"), ((1, 3), (0, 1)), alpha, beta)) == "739628451"
    sigma, s = sh_inverse(P("739628451"), alpha, beta)
    assert str(sigma) == "267394518" and s == ((1, 3), (0, 1))


def test_sh_zero_and_single_block():
    sigma = P("267394518")
    assert sh_forward(sigma, ((0, 0), (0, 0)), (2, 3, 2, 2), (5, 4)) == sigma
    assert str(sh_forward(P("12345"), ((2,),), (5,), (5,))) == "45123"


def test_sh_rejects_bad_input():
    with pytest.raises(ConsistencyError):
        sh_forward(P("21"), ((0,),), (2,), (2,))
    with pytest.raises(DomainError):
        sh_forward(P("12"), ((2,),), (2,), (2,))


def test_sh_is_a_bijection_up_to_6():
    for alpha, beta in refinement_pairs(6):
        images = set()
        for sigma in enumerate_cons(alpha, beta):
            for s in shift_vectors(alpha, beta):
                tau = sh_forward(sigma, s, alpha, beta)
                assert sh_inverse(tau, alpha, beta) == (sigma, s)
                images.add(tau)
        assert len(images) == math.factorial(alpha.n)


def test_sh_inverse_on_s5():
    for w in itertools.permutations(range(1, 6)):
        tau = Permutation(w)
        sigma, s = sh_inverse(tau, (2, 3), (5,))
        assert sh_forward(sigma, s, (2, 3), (5,)) == tau


# -- Br --------------------------------------------------------------------------

def test_br_worked_example():
    blocks, cycles = br_forward((2, 3, 2, 2), P("267394518"), (5, 4))
    assert str(blocks) == "({1,3},{2,4})"
    assert str(cycles) == "(7 3 9)(4 5)(2 6)(1 8)"
    alpha, sigma = br_inverse(OSP("({1,3},{2,4})"), CycleForm.parse("(739)(45)(26)(18)"), (5, 4))
    assert alpha == (2, 3, 2, 2) and str(sigma) == "267394518"


def test_br_trivial():
    blocks, cycles = br_forward((3,), P("213"), (3,))
    assert str(blocks) == "({1})" and str(cycles) == "(2 1 3)"
    assert br_inverse(blocks, cycles, (3,)) == ((3,), P("213"))


def test_br_block_mismatch():
    with pytest.raises(PartitionError):
        br_inverse(OSP("({1},{2})"), CycleForm.parse("(12)(3)"), (1, 2))


def test_br_round_trip_up_to_6():
    for n in range(1, 7):
        for beta in compositions(n):
            for lam in partitions(n):
                groupings = set(ordered_groupings(lam, beta))
                image = set()
                for alpha in map(Composition, set(itertools.permutations(lam))):
                    if not refines(alpha, beta):
                        continue
                    for sigma in enumerate_cons(alpha, beta):
                        B, cyc = br_forward(alpha, sigma, beta)
                        assert cyc.cycle_type() == lam
                        assert B in groupings
                        assert br_inverse(B, cyc, beta) == (alpha, sigma)
                        image.add((B, cyc))
                # onto O(lam, beta) x (permutations of type lam)
                assert len(image) == count_R(lam, beta) * math.factorial(n) // z(lam)


def test_br_inverse_exhaustive_n4():
    beta = Composition((2, 2))
    for lam in partitions(4):
        for B in ordered_groupings(lam, beta):
            for cyc in permutations_of_type(lam):
                alpha, sigma = br_inverse(B, cyc, beta)
                assert br_forward(alpha, sigma, beta) == (B, cyc)


# -- counts ----------------------------------------------------------------------

@pytest.mark.parametrize("alpha, beta, expected", [
    ((1, 3, 2, 1), (3, 4), 3),
    ((1, 2, 3), (1, 2, 3), 1),
    ((2, 1), (2, 1), 1),
    ((2, 1), (1, 2), 1),
    ((2, 1), (3,), 1),
    ((2, 1), (1, 1, 1), 0),
])
def test_count_R(alpha, beta, expected):
    assert count_R(alpha, beta) == expected


def test_count_R_depends_only_on_sorted_shapes():
    for n in range(1, 6):
        for a in compositions(n):
            for b in compositions(n):
                assert count_R(a, b) == count_R(a.partition(), b.partition())


def test_count_R_size_mismatch():
    with pytest.raises(SizeError):
        count_R((1,), (2,))


def test_osp_examples():
    assert enumerate_osp((1, 1), (2,)) == [OSP("({1,2})")]
    alpha, beta = (3, 2, 1, 1, 2, 1, 1), (5, 1, 4, 1)
    assert OSP("({5,6},{1},{2,3,7},{4})") in enumerate_osp(alpha, beta)
    assert count_osp(alpha, beta) == 420 == math.factorial(7) // (2 * 1 * 6 * 1)
    assert enumerate_osp((2, 2), (1, 3)) == []


def test_osp_counts_match_enumeration():
    for alpha, beta in refinement_pairs(6):
        assert len(enumerate_osp(alpha, beta)) == count_osp(alpha, beta)


def test_prop_R_cons_identity():
    for n in range(1, 7):
        for lam in partitions(n):
            for beta in compositions(n):
                total = sum(
                    len(enumerate_cons(a, beta))
                    for a in map(Composition, set(itertools.permutations(lam)))
                    if refines(a, beta)
                )
                assert count_R(lam, beta) * math.factorial(n) == total * z(lam)


# -- g ---------------------------------------------------------------------------

LAM, BETA = (3, 2, 2, 1, 1, 1, 1), (5, 1, 4, 1)
A_EX, B_EX = OSP("({1,2,4,7},{3,6},{5})"), OSP("({1,3},{4},{2,5,7},{6})")
C_EX = OSP("({5,6},{1},{2,3,7},{4})")


def test_g_worked_example():
    alpha, C = g_forward(A_EX, B_EX, LAM, BETA)
    assert alpha == (3, 2, 1, 1, 2, 1, 1) and C == C_EX
    assert g_inverse(alpha, C, BETA) == (A_EX, B_EX)


def test_g_inverse_records_alpha():
    A, B = g_inverse((3, 2, 1, 2, 1, 1, 1), C_EX, BETA)
    assert A == OSP("({1,3,4,7},{2,6},{5})") and B == B_EX


def test_g_singleton():
    A, B = OSP("({1})"), OSP("({1})")
    assert g_forward(A, B, (1,), (1,)) == ((1,), B)
    assert g_inverse((1,), B, (1,)) == (A, B)
    assert g_forward(OSP("({},{},{1})"), B, (3,), (3,)) == ((3,), B)


def test_g_errors():
    with pytest.raises(PartitionError):
        g_forward(A_EX, B_EX, (1, 2), BETA)
    with pytest.raises(DomainError):
        g_inverse((3, 2, 1, 1, 2, 1, 1), OSP("({1},{2,3},{4,5},{6,7})"), BETA)


def test_g_bijection_up_to_6():
    for n in range(1, 7):
        for lam in partitions(n):
            for beta in compositions(n):
                images = set()
                osps = {}
                for A in size_position_sets(lam):
                    for B in ordered_groupings(lam, beta):
                        alpha, C = g_forward(A, B, lam, beta)
                        assert refines(alpha, beta) and alpha.partition() == lam
                        if alpha not in osps:
                            osps[alpha] = set(enumerate_osp(alpha, beta))
                        assert C in osps[alpha]
                        assert g_inverse(alpha, C, beta) == (A, B)
                        images.add((alpha, C))
                target = {
                    (a, C)
                    for a in map(Composition, set(itertools.permutations(lam)))
                    if refines(a, beta)
                    for C in enumerate_osp(a, beta)
                }
                assert images == target
