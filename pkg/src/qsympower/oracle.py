"""Independent ground truth by honest polynomial evaluation in finitely many variables.

Nothing here calls the conversion engine of ``qsympower.algebra``: power sums are
re-expanded from their defining formulas, products are multiplied as
polynomials, and transition matrices are obtained by solving linear systems.
Shared code is limited to ``Composition``, the composition enumerators and
``Fraction``.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .compositions import Composition, check_cap, compositions, partitions
from .errors import SideError, UsageError

# ---------------------------------------------------------------------------
# polynomials


class MonomialPolynomial:
    """A polynomial in x_1..x_m keyed by dense exponent vectors of length m."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        acc = defaultdict(Fraction)
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has length {len(exps)}, expected {nvars}")
            acc[exps] += c
        self.terms = {k: v for k, v in sorted(acc.items()) if v}

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MonomialPolynomial":
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    def __add__(self, other):
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return MonomialPolynomial(self.nvars, acc)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "MonomialPolynomial":
        return MonomialPolynomial(self.nvars, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MonomialPolynomial):
            return self.scale(Fraction(other))
        if other.nvars != self.nvars:
            raise ValueError("variable counts differ")
        acc = defaultdict(Fraction)
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                acc[tuple(x + y for x, y in zip(a, b))] += c * d
        return MonomialPolynomial(self.nvars, acc)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, MonomialPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for exps, c in self.terms.items():
            mono = "".join(
                f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps, 1) if e
            ) or "1"
            out.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(out)

    __repr__ = __str__


def is_quasisymmetric(p: MonomialPolynomial) -> bool:
    """Coefficients depend only on the sequence of nonzero exponents (and every shift of it appears)."""
    by_shape = {}
    for exps, c in p.terms.items():
        shape = tuple(e for e in exps if e)
        if by_shape.setdefault(shape, c) != c:
            return False
    for shape, c in by_shape.items():
        # every placement of the shape into m slots must be present with the same coefficient
        for pos in itertools.combinations(range(p.nvars), len(shape)):
            e = [0] * p.nvars
            for i, s in zip(pos, shape):
                e[i] = s
            if p.terms.get(tuple(e)) != c:
                return False
    return True


# ---------------------------------------------------------------------------
# the fundamental definitions, evaluated in m variables


@lru_cache(maxsize=None)
def _M_poly(alpha: Composition, m: int) -> MonomialPolynomial:
    terms = {}
    for pos in itertools.combinations(range(m), len(alpha)):
        e = [0] * m
        for i, a in zip(pos, alpha):
            e[i] = a
        terms[tuple(e)] = Fraction(1)
    return MonomialPolynomial(m, terms)


@lru_cache(maxsize=None)
def _F_poly(alpha: Composition, m: int) -> MonomialPolynomial:
    """Sum of x_{i1}...x_{in} over weakly increasing i with strict ascents at the descent set of alpha."""
    n = alpha.n
    descents = set(itertools.accumulate(alpha[:-1])) if alpha else set()
    acc = Counter()
    for idx in itertools.combinations_with_replacement(range(m), n):
        if any(idx[j - 1] == idx[j] for j in descents):
            continue
        e = [0] * m
        for i in idx:
            e[i] += 1
        acc[tuple(e)] += 1
    return MonomialPolynomial(m, {k: Fraction(v) for k, v in acc.items()})


# Independent re-derivations of the statistics used by the power sum expansions.

def _blocks(fine, coarse):
    out, i = [], 0
    for c in coarse:
        acc, block = 0, []
        while acc < c:
            block.append(fine[i])
            acc += fine[i]
            i += 1
        if acc != c:
            return None
        out.append(block)
    return out if i == len(fine) else None


def _coarser(alpha):
    """All compositions obtained by merging adjacent parts of alpha."""
    k = len(alpha)
    for cuts in itertools.product((False, True), repeat=max(k - 1, 0)):
        parts, cur = [], alpha[0]
        for j, merge in enumerate(cuts, 1):
            if merge:
                cur += alpha[j]
            else:
                parts.append(cur)
                cur = alpha[j]
        parts.append(cur)
        yield Composition(parts)


def _z(alpha):
    return math.prod(i**k * math.factorial(k) for i, k in Counter(alpha).items())


def _pi(alpha, beta):
    return math.prod(math.prod(itertools.accumulate(b)) for b in _blocks(alpha, beta))


def _osp_count(alpha, beta):
    sizes = [len(b) for b in _blocks(alpha, beta)]
    return math.factorial(sum(sizes)) // math.prod(math.factorial(s) for s in sizes)


def _psi_in_M(alpha):
    za = _z(alpha)
    return {beta: Fraction(za, _pi(alpha, beta)) for beta in _coarser(alpha)}


def _phi_in_M(alpha):
    """The ordered-set-partition form: Phi = multinomial^{-1} sum |OSP(alpha, beta)| M_beta."""
    mult = math.factorial(len(alpha)) // math.prod(math.factorial(k) for k in Counter(alpha).values())
    return {beta: Fraction(_osp_count(alpha, beta), mult) for beta in _coarser(alpha)}


def psi_by_permutations(alpha, m: int) -> MonomialPolynomial:
    """Psi_alpha as z/n! * sum over beta >= alpha of |Cons(alpha <= beta)| M_beta.

    Consistent permutations are counted by brute force over all of S_n.
    """
    alpha = Composition(alpha)
    n = alpha.n
    acc = MonomialPolynomial(m)
    perms = list(itertools.permutations(range(1, n + 1)))
    for beta in _coarser(alpha):
        count = sum(1 for s in perms if _consistent(s, alpha, beta))
        acc = acc + _M_poly(beta, m).scale(Fraction(count))
    return acc.scale(Fraction(_z(alpha), math.factorial(n)))


def _consistent(word, alpha, beta):
    pos = 0
    for block in _blocks(alpha, beta):
        prev = 0
        for a in block:
            seg = word[pos:pos + a]
            pos += a
            if seg[-1] != max(seg) or seg[-1] < prev:
                return False
            prev = seg[-1]
    return True


def _from_M(row, m):
    acc = MonomialPolynomial(m)
    for beta, c in row.items():
        acc = acc + _M_poly(beta, m).scale(c)
    return acc


@lru_cache(maxsize=None)
def basis_poly(name: str, alpha: Composition, m: int) -> MonomialPolynomial:
    """A single basis vector evaluated in m variables."""
    alpha = Composition(alpha)
    if name == "M":
        return _M_poly(alpha, m)
    if name == "F":
        return _F_poly(alpha, m)
    if name in ("Psi", "Psi1"):
        return _from_M(_psi_in_M(alpha), m)
    if name in ("psi", "psi1"):
        return _from_M(_psi_in_M(alpha), m).scale(Fraction(1, _z(alpha)))
    if name in ("Phi", "Phi2"):
        return _from_M(_phi_in_M(alpha), m)
    if name in ("phi", "phi2"):
        return _from_M(_phi_in_M(alpha), m).scale(Fraction(1, _z(alpha)))
    raise UsageError(f"the oracle cannot evaluate basis {name!r}")


QSYM_BASES = ("M", "F", "Psi", "Phi", "psi", "phi")


def eval_in_vars(f, m: int | None = None) -> MonomialPolynomial:
    """Evaluate a quasisymmetric element in x_1..x_m (m defaults to the top degree)."""
    if f.side != "qsym":
        raise SideError("only quasisymmetric elements can be evaluated in variables")
    if m is None:
        m = max((a.n for a in f.terms), default=1) or 1
    if m < 1:
        raise UsageError("need at least one variable")
    acc = MonomialPolynomial(m)
    for alpha, c in f.items():
        if alpha.n == 0:
            acc = acc + MonomialPolynomial(m, {(0,) * m: c})
        else:
            acc = acc + basis_poly(f.basis.name, alpha, m).scale(c)
    return acc


# ---------------------------------------------------------------------------
# exact linear algebra


def _solve(rows, rhs):
    """Solve x A = rhs for every right-hand side, where A is square; Gauss-Jordan over Fractions."""
    n = len(rows)
    # work on the transposed system A^T x^T = rhs^T
    aug = [[rows[j][i] for j in range(n)] + [r[i] for r in rhs] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                k = aug[r][col]
                aug[r] = [a - k * b for a, b in zip(aug[r], aug[col])]
    return [[aug[i][n + k] for i in range(n)] for k in range(len(rhs))]


def _coeff_vectors(name, n, m, keys):
    out = []
    for alpha in compositions(n):
        p = basis_poly(name, alpha, m)
        out.append([p.terms.get(k, Fraction(0)) for k in keys])
    return out


def transition_by_solve(source: str, target: str, n: int, max_n: int | None = 8) -> list:
    """Matrix T with source_alpha = sum_beta T[alpha][beta] target_beta, rows and columns in canonical order.

    Both bases are evaluated in m = n variables and compared on the monomials
    x^(alpha) with alpha a composition of n, which determine a degree-n
    quasisymmetric function.
    """
    check_cap(n, max_n, "transition solve")
    for name in (source, target):
        if name not in QSYM_BASES + ("Psi1", "Phi2", "psi1", "phi2"):
            raise UsageError(f"the oracle cannot evaluate basis {name!r}")
    comps = compositions(n)
    keys = [tuple(a) + (0,) * (n - len(a)) for a in comps]
    src = _coeff_vectors(source, n, n, keys)
    tgt = _coeff_vectors(target, n, n, keys)
    return _solve(tgt, src)


def m_span_injective(n: int, m: int | None = None) -> bool:
    """The evaluations of the M_alpha, alpha a composition of n, are linearly independent."""
    m = n if m is None else m
    comps = compositions(n)
    keys = sorted({k for a in comps for k in _M_poly(a, m).terms})
    mat = [[_M_poly(a, m).terms.get(k, Fraction(0)) for k in keys] for a in comps]
    return _rank(mat) == len(comps)


def _rank(mat):
    mat = [list(r) for r in mat]
    rank, cols = 0, len(mat[0]) if mat else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                k = mat[r][col] / mat[rank][col]
                mat[r] = [a - k * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# verification catalog


@dataclass
class VerificationReport:
    identity: str
    n_max: int
    checked: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def instances(self) -> int:
        return len(self.checked)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, instance, ok: bool, detail=None):
        self.checked.append(instance)
        if not ok:
            entry = {"instance": instance}
            if detail is not None:
                entry["detail"] = detail
            self.failures.append(entry)

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "n_max": self.n_max,
            "instances": self.instances,
            "failures": self.failures,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{self.identity}: {status} ({self.instances} instances, n <= {self.n_max}, {len(self.failures)} failures)"


def _comp_pairs(n_max):
    """All (alpha, beta) with alpha refining beta and |alpha| <= n_max."""
    for n in range(1, n_max + 1):
        for beta in compositions(n):
            for alpha in compositions(n):
                if _blocks(alpha, beta) is not None:
                    yield alpha, beta


def _power_sum_poly(lam, m):
    out = MonomialPolynomial(m, {(0,) * m: Fraction(1)})
    for part in lam:
        pk = MonomialPolynomial(m)
        for i in range(m):
            e = [0] * m
            e[i] = part
            pk = pk + MonomialPolynomial(m, {tuple(e): Fraction(1)})
        out = out * pk
    return out


def _rearrangements(lam):
    return sorted(set(itertools.permutations(lam)), reverse=True)



def _check_refine(rep, kind, n_max):
    from .algebra import convert, p_to_M, refine_sum

    for n in range(1, n_max + 1):
        for lam in partitions(n):
            total = MonomialPolynomial(n)
            for a in _rearrangements(lam):
                total = total + basis_poly(kind, Composition(a), n)
            ok_oracle = total == _power_sum_poly(lam, n)
            ok_core = convert(refine_sum(lam, kind), "M") == p_to_M(lam)
            rep.record(list(lam), ok_oracle and ok_core)


def _check_cons_count(rep, n_max):
    from .combinatorics import enumerate_cons

    for alpha, beta in _comp_pairs(n_max):
        k = len(enumerate_cons(alpha, beta, max_n=None))
        rep.record([list(alpha), list(beta)], k * _pi(alpha, beta) == math.factorial(alpha.n))


def _lambda_beta_pairs(n_max):
    for n in range(1, n_max + 1):
        for lam in partitions(n):
            for beta in compositions(n):
                yield lam, beta


def _check_br_count(rep, n_max):
    from .combinatorics import count_R, enumerate_cons

    for lam, beta in _lambda_beta_pairs(n_max):
        lhs = Fraction(count_R(lam, beta) * math.factorial(lam.n), _z(lam))
        rhs = sum(
            len(enumerate_cons(a, beta, max_n=None))
            for a in map(Composition, _rearrangements(lam))
            if _blocks(a, beta) is not None
        )
        rep.record([list(lam), list(beta)], lhs == rhs)


def _check_osp_count(rep, n_max):
    from .combinatorics import count_R, enumerate_osp

    for lam, beta in _lambda_beta_pairs(n_max):
        mult = math.factorial(len(lam)) // math.prod(math.factorial(k) for k in Counter(lam).values())
        rhs = sum(
            len(enumerate_osp(a, beta))
            for a in map(Composition, _rearrangements(lam))
            if _blocks(a, beta) is not None
        )
        rep.record([list(lam), list(beta)], mult * count_R(lam, beta) == rhs)


def _index_pairs(n_max):
    for total in range(2, n_max + 1):
        for a in range(1, total):
            for alpha in compositions(a):
                for beta in compositions(total - a):
                    yield alpha, beta


def _check_product(rep, kind, n_max):
    from .algebra import get_basis, multiply, phi_product, psi_product

    rule = psi_product if kind == "Psi" else phi_product
    basis = get_basis(kind)
    for alpha, beta in _index_pairs(n_max):
        m = alpha.n + beta.n
        closed = rule(alpha, beta)
        ok = eval_in_vars(closed, m) == basis_poly(kind, alpha, m) * basis_poly(kind, beta, m)
        ok = ok and closed == multiply(basis(alpha), basis(beta))
        rep.record([list(alpha), list(beta)], ok)


def _check_to_F(rep, kind, n_max):
    from .algebra import power_to_F, psi_F_collisions

    for n in range(1, n_max + 1):
        for alpha in compositions(n):
            ok = eval_in_vars(power_to_F(alpha, kind), n) == basis_poly(kind, alpha, n)
            if kind == "Psi":
                ok = ok and not psi_F_collisions(alpha)
            rep.record(list(alpha), ok)


def _check_moninterval(rep, n_max):
    from .algebra import interval_M_to_F

    for alpha, beta in _comp_pairs(n_max):
        n = alpha.n
        direct = MonomialPolynomial(n)
        for delta in _coarser(alpha):
            if _blocks(delta, beta) is not None:
                direct = direct + _M_poly(delta, n)
        rep.record([list(alpha), list(beta)], eval_in_vars(interval_M_to_F(alpha, beta), n) == direct)


def _finer(alpha):
    """All refinements of alpha, by splitting each part independently."""
    pieces = [list(_compositions_of(a)) for a in alpha]
    for choice in itertools.product(*pieces):
        yield Composition(x for part in choice for x in part)


@lru_cache(maxsize=None)
def _compositions_of(n):
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in _compositions_of(n - first):
            out.append((first,) + rest)
    return tuple(out)


def _lp(beta, alpha):
    return math.prod(b[-1] for b in _blocks(beta, alpha))


def _ell(beta, alpha):
    return math.prod(len(b) for b in _blocks(beta, alpha))


def _nsym_in_h(kind, alpha):
    """Noncommutative power sums in the complete homogeneous basis."""
    out = {}
    for beta in _finer(alpha):
        sign = -1 if (len(beta) - len(alpha)) % 2 else 1
        if kind == "Psi":
            out[beta] = Fraction(sign * _lp(beta, alpha))
        else:
            out[beta] = Fraction(sign * math.prod(alpha), _ell(beta, alpha))
    return out


def _check_duality(rep, kind, n_max):
    from .algebra import NPHI, NPSI, PHI, PSI, hall_pair

    qs, ns = (PSI, NPSI) if kind == "Psi" else (PHI, NPHI)
    expand = _psi_in_M if kind == "Psi" else _phi_in_M
    for n in range(1, n_max + 1):
        comps = compositions(n)
        for alpha in comps:
            left = expand(alpha)
            for beta in comps:
                right = _nsym_in_h(kind, beta)
                value = sum((c * right.get(g, 0) for g, c in left.items()), Fraction(0))
                expected = _z(alpha) if alpha == beta else 0
                ok = value == expected and hall_pair(qs(alpha), ns(beta)) == expected
                rep.record([list(alpha), list(beta)], ok, None if ok else str(value))


def _antipode_M(row):
    """S(M_a) = (-1)^l(a) sum of M_b over coarsenings b of the reverse of a."""
    acc = defaultdict(Fraction)
    for alpha, c in row.items():
        sign = -1 if len(alpha) % 2 else 1
        for beta in _coarser(Composition(reversed(alpha))):
            acc[beta] += sign * c
    return {k: v for k, v in acc.items() if v}


def _check_involution(rep, kind, op, n_max):
    from .algebra import antipode, get_basis, omega

    basis = get_basis(kind)
    expand = _psi_in_M if kind == "Psi" else _phi_in_M
    for n in range(1, n_max + 1):
        for alpha in compositions(n):
            rev = Composition(reversed(alpha))
            s_row = _antipode_M(expand(alpha))
            if op == "antipode":
                sign = -1 if len(alpha) % 2 else 1
                core = antipode(basis(alpha))
            else:
                sign = -1 if (n - len(alpha)) % 2 else 1
                s_row = {k: v * (-1) ** n for k, v in s_row.items()}
                core = omega(basis(alpha))
            target = basis_poly(kind, rev, n).scale(sign)
            ok = _from_M(s_row, n) == target and eval_in_vars(core, n) == target
            ok = ok and (antipode(core) if op == "antipode" else omega(core)) == basis(alpha)
            rep.record(list(alpha), ok)


def _quasi_shuffles(u, v):
    if not u:
        return Counter({tuple(v): 1})
    if not v:
        return Counter({tuple(u): 1})
    out = Counter()
    for head, rest in (
        (u[0], _quasi_shuffles(u[1:], v)),
        (v[0], _quasi_shuffles(u, v[1:])),
        (u[0] + v[0], _quasi_shuffles(u[1:], v[1:])),
    ):
        for w, k in rest.items():
            out[(head,) + w] += k
    return out


def _plain_shuffles(u, v):
    if not u or not v:
        return Counter({tuple(u) + tuple(v): 1})
    out = Counter()
    for w, k in _plain_shuffles(u[1:], v).items():
        out[(u[0],) + w] += k
    for w, k in _plain_shuffles(u, v[1:]).items():
        out[(v[0],) + w] += k
    return out


def _lemma_instances(n_max):
    """(alpha, beta, xi): xi any coarsening of a shuffle of alpha and beta."""
    for alpha, beta in _index_pairs(n_max):
        xis = set()
        for g in _plain_shuffles(alpha, beta):
            xis.update(_coarser(Composition(g)))
        for xi in sorted(xis):
            yield alpha, beta, xi


def _check_lemma(rep, kind, n_max):
    for alpha, beta, xi in _lemma_instances(n_max):
        m, n = alpha.n, beta.n
        lhs = Fraction(0)
        for delta in _coarser(alpha):
            for eta in _coarser(beta):
                k = _quasi_shuffles(delta, eta).get(tuple(xi), 0)
                if not k:
                    continue
                if kind == "pi":
                    lhs += k * Fraction(math.factorial(m), _pi(alpha, delta)) * Fraction(
                        math.factorial(n), _pi(beta, eta)
                    )
                else:
                    lhs += k * _osp_count(alpha, delta) * _osp_count(beta, eta)
        if kind == "pi":
            lhs *= math.comb(m + n, m)
        else:
            lhs *= math.comb(len(alpha) + len(beta), len(alpha))
        rhs = Fraction(0)
        for gamma, k in _plain_shuffles(alpha, beta).items():
            if _blocks(gamma, xi) is None:
                continue
            if kind == "pi":
                rhs += k * Fraction(math.factorial(m + n), _pi(gamma, xi))
            else:
                rhs += k * _osp_count(gamma, xi)
        rep.record([list(alpha), list(beta), list(xi)], lhs == rhs, None if lhs == rhs else f"{lhs} != {rhs}")


def _check_lyndon(rep, n_max):
    from .algebra import lyndon_rewrite

    for n in range(1, n_max + 1):
        for alpha in compositions(n):
            total = MonomialPolynomial(n)
            for mono, c in lyndon_rewrite(alpha).terms.items():
                prod = MonomialPolynomial(n, {(0,) * n: Fraction(1)})
                for L in mono:
                    prod = prod * basis_poly("Psi", L, n)
                total = total + prod.scale(c)
            rep.record(list(alpha), total == basis_poly("Psi", alpha, n))


def _check_transition(rep, n_max):
    from .algebra import transition_matrix

    for n in range(1, n_max + 1):
        for src in QSYM_BASES:
            for dst in QSYM_BASES:
                _, rows = transition_matrix(src, dst, n)
                rep.record([src, dst, n], rows == transition_by_solve(src, dst, n))


def _check_quasisymmetric(rep, n_max):
    for n in range(1, n_max + 1):
        for alpha in compositions(n):
            for kind in ("Psi", "Phi"):
                rep.record([kind, list(alpha)], is_quasisymmetric(basis_poly(kind, alpha, n + 1)))


def _check_comb_psi(rep, n_max):
    for n in range(1, n_max + 1):
        for alpha in compositions(n):
            rep.record(list(alpha), psi_by_permutations(alpha, n) == basis_poly("Psi", alpha, n))


CATALOG = {
    "refine-type1": lambda rep, n: _check_refine(rep, "Psi", n),
    "refine-type2": lambda rep, n: _check_refine(rep, "Phi", n),
    "cons-count": _check_cons_count,
    "br-count": _check_br_count,
    "osp-count": _check_osp_count,
    "product-psi": lambda rep, n: _check_product(rep, "Psi", n),
    "product-phi": lambda rep, n: _check_product(rep, "Phi", n),
    "psi-to-F": lambda rep, n: _check_to_F(rep, "Psi", n),
    "phi-to-F": lambda rep, n: _check_to_F(rep, "Phi", n),
    "moninterval": _check_moninterval,
    "duality-psi": lambda rep, n: _check_duality(rep, "Psi", n),
    "duality-phi": lambda rep, n: _check_duality(rep, "Phi", n),
    "antipode-psi": lambda rep, n: _check_involution(rep, "Psi", "antipode", n),
    "antipode-phi": lambda rep, n: _check_involution(rep, "Phi", "antipode", n),
    "omega-psi": lambda rep, n: _check_involution(rep, "Psi", "omega", n),
    "omega-phi": lambda rep, n: _check_involution(rep, "Phi", "omega", n),
    "product-lemma-pi": lambda rep, n: _check_lemma(rep, "pi", n),
    "product-lemma-sp": lambda rep, n: _check_lemma(rep, "sp", n),
    "lyndon": _check_lyndon,
    "transition": _check_transition,
    "quasisymmetric": _check_quasisymmetric,
    "comb-psi": _check_comb_psi,
}


def verify(identity: str, n_max: int, max_n: int | None = 8) -> VerificationReport:
    """Check one catalog identity on every instance of degree at most n_max."""
    if identity not in CATALOG:
        raise UsageError(f"unknown identity {identity!r}; known: {', '.join(sorted(CATALOG))}")
    check_cap(n_max, max_n, f"verification of {identity}")
    rep = VerificationReport(identity, n_max)
    CATALOG[identity](rep, n_max)
    return rep
