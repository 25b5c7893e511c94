"""Permutations, consistency with a refinement, and the bijections Sh, Br and g.

Permutations are 1-based words in one-line notation.  A permutation ``sigma``
is *consistent* with ``alpha <= beta`` when, cutting ``sigma`` into blocks by
``beta`` and each block into cycles by the matching parts of ``alpha``, every
block is a cycle decomposition in standard form (each cycle ends with its
maximum, and the maxima increase left to right).
"""

from __future__ import annotations

import itertools
import math
import re
from typing import Iterable

from .compositions import (
    DEFAULT_MAX_N,
    Composition,
    check_cap,
    refines,
    split,
    z,
)
from .errors import (
    ConsistencyError,
    DomainError,
    PartitionError,
    RefinementError,
    SizeError,
)


class Permutation(tuple):
    """One-line notation for a bijection of {1, ..., n}."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int]):
        if isinstance(word, Permutation):
            return word
        word = tuple(int(x) for x in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise DomainError(f"{word} is not a permutation of 1..{len(word)}")
        return super().__new__(cls, word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text:
            return cls(int(x) for x in text.split(","))
        if not text.isdigit():
            raise DomainError(f"cannot parse permutation {text!r}")
        return cls(int(ch) for ch in text)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def cycles(self) -> "CycleForm":
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cycle = []
            i = start
            while i not in seen:
                seen.add(i)
                cycle.append(i)
                i = self(i)
            out.append(tuple(cycle))
        return CycleForm(out)

    def __str__(self):
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Permutation({str(self)!r})"


class CycleForm(tuple):
    """An ordered list of cycles whose union is {1, ..., n}."""

    __slots__ = ()

    def __new__(cls, cycles):
        if isinstance(cycles, CycleForm):
            return cycles
        cycles = tuple(tuple(int(x) for x in c) for c in cycles)
        flat = [x for c in cycles for x in c]
        if any(not c for c in cycles) or sorted(flat) != list(range(1, len(flat) + 1)):
            raise DomainError(f"cycles {cycles} do not partition 1..{len(flat)}")
        return super().__new__(cls, cycles)

    @classmethod
    def parse(cls, text: str) -> "CycleForm":
        """Accepts ``"(7 3 9)(4 5)"`` and, for single-digit entries, ``"(739)(45)"``."""
        text = text.strip()
        if not re.fullmatch(r"(\([\d\s,]+\))+", text):
            raise DomainError(f"cannot parse cycle notation {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            tokens = re.split(r"[\s,]+", body.strip())
            if len(tokens) == 1 and len(tokens[0]) > 1:
                tokens = list(tokens[0])
            cycles.append(tuple(int(t) for t in tokens))
        return cls(cycles)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self)

    def cycle_type(self) -> Composition:
        return Composition(len(c) for c in self)

    def to_permutation(self) -> Permutation:
        image = {}
        for c in self:
            for a, b in zip(c, c[1:] + c[:1]):
                image[a] = b
        return Permutation(image[i] for i in range(1, len(image) + 1))

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self)

    def __repr__(self):
        return f"CycleForm({str(self)!r})"


class OrderedSetPartition(tuple):
    """A sequence of disjoint sets covering {1, ..., k}.

    Empty blocks are allowed; they appear when a block records the positions
    of a part size that does not occur.
    """

    __slots__ = ()

    def __new__(cls, blocks):
        if isinstance(blocks, OrderedSetPartition):
            return blocks
        blocks = tuple(frozenset(int(x) for x in b) for b in blocks)
        flat = sorted(x for b in blocks for x in b)
        if flat != list(range(1, len(flat) + 1)):
            raise PartitionError(f"blocks {[sorted(b) for b in blocks]} do not partition 1..{len(flat)}")
        return super().__new__(cls, blocks)

    @classmethod
    def parse(cls, text: str) -> "OrderedSetPartition":
        text = text.strip()
        if not re.fullmatch(r"\(\s*(\{[\d\s,]*\}\s*,?\s*)*\)", text):
            raise PartitionError(f"cannot parse ordered set partition {text!r}")
        blocks = []
        for body in re.findall(r"\{([^}]*)\}", text):
            body = body.strip()
            blocks.append({int(t) for t in re.split(r"[\s,]+", body)} if body else set())
        return cls(blocks)

    @property
    def k(self) -> int:
        return sum(len(b) for b in self)

    def block_sizes(self) -> tuple:
        return tuple(len(b) for b in self)

    def word(self) -> tuple:
        """Concatenation of the blocks, each listed in increasing order."""
        return tuple(x for b in self for x in sorted(b))

    def __str__(self):
        return "(" + ",".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self) + ")"

    def __repr__(self):
        return f"OrderedSetPartition({str(self)!r})"


# ---------------------------------------------------------------------------
# cycle forms


def _rotate_max_last(cycle):
    i = cycle.index(max(cycle))
    return cycle[i + 1:] + cycle[:i + 1]


def canonical_cycle_form(sigma, mode: str = "standard") -> CycleForm:
    """Rewrite cycles with maxima last, ordered by maximum (standard) or by length (partition)."""
    cycles = sigma.cycles() if isinstance(sigma, Permutation) else CycleForm(sigma)
    cycles = [_rotate_max_last(c) for c in cycles]
    if mode == "standard":
        cycles.sort(key=max)
    elif mode == "partition":
        cycles.sort(key=lambda c: (-len(c), max(c)))
    else:
        raise DomainError(f"unknown cycle form mode {mode!r}")
    return CycleForm(cycles)


def _is_partition_form(cycles) -> bool:
    return list(cycles) == list(canonical_cycle_form(cycles, "partition"))


# ---------------------------------------------------------------------------
# consistency


def split_word(sigma, beta) -> list:
    sigma, beta = tuple(sigma), Composition(beta)
    if beta.n != len(sigma):
        raise SizeError(f"composition of {beta.n} cannot split a word of length {len(sigma)}")
    out, i = [], 0
    for part in beta:
        out.append(sigma[i:i + part])
        i += part
    return out


def _check_pair(alpha, beta):
    alpha, beta = Composition(alpha), Composition(beta)
    if not refines(alpha, beta):
        raise RefinementError(f"{tuple(alpha)} does not refine {tuple(beta)}")
    return alpha, beta


def is_consistent(sigma, alpha, beta) -> bool:
    alpha, beta = _check_pair(alpha, beta)
    sigma = Permutation(sigma)
    if alpha.n != sigma.n:
        raise SizeError(f"permutation of {sigma.n} against composition of {alpha.n}")
    for block_word, block_alpha in zip(split_word(sigma, beta), split(alpha, beta)):
        prev = 0
        for seg in split_word(block_word, block_alpha):
            if seg[-1] != max(seg) or seg[-1] < prev:
                return False
            prev = seg[-1]
    return True


def enumerate_cons(alpha, beta, max_n: int | None = None) -> list:
    """All permutations consistent with ``alpha <= beta``, in lexicographic order."""
    alpha, beta = _check_pair(alpha, beta)
    check_cap(alpha.n, max_n, "consistent-permutation enumeration")
    segments = []
    for block in split(alpha, beta):
        for j, part in enumerate(block):
            segments.append((part, j == 0))

    def extend(idx, remaining, prev_max):
        if idx == len(segments):
            yield ()
            return
        size, new_block = segments[idx]
        floor = 0 if new_block else prev_max
        for subset in itertools.combinations(remaining, size):
            top = subset[-1]
            if top < floor:
                continue
            rest = tuple(x for x in remaining if x not in subset)
            for head in itertools.permutations(subset[:-1]):
                for tail in extend(idx + 1, rest, top):
                    yield head + (top,) + tail

    words = sorted(extend(0, tuple(range(1, alpha.n + 1)), 0))
    return [Permutation(w) for w in words]


def hat(alpha, sigma) -> Composition:
    """The coarsest beta >= alpha such that sigma is consistent with alpha <= beta."""
    alpha, sigma = Composition(alpha), Permutation(sigma)
    if not is_consistent(sigma, alpha, alpha):
        raise ConsistencyError(f"{sigma} is not consistent with {tuple(alpha)} <= {tuple(alpha)}")
    segs = split_word(sigma, alpha)
    parts = [alpha[0]] if alpha else []
    for j in range(1, len(segs)):
        if segs[j][-1] > segs[j - 1][-1]:
            parts[-1] += alpha[j]
        else:
            parts.append(alpha[j])
    return Composition(parts)


# ---------------------------------------------------------------------------
# Sh: Cons(alpha <= beta) x shifts  <->  S_n


def _shift_bounds(alpha, beta):
    return [list(itertools.accumulate(block)) for block in split(alpha, beta)]


def shape_shifts(flat, alpha, beta) -> tuple:
    """Reshape a flat list of shifts into the ragged block/position layout."""
    bounds = _shift_bounds(Composition(alpha), Composition(beta))
    flat = list(flat)
    if len(flat) != sum(len(b) for b in bounds):
        raise DomainError(f"expected {sum(len(b) for b in bounds)} shifts, got {len(flat)}")
    out, i = [], 0
    for b in bounds:
        out.append(tuple(flat[i:i + len(b)]))
        i += len(b)
    return tuple(out)


def sh_forward(sigma, shifts, alpha, beta) -> Permutation:
    alpha, beta = _check_pair(alpha, beta)
    sigma = Permutation(sigma)
    if not is_consistent(sigma, alpha, beta):
        raise ConsistencyError(f"{sigma} is not consistent with {tuple(alpha)} <= {tuple(beta)}")
    bounds = _shift_bounds(alpha, beta)
    shifts = tuple(tuple(s) for s in shifts)
    if [len(s) for s in shifts] != [len(b) for b in bounds]:
        raise DomainError(f"shift vector shape {shifts} does not match {bounds}")
    out = []
    for word, block_bounds, block_shifts in zip(split_word(sigma, beta), bounds, shifts):
        word = list(word)
        for a, s in zip(block_bounds, block_shifts):
            if not 0 <= s < a:
                raise DomainError(f"shift {s} out of range [0, {a})")
            if s:
                word[:a] = word[a - s:a] + word[:a - s]
        out.extend(word)
    return Permutation(out)


def sh_inverse(tau, alpha, beta) -> tuple:
    """Return ``(sigma, shifts)`` with ``sh_forward(sigma, shifts, alpha, beta) == tau``."""
    alpha, beta = _check_pair(alpha, beta)
    tau = Permutation(tau)
    if tau.n != alpha.n:
        raise SizeError(f"permutation of {tau.n} against composition of {alpha.n}")
    sigma, shifts = [], []
    for word, block_bounds in zip(split_word(tau, beta), _shift_bounds(alpha, beta)):
        word = list(word)
        block_shifts = [0] * len(block_bounds)
        for j in reversed(range(len(block_bounds))):
            a = block_bounds[j]
            k = (word[:a].index(max(word[:a])) + 1) % a
            word[:a] = word[k:a] + word[:k]
            block_shifts[j] = k
        sigma.extend(word)
        shifts.append(tuple(block_shifts))
    return Permutation(sigma), tuple(shifts)


# ---------------------------------------------------------------------------
# Br: pairs (alpha, sigma) <-> O(lambda, beta) x permutations of cycle type lambda


def br_forward(alpha, sigma, beta) -> tuple:
    alpha, beta = _check_pair(alpha, beta)
    sigma = Permutation(sigma)
    if not is_consistent(sigma, alpha, beta):
        raise ConsistencyError(f"{sigma} is not consistent with {tuple(alpha)} <= {tuple(beta)}")
    labelled = []
    for i, (word, block) in enumerate(zip(split_word(sigma, beta), split(alpha, beta))):
        for cycle in split_word(word, block):
            labelled.append((cycle, i))
    labelled.sort(key=lambda item: (-len(item[0]), max(item[0])))
    blocks = [set() for _ in beta]
    for j, (_, i) in enumerate(labelled, start=1):
        blocks[i].add(j)
    return OrderedSetPartition(blocks), CycleForm(c for c, _ in labelled)


def br_inverse(blocks, cycles, beta) -> tuple:
    """Return ``(alpha, sigma)`` with ``br_forward(alpha, sigma, beta) == (blocks, cycles)``."""
    blocks, cycles, beta = OrderedSetPartition(blocks), CycleForm(cycles), Composition(beta)
    if not _is_partition_form(cycles):
        raise DomainError(f"{cycles} is not in partition form")
    if blocks.k != len(cycles) or len(blocks) != len(beta):
        raise PartitionError(f"{blocks} does not index the {len(cycles)} cycles into {len(beta)} groups")
    alpha, sigma = [], []
    for block, target in zip(blocks, beta):
        group = sorted((cycles[j - 1] for j in block), key=max)
        if sum(len(c) for c in group) != target:
            raise PartitionError(f"block {sorted(block)} has total length != {target}")
        for c in group:
            alpha.append(len(c))
            sigma.extend(c)
    return Composition(alpha), Permutation(sigma)


# ---------------------------------------------------------------------------
# O(alpha, beta), OSP(alpha, beta)


def ordered_groupings(alpha, beta) -> list:
    """Ordered set partitions (B_1, ..., B_l(beta)) of [l(alpha)] with sum_{i in B_j} alpha_i = beta_j."""
    alpha, beta = Composition(alpha), Composition(beta)
    if alpha.n != beta.n:
        raise SizeError(f"{tuple(alpha)} and {tuple(beta)} have different sizes")
    found = []
    assignment = [None] * len(alpha)
    room = list(beta)

    def place(i):
        if i == len(alpha):
            found.append(OrderedSetPartition(
                {k + 1 for k, b in enumerate(assignment) if b == j} for j in range(len(beta))
            ))
            return
        for j in range(len(beta)):
            if room[j] >= alpha[i]:
                room[j] -= alpha[i]
                assignment[i] = j
                place(i + 1)
                room[j] += alpha[i]

    place(0)
    return sorted(found, key=lambda p: [sorted(b) for b in p])


def count_R(alpha, beta) -> int:
    return len(ordered_groupings(alpha, beta))


def ordered_set_partitions(sizes) -> list:
    """All ordered set partitions of [sum(sizes)] with the given block sizes."""
    sizes = list(sizes)
    out = []

    def build(remaining, i, acc):
        if i == len(sizes):
            out.append(OrderedSetPartition(acc))
            return
        for block in itertools.combinations(remaining, sizes[i]):
            rest = tuple(x for x in remaining if x not in block)
            build(rest, i + 1, acc + [block])

    build(tuple(range(1, sum(sizes) + 1)), 0, [])
    return out


def enumerate_osp(alpha, beta) -> list:
    alpha, beta = Composition(alpha), Composition(beta)
    if not refines(alpha, beta):
        return []
    return ordered_set_partitions(len(b) for b in split(alpha, beta))


def count_osp(alpha, beta) -> int:
    alpha, beta = Composition(alpha), Composition(beta)
    if not refines(alpha, beta):
        return 0
    sizes = [len(b) for b in split(alpha, beta)]
    return math.factorial(sum(sizes)) // math.prod(math.factorial(s) for s in sizes)


# ---------------------------------------------------------------------------
# g: A_lambda x O(lambda, beta) <-> {(alpha, C) : alpha <= beta, sorted(alpha) = lambda, C in OSP(alpha, beta)}


def _is_partition(lam) -> bool:
    return list(lam) == sorted(lam, reverse=True)


def _size_positions(parts) -> dict:
    """Part size -> 1-based positions holding that size, in increasing order."""
    out = {}
    for pos, p in enumerate(parts, start=1):
        out.setdefault(p, []).append(pos)
    return out


def _stable_index_map(source, target) -> dict:
    """Send the k-th occurrence of each size in ``source`` to its k-th occurrence in ``target``."""
    src, dst = _size_positions(source), _size_positions(target)
    return {i: j for size in src for i, j in zip(src[size], dst[size])}


def _groups_into(B, parts, beta) -> bool:
    """B is an ordered set partition of [len(parts)] whose blocks sum, part-wise, to beta."""
    if len(B) != len(beta) or B.k != len(parts):
        return False
    return all(sum(parts[i - 1] for i in block) == b for block, b in zip(B, beta))


def g_forward(A, B, lam, beta) -> tuple:
    lam, beta = Composition(lam), Composition(beta)
    A, B = OrderedSetPartition(A), OrderedSetPartition(B)
    if not _is_partition(lam):
        raise PartitionError(f"{tuple(lam)} is not a partition")
    mult = lam.multiplicities()
    top = lam[0] if lam else 0
    if len(A) != top or A.k != len(lam) or any(len(A[i - 1]) != mult[i] for i in range(1, top + 1)):
        raise PartitionError(f"{A} does not record the part sizes of {tuple(lam)}")
    if not _groups_into(B, lam, beta):
        raise PartitionError(f"{B} is not a grouping of {tuple(lam)} into {tuple(beta)}")
    prime = [0] * len(lam)
    for size, block in enumerate(A, start=1):
        for pos in block:
            prime[pos - 1] = size
    relabel = _stable_index_map(lam, prime)
    C = OrderedSetPartition({relabel[i] for i in block} for block in B)
    alpha = Composition(prime[w - 1] for w in C.word())
    return alpha, C


def g_inverse(alpha, C, beta) -> tuple:
    alpha, beta, C = Composition(alpha), Composition(beta), OrderedSetPartition(C)
    if not refines(alpha, beta) or C.block_sizes() != tuple(len(b) for b in split(alpha, beta)):
        raise DomainError(f"{C} is not in OSP({tuple(alpha)}, {tuple(beta)})")
    prime = [0] * len(alpha)
    for part, w in zip(alpha, C.word()):
        prime[w - 1] = part
    top = max(alpha, default=0)
    A = OrderedSetPartition(
        {pos for pos, p in enumerate(prime, start=1) if p == size} for size in range(1, top + 1)
    )
    relabel = _stable_index_map(prime, alpha.partition())
    B = OrderedSetPartition({relabel[j] for j in block} for block in C)
    return A, B


def size_position_sets(lam) -> list:
    """All of A_lambda: ordered set partitions (A_1, ..., A_max) with |A_i| = m_i(lambda)."""
    lam = Composition(lam)
    mult = lam.multiplicities()
    top = lam[0] if lam else 0
    return ordered_set_partitions(mult[i] for i in range(1, top + 1))


def permutations_of_type(lam) -> list:
    """Permutations with cycle type ``lam``, each written in partition form."""
    lam = Composition(lam)
    out = []
    for p in itertools.permutations(range(1, lam.n + 1)):
        cycles = Permutation(p).cycles()
        if sorted(map(len, cycles), reverse=True) == list(lam.partition()):
            out.append(canonical_cycle_form(cycles, "partition"))
    return out


def all_permutations(n: int, max_n: int | None = None) -> list:
    check_cap(n, max_n if max_n is not None else DEFAULT_MAX_N, "permutation enumeration")
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def count_type(lam) -> int:
    """Number of permutations of cycle type lam, n!/z_lam."""
    return math.factorial(sum(lam)) // z(lam)
