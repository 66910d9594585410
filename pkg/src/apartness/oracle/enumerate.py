"""Enumeration and seeded sampling of small labelled structures.

Exhaustive enumeration walks the raw space in row-major order (cell (0, 0)
is the most significant digit) and filters with the oracle predicates.
Sampling draws valid structures directly; the draw is seeded and not
uniform except for apartness relations over the diagonal equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator

import numpy as np

from . import predicates as pr

DEFAULT_CEILING = 1 << 24
KINDS = ("relation", "apartness", "co-quasiorder", "co-equivalence", "semigroup", "se-map")

FILTERS = {
    "reflexive": lambda R, E, P: pr.reflexive(R),
    "symmetric": lambda R, E, P: pr.symmetric(R),
    "transitive": lambda R, E, P: pr.transitive(R),
    "antisymmetric": lambda R, E, P: pr.antisymmetric(R, E),
    "irreflexive": lambda R, E, P: pr.irreflexive(R, E),
    "strongly-irreflexive": lambda R, E, P: pr.strongly_irreflexive(R, P),
    "cotransitive": lambda R, E, P: pr.cotransitive(R),
    "coantisymmetric": lambda R, E, P: pr.coantisymmetric(R, P),
    "equivalence": lambda R, E, P: pr.equivalence(R),
    "quasiorder": lambda R, E, P: pr.quasiorder(R),
    "order": lambda R, E, P: pr.order(R, E),
    "co-quasiorder": lambda R, E, P: pr.coquasiorder(R, P),
    "co-equivalence": lambda R, E, P: pr.coequivalence(R, P),
    "co-order": lambda R, E, P: pr.coorder(R, P),
}


class SpaceTooLarge(Exception):
    def __init__(self, raw: int, ceiling: int):
        self.raw, self.ceiling = raw, ceiling
        super().__init__(f"raw space of {raw} exceeds the ceiling {ceiling}; sample with a seed instead")


class SamplingError(Exception):
    pass


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate.

    ``over`` is an ``(eq, ap)`` pair for the relation-over-apartness kinds and
    the semigroup kind (``None`` means every apartness over ``eq``);
    ``codomain`` is the target ``(eq, ap)`` for ``se-map``. ``budget=None``
    asks for exhaustive enumeration; otherwise ``budget`` samples are drawn
    and ``seed`` is mandatory.
    """

    size: int
    kind: str
    over: tuple | None = None
    codomain: tuple | None = None
    filter: tuple[str, ...] = ()
    budget: int | None = None
    seed: int | None = None
    ceiling: int = DEFAULT_CEILING
    eq: tuple | None = field(default=None)

    def raw_count(self) -> int:
        n = self.size
        if self.kind == "semigroup":
            return n ** (n * n)
        if self.kind == "se-map":
            m = len(self.codomain[0]) if self.codomain else n
            return m ** n
        return 2 ** (n * n)


def bits_to_mat(code: int, n: int) -> pr.Mat:
    k = n * n
    return tuple(tuple(bool((code >> (k - 1 - (x * n + y))) & 1) for y in range(n)) for x in range(n))


def mat_code(R: pr.Mat) -> int:
    code = 0
    for row in R:
        for v in row:
            code = (code << 1) | int(v)
    return code


@lru_cache(maxsize=None)
def all_relations(n: int) -> tuple:
    return tuple(bits_to_mat(c, n) for c in range(2 ** (n * n)))


@lru_cache(maxsize=None)
def apartness_relations(n: int, eq: pr.Mat | None = None) -> tuple:
    E = eq if eq is not None else pr.diag(n)
    return tuple(P for P in all_relations(n) if pr.is_apartness(E, P))


def sub_relations(P: pr.Mat) -> Iterator[pr.Mat]:
    """Every relation contained in ``P``, in row-major code order."""
    n = len(P)
    cells = [(x, y) for x in range(n) for y in range(n) if P[x][y]]
    k = len(cells)
    for code in range(2 ** k):
        chosen = {cells[i] for i in range(k) if (code >> (k - 1 - i)) & 1}
        yield pr.mat(n, lambda x, y: (x, y) in chosen)


@lru_cache(maxsize=None)
def coquasiorders(P: pr.Mat) -> tuple:
    return tuple(R for R in sub_relations(P) if pr.cotransitive(R))


@lru_cache(maxsize=None)
def coequivalences(P: pr.Mat) -> tuple:
    return tuple(R for R in coquasiorders(P) if pr.symmetric(R))


@lru_cache(maxsize=None)
def equivalences(n: int) -> tuple:
    return tuple(sorted(pr.equivalences(n), key=mat_code))


@lru_cache(maxsize=None)
def quasiorders(n: int) -> tuple:
    return tuple(R for R in all_relations(n) if pr.quasiorder(R))


@lru_cache(maxsize=None)
def orders(n: int) -> tuple:
    E = pr.diag(n)
    return tuple(R for R in quasiorders(n) if pr.antisymmetric(R, E))


@lru_cache(maxsize=None)
def associative_tables(n: int) -> tuple:
    out = []
    for flat in product(range(n), repeat=n * n):
        M = tuple(tuple(flat[x * n:(x + 1) * n]) for x in range(n))
        if all(M[M[a][b]][c] == M[a][M[b][c]] for a in range(n) for b in range(n) for c in range(n)):
            out.append(M)
    return tuple(out)


@lru_cache(maxsize=None)
def semigroups(n: int, E: pr.Mat, P: pr.Mat) -> tuple:
    if E == pr.diag(n):
        candidates = associative_tables(n)
    else:
        candidates = (tuple(tuple(f[x * n:(x + 1) * n]) for x in range(n))
                      for f in product(range(n), repeat=n * n))
    return tuple(M for M in candidates if pr.semigroup_witness(E, P, M) is None)


def maps(n: int, m: int):
    return product(range(m), repeat=n)


def se_maps(E1, P1, E2, P2) -> tuple:
    n, m = len(E1), len(E2)
    out = []
    for f in maps(n, m):
        fl = pr.map_flags(f, E1, P1, E2, P2)
        if fl["extensional"] and fl["se"]:
            out.append(tuple(f))
    return tuple(out)


# -- seeded samplers -----------------------------------------------------------------

def random_partition(rng: np.random.Generator, n: int) -> pr.Mat:
    """Uniform over the set partitions of range(n)."""
    return equivalences(n)[int(rng.integers(len(equivalences(n))))]


def sample_apartness(rng, n: int) -> tuple[pr.Mat, pr.Mat]:
    return pr.diag(n), pr.neg(random_partition(rng, n))


def transitive_closure(R: pr.Mat) -> pr.Mat:
    n = len(R)
    C = [list(r) for r in R]
    for k in range(n):
        for i in range(n):
            if C[i][k]:
                for j in range(n):
                    if C[k][j]:
                        C[i][j] = True
    return tuple(tuple(r) for r in C)


def random_relation(rng, n: int, density: float | None = None) -> pr.Mat:
    p = rng.random() if density is None else density
    bits = rng.random((n, n)) < p
    return tuple(tuple(bool(v) for v in row) for row in bits)


def sample_quasiorder_above(rng, base: pr.Mat) -> pr.Mat:
    """Transitive closure of ``base`` plus a random sprinkle of pairs."""
    n = len(base)
    extra = random_relation(rng, n, rng.random() * 0.5)
    return transitive_closure(pr.union(pr.union(base, extra), pr.diag(n)))


def sample_coquasiorder(rng, P: pr.Mat) -> pr.Mat:
    return pr.neg(sample_quasiorder_above(rng, pr.neg(P)))


def sample_equivalence_above(rng, base: pr.Mat) -> pr.Mat:
    """Random coarsening of the equivalence generated by ``base``."""
    n = len(base)
    gen = transitive_closure(pr.union(pr.union(base, pr.inv(base)), pr.diag(n)))
    blocks = pr.classes(gen)
    merge = random_partition(rng, len(blocks))
    idx = pr.class_index(blocks, n)
    return pr.mat(n, lambda x, y: merge[idx[x]][idx[y]])


def sample_coequivalence(rng, P: pr.Mat) -> pr.Mat:
    return pr.neg(sample_equivalence_above(rng, pr.neg(P)))


def sample_semigroup(rng, E: pr.Mat, P: pr.Mat, node_limit: int = 20000, restarts: int = 200) -> tuple:
    """Randomised backtracking over tables; checks (A) and (S) on partial tables.

    Assumes the diagonal equality. Not uniform over valid tables.
    """
    n = len(E)
    same = pr.neg(P)
    for _ in range(restarts):
        M = [[-1] * n for _ in range(n)]
        nodes = [0]
        order = [(x, y) for x in range(n) for y in range(n)]

        def consistent(i, j) -> bool:
            v = M[i][j]
            for y in range(n):
                for b in range(n):
                    w = M[y][b]
                    if w >= 0 and same[i][y] and same[j][b] and not same[v][w]:
                        return False
            # associativity only at triples whose evaluation reads cell (i, j)
            def clash(a, b, c):
                ab, bc = M[a][b], M[b][c]
                if ab < 0 or bc < 0:
                    return False
                left, right = M[ab][c], M[a][bc]
                return left >= 0 and right >= 0 and left != right

            for t in range(n):
                if clash(i, j, t) or clash(t, i, j):
                    return False
            for a in range(n):
                for b in range(n):
                    if M[a][b] == i and clash(a, b, j):
                        return False
                    if M[a][b] == j and clash(i, a, b):
                        return False
            return True

        def fill(k) -> bool:
            if k == len(order):
                return True
            nodes[0] += 1
            if nodes[0] > node_limit:
                return False
            i, j = order[k]
            for v in rng.permutation(n):
                M[i][j] = int(v)
                if consistent(i, j) and fill(k + 1):
                    return True
            M[i][j] = -1
            return False

        if fill(0):
            return tuple(tuple(r) for r in M)
    raise SamplingError(f"no semigroup found on {n} points within the node limit")


def sample_se_map(rng, E1, P1, E2, P2) -> tuple:
    """Block-preserving random map; strongly extensional for diagonal equalities."""
    n = len(E1)
    src = pr.classes(pr.neg(P1))
    dst = pr.classes(pr.neg(P2))
    f = [0] * n
    for block in src:
        target = dst[int(rng.integers(len(dst)))]
        for x in block:
            f[x] = target[int(rng.integers(len(target)))]
    return tuple(f)


# -- the public entry point ----------------------------------------------------------

def _passes(R, E, P, names) -> bool:
    return all(FILTERS[name](R, E, P) for name in names)


def enumerate_structures(spec: EnumSpec) -> Iterator:
    """Yield structures for ``spec``.

    relation, co-quasiorder, co-equivalence: a relation matrix;
    apartness: an ``(eq, ap)`` pair; semigroup: ``(eq, ap, table)``;
    se-map: a graph tuple.
    """
    if spec.kind not in KINDS:
        raise ValueError(f"unknown kind {spec.kind!r}; choose from {KINDS}")
    unknown = [f for f in spec.filter if f not in FILTERS]
    if unknown:
        raise ValueError(f"unknown filters {unknown}")
    n = spec.size
    E = spec.eq if spec.eq is not None else (spec.over[0] if spec.over else pr.diag(n))
    if spec.budget is None:
        raw = spec.raw_count()
        if raw > spec.ceiling:
            raise SpaceTooLarge(raw, spec.ceiling)
        yield from _exhaustive(spec, E)
    else:
        if spec.seed is None:
            raise ValueError("sampling mode needs a seed")
        yield from _sampled(spec, E, np.random.default_rng(spec.seed))


def _overs(spec, E):
    if spec.over is not None:
        return [spec.over]
    return [(E, P) for P in apartness_relations(spec.size, E if E != pr.diag(spec.size) else None)]


def _exhaustive(spec: EnumSpec, E):
    n = spec.size
    if spec.kind == "relation":
        P = spec.over[1] if spec.over else pr.empty(n)
        for R in all_relations(n):
            if _passes(R, E, P, spec.filter):
                yield R
    elif spec.kind == "apartness":
        for P in all_relations(n):
            if pr.is_apartness(E, P):
                yield E, P
    elif spec.kind in ("co-quasiorder", "co-equivalence"):
        for E_, P in _overs(spec, E):
            pool = coquasiorders(P) if spec.kind == "co-quasiorder" else coequivalences(P)
            for R in pool:
                if _passes(R, E_, P, spec.filter):
                    yield R
    elif spec.kind == "semigroup":
        for E_, P in _overs(spec, E):
            for M in semigroups(n, E_, P):
                yield E_, P, M
    elif spec.kind == "se-map":
        E1, P1 = spec.over if spec.over else (E, pr.empty(n))
        E2, P2 = spec.codomain if spec.codomain else (E1, P1)
        yield from se_maps(E1, P1, E2, P2)


def _sampled(spec: EnumSpec, E, rng):
    n = spec.size
    diagonal = E == pr.diag(n)
    for _ in range(spec.budget):
        if spec.kind == "relation":
            P = spec.over[1] if spec.over else pr.empty(n)
            for _try in range(10000):
                R = random_relation(rng, n)
                if _passes(R, E, P, spec.filter):
                    yield R
                    break
            else:
                raise SamplingError("rejection sampling found nothing for the filter")
        elif spec.kind == "apartness":
            if not diagonal:
                raise SamplingError("apartness sampling supports the diagonal equality only")
            yield sample_apartness(rng, n)
        elif spec.kind in ("co-quasiorder", "co-equivalence"):
            P = spec.over[1] if spec.over else sample_apartness(rng, n)[1]
            R = sample_coquasiorder(rng, P) if spec.kind == "co-quasiorder" else sample_coequivalence(rng, P)
            yield R
        elif spec.kind == "semigroup":
            E_, P = spec.over if spec.over else sample_apartness(rng, n)
            yield E_, P, sample_semigroup(rng, E_, P)
        elif spec.kind == "se-map":
            E1, P1 = spec.over if spec.over else sample_apartness(rng, n)
            E2, P2 = spec.codomain if spec.codomain else (E1, P1)
            yield sample_se_map(rng, E1, P1, E2, P2)
