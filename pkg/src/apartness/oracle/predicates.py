"""Ground-truth predicates written as plain quantifier loops.

Relations are square tuples of tuples of bools. Nothing here imports the
construction modules: these loops are the second implementation every
construction is checked against.
"""
from __future__ import annotations

from itertools import product

Mat = tuple  # tuple[tuple[bool, ...], ...]


def size(R: Mat) -> int:
    return len(R)


def pts(R: Mat):
    return range(len(R))


def mat(n: int, pred) -> Mat:
    return tuple(tuple(bool(pred(x, y)) for y in range(n)) for x in range(n))


def diag(n: int) -> Mat:
    return mat(n, lambda x, y: x == y)


def empty(n: int) -> Mat:
    return mat(n, lambda x, y: False)


def full(n: int) -> Mat:
    return mat(n, lambda x, y: True)


def neg(R: Mat) -> Mat:
    return mat(len(R), lambda x, y: not R[x][y])


def inv(R: Mat) -> Mat:
    return mat(len(R), lambda x, y: R[y][x])


def union(R: Mat, S: Mat) -> Mat:
    return mat(len(R), lambda x, y: R[x][y] or S[x][y])


def meet(R: Mat, S: Mat) -> Mat:
    return mat(len(R), lambda x, y: R[x][y] and S[x][y])


def le(R: Mat, S: Mat) -> bool:
    return all(S[x][y] for x in pts(R) for y in pts(R) if R[x][y])


def first(gen):
    """First witness produced by a generator of candidate tuples, else None."""
    for w in gen:
        return w
    return None


# -- properties, each returning the least witness of failure or None --------------

def w_reflexive(R):
    return first((x,) for x in pts(R) if not R[x][x])


def w_symmetric(R):
    return first((x, y) for x in pts(R) for y in pts(R) if R[x][y] and not R[y][x])


def w_transitive(R):
    return first((x, y, z) for x in pts(R) for y in pts(R) for z in pts(R)
                 if R[x][y] and R[y][z] and not R[x][z])


def w_antisymmetric(R, E):
    return first((x, y) for x in pts(R) for y in pts(R) if R[x][y] and R[y][x] and not E[x][y])


def w_irreflexive(R, E):
    return first((x, y) for x in pts(R) for y in pts(R) if R[x][y] and E[x][y])


def w_strongly_irreflexive(R, P):
    return first((x, y) for x in pts(R) for y in pts(R) if R[x][y] and not P[x][y])


def w_cotransitive(R):
    return first((x, y, z) for x in pts(R) for y in pts(R) for z in pts(R)
                 if R[x][y] and not R[x][z] and not R[z][y])


def w_coantisymmetric(R, P):
    return first((x, y) for x in pts(R) for y in pts(R) if P[x][y] and not R[x][y] and not R[y][x])


def reflexive(R):
    return w_reflexive(R) is None


def symmetric(R):
    return w_symmetric(R) is None


def transitive(R):
    return w_transitive(R) is None


def antisymmetric(R, E):
    return w_antisymmetric(R, E) is None


def irreflexive(R, E):
    return w_irreflexive(R, E) is None


def strongly_irreflexive(R, P):
    return w_strongly_irreflexive(R, P) is None


def cotransitive(R):
    return w_cotransitive(R) is None


def coantisymmetric(R, P):
    return w_coantisymmetric(R, P) is None


def equivalence(R):
    return reflexive(R) and symmetric(R) and transitive(R)


def quasiorder(R):
    return reflexive(R) and transitive(R)


def order(R, E):
    return quasiorder(R) and antisymmetric(R, E)


def coquasiorder(R, P):
    return strongly_irreflexive(R, P) and cotransitive(R)


def coequivalence(R, P):
    return coquasiorder(R, P) and symmetric(R)


def coorder(R, P):
    return coquasiorder(R, P) and coantisymmetric(R, P)


def apartness_witness(E, P):
    """First failing axiom with its witness, checking equality first."""
    for name, w in (("eq-reflexive", w_reflexive(E)), ("eq-symmetric", w_symmetric(E)),
                    ("eq-transitive", w_transitive(E))):
        if w is not None:
            return name, w
    n = len(E)
    w = first((x,) for x in range(n) if P[x][x])
    if w is not None:
        return "Ap1", w
    w = w_symmetric(P)
    if w is not None:
        return "Ap2", w
    w = first((x, y, z) for x in range(n) for y in range(n) for z in range(n)
              if P[x][z] and not P[x][y] and not P[y][z])
    if w is not None:
        return "Ap3", w
    w = first((x, y, z) for x in range(n) for y in range(n) for z in range(n)
              if P[x][y] and E[y][z] and not P[x][z])
    if w is not None:
        return "Ap5", w
    return None


def is_apartness(E, P) -> bool:
    return apartness_witness(E, P) is None


def tight(E, P) -> bool:
    return all(E[x][y] or P[x][y] for x in pts(E) for y in pts(E))


# -- relation calculus ---------------------------------------------------------------

def compose(R, S):
    n = len(R)
    return mat(n, lambda x, z: any(R[x][y] and S[y][z] for y in range(n)))


def cocompose(R, S):
    n = len(R)
    return mat(n, lambda x, z: all(R[x][y] or S[y][z] for y in range(n)))


def apart_complement(R, P):
    n = len(R)
    return mat(n, lambda x, y: all(P[x][a] or P[y][b] for a in range(n) for b in range(n) if R[a][b]))


def associated(R, S):
    """R(x,y) and S(y,z) imply R(x,z)."""
    n = len(R)
    return all(R[x][z] for x in range(n) for y in range(n) for z in range(n) if R[x][y] and S[y][z])


# -- subsets -------------------------------------------------------------------------

def subset_complements(P, Y):
    n = len(P)
    logical = tuple(not Y[x] for x in range(n))
    apart = tuple(all(P[x][y] for y in range(n) if Y[y]) for x in range(n))
    return logical, apart


def detachability(P, Y):
    n = len(P)
    logical, apart = subset_complements(P, Y)
    d = all(Y[x] or logical[x] for x in range(n))
    sd = all(Y[x] or apart[x] for x in range(n))
    qd = all(Y[x] or P[x][y] for x in range(n) for y in range(n) if Y[y])
    return d, sd, qd


# -- partitions and induced relations ------------------------------------------------

def classes(eps) -> list[tuple[int, ...]]:
    n = len(eps)
    seen, out = set(), []
    for x in range(n):
        if x not in seen:
            c = tuple(y for y in range(n) if eps[x][y])
            seen.update(c)
            out.append(c)
    return out


def class_index(cls, n) -> list[int]:
    idx = [0] * n
    for k, c in enumerate(cls):
        for x in c:
            idx[x] = k
    return idx


def lift_exists(cls, R):
    k = len(cls)
    return mat(k, lambda i, j: any(R[a][b] for a in cls[i] for b in cls[j]))


def lift_forall(cls, R):
    k = len(cls)
    return mat(k, lambda i, j: all(R[a][b] for a in cls[i] for b in cls[j]))


def pullback(f, R):
    n = len(f)
    return mat(n, lambda x, y: R[f[x]][f[y]])


# -- maps ----------------------------------------------------------------------------

def map_flags(f, E1, P1, E2, P2):
    n, m = len(E1), len(E2)
    ext = all(E2[f[x]][f[y]] for x in range(n) for y in range(n) if E1[x][y])
    se = all(P1[x][y] for x in range(n) for y in range(n) if P2[f[x]][f[y]])
    inj = all(E1[x][y] for x in range(n) for y in range(n) if E2[f[x]][f[y]])
    ainj = all(P2[f[x]][f[y]] for x in range(n) for y in range(n) if P1[x][y])
    surj = all(any(E2[f[x]][t] for x in range(n)) for t in range(m))
    return {"extensional": ext, "se": se, "injective": inj, "a_injective": ainj, "surjective": surj}


# -- semigroups ----------------------------------------------------------------------

def semigroup_witness(E, P, M):
    n = len(E)
    for x, x2, y, y2 in product(range(n), repeat=4):
        if E[x][x2] and E[y][y2] and not E[M[x][y]][M[x2][y2]]:
            return "well-defined", (x, x2, y, y2)
    for a, b, c in product(range(n), repeat=3):
        if not E[M[M[a][b]][c]][M[a][M[b][c]]]:
            return "A", (a, b, c)
    for a, x, b, y in product(range(n), repeat=4):
        if P[M[a][x]][M[b][y]] and not P[a][b] and not P[x][y]:
            return "S", (a, x, b, y)
    return None


def compatible(R, M):
    n = len(R)
    return all(R[M[x][s]][M[y][t]] for x, y, s, t in product(range(n), repeat=4) if R[x][y] and R[s][t])


def left_compatible(R, M):
    n = len(R)
    return all(R[M[z][x]][M[z][y]] for x, y, z in product(range(n), repeat=3) if R[x][y])


def right_compatible(R, M):
    n = len(R)
    return all(R[M[x][z]][M[y][z]] for x, y, z in product(range(n), repeat=3) if R[x][y])


def cocompatible(R, M):
    n = len(R)
    return all(R[x][y] or R[z][t] for x, y, z, t in product(range(n), repeat=4) if R[M[x][z]][M[y][t]])


def left_cocompatible(R, M):
    n = len(R)
    return all(R[x][y] for x, y, z in product(range(n), repeat=3) if R[M[z][x]][M[z][y]])


def right_cocompatible(R, M):
    n = len(R)
    return all(R[x][y] for x, y, z in product(range(n), repeat=3) if R[M[x][z]][M[y][z]])


def homomorphism(f, M1, M2, E2):
    n = len(M1)
    return all(E2[f[M1[x][y]]][M2[f[x]][f[y]]] for x in range(n) for y in range(n))


def quotient_table(cls, M):
    """Representative multiplication and whether it is independent of the representatives."""
    idx = class_index(cls, len(M))
    k = len(cls)
    table = tuple(tuple(idx[M[cls[i][0]][cls[j][0]]] for j in range(k)) for i in range(k))
    ok = all(idx[M[a][b]] == table[i][j] for i in range(k) for j in range(k) for a in cls[i] for b in cls[j])
    return table, ok


def equivalences(n: int):
    """All equivalences on range(n), via set partitions in restricted-growth order."""
    def rgs(i, labels, m):
        if i == n:
            yield tuple(labels)
            return
        for b in range(m + 1):
            yield from rgs(i + 1, labels + [b], max(m, b + 1))
    for lab in rgs(1, [0], 1) if n else [()]:
        yield mat(n, lambda x, y: lab[x] == lab[y])
