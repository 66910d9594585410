"""Semigroups with apartness.

A semigroup is a set with apartness and a Cayley table (indices into the
carrier) that respects equality, is associative modulo equality and is
strongly extensional. Homomorphism equations are judged modulo the codomain
equality throughout.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import relcalc as rc
from .carrier import (ApartnessError, ApartnessSet, AxiomError, AxiomViolation, Carrier, Rel,
                      SetoidMap, least)
from .certificate import Certificate
from .maps import (CoOrderFactorization, IsoWitness, KappaMeetsKernel, NotSe, co_order_factorization,
                   first_apartness_iso, first_iso_classical, kernel_cokernel, ordered_iso_classical,
                   pullback, second_apartness_iso)
from .quotient import (QuotientWitness, NotACoequivalence, NotAnEquivalence, birkhoff_classical,
                       birkhoff_constructive, defines_apartness_check, quotient_by_coequivalence,
                       quotient_by_equivalence)

MAX_TSE = 6
MAX_CAYLEY = 5
DENSE_LIMIT = 4096
CHECK_BUDGET = 1 << 20


class CarrierTooLarge(ApartnessError):
    pass


class NotCongruence(ApartnessError):
    pass


class NotCocongruence(ApartnessError):
    pass


class DisjointnessFailure(ApartnessError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"congruence and co-congruence share the pair {witness}")


class NotHomomorphism(ApartnessError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"f(xy) differs from f(x)f(y) at {witness}")


class NotCompatible(ApartnessError):
    pass


class NotCoCompatible(ApartnessError):
    pass


def check_semigroup_axioms(base: ApartnessSet, mul) -> list[AxiomViolation]:
    """Well-definedness, associativity and strong extensionality, in that order.

    Witnesses: ``(x, x', y, y')`` with x=x', y=y' but xy != x'y';
    ``(a, b, c)`` with (ab)c != a(bc); ``(a, x, b, y)`` with ax # by but
    neither a#b nor x#y.
    """
    M = np.asarray(mul, dtype=np.intp)
    n = base.n
    if M.shape != (n, n) or M.min() < 0 or M.max() >= n:
        raise ApartnessError(f"table of shape {M.shape} is not a total operation on {n} elements")
    E, P = base.eq.matrix, base.ap.matrix
    out = []

    def note(name, mask):
        w = least(mask)
        if w is not None:
            out.append(AxiomViolation(name, base.carrier.names(w)))

    wd = E[:, :, None, None] & E[None, None, :, :] & ~E[M[:, None, :, None], M[None, :, None, :]]
    note("well-defined", wd)
    left = M[M]                                   # [a,b,c] = (ab)c
    right = M[np.arange(n)[:, None, None], M[None, :, :]]   # [a,b,c] = a(bc)
    note("A", ~E[left, right])
    s = P[M[:, :, None, None], M[None, None, :, :]] & ~P[:, None, :, None] & ~P[None, :, None, :]
    note("S", s)
    return out


@dataclass(frozen=True, eq=False)
class ApartnessSemigroup:
    base: ApartnessSet
    mul: np.ndarray

    def __post_init__(self):
        M = np.array(self.mul, dtype=np.intp)
        report = check_semigroup_axioms(self.base, M)
        if report:
            raise AxiomError(report)
        M.setflags(write=False)
        object.__setattr__(self, "mul", M)

    @classmethod
    def from_labels(cls, base: ApartnessSet, rows: Sequence[Sequence[str]]) -> "ApartnessSemigroup":
        c = base.carrier
        return cls(base, [[c.index(x) for x in row] for row in rows])

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def labels(self):
        return self.base.labels

    def __call__(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def table_labels(self) -> list[list[str]]:
        return [[self.labels[v] for v in row] for row in self.mul]

    def __eq__(self, other):
        if not isinstance(other, ApartnessSemigroup):
            return NotImplemented
        return self.base == other.base and np.array_equal(self.mul, other.mul)

    def __hash__(self):
        return hash((self.base, self.mul.tobytes()))

    def __repr__(self):
        return f"ApartnessSemigroup({list(self.labels)}, {self.table_labels()})"


def validate_semigroup(base: ApartnessSet, mul) -> ApartnessSemigroup:
    return ApartnessSemigroup(base, mul)


@dataclass(frozen=True)
class Compatibility:
    left: bool
    right: bool
    full: bool
    co_left: bool
    co_right: bool
    co_full: bool
    witnesses: dict = field(default_factory=dict, compare=False)


def _compat_masks(Sg: ApartnessSemigroup, rho: Rel) -> dict[str, np.ndarray]:
    R, M = rho.matrix, Sg.mul
    zx = M.T[:, None, :]          # [x, ., z] -> z*x
    zy = M.T[None, :, :]          # [., y, z] -> z*y
    xz = M[:, None, :]            # [x, ., z] -> x*z
    yz = M[None, :, :]            # [., y, z] -> y*z
    prod4 = _prod4(Sg, R)         # [x,y,s,t] -> R(xs, yt)
    return {
        # [x, y, z]
        "left": R[:, :, None] & ~R[zx, zy],
        "right": R[:, :, None] & ~R[xz, yz],
        # [x, y, s, t]
        "full": R[:, :, None, None] & R[None, None, :, :] & ~prod4,
        "co_left": R[zx, zy] & ~R[:, :, None],
        "co_right": R[xz, yz] & ~R[:, :, None],
        # [x, y, z, t]: (xz, yt) in R, neither (x, y) nor (z, t)
        "co_full": prod4 & ~R[:, :, None, None] & ~R[None, None, :, :],
    }


def check_compatibility(Sg: ApartnessSemigroup, rho: Rel) -> Compatibility:
    flags, wit = {}, {}
    for name, mask in _compat_masks(Sg, rho).items():
        w = least(mask)
        flags[name] = w is None
        if w is not None:
            wit[name] = Sg.base.carrier.names(w)
    return Compatibility(**flags, witnesses=wit)


def _prod4(Sg, R):
    M = Sg.mul
    return R[M[:, None, :, None], M[None, :, None, :]]


def is_congruence(Sg, eps) -> bool:
    if not rc.is_equivalence(Sg.base, eps):
        return False
    R = eps.matrix
    return not (R[:, :, None, None] & R[None, None, :, :] & ~_prod4(Sg, R)).any()


def is_cocongruence(Sg, kappa) -> bool:
    if not rc.is_coequivalence(Sg.base, kappa):
        return False
    R = kappa.matrix
    return not (_prod4(Sg, R) & ~R[:, :, None, None] & ~R[None, None, :, :]).any()


def is_homomorphism(S: ApartnessSemigroup, T: ApartnessSemigroup, graph) -> tuple | None:
    """None when ``graph`` is a homomorphism, else the least failing pair (x, y)."""
    F = np.asarray(graph, dtype=np.intp)
    bad = ~T.base.eq.matrix[F[S.mul], T.mul[np.ix_(F, F)]]
    return least(bad)


@dataclass(frozen=True, eq=False)
class SemigroupQuotient:
    semigroup: ApartnessSemigroup
    witness: QuotientWitness
    certificate: Certificate


def _quotient_table(Sg: ApartnessSemigroup, Q: QuotientWitness, cert: Certificate) -> ApartnessSemigroup:
    cls = np.array(Q.class_of, dtype=np.intp)
    reps = np.array([c[0] for c in Q.classes], dtype=np.intp)
    table = cls[Sg.mul[np.ix_(reps, reps)]]
    # every choice of representatives gives the same class
    cert.add("multiplication-well-defined", np.array_equal(table[np.ix_(cls, cls)], cls[Sg.mul]))
    cert.require()
    try:
        q = ApartnessSemigroup(Q.quotient, table)
    except AxiomError as e:
        cert.add("quotient-semigroup-valid", False, tuple(str(v) for v in e.report))
        cert.require()
    cert.add("quotient-semigroup-valid", True)
    cert.add("projection-homomorphism", is_homomorphism(Sg, q, Q.class_of) is None)
    cert.add("projection-surjective", Q.projection.surjective)
    return q


def quotient_semigroup(Sg: ApartnessSemigroup, congruence: Rel | None = None,
                       cocongruence: Rel | None = None) -> SemigroupQuotient:
    """Quotient by a congruence, by the complement of a co-congruence, or by a
    congruence carrying the apartness of a disjoint co-congruence."""
    A = Sg.base
    if congruence is None and cocongruence is None:
        raise ApartnessError("give a congruence, a co-congruence or both")
    if congruence is not None and not is_congruence(Sg, congruence):
        c = check_compatibility(Sg, congruence)
        raise NotCongruence(f"not a congruence: {c.witnesses or rc.check_properties(A, congruence).witnesses}")
    if cocongruence is not None and not is_cocongruence(Sg, cocongruence):
        c = check_compatibility(Sg, cocongruence)
        raise NotCocongruence(f"not a co-congruence: {c.witnesses or rc.check_properties(A, cocongruence).witnesses}")
    cert = Certificate()
    if congruence is None:
        Q = quotient_by_coequivalence(A, cocongruence)
    elif cocongruence is None:
        Q = quotient_by_equivalence(A, congruence)
    else:
        w = least(congruence.matrix & cocongruence.matrix)
        if w is not None:
            raise DisjointnessFailure(A.carrier.names(w))
        Q = defines_apartness_check(A, congruence, cocongruence).quotient
    cert.extend(Q.certificate)
    q = _quotient_table(Sg, Q, cert)
    if cocongruence is not None:
        cert.add("projection-se", Q.projection.se)
    return SemigroupQuotient(q, Q, cert.require())


@dataclass(frozen=True, eq=False)
class SemigroupIso:
    iso: IsoWitness
    quotient: SemigroupQuotient
    certificate: Certificate
    flags: dict = field(default_factory=dict)


def semigroup_iso_theorems(S: ApartnessSemigroup, T: ApartnessSemigroup, graph,
                           kappa: Rel | None = None, classical: bool = False) -> SemigroupIso:
    """First isomorphism theorem for a homomorphism, with or without apartness.

    ``classical`` ignores apartness. With ``kappa`` (a co-congruence missing
    the kernel) the quotient by the kernel carries the apartness ``kappa``.
    """
    w = is_homomorphism(S, T, graph)
    if w is not None:
        raise NotHomomorphism(S.base.carrier.names(w))
    f = SetoidMap(S.base, T.base, graph)
    ker, coker = kernel_cokernel(f)
    cert = Certificate()
    cert.add("ker-congruence", is_congruence(S, ker))
    flags = {}
    if classical:
        iso = first_iso_classical(f)
        sq = quotient_semigroup(S, congruence=ker)
    elif kappa is None:
        if not f.se:
            raise NotSe("the homomorphism is not strongly extensional")
        cert.add("coker-co-congruence", is_cocongruence(S, coker))
        iso = first_apartness_iso(f)
        sq = quotient_semigroup(S, congruence=ker, cocongruence=coker)
    else:
        if not is_cocongruence(S, kappa):
            raise NotCocongruence("kappa is not a co-congruence")
        w = least(kappa.matrix & ker.matrix)
        if w is not None:
            raise KappaMeetsKernel(S.base.carrier.names(w))
        iso = second_apartness_iso(f, kappa)
        sq = quotient_semigroup(S, congruence=ker, cocongruence=kappa)
        flags = dict(iso.flags)
    cert.extend(iso.certificate, "set:")
    cert.extend(sq.certificate, "quotient:")
    phi = SetoidMap(sq.semigroup.base, T.base, iso.phi.graph)
    cert.add("phi-homomorphism", is_homomorphism(sq.semigroup, T, phi.graph) is None)
    cert.add("phi-injective", phi.injective)
    if not classical and kappa is None:
        cert.add("phi-apartness-embedding", phi.injective and phi.a_injective and phi.se)
        if f.surjective:
            cert.add("phi-apartness-isomorphism", phi.apartness_bijective)
    elif classical and f.surjective:
        cert.add("phi-isomorphism", phi.bijective)
    return SemigroupIso(iso, sq, cert.require(), flags)


# -- the semigroup of strongly extensional self-maps --------------------------------


def all_self_maps(n: int) -> np.ndarray:
    return np.array(list(itertools.product(range(n), repeat=n)), dtype=np.intp).reshape(-1, n)


def se_self_maps(X: ApartnessSet) -> np.ndarray:
    maps = all_self_maps(X.n)
    E, P = X.eq.matrix, X.ap.matrix
    ext = ~np.any(E[None] & ~E[maps[:, :, None], maps[:, None, :]], axis=(1, 2))
    se = ~np.any(P[maps[:, :, None], maps[:, None, :]] & ~P[None], axis=(1, 2))
    return maps[ext & se]


@dataclass(frozen=True, eq=False)
class SeTransformationSemigroup:
    """Extensional strongly extensional self-maps of ``base`` under composition.

    ``product(i, j)`` is the map x -> f_i(f_j(x)). Equality is pointwise
    modulo the base equality; f # g iff f(x) # g(x) for some x. Dense
    matrices are only materialised for at most ``DENSE_LIMIT`` elements.
    """

    base: ApartnessSet
    elements: np.ndarray
    certificate: Certificate = field(default_factory=Certificate)

    def __post_init__(self):
        el = np.array(self.elements, dtype=np.intp).reshape(-1, self.base.n)
        el.setflags(write=False)
        object.__setattr__(self, "elements", el)
        codes = self.encode(el)
        if np.any(np.diff(codes) <= 0):
            raise ApartnessError("elements must be distinct and in enumeration order")
        object.__setattr__(self, "_codes", codes)

    def encode(self, maps) -> np.ndarray:
        """Base-n code of each map; enumeration order equals code order."""
        n = self.base.n
        weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        return np.asarray(maps, dtype=np.int64) @ weights

    @property
    def size(self) -> int:
        return len(self.elements)

    def locate(self, maps) -> np.ndarray:
        """Indices of the given maps, -1 where a map is not an element."""
        codes = self.encode(maps)
        pos = np.minimum(np.searchsorted(self._codes, codes), self.size - 1)
        return np.where(self._codes[pos] == codes, pos, -1)

    def index(self, f: Sequence[int]) -> int:
        i = int(self.locate(np.asarray(f)[None, :])[0])
        if i < 0:
            raise KeyError(tuple(int(v) for v in f))
        return i

    def __contains__(self, f) -> bool:
        return int(self.locate(np.asarray(f)[None, :])[0]) >= 0

    def eq(self, i: int, j: int) -> bool:
        E = self.base.eq.matrix
        return bool(E[self.elements[i], self.elements[j]].all())

    def ap(self, i: int, j: int) -> bool:
        P = self.base.ap.matrix
        return bool(P[self.elements[i], self.elements[j]].any())

    def product(self, i: int, j: int) -> int:
        return self.index(self.elements[i][self.elements[j]])

    def label(self, i: int) -> str:
        return "".join(self.base.labels[v] if len(self.base.labels[v]) == 1 else f"<{self.base.labels[v]}>"
                       for v in self.elements[i]) if self.base.n <= 10 else str(i)

    def _dense(self, mat: np.ndarray, reduce) -> np.ndarray:
        if self.size > DENSE_LIMIT:
            raise CarrierTooLarge(f"{self.size} elements exceed the dense limit {DENSE_LIMIT}")
        el = self.elements
        return reduce(mat[el[:, None, :], el[None, :, :]], axis=2)

    def eq_matrix(self) -> np.ndarray:
        return self._dense(self.base.eq.matrix, np.all)

    def ap_matrix(self) -> np.ndarray:
        return self._dense(self.base.ap.matrix, np.any)

    def as_apartness_set(self) -> ApartnessSet:
        c = Carrier(tuple(f"f{i}" for i in range(self.size)))
        return ApartnessSet(c, Rel(c, self.eq_matrix()), Rel(c, self.ap_matrix()))

    def table(self) -> np.ndarray:
        if self.size > DENSE_LIMIT:
            raise CarrierTooLarge(f"{self.size} elements exceed the dense limit {DENSE_LIMIT}")
        el = self.elements
        comp = el[:, el]        # [i, j, x] = f_i(f_j(x))
        return self.locate(comp.reshape(-1, self.base.n)).reshape(self.size, self.size)

    def as_semigroup(self) -> ApartnessSemigroup:
        return ApartnessSemigroup(self.as_apartness_set(), self.table())

    def is_tight(self) -> bool:
        if self.size <= DENSE_LIMIT:
            return bool(np.all(self.eq_matrix() | self.ap_matrix()))
        # constant maps are always se, so a non-tight pair of points gives a
        # non-tight pair of maps; a tight base makes the maps tight
        return self.base.tight


def _verify_tse(T: SeTransformationSemigroup, seed: int, budget: int) -> Certificate:
    """Closure under composition and strong extensionality of composition.

    Exhaustive when the pair (resp. quadruple) space fits in ``budget``,
    otherwise a seeded sample of ``budget`` draws; the check name records which.
    """
    cert = Certificate()
    el, P = T.elements, T.base.ap.matrix
    k = T.size
    rng = np.random.default_rng(seed)
    if k * k <= budget:
        i, j = np.divmod(np.arange(k * k), k)
        mode = "exhaustive"
    else:
        i, j = rng.integers(0, k, size=(2, budget))
        mode = f"sampled({budget}, seed={seed})"
    comp = np.take_along_axis(el[i], el[j], axis=1)
    cert.add(f"closure:{mode}", bool(np.all(T.locate(comp) >= 0)))
    # (S): f h # g w  implies  f # g or h # w
    if k <= 64 and k ** 4 <= budget:
        q = np.stack(np.unravel_index(np.arange(k ** 4), (k,) * 4), axis=1)
        mode = "exhaustive"
    else:
        q = rng.integers(0, k, size=(budget, 4))
        mode = f"sampled({budget}, seed={seed})"
    f, g, h, w = (el[q[:, c]] for c in range(4))
    fh = np.take_along_axis(f, h, axis=1)
    gw = np.take_along_axis(g, w, axis=1)
    lhs = np.any(P[fh, gw], axis=1)
    ok = not np.any(lhs & ~np.any(P[f, g], axis=1) & ~np.any(P[h, w], axis=1))
    cert.add(f"strongly-extensional:{mode}", ok)
    return cert


def build_se_transformation_semigroup(X: ApartnessSet, seed: int = 0,
                                      budget: int = CHECK_BUDGET) -> SeTransformationSemigroup:
    if X.n > MAX_TSE:
        raise CarrierTooLarge(f"{X.n} elements; self-map enumeration is limited to {MAX_TSE}")
    T = SeTransformationSemigroup(X, se_self_maps(X))
    T.certificate.extend(_verify_tse(T, seed, budget))
    T.certificate.require()
    return T


# -- Cayley embedding --------------------------------------------------------------


def _fresh_label(labels) -> str:
    name = "1"
    while name in labels:
        name += "'"
    return name


def adjoin_identity(Sg: ApartnessSemigroup) -> ApartnessSemigroup:
    """S with a fresh identity, equal only to itself and apart from every old element."""
    n = Sg.n
    c = Carrier(Sg.labels + (_fresh_label(Sg.labels),))
    eq = np.zeros((n + 1, n + 1), dtype=bool)
    eq[:n, :n] = Sg.base.eq.matrix
    eq[n, n] = True
    ap = np.ones((n + 1, n + 1), dtype=bool)
    ap[:n, :n] = Sg.base.ap.matrix
    ap[n, n] = False
    M = np.empty((n + 1, n + 1), dtype=np.intp)
    M[:n, :n] = Sg.mul
    M[n, :] = np.arange(n + 1)
    M[:, n] = np.arange(n + 1)
    return ApartnessSemigroup(ApartnessSet(c, Rel(c, eq), Rel(c, ap)), M)


@dataclass(frozen=True, eq=False)
class CayleyWitness:
    source: ApartnessSemigroup
    extended: ApartnessSemigroup
    target: SeTransformationSemigroup
    graph: tuple[int, ...]
    image: ApartnessSemigroup
    embedding: SetoidMap
    certificate: Certificate


def cayley_embedding(Sg: ApartnessSemigroup, target: SeTransformationSemigroup | None = None) -> CayleyWitness:
    """Left translations of S with an adjoined identity, located in the se-map semigroup."""
    if Sg.n > MAX_CAYLEY:
        raise CarrierTooLarge(f"{Sg.n} elements; the Cayley target is limited to {MAX_CAYLEY + 1} points")
    S1 = adjoin_identity(Sg)
    T = target if target is not None else build_se_transformation_semigroup(S1.base)
    m = S1.n
    E1, P1 = S1.base.eq.matrix, S1.base.ap.matrix
    cert = Certificate()
    graph = []
    for a in range(m):
        fa = S1.mul[a]
        se = not np.any(P1[fa[:, None], fa[None, :]] & ~P1)
        cert.add(f"translation-se:{S1.labels[a]}", se and tuple(fa) in T)
        graph.append(T.index(fa) if tuple(fa) in T else -1)
    cert.require()
    hom = all(T.eq(graph[S1(a, b)], T.product(graph[a], graph[b])) for a in range(m) for b in range(m))
    cert.add("homomorphism", hom)
    cert.add("se", all(P1[a, b] or not T.ap(graph[a], graph[b]) for a in range(m) for b in range(m)))
    cert.add("injective", all(E1[a, b] or not T.eq(graph[a], graph[b]) for a in range(m) for b in range(m)))
    cert.require()
    rows = [T.elements[g] for g in graph]
    ic = Carrier(tuple(f"f_{x}" for x in S1.labels))
    ieq = np.array([[T.eq(g, h) for h in graph] for g in graph])
    iap = np.array([[T.ap(g, h) for h in graph] for g in graph])
    image_set = ApartnessSet(ic, Rel(ic, ieq), Rel(ic, iap))
    lookup = {tuple(int(v) for v in r): i for i, r in enumerate(rows)}
    table = [[lookup[tuple(int(v) for v in rows[i][rows[j]])] for j in range(m)] for i in range(m)]
    image = ApartnessSemigroup(image_set, table)
    emb = SetoidMap(S1.base, image_set, tuple(range(m)))
    cert.add("image-closed", True)
    cert.add("embedding-homomorphism", is_homomorphism(S1, image, emb.graph) is None)
    return CayleyWitness(Sg, S1, T, tuple(graph), image, emb, cert.require())


@dataclass(frozen=True, eq=False)
class RegularRepresentation:
    """Left translations of S with an adjoined identity, as plain self-maps."""

    extended: ApartnessSemigroup
    translations: tuple[tuple[int, ...], ...]
    certificate: Certificate


def regular_representation(Sg: ApartnessSemigroup) -> RegularRepresentation:
    """Classical Cayley representation: a -> (x -> a x) on S with an identity adjoined.

    Apartness plays no part; only the equality is used.
    """
    S1 = adjoin_identity(Sg)
    m, E = S1.n, S1.base.eq.matrix
    rows = [S1.mul[a] for a in range(m)]
    cert = Certificate()
    # f_ab = f_a o f_b pointwise, up to equality
    hom = all(E[rows[S1(a, b)], rows[a][rows[b]]].all() for a in range(m) for b in range(m))
    cert.add("homomorphism", hom)
    inj = all(E[a, b] or not E[rows[a], rows[b]].all() for a in range(m) for b in range(m))
    cert.add("injective", inj)
    return RegularRepresentation(S1, tuple(tuple(int(v) for v in r) for r in rows), cert.require())


# -- ordered and co-ordered semigroups ---------------------------------------------


@dataclass(frozen=True, eq=False)
class OrderedSemigroupQuotient:
    semigroup: ApartnessSemigroup
    witness: QuotientWitness
    order: Rel
    certificate: Certificate


def ordered_semigroup_birkhoff(Sg: ApartnessSemigroup, rel: Rel, side: str = "constructive") -> OrderedSemigroupQuotient:
    """``side='classical'``: compatible quasiorder to ordered quotient semigroup.
    ``side='constructive'``: co-compatible co-quasiorder to co-ordered quotient semigroup."""
    A = Sg.base
    c = check_compatibility(Sg, rel)
    cert = Certificate()
    if side == "classical":
        if not c.full:
            raise NotCompatible(f"not compatible at {c.witnesses['full']}")
        Q = birkhoff_classical(A, rel)
        eps = rel & rel.inverse
        cert.add("eps-congruence", is_congruence(Sg, eps))
        sq = quotient_semigroup(Sg, congruence=eps)
        order = Q.induced_rel
        cert.add("order-compatible", check_compatibility(sq.semigroup, order).full)
    elif side == "constructive":
        if not c.co_full:
            raise NotCoCompatible(f"not co-compatible at {c.witnesses['co_full']}")
        Q = birkhoff_constructive(A, rel)
        kappa = rel | rel.inverse
        cert.add("kappa-co-congruence", is_cocongruence(Sg, kappa))
        sq = quotient_semigroup(Sg, cocongruence=kappa)
        order = Q.induced_rel
        cert.add("order-co-compatible", check_compatibility(sq.semigroup, order).co_full)
    else:
        raise ValueError(f"unknown side {side!r}")
    cert.extend(Q.certificate, "set:")
    cert.extend(sq.certificate, "quotient:")
    return OrderedSemigroupQuotient(sq.semigroup, Q, order, cert.require())


@dataclass(frozen=True, eq=False)
class OrderedSemigroupIso:
    iso: IsoWitness
    quotient: SemigroupQuotient
    certificate: Certificate


def ordered_semigroup_iso(S: ApartnessSemigroup, T: ApartnessSemigroup, graph, dom_rel: Rel,
                          cod_rel: Rel, rho: Rel | None = None) -> OrderedSemigroupIso:
    """Classical continuation: factor a homomorphism into an ordered semigroup."""
    w = is_homomorphism(S, T, graph)
    if w is not None:
        raise NotHomomorphism(S.base.carrier.names(w))
    if not check_compatibility(T, cod_rel).full:
        raise NotCompatible("codomain order is not compatible")
    if rho is not None and not check_compatibility(S, rho).full:
        raise NotCompatible("rho is not compatible")
    f = SetoidMap(S.base, T.base, graph)
    iso = ordered_iso_classical(f, dom_rel, cod_rel, rho)
    ker, _ = kernel_cokernel(f)
    sq = quotient_semigroup(S, congruence=ker)
    cert = Certificate()
    cert.extend(iso.certificate, "set:")
    cert.add("theta-compatible", check_compatibility(sq.semigroup, iso.order).full)
    cert.add("phi-homomorphism", is_homomorphism(sq.semigroup, T, iso.phi.graph) is None)
    if rho is not None:
        sr = quotient_semigroup(S, congruence=rho & rho.inverse)
        cert.add("rho:phi-homomorphism", is_homomorphism(sr.semigroup, T, iso.variant.phi.graph) is None)
    return OrderedSemigroupIso(iso, sq, cert.require())


@dataclass(frozen=True, eq=False)
class CoOrderedSemigroupFactorization:
    factorization: CoOrderFactorization
    domain_quotient: SemigroupQuotient
    codomain_quotient: SemigroupQuotient
    certificate: Certificate


def co_ordered_semigroup_factorization(S: ApartnessSemigroup, T: ApartnessSemigroup, graph,
                                       sigma: Rel, tau: Rel | None = None) -> CoOrderedSemigroupFactorization:
    """Constructive continuation for an se-homomorphism into a co-quasiordered semigroup."""
    w = is_homomorphism(S, T, graph)
    if w is not None:
        raise NotHomomorphism(S.base.carrier.names(w))
    if not check_compatibility(T, sigma).co_full:
        raise NotCoCompatible("sigma is not co-compatible")
    if tau is not None and not check_compatibility(S, tau).co_full:
        raise NotCoCompatible("tau is not co-compatible")
    f = SetoidMap(S.base, T.base, graph)
    fac = co_order_factorization(f, sigma, tau)
    cert = Certificate()
    cert.extend(fac.certificate, "set:")
    cert.add("mu-co-compatible", check_compatibility(S, fac.mu).co_full)
    cert.add("kappa-co-congruence", is_cocongruence(S, fac.kappa))
    cert.require()
    qs = quotient_semigroup(S, cocongruence=fac.kappa)
    qt = quotient_semigroup(T, cocongruence=sigma | sigma.inverse)
    cert.add("order-co-compatible", check_compatibility(qs.semigroup, fac.domain_quotient.induced_rel).co_full)
    cert.add("psi-homomorphism", is_homomorphism(qs.semigroup, qt.semigroup, fac.psi.graph) is None)
    if tau is not None:
        qtau = quotient_semigroup(S, cocongruence=tau | tau.inverse)
        cert.add("tau:phi-homomorphism", is_homomorphism(qtau.semigroup, T, fac.phi.graph) is None)
    return CoOrderedSemigroupFactorization(fac, qs, qt, cert.require())
