"""Finite sets with apartness.

A carrier is an ordered tuple of labels. Relations over it are stored as
read-only boolean matrices indexed by carrier position, and the index order
is the canonical order for every tie-break and witness in the package.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class ApartnessError(Exception):
    """Base class for structural errors raised by this package."""


class CarrierMismatch(ApartnessError):
    pass


class NonExtensionalSubset(ApartnessError):
    pass


class NonExtensional(ApartnessError):
    """A graph that does not respect equality is not a mapping."""


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.axiom} violated at ({', '.join(map(str, self.witness))})"


class AxiomError(ApartnessError):
    """Raised when a structure fails its axioms; ``report`` lists every failure."""

    def __init__(self, report: Sequence[AxiomViolation]):
        self.report = list(report)
        super().__init__("; ".join(str(v) for v in self.report))


def least(mask: np.ndarray) -> tuple[int, ...] | None:
    """Lexicographically least index tuple where ``mask`` is true."""
    mask = np.asarray(mask)
    if not mask.any():
        return None
    # argmax on a boolean array finds the first true entry in row-major order
    return tuple(int(i) for i in np.unravel_index(int(np.argmax(mask)), mask.shape))


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=bool)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Carrier:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ApartnessError("a carrier must be inhabited")
        if len(set(labels)) != len(labels):
            raise ApartnessError(f"duplicate labels in {labels}")
        object.__setattr__(self, "_pos", {x: i for i, x in enumerate(labels)})

    @classmethod
    def of_size(cls, n: int) -> "Carrier":
        return cls(tuple(str(i) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._pos[str(label)]
        except KeyError:
            raise ApartnessError(f"unknown label {label!r}") from None

    def name(self, i: int) -> str:
        return self.labels[i]

    def names(self, idx: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in idx)


@dataclass(frozen=True, eq=False)
class Rel:
    """A binary relation on a carrier."""

    carrier: Carrier
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=bool)
        n = self.carrier.n
        if m.shape != (n, n):
            raise ApartnessError(f"relation shape {m.shape} does not match carrier size {n}")
        if m.flags.writeable:
            m = _frozen(m)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_pairs(cls, carrier: Carrier, pairs: Iterable[tuple]) -> "Rel":
        m = np.zeros((carrier.n, carrier.n), dtype=bool)
        for x, y in pairs:
            m[carrier.index(x), carrier.index(y)] = True
        return cls(carrier, m)

    @classmethod
    def from_index_pairs(cls, carrier: Carrier, pairs: Iterable[tuple[int, int]]) -> "Rel":
        m = np.zeros((carrier.n, carrier.n), dtype=bool)
        for i, j in pairs:
            m[i, j] = True
        return cls(carrier, m)

    @classmethod
    def empty(cls, carrier: Carrier) -> "Rel":
        return cls(carrier, np.zeros((carrier.n, carrier.n), dtype=bool))

    @classmethod
    def full(cls, carrier: Carrier) -> "Rel":
        return cls(carrier, np.ones((carrier.n, carrier.n), dtype=bool))

    @classmethod
    def diagonal(cls, carrier: Carrier) -> "Rel":
        return cls(carrier, np.eye(carrier.n, dtype=bool))

    @property
    def n(self) -> int:
        return self.carrier.n

    def _same(self, other: "Rel") -> None:
        if self.carrier != other.carrier:
            raise CarrierMismatch(f"{self.carrier.labels} vs {other.carrier.labels}")

    def __contains__(self, pair) -> bool:
        i, j = pair
        if isinstance(i, str):
            i, j = self.carrier.index(i), self.carrier.index(j)
        return bool(self.matrix[i, j])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Rel):
            return NotImplemented
        return self.carrier == other.carrier and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash((self.carrier, np.packbits(self.matrix).tobytes()))

    def __le__(self, other: "Rel") -> bool:
        self._same(other)
        return not np.any(self.matrix & ~other.matrix)

    def __lt__(self, other: "Rel") -> bool:
        return self <= other and self != other

    def __or__(self, other: "Rel") -> "Rel":
        self._same(other)
        return Rel(self.carrier, self.matrix | other.matrix)

    def __and__(self, other: "Rel") -> "Rel":
        self._same(other)
        return Rel(self.carrier, self.matrix & other.matrix)

    def __sub__(self, other: "Rel") -> "Rel":
        self._same(other)
        return Rel(self.carrier, self.matrix & ~other.matrix)

    def __invert__(self) -> "Rel":
        return Rel(self.carrier, ~self.matrix)

    def __len__(self) -> int:
        return int(self.matrix.sum())

    def __iter__(self):
        return iter(self.index_pairs())

    @property
    def inverse(self) -> "Rel":
        return Rel(self.carrier, self.matrix.T)

    def is_empty(self) -> bool:
        return not self.matrix.any()

    def index_pairs(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in np.argwhere(self.matrix)]

    def pairs(self) -> list[tuple[str, str]]:
        return [(self.carrier.labels[i], self.carrier.labels[j]) for i, j in self.index_pairs()]

    def __repr__(self) -> str:
        return f"Rel({self.pairs()})"


def check_apartness_axioms(carrier: Carrier, eq: Rel, ap: Rel) -> list[AxiomViolation]:
    """Every violated axiom with its least witness; equality axioms come first.

    Witness conventions: Ap3 ``(x, y, z)`` means x#z but neither x#y nor y#z;
    Ap5 ``(x, y, z)`` means x#y, y=z and not x#z. A pair witness under Ap5 is
    a pair that is both equal and apart.
    """
    if eq.carrier != carrier or ap.carrier != carrier:
        raise CarrierMismatch("eq and ap must live on the given carrier")
    E, A = eq.matrix, ap.matrix
    out = []

    def note(name, mask):
        w = least(mask)
        if w is not None:
            out.append(AxiomViolation(name, carrier.names(w)))

    note("Eq-reflexive", ~np.diag(E))
    note("Eq-symmetric", E & ~E.T)
    note("Eq-transitive", E[:, :, None] & E[None, :, :] & ~E[:, None, :])
    note("Ap1", np.diag(A))
    note("Ap2", A & ~A.T)
    # [x, y, z]: x#z and not x#y and not y#z
    note("Ap3", A[:, None, :] & ~A[:, :, None] & ~A[None, :, :])
    ap5 = A[:, :, None] & E[None, :, :] & ~A[:, None, :]
    if ap5.any():
        note("Ap5", ap5)
    else:
        note("Ap5", E & A)
    return out


@dataclass(frozen=True, eq=False)
class ApartnessSet:
    """A carrier with an equality (an equivalence) and an apartness.

    Construction validates the axioms and raises :class:`AxiomError` on failure.
    ``tight`` is computed, never supplied.
    """

    carrier: Carrier
    eq: Rel
    ap: Rel
    tight: bool = field(init=False)

    def __post_init__(self):
        report = check_apartness_axioms(self.carrier, self.eq, self.ap)
        if report:
            raise AxiomError(report)
        object.__setattr__(self, "tight", bool(np.all(self.ap.matrix | self.eq.matrix)))

    @classmethod
    def discrete(cls, labels: Sequence[str], ap_pairs: Iterable[tuple] = ()) -> "ApartnessSet":
        """Diagonal equality and the given apartness pairs (symmetrised)."""
        c = Carrier(tuple(labels))
        ap = Rel.from_pairs(c, ap_pairs)
        ap = ap | ap.inverse
        return cls(c, Rel.diagonal(c), ap)

    @classmethod
    def from_partition(cls, carrier: Carrier, blocks: Sequence[Sequence[int]]) -> "ApartnessSet":
        """Diagonal equality; elements of different blocks are apart."""
        same = np.zeros((carrier.n, carrier.n), dtype=bool)
        for b in blocks:
            same[np.ix_(b, b)] = True
        return cls(carrier, Rel.diagonal(carrier), Rel(carrier, ~same))

    @property
    def n(self) -> int:
        return self.carrier.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.carrier.labels

    def rel(self, pairs: Iterable[tuple]) -> Rel:
        return Rel.from_pairs(self.carrier, pairs)

    def codiagonal(self) -> Rel:
        return ~self.eq

    def __eq__(self, other):
        if not isinstance(other, ApartnessSet):
            return NotImplemented
        return self.carrier == other.carrier and self.eq == other.eq and self.ap == other.ap

    def __hash__(self):
        return hash((self.carrier, self.eq, self.ap))

    def __repr__(self):
        return f"ApartnessSet({list(self.labels)}, ap={self.ap.pairs()})"


def validate_apartness_set(carrier: Carrier, eq: Rel, ap: Rel) -> ApartnessSet:
    return ApartnessSet(carrier, eq, ap)


def is_tight(A: ApartnessSet) -> bool:
    return A.tight


@dataclass(frozen=True, eq=False)
class Subset:
    parent: ApartnessSet
    members: tuple[bool, ...]

    def __post_init__(self):
        m = tuple(bool(b) for b in self.members)
        if len(m) != self.parent.n:
            raise ApartnessError("membership vector has the wrong length")
        object.__setattr__(self, "members", m)
        v = np.array(m)
        w = least(v[:, None] & self.parent.eq.matrix & ~v[None, :])
        if w is not None:
            raise NonExtensionalSubset(f"{self.parent.carrier.names(w)} breaks extensionality")

    @classmethod
    def of(cls, parent: ApartnessSet, labels: Iterable[str]) -> "Subset":
        chosen = {parent.carrier.index(x) for x in labels}
        return cls(parent, tuple(i in chosen for i in range(parent.n)))

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.members, dtype=bool)

    def labels(self) -> set[str]:
        return {self.parent.labels[i] for i, b in enumerate(self.members) if b}

    def __eq__(self, other):
        if not isinstance(other, Subset):
            return NotImplemented
        return self.parent == other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __le__(self, other: "Subset") -> bool:
        return all(b <= c for b, c in zip(self.members, other.members))

    def __repr__(self):
        return f"Subset({sorted(self.labels())})"


def complements(A: ApartnessSet, Y: Subset) -> tuple[Subset, Subset]:
    """Logical complement and apartness complement of ``Y``."""
    y = Y.vector
    logical = ~y
    apart = np.all(A.ap.matrix | ~y[None, :], axis=1)
    return Subset(A, tuple(logical)), Subset(A, tuple(apart))


@dataclass(frozen=True)
class Detachability:
    d: bool
    sd: bool
    qd: bool


def classify_detachability(A: ApartnessSet, Y: Subset) -> Detachability:
    """Detachable, strongly detachable and quasi-detachable flags.

    ``d`` is always true on a finite carrier with decidable membership; it is
    still evaluated from its definition.
    """
    logical, apart = complements(A, Y)
    y = Y.vector
    d = all(a or b for a, b in zip(Y.members, logical.members))
    sd = all(a or b for a, b in zip(Y.members, apart.members))
    qd = bool(np.all(y[:, None] | A.ap.matrix | ~y[None, :]))
    return Detachability(d, sd, qd)


def product_apartness(A: ApartnessSet, B: ApartnessSet) -> ApartnessSet:
    labels = tuple(f"({x},{y})" for x in A.labels for y in B.labels)
    c = Carrier(labels)
    eq = np.kron(A.eq.matrix.astype(np.uint8), B.eq.matrix.astype(np.uint8)).astype(bool)
    na, nb = ~A.ap.matrix, ~B.ap.matrix
    not_ap = np.kron(na.astype(np.uint8), nb.astype(np.uint8)).astype(bool)
    return ApartnessSet(c, Rel(c, eq), Rel(c, ~not_ap))


@dataclass(frozen=True, eq=False)
class SetoidMap:
    """A mapping between apartness sets, given as a graph on carrier indices.

    The flags are computed at construction; a graph that is not extensional
    is rejected with :class:`NonExtensional`.
    """

    domain: ApartnessSet
    codomain: ApartnessSet
    graph: tuple[int, ...]
    extensional: bool = field(init=False)
    se: bool = field(init=False)
    injective: bool = field(init=False)
    a_injective: bool = field(init=False)
    surjective: bool = field(init=False)

    def __post_init__(self):
        g = tuple(int(i) for i in self.graph)
        if len(g) != self.domain.n or any(not 0 <= i < self.codomain.n for i in g):
            raise ApartnessError(f"graph {g} is not a total map into the codomain")
        object.__setattr__(self, "graph", g)
        F = np.array(g, dtype=np.intp)
        eqd, apd = self.domain.eq.matrix, self.domain.ap.matrix
        img_eq = self.codomain.eq.matrix[F[:, None], F]
        img_ap = self.codomain.ap.matrix[F[:, None], F]
        w = least(eqd & ~img_eq)
        if w is not None:
            raise NonExtensional(f"{self.domain.carrier.names(w)} equal but images differ")
        object.__setattr__(self, "extensional", True)
        object.__setattr__(self, "se", not np.any(img_ap & ~apd))
        object.__setattr__(self, "injective", not np.any(img_eq & ~eqd))
        object.__setattr__(self, "a_injective", not np.any(apd & ~img_ap))
        hit = self.codomain.eq.matrix[F, :].any(axis=0)
        object.__setattr__(self, "surjective", bool(hit.all()))

    @classmethod
    def from_labels(cls, domain: ApartnessSet, codomain: ApartnessSet, mapping: dict) -> "SetoidMap":
        g = [codomain.carrier.index(mapping[x]) for x in domain.labels]
        return cls(domain, codomain, tuple(g))

    @classmethod
    def identity(cls, A: ApartnessSet) -> "SetoidMap":
        return cls(A, A, tuple(range(A.n)))

    def __call__(self, i: int) -> int:
        return self.graph[i]

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    @property
    def apartness_bijective(self) -> bool:
        return self.a_injective and self.se and self.bijective

    def equals(self, other: "SetoidMap") -> bool:
        """Pointwise equality modulo the codomain equality."""
        E = self.codomain.eq.matrix
        return all(E[a, b] for a, b in zip(self.graph, other.graph))

    def as_labels(self) -> dict[str, str]:
        return {self.domain.labels[i]: self.codomain.labels[j] for i, j in enumerate(self.graph)}

    def __repr__(self):
        return f"SetoidMap({self.as_labels()})"
