"""Quotients by equivalences and by co-equivalences.

Classes are listed in order of their least member and labelled ``[x]`` after
that member. The classical quotient carries the empty apartness; the
constructive ones carry the apartness induced by a co-equivalence.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import relcalc as rc
from .carrier import (ApartnessError, ApartnessSet, AxiomError, Carrier, Rel, SetoidMap,
                      least)
from .certificate import Certificate


class NotAnEquivalence(ApartnessError):
    pass


class EqNotRefined(ApartnessError):
    """The relation does not contain the equality of the set."""


class NotAQuasiorder(ApartnessError):
    pass


class NotACoequivalence(ApartnessError):
    pass


class NotACoquasiorder(ApartnessError):
    pass


@dataclass(frozen=True, eq=False)
class QuotientWitness:
    source: ApartnessSet
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    quotient: ApartnessSet
    projection: SetoidMap
    induced_ap: Rel | None
    induced_rel: Rel | None
    certificate: Certificate

    @property
    def induced_eq(self) -> Rel:
        return self.quotient.eq

    @property
    def size(self) -> int:
        return len(self.classes)

    def class_sets(self) -> list[set[str]]:
        return [set(self.source.carrier.names(c)) for c in self.classes]

    def cls(self, label: str) -> int:
        return self.class_of[self.source.carrier.index(label)]

    def membership(self) -> np.ndarray:
        M = np.zeros((len(self.classes), self.source.n), dtype=np.int32)
        for k, c in enumerate(self.classes):
            M[k, list(c)] = 1
        return M

    def lift(self, rel: Rel) -> Rel:
        """Existential image of ``rel`` on the classes."""
        M = self.membership()
        return Rel(self.quotient.carrier, (M @ rel.matrix.astype(np.int32) @ M.T) > 0)

    def lift_forall(self, rel: Rel) -> Rel:
        M = self.membership()
        return Rel(self.quotient.carrier, (M @ (~rel.matrix).astype(np.int32) @ M.T) == 0)


def partition(eps: Rel) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    n = eps.n
    class_of = [-1] * n
    classes = []
    for i in range(n):
        if class_of[i] < 0:
            members = tuple(int(j) for j in np.flatnonzero(eps.matrix[i]))
            for j in members:
                class_of[j] = len(classes)
            classes.append(members)
    return tuple(classes), tuple(class_of)


def class_carrier(A: ApartnessSet, classes) -> Carrier:
    return Carrier(tuple(f"[{A.labels[c[0]]}]" for c in classes))


def _assemble(A: ApartnessSet, eps: Rel, cert: Certificate, ap_rel: Rel | None = None):
    classes, class_of = partition(eps)
    qc = class_carrier(A, classes)
    reps = [c[0] for c in classes]
    qap = None
    if ap_rel is None:
        ap = Rel.empty(qc)
    else:
        ap = Rel(qc, ap_rel.matrix[np.ix_(reps, reps)])
        qap = ap
    try:
        Q = ApartnessSet(qc, Rel.diagonal(qc), ap)
    except AxiomError as e:
        cert.add("quotient-apartness-valid", False, tuple(str(v) for v in e.report))
        cert.require()
    if ap_rel is not None:
        cert.add("quotient-apartness-valid", True)
    pi = SetoidMap(A, Q, class_of)
    cert.add("projection-surjective", pi.surjective)
    return classes, class_of, Q, pi, qap


def _check_partition(A: ApartnessSet, eps: Rel, classes, cert: Certificate) -> None:
    seen = sorted(i for c in classes for i in c)
    cert.add("classes-partition", seen == list(range(A.n)))
    cert.add("classes-union-of-eq-classes", A.eq <= eps)


def _require_equivalence(A: ApartnessSet, eps: Rel) -> None:
    if not rc.is_equivalence(A, eps):
        p = rc.check_properties(A, eps)
        raise NotAnEquivalence(f"not an equivalence: {p.witnesses}")
    w = least(A.eq.matrix & ~eps.matrix)
    if w is not None:
        raise EqNotRefined(f"{A.carrier.names(w)} equal but not related")


def quotient_by_equivalence(A: ApartnessSet, eps: Rel) -> QuotientWitness:
    _require_equivalence(A, eps)
    cert = Certificate()
    classes, class_of, Q, pi, _ = _assemble(A, eps, cert)
    _check_partition(A, eps, classes, cert)
    return QuotientWitness(A, classes, class_of, Q, pi, None, None, cert.require())


def induced_quotient_relation(Q: QuotientWitness, rho: Rel) -> tuple[Rel, bool]:
    """Existential induced relation and whether it agrees with the universal one."""
    theta = Q.lift(rho)
    return theta, theta == Q.lift_forall(rho)


def _iso_flags(rel: Rel, image_rel: Rel, graph) -> tuple[bool, bool]:
    F = np.array(graph, dtype=np.intp)
    eta = image_rel.matrix[np.ix_(F, F)]
    return (not np.any(rel.matrix & ~eta)), (not np.any(eta & ~rel.matrix))


def birkhoff_classical(A: ApartnessSet, rho: Rel) -> QuotientWitness:
    """Quotient of a quasiorder by its symmetric part, carrying the induced order."""
    if not rc.is_quasiorder(A, rho):
        raise NotAQuasiorder(f"not a quasiorder: {rc.check_properties(A, rho).witnesses}")
    eps = rho & rho.inverse
    _require_equivalence(A, eps)
    cert = Certificate()
    classes, class_of, Q, pi, _ = _assemble(A, eps, cert)
    _check_partition(A, eps, classes, cert)
    theta, well = induced_quotient_relation(
        QuotientWitness(A, classes, class_of, Q, pi, None, None, cert), rho)
    cert.add("induced-forms-coincide", well)
    cert.add("induced-is-order", rc.is_order(Q, theta))
    iso, rev = _iso_flags(rho, theta, class_of)
    cert.add("projection-isotone", iso)
    cert.add("projection-reverse-isotone", rev)
    return QuotientWitness(A, classes, class_of, Q, pi, None, theta, cert.require())


def _coequivalence_quotient(A: ApartnessSet, kappa: Rel, cert: Certificate):
    logical, apart = rc.rel_complements(A, kappa)
    cert.add("apart-complement-is-logical", apart == logical)
    comp = logical
    cert.add("complement-is-equivalence", rc.is_equivalence(A, comp))
    cert.add("kappa-associated-with-complement", rc.associated_with(kappa, comp))
    cert.require()
    classes, class_of, Q, pi, qap = _assemble(A, comp, cert, ap_rel=kappa)
    _check_partition(A, comp, classes, cert)
    wq = QuotientWitness(A, classes, class_of, Q, pi, qap, None, cert)
    cert.add("apartness-well-defined", wq.lift(kappa) == wq.lift_forall(kappa))
    cert.add("projection-se", pi.se)
    return wq


def quotient_by_coequivalence(A: ApartnessSet, kappa: Rel) -> QuotientWitness:
    if not rc.is_coequivalence(A, kappa):
        raise NotACoequivalence(f"not a co-equivalence: {rc.check_properties(A, kappa).witnesses}")
    cert = Certificate()
    wq = _coequivalence_quotient(A, kappa, cert)
    cert.require()
    return wq


class DefinesApartness(NamedTuple):
    ok: bool
    quotient: QuotientWitness | None
    witness: tuple | None


def defines_apartness_check(A: ApartnessSet, eps: Rel, kappa: Rel) -> DefinesApartness:
    """Whether ``kappa`` induces an apartness on the quotient by ``eps``."""
    _require_equivalence(A, eps)
    if not rc.is_coequivalence(A, kappa):
        raise NotACoequivalence(f"not a co-equivalence: {rc.check_properties(A, kappa).witnesses}")
    w = least(eps.matrix & kappa.matrix)
    if w is not None:
        return DefinesApartness(False, None, A.carrier.names(w))
    cert = Certificate()
    classes, class_of, Q, pi, qap = _assemble(A, eps, cert, ap_rel=kappa)
    _check_partition(A, eps, classes, cert)
    wq = QuotientWitness(A, classes, class_of, Q, pi, qap, None, cert)
    # kappa is constant on pairs of classes
    cert.add("apartness-well-defined", wq.lift(kappa) == wq.lift_forall(kappa))
    cert.add("projection-se", pi.se)
    cert.require()
    return DefinesApartness(True, wq, None)


def birkhoff_constructive(A: ApartnessSet, tau: Rel) -> QuotientWitness:
    """Co-quasiorder to co-order on the quotient by the complement of its symmetrisation."""
    if not rc.is_coquasiorder(A, tau):
        raise NotACoquasiorder(f"not a co-quasiorder: {rc.check_properties(A, tau).witnesses}")
    kappa = tau | tau.inverse
    cert = Certificate()
    cert.add("symmetrisation-is-coequivalence", rc.is_coequivalence(A, kappa))
    cert.require()
    wq = _coequivalence_quotient(A, kappa, cert)
    ups = wq.lift(tau)
    cert.add("order-well-defined", ups == wq.lift_forall(tau))
    p = rc.check_properties(wq.quotient, ups)
    cert.add("order-strongly-irreflexive", p.strongly_irreflexive)
    cert.add("order-cotransitive", p.cotransitive)
    cert.add("order-coantisymmetric", p.coantisymmetric)
    iso, rev = _iso_flags(tau, ups, wq.class_of)
    cert.add("projection-isotone", iso)
    cert.add("projection-reverse-isotone", rev)
    cert.require()
    return QuotientWitness(A, wq.classes, wq.class_of, wq.quotient, wq.projection,
                           wq.induced_ap, ups, cert)
