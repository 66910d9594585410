"""Mappings between sets with apartness and the isomorphism theorems.

Every theorem is a construction: it returns the quotient, the factor map and
a certificate of named checks. A construction whose certificate fails raises
:class:`~apartness.certificate.CertificateFailure`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import relcalc as rc
from .carrier import ApartnessError, ApartnessSet, Rel, SetoidMap, least
from .certificate import Certificate
from .quotient import (QuotientWitness, birkhoff_classical, birkhoff_constructive,
                       defines_apartness_check, quotient_by_equivalence, NotACoquasiorder)


class NotSe(ApartnessError):
    pass


class NotContainedInKernel(ApartnessError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"pair {witness} is related but has different images")


class KappaMeetsKernel(ApartnessError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"pair {witness} lies in both kappa and the kernel")


class CodomainNotOrdered(ApartnessError):
    pass


class SigmaNotCoquasiorder(ApartnessError):
    pass


class MuNotContained(ApartnessError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"pair {witness} is in the pulled-back relation but not in tau")


class NonTightCodomain(ApartnessError):
    pass


def pullback(f: SetoidMap, cod_rel: Rel) -> Rel:
    """``(x, y)`` iff ``(f(x), f(y))`` is in ``cod_rel``."""
    F = np.array(f.graph, dtype=np.intp)
    return Rel(f.domain.carrier, cod_rel.matrix[np.ix_(F, F)])


@dataclass(frozen=True)
class MapClassification:
    extensional: bool
    se: bool
    injective: bool
    a_injective: bool
    surjective: bool
    isotone: bool | None = None
    reverse_isotone: bool | None = None


def classify_map(f: SetoidMap, dom_rel: Rel | None = None, cod_rel: Rel | None = None) -> MapClassification:
    iso = rev = None
    if dom_rel is not None and cod_rel is not None:
        eta = pullback(f, cod_rel)
        iso, rev = dom_rel <= eta, eta <= dom_rel
    return MapClassification(f.extensional, f.se, f.injective, f.a_injective, f.surjective, iso, rev)


def kernel_cokernel(f: SetoidMap) -> tuple[Rel, Rel]:
    return pullback(f, f.codomain.eq), pullback(f, f.codomain.ap)


@dataclass(frozen=True, eq=False)
class IsoWitness:
    quotient: QuotientWitness
    phi: SetoidMap
    factorization_ok: bool
    certificate: Certificate
    classification: MapClassification
    flags: dict = field(default_factory=dict)
    order: Rel | None = None
    variant: "IsoWitness | None" = None


def _factor_graph(f: SetoidMap, Q: QuotientWitness) -> tuple[int, ...]:
    return tuple(f.graph[c[0]] for c in Q.classes)


def _factor(f: SetoidMap, Q: QuotientWitness, cert: Certificate) -> tuple[SetoidMap, bool]:
    E = f.codomain.eq.matrix
    graph = _factor_graph(f, Q)
    bad = [x for x in range(f.domain.n) if not E[graph[Q.class_of[x]], f.graph[x]]]
    cert.add("factor-well-defined", not bad, tuple(f.domain.carrier.names(bad[:1])))
    cert.require()
    phi = SetoidMap(Q.quotient, f.codomain, graph)
    fact = all(E[phi(Q.projection(x)), f(x)] for x in range(f.domain.n))
    cert.add("factorization", fact)
    return phi, fact


def first_iso_classical(f: SetoidMap) -> IsoWitness:
    ker, _ = kernel_cokernel(f)
    Q = quotient_by_equivalence(f.domain, ker)
    cert = Certificate()
    phi, fact = _factor(f, Q, cert)
    cert.add("phi-injective", phi.injective)
    cert.add("phi-surjective-iff-f-surjective", phi.surjective == f.surjective)
    return IsoWitness(Q, phi, fact, cert.require(), classify_map(phi))


def factor_through(f: SetoidMap, eps: Rel) -> SetoidMap:
    ker, _ = kernel_cokernel(f)
    w = least(eps.matrix & ~ker.matrix)
    if w is not None:
        raise NotContainedInKernel(f.domain.carrier.names(w))
    Q = quotient_by_equivalence(f.domain, eps)
    cert = Certificate()
    phi, _ = _factor(f, Q, cert)
    cert.require()
    return phi


def _coker_checks(f: SetoidMap, ker: Rel, coker: Rel, cert: Certificate) -> None:
    p = rc.check_properties(f.domain, coker)
    cert.add("coker-strongly-irreflexive", p.strongly_irreflexive)
    cert.add("coker-symmetric", p.symmetric)
    cert.add("coker-cotransitive", p.cotransitive)
    cert.add("coker-associated-with-ker", rc.associated_with(coker, ker))
    _, apart = rc.rel_complements(f.domain, coker)
    cert.add("ker-in-coker-complement", ker <= apart)


def first_apartness_iso(f: SetoidMap) -> IsoWitness:
    if not f.se:
        raise NotSe("the map is not strongly extensional")
    ker, coker = kernel_cokernel(f)
    cert = Certificate()
    _coker_checks(f, ker, coker, cert)
    cert.require()
    res = defines_apartness_check(f.domain, ker, coker)
    cert.add("coker-defines-apartness", res.ok)
    cert.require()
    Q = res.quotient
    cert.add("projection-se", Q.projection.se)
    cert.add("projection-surjective", Q.projection.surjective)
    phi, fact = _factor(f, Q, cert)
    cert.add("phi-injective", phi.injective)
    cert.add("phi-a-injective", phi.a_injective)
    cert.add("phi-se", phi.se)
    if f.surjective:
        cert.add("phi-apartness-bijection", phi.apartness_bijective)
    return IsoWitness(Q, phi, fact, cert.require(), classify_map(phi))


def second_apartness_iso(f: SetoidMap, kappa: Rel) -> IsoWitness:
    """Factor through the kernel with the apartness given by ``kappa``.

    ``flags`` carries ``phi_se`` and ``phi_a_injective``; the certificate
    checks both against the inclusions between ``kappa`` and the co-kernel.
    """
    ker, coker = kernel_cokernel(f)
    if not rc.is_coequivalence(f.domain, kappa):
        raise ApartnessError("kappa is not a co-equivalence")
    w = least(kappa.matrix & ker.matrix)
    if w is not None:
        raise KappaMeetsKernel(f.domain.carrier.names(w))
    res = defines_apartness_check(f.domain, ker, kappa)
    cert = Certificate()
    cert.add("kappa-defines-apartness", res.ok)
    cert.require()
    Q = res.quotient
    cert.add("projection-se", Q.projection.se)
    cert.add("projection-surjective", Q.projection.surjective)
    phi, fact = _factor(f, Q, cert)
    cert.add("phi-injective", phi.injective)
    cert.add("phi-se-iff-coker-in-kappa", phi.se == (coker <= kappa))
    cert.add("phi-a-injective-iff-kappa-in-coker", phi.a_injective == (kappa <= coker))
    cert.add("phi-se-implies-f-se", f.se or not phi.se)
    flags = {"phi_se": phi.se, "phi_a_injective": phi.a_injective}
    return IsoWitness(Q, phi, fact, cert.require(), classify_map(phi), flags)


def ordered_iso_classical(f: SetoidMap, dom_rel: Rel, cod_rel: Rel, rho: Rel | None = None) -> IsoWitness:
    """Order-theoretic first isomorphism theorem; ``rho`` selects the quasiorder variant."""
    if not rc.is_order(f.codomain, cod_rel):
        raise CodomainNotOrdered(f"codomain relation is not an order: "
                                 f"{rc.check_properties(f.codomain, cod_rel).witnesses}")
    eta = pullback(f, cod_rel)
    ker, _ = kernel_cokernel(f)
    cert = Certificate()
    cert.add("eta-quasiorder", rc.is_quasiorder(f.domain, eta))
    cert.add("ker-is-eta-symmetric-part", ker == (eta & eta.inverse))
    cert.require()
    Q = quotient_by_equivalence(f.domain, ker)
    theta = Q.lift(eta)
    cert.add("theta-well-defined", theta == Q.lift_forall(eta))
    cert.add("theta-order", rc.is_order(Q.quotient, theta))
    phi, fact = _factor(f, Q, cert)
    cert.add("phi-injective", phi.injective)
    c = classify_map(phi, theta, cod_rel)
    cert.add("phi-isotone", c.isotone)
    cert.add("phi-reverse-isotone", c.reverse_isotone)
    if f.surjective:
        cert.add("phi-order-bijection", phi.bijective and c.isotone and c.reverse_isotone)
    variant = None
    if rho is not None:
        variant = _quasiorder_variant(f, rho, eta, ker, cod_rel)
        cert.extend(variant.certificate, "rho:")
    flags = {"f_isotone": dom_rel <= eta}
    return IsoWitness(Q, phi, fact, cert.require(), c, flags, theta, variant)


class NotBelowEta(ApartnessError):
    pass


def _quasiorder_variant(f, rho, eta, ker, cod_rel) -> IsoWitness:
    w = least(rho.matrix & ~eta.matrix)
    if w is not None:
        raise NotBelowEta(f"{f.domain.carrier.names(w)} in rho but images unrelated")
    Q = birkhoff_classical(f.domain, rho)
    cert = Certificate()
    cert.add("eps-rho-in-kernel", (rho & rho.inverse) <= ker)
    phi, fact = _factor(f, Q, cert)
    c = classify_map(phi, Q.induced_rel, cod_rel)
    cert.add("phi-isotone", c.isotone)
    return IsoWitness(Q, phi, fact, cert.require(), c, order=Q.induced_rel)


@dataclass(frozen=True, eq=False)
class CoOrderFactorization:
    mu: Rel
    kappa: Rel
    psi: SetoidMap
    domain_quotient: QuotientWitness
    codomain_quotient: QuotientWitness
    certificate: Certificate
    phi: SetoidMap | None = None
    tau_quotient: QuotientWitness | None = None


def co_order_factorization(f: SetoidMap, sigma: Rel, tau: Rel | None = None) -> CoOrderFactorization:
    """Pull a co-quasiorder back along an se-map and factor through both co-ordered quotients.

    With ``tau`` (a co-quasiorder on the domain containing the pull-back) and a
    tight codomain, also factor ``f`` itself through the quotient by ``tau``.
    """
    if not f.se:
        raise NotSe("the map is not strongly extensional")
    if not rc.is_coquasiorder(f.codomain, sigma):
        raise SigmaNotCoquasiorder(str(rc.check_properties(f.codomain, sigma).witnesses))
    dom = f.domain
    mu = pullback(f, sigma)
    kappa = mu | mu.inverse
    _, coker = kernel_cokernel(f)
    cert = Certificate()
    cert.add("mu-coquasiorder", rc.is_coquasiorder(dom, mu))
    cert.add("kappa-coequivalence", rc.is_coequivalence(dom, kappa))
    cert.add("kappa-in-coker", kappa <= coker)
    if rc.is_coorder(f.codomain, sigma):
        cert.add("kappa-equals-coker", kappa == coker)
    cert.require()
    Qf = birkhoff_constructive(dom, mu)
    Qs = birkhoff_constructive(f.codomain, sigma)
    graph = tuple(Qs.class_of[f.graph[c[0]]] for c in Qf.classes)
    cert.add("psi-well-defined",
             all(graph[Qf.class_of[x]] == Qs.class_of[f.graph[x]] for x in range(dom.n)))
    cert.require()
    psi = SetoidMap(Qf.quotient, Qs.quotient, graph)
    cert.add("psi-commutes", all(psi(Qf.projection(x)) == Qs.projection(f(x)) for x in range(dom.n)))
    cert.add("psi-se", psi.se)
    cert.add("psi-a-injective", psi.a_injective)
    c = classify_map(psi, Qf.induced_rel, Qs.induced_rel)
    cert.add("psi-isotone", c.isotone)
    cert.add("psi-reverse-isotone", c.reverse_isotone)
    phi = Qt = None
    if tau is not None:
        if not f.codomain.tight:
            raise NonTightCodomain("the tau variant needs a tight codomain apartness")
        if not rc.is_coquasiorder(dom, tau):
            raise NotACoquasiorder(str(rc.check_properties(dom, tau).witnesses))
        w = least(mu.matrix & ~tau.matrix)
        if w is not None:
            raise MuNotContained(dom.carrier.names(w))
        Qt = birkhoff_constructive(dom, tau)
        sub = Certificate()
        phi, _ = _factor(f, Qt, sub)
        sub.add("phi-se", phi.se)
        cert.extend(sub, "tau:")
    return CoOrderFactorization(mu, kappa, psi, Qf, Qs, cert.require(), phi, Qt)
