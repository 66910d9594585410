"""Theorem registry: every claim checked twice.

Each entry pairs an oracle, written only with the quantifier loops of
:mod:`.predicates`, with a construction-side check that runs the package's
own constructions and reads their certificates. Hypotheses are decided by
the oracle; an instance outside a claim's hypotheses is reported as
``n/a`` by both sides.

Entries marked ``expected_fail`` record claims that are false as stated.
A campaign treats a clean pass on them as a regression.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable

import numpy as np

from ..carrier import (ApartnessError, ApartnessSet, Carrier, Rel, SetoidMap, Subset,
                       check_apartness_axioms, classify_detachability, complements,
                       product_apartness)
from ..certificate import Certificate
from .. import maps as mp
from .. import quotient as qt
from .. import relcalc as rc
from .. import semigroup as sg
from . import predicates as pr
from .instances import FAMILIES, Instance

PASS, FAIL, NA = "pass", "fail", "n/a"
Verdict = tuple  # (PASS | FAIL | NA, witness)


class UnknownTheorem(KeyError):
    pass


class SignatureMismatch(TypeError):
    pass


@dataclass(frozen=True)
class TheoremSpec:
    theorem_id: str
    family: str
    summary: str
    oracle: Callable[[dict], Verdict]
    construct: Callable[[dict], Verdict]
    applies: Callable[[dict], bool] | None = None
    expected_fail: bool = False
    max_size: int = 5
    topic: str = ""
    fails_from: int = 0     # least carrier size with a known counterexample to an expected-fail claim


@dataclass(frozen=True)
class TheoremCheck:
    theorem_id: str
    instance: str
    verdict: str
    witness: object = None
    construction: str | None = None
    construction_witness: object = None
    expected_fail: bool = False

    @property
    def agree(self) -> bool:
        return self.construction is None or self.construction == self.verdict


REGISTRY: dict[str, TheoremSpec] = {}


def register(theorem_id, family, summary, *, applies=None, expected_fail=False, max_size=5, topic="",
             fails_from=2):
    """Decorator over a function returning ``(oracle, construct)``."""
    def deco(pair):
        oracle, construct = pair()
        REGISTRY[theorem_id] = TheoremSpec(theorem_id, family, summary, oracle, construct,
                                           applies, expected_fail, max_size, topic,
                                           fails_from if expected_fail else 0)
        return pair
    return deco


def verify(theorem_id: str, instance: Instance | dict, construct: bool = True) -> TheoremCheck:
    try:
        spec = REGISTRY[theorem_id]
    except KeyError:
        raise UnknownTheorem(theorem_id) from None
    if isinstance(instance, Instance):
        if instance.kind != spec.family:
            raise SignatureMismatch(f"{theorem_id} takes {spec.family}, got {instance.kind}")
        inst = instance
    else:
        inst = Instance(spec.family, instance)
    need = REQUIRED_KEYS.get(spec.family, ())
    missing = [k for k in need if k not in inst.data]
    if missing:
        raise SignatureMismatch(f"{theorem_id} needs {missing}")
    d = inst.data
    if spec.applies is not None and not spec.applies(d):
        return TheoremCheck(theorem_id, inst.describe(), NA, None, NA if construct else None, None,
                            spec.expected_fail)
    verdict, witness = spec.oracle(d)
    cv = cw = None
    if construct:
        try:
            cv, cw = spec.construct(d)
        except ApartnessError as e:
            cv, cw = FAIL, f"{type(e).__name__}: {e}"
    return TheoremCheck(theorem_id, inst.describe(), verdict, witness, cv, cw, spec.expected_fail)


REQUIRED_KEYS = {
    "set": ("E", "P"), "set-pair": ("E", "P", "E2", "P2"), "set-subset": ("E", "P", "Y"),
    "set-rel": ("E", "P", "R"), "set-rel2": ("E", "P", "R", "S"),
    "set-rel3": ("E", "P", "R", "S", "T"), "set-rel4": ("E", "P", "R", "S", "T", "U"),
    "set-equiv": ("E", "P", "eps"), "set-equiv-rel": ("E", "P", "eps", "R"),
    "set-quasiorder": ("E", "P", "rho"), "order-equiv": ("E", "P", "alpha", "eps"),
    "set-coq": ("E", "P", "tau"), "set-coq2": ("E", "P", "tau", "sigma"),
    "set-coe": ("E", "P", "kappa"), "set-equiv-coe": ("E", "P", "eps", "kappa"),
    "map": ("E", "P", "E2", "P2", "f"), "map-se": ("E", "P", "E2", "P2", "f"),
    "map-equiv": ("E", "P", "E2", "P2", "f", "eps"), "map-coe": ("E", "P", "E2", "P2", "f", "kappa"),
    "ordered-map": ("E", "P", "E2", "P2", "f", "sigma"),
    "ordered-map-rel": ("E", "P", "E2", "P2", "f", "sigma", "rho"),
    "ordered-map-quasi": ("E", "P", "E2", "P2", "f", "sigma", "rho"),
    "map-coq": ("E", "P", "E2", "P2", "f", "sigma"),
    "map-coq-tau": ("E", "P", "E2", "P2", "f", "sigma", "tau"),
    "semigroup": ("E", "P", "M"), "semigroup-quasiorder": ("E", "P", "M", "rho"),
    "semigroup-coq": ("E", "P", "M", "tau"), "semigroup-equiv": ("E", "P", "M", "eps"),
    "semigroup-coe": ("E", "P", "M", "kappa"), "semigroup-equiv-coe": ("E", "P", "M", "eps", "kappa"),
    "semigroup-hom": ("E", "P", "M", "E2", "P2", "M2", "f"),
    "semigroup-hom-se": ("E", "P", "M", "E2", "P2", "M2", "f"),
    "semigroup-hom-coe": ("E", "P", "M", "E2", "P2", "M2", "f", "kappa"),
    "semigroup-hom-order": ("E", "P", "M", "E2", "P2", "M2", "f", "sigma"),
    "semigroup-hom-order-quasi": ("E", "P", "M", "E2", "P2", "M2", "f", "sigma", "rho"),
    "semigroup-hom-coq": ("E", "P", "M", "E2", "P2", "M2", "f", "sigma"),
    "semigroup-hom-coq-tau": ("E", "P", "M", "E2", "P2", "M2", "f", "sigma", "tau"),
}


# -- oracle-side helpers (loops only) ------------------------------------------------

class Checks:
    """Collects named conditions; the verdict names the first failure."""

    def __init__(self):
        self.failed = None

    def __call__(self, name, ok, witness=None):
        if not ok and self.failed is None:
            self.failed = (name, witness)
        return ok

    def verdict(self) -> Verdict:
        return (PASS, None) if self.failed is None else (FAIL, self.failed)


def _idx(cls, n):
    return pr.class_index(cls, n)


def _is_partition(cls, n):
    seen = sorted(x for c in cls for x in c)
    return seen == list(range(n)) and all(cls)


def _quotient_map(f, cls, E2):
    """Graph on classes and whether it is independent of the representative."""
    phi = tuple(f[c[0]] for c in cls)
    ok = all(E2[f[x]][phi[k]] for k, c in enumerate(cls) for x in c)
    return phi, ok


def _preserves(R1, R2, g):
    """R1(x, y) implies R2(g x, g y)."""
    return all(R2[g[x]][g[y]] for x in range(len(R1)) for y in range(len(R1)) if R1[x][y])


def _reflects(R1, R2, g):
    return all(R1[x][y] for x in range(len(R1)) for y in range(len(R1)) if R2[g[x]][g[y]])


def _se(g, P1, P2):
    return _reflects(P1, P2, g)


def _injective(g, E1, E2):
    return _reflects(E1, E2, g)


def _surjective(g, E2):
    return all(any(E2[v][t] for v in g) for t in range(len(E2)))


def _hom(g, M1, M2, E2):
    return pr.homomorphism(g, M1, M2, E2)


def _coe_quotient(E, P, kappa, c: Checks, prefix=""):
    """Quotient by the complement of a co-equivalence, checked from scratch."""
    n = len(E)
    comp = pr.neg(kappa)
    c(prefix + "complement-equivalence", pr.equivalence(comp), pr.first(
        (x,) for x in range(n) if not comp[x][x]) or pr.w_symmetric(comp) or pr.w_transitive(comp))
    if c.failed:
        return None
    cls = pr.classes(comp)
    qap = pr.lift_exists(cls, kappa)
    c(prefix + "apartness-well-defined", qap == pr.lift_forall(cls, kappa))
    k = len(cls)
    c(prefix + "quotient-apartness", pr.is_apartness(pr.diag(k), qap), pr.apartness_witness(pr.diag(k), qap))
    idx = _idx(cls, n)
    c(prefix + "projection-se", _se(idx, P, qap))
    c(prefix + "projection-surjective", _surjective(idx, pr.diag(k)))
    return cls, idx, qap


def _mixed_quotient(E, P, eps, kappa, c: Checks, prefix=""):
    """Quotient by an equivalence carrying the apartness ``kappa``."""
    n = len(E)
    cls = pr.classes(eps)
    k = len(cls)
    qap = pr.lift_exists(cls, kappa)
    c(prefix + "apartness-well-defined", qap == pr.lift_forall(cls, kappa))
    c(prefix + "quotient-apartness", pr.is_apartness(pr.diag(k), qap), pr.apartness_witness(pr.diag(k), qap))
    idx = _idx(cls, n)
    c(prefix + "projection-se", _se(idx, P, qap))
    c(prefix + "projection-surjective", _surjective(idx, pr.diag(k)))
    return cls, idx, qap


def _quotient_semigroup(M, cls, qap, c: Checks, prefix=""):
    n, k = len(M), len(cls)
    table, ok = pr.quotient_table(cls, M)
    c(prefix + "multiplication-well-defined", ok)
    if not ok:
        return None
    w = pr.semigroup_witness(pr.diag(k), qap, table)
    c(prefix + "quotient-semigroup", w is None, w)
    c(prefix + "projection-homomorphism", _hom(_idx(cls, n), M, table, pr.diag(k)))
    return table


def _adjoin_identity(E, P, M):
    n = len(E)
    E1 = pr.mat(n + 1, lambda x, y: x == y if n in (x, y) else E[x][y])
    P1 = pr.mat(n + 1, lambda x, y: x != y if n in (x, y) else P[x][y])
    M1 = tuple(tuple(y if x == n else x if y == n else M[x][y] for y in range(n + 1)) for x in range(n + 1))
    return E1, P1, M1


def _greatest_equivalence_below(R, eps, n, congruence_for=None):
    """Every equivalence (or congruence) inside R lies inside eps."""
    for e in pr.equivalences(n):
        if pr.le(e, R) and (congruence_for is None or pr.compatible(e, congruence_for)):
            if not pr.le(e, eps):
                return e
    return None


# -- construction-side helpers -------------------------------------------------------

@lru_cache(maxsize=4096)
def _A(E, P) -> ApartnessSet:
    c = Carrier.of_size(len(E))
    return ApartnessSet(c, Rel(c, np.array(E, dtype=bool)), Rel(c, np.array(P, dtype=bool)))


def _R(A, R) -> Rel:
    return Rel(A.carrier, np.array(R, dtype=bool))


@lru_cache(maxsize=4096)
def _S(E, P, M) -> sg.ApartnessSemigroup:
    return sg.ApartnessSemigroup(_A(E, P), np.array(M, dtype=np.intp))


def _f(d) -> SetoidMap:
    return SetoidMap(_A(d["E"], d["P"]), _A(d["E2"], d["P2"]), d["f"])


def _ST(d):
    return _S(d["E"], d["P"], d["M"]), _S(d["E2"], d["P2"], d["M2"])


def _cert(cert: Certificate) -> Verdict:
    return (PASS, None) if cert.ok else (FAIL, tuple(c.name for c in cert.failures()))


def _bool(ok, witness=None) -> Verdict:
    return (PASS, None) if ok else (FAIL, witness)


def _conds(**flags) -> Verdict:
    bad = tuple(k.replace("_", "-") for k, v in flags.items() if not v)
    return (PASS, None) if not bad else (FAIL, bad)


# == classical sets ==================================================================

@register("quotient-projection-surjective", "set-equiv",
          "the projection onto the classes of an equivalence is a surjection", topic="classical-sets")
def _():
    def oracle(d):
        eps, n = d["eps"], len(d["E"])
        cls = pr.classes(eps)
        c = Checks()
        c("partition", _is_partition(cls, n))
        c("classes-closed", all(eps[x][y] for k in cls for x in k for y in k))
        c("surjective", _surjective(_idx(cls, n), pr.diag(len(cls))))
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        Q = qt.quotient_by_equivalence(A, _R(A, d["eps"]))
        return _conds(certificate=Q.certificate.ok, surjective=Q.projection.surjective)
    return oracle, construct


@register("first-iso-classical", "map", "a map factors through its kernel by a unique injection",
          topic="classical-sets")
def _():
    def oracle(d):
        f, E2 = d["f"], d["E2"]
        n = len(f)
        cls = pr.classes(pr.pullback(f, E2))
        phi, ok = _quotient_map(f, cls, E2)
        c = Checks()
        c("factor-well-defined", ok)
        c("factorization", all(E2[phi[_idx(cls, n)[x]]][f[x]] for x in range(n)))
        c("phi-injective", _injective(phi, pr.diag(len(cls)), E2))
        c("phi-surjective-iff-f-surjective", _surjective(phi, E2) == _surjective(f, E2))
        return c.verdict()

    def construct(d):
        return _cert(mp.first_iso_classical(_f(d)).certificate)
    return oracle, construct


@register("factor-through-equivalence", "map-equiv",
          "a map factors through any equivalence inside its kernel", topic="classical-sets")
def _():
    def oracle(d):
        f, E2, eps = d["f"], d["E2"], d["eps"]
        cls = pr.classes(eps)
        phi, ok = _quotient_map(f, cls, E2)
        idx = _idx(cls, len(f))
        c = Checks()
        c("factor-well-defined", ok)
        c("factorization", all(E2[phi[idx[x]]][f[x]] for x in range(len(f))))
        return c.verdict()

    def construct(d):
        f = _f(d)
        eps = _R(f.domain, d["eps"])
        phi = mp.factor_through(f, eps)
        _, class_of = qt.partition(eps)
        return _bool(all(phi.graph[class_of[x]] == f.graph[x] for x in range(f.domain.n)))
    return oracle, construct


@register("isotone-iff-pullback-inclusion", "ordered-map-rel",
          "isotone and reverse isotone maps are inclusions against the pulled-back relation",
          topic="classical-sets")
def _():
    def oracle(d):
        f, rho, sigma = d["f"], d["rho"], d["sigma"]
        eta = pr.pullback(f, sigma)
        c = Checks()
        c("isotone", _preserves(rho, sigma, f) == pr.le(rho, eta))
        c("reverse-isotone", _reflects(rho, sigma, f) == pr.le(eta, rho))
        c("preserving", (_preserves(rho, sigma, f) and _reflects(rho, sigma, f)) == (eta == rho))
        return c.verdict()

    def construct(d):
        f = _f(d)
        rho, sigma = _R(f.domain, d["rho"]), _R(f.codomain, d["sigma"])
        cl = mp.classify_map(f, rho, sigma)
        eta = mp.pullback(f, sigma)
        return _conds(isotone=cl.isotone == (rho <= eta), reverse_isotone=cl.reverse_isotone == (eta <= rho))
    return oracle, construct


def _lift_props(R, E):
    return {"reflexive": pr.reflexive(R), "symmetric": pr.symmetric(R),
            "transitive": pr.transitive(R), "antisymmetric": pr.antisymmetric(R, E)}


@register("well-defined-lift-preserves-structure", "set-equiv-rel",
          "a representative-independent induced relation keeps reflexivity, symmetry, "
          "antisymmetry and transitivity",
          applies=lambda d: pr.lift_exists(pr.classes(d["eps"]), d["R"]) == pr.lift_forall(pr.classes(d["eps"]), d["R"]),
          topic="classical-sets")
def _():
    def oracle(d):
        R, E = d["R"], d["E"]
        cls = pr.classes(d["eps"])
        theta = pr.lift_exists(cls, R)
        before, after = _lift_props(R, E), _lift_props(theta, pr.diag(len(cls)))
        c = Checks()
        for k in before:
            c(k, after[k] or not before[k])
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        R = _R(A, d["R"])
        Q = qt.quotient_by_equivalence(A, _R(A, d["eps"]))
        theta, well = qt.induced_quotient_relation(Q, R)
        p, q = rc.check_properties(A, R), rc.check_properties(Q.quotient, theta)
        names = ("reflexive", "symmetric", "transitive", "antisymmetric")
        return _conds(well_defined=well, **{k: getattr(q, k) or not getattr(p, k) for k in names})
    return oracle, construct


_ALL_PROPS = {
    "reflexive": lambda R, E, P: pr.reflexive(R), "symmetric": lambda R, E, P: pr.symmetric(R),
    "transitive": lambda R, E, P: pr.transitive(R), "antisymmetric": lambda R, E, P: pr.antisymmetric(R, E),
    "irreflexive": lambda R, E, P: pr.irreflexive(R, E),
    "strongly_irreflexive": lambda R, E, P: pr.strongly_irreflexive(R, P),
    "cotransitive": lambda R, E, P: pr.cotransitive(R), "coantisymmetric": lambda R, E, P: pr.coantisymmetric(R, P),
}


@register("inverse-preserves-properties", "set-rel",
          "a relation and its inverse share every structural property", topic="classical-sets")
def _():
    def oracle(d):
        R, E, P = d["R"], d["E"], d["P"]
        c = Checks()
        for k, p in _ALL_PROPS.items():
            c(k, p(R, E, P) == p(pr.inv(R), E, P))
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        R = _R(A, d["R"])
        return _bool(rc.check_properties(A, R).as_dict() == rc.check_properties(A, R.inverse).as_dict())
    return oracle, construct


@register("birkhoff-classical", "set-quasiorder",
          "a quasiorder induces an order on the classes of its symmetric part, which is the "
          "greatest equivalence inside it", topic="classical-sets")
def _():
    def oracle(d):
        rho, n = d["rho"], len(d["E"])
        eps = pr.meet(rho, pr.inv(rho))
        c = Checks()
        c("symmetric-part-equivalence", pr.equivalence(eps))
        c("greatest-equivalence", _greatest_equivalence_below(rho, eps, n) is None)
        cls = pr.classes(eps)
        theta = pr.lift_exists(cls, rho)
        k = len(cls)
        c("induced-order", pr.order(theta, pr.diag(k)), pr.w_antisymmetric(theta, pr.diag(k)))
        idx = _idx(cls, n)
        c("projection-isotone", _preserves(rho, theta, idx))
        c("projection-reverse-isotone", _reflects(rho, theta, idx))
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        rho = _R(A, d["rho"])
        Q = qt.birkhoff_classical(A, rho)
        eps = rho & rho.inverse
        # any equivalence inside rho is symmetric, hence inside rho and its inverse
        return _conds(certificate=Q.certificate.ok, greatest=rc.is_equivalence(A, eps) and eps <= rho)
    return oracle, construct


@register("induced-forms-coincide-for-symmetric-part", "set-quasiorder",
          "on the classes of a quasiorder's symmetric part the existential, representative and "
          "universal induced relations agree", topic="classical-sets")
def _():
    def oracle(d):
        rho = d["rho"]
        cls = pr.classes(pr.meet(rho, pr.inv(rho)))
        k = len(cls)
        rep = pr.mat(k, lambda i, j: rho[cls[i][0]][cls[j][0]])
        c = Checks()
        c("exists-equals-representative", pr.lift_exists(cls, rho) == rep)
        c("forall-equals-representative", pr.lift_forall(cls, rho) == rep)
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        rho = _R(A, d["rho"])
        Q = qt.quotient_by_equivalence(A, rho & rho.inverse)
        theta, well = qt.induced_quotient_relation(Q, rho)
        reps = [c[0] for c in Q.classes]
        rep = rho.matrix[np.ix_(reps, reps)]
        return _conds(well_defined=well, representative=np.array_equal(theta.matrix, rep))
    return oracle, construct


def _antisym_oracle(d):
    alpha = d["alpha"]
    cls = pr.classes(d["eps"])
    theta = pr.lift_exists(cls, alpha)
    w = pr.w_antisymmetric(theta, pr.diag(len(cls)))
    if w is None:
        return PASS, None
    labels = d.get("labels") or tuple(str(i) for i in range(len(alpha)))
    return FAIL, ("antisymmetric", tuple(f"[{labels[cls[i][0]]}]" for i in w))


def _antisym_construct(d):
    labels = d.get("labels") or tuple(str(i) for i in range(len(d["E"])))
    c = Carrier(tuple(labels))
    A = ApartnessSet(c, Rel(c, np.array(d["E"])), Rel(c, np.array(d["P"])))
    Q = qt.quotient_by_equivalence(A, _R(A, d["eps"]))
    theta, _ = qt.induced_quotient_relation(Q, _R(A, d["alpha"]))
    p = rc.check_properties(Q.quotient, theta)
    return (PASS, None) if p.antisymmetric else (FAIL, ("antisymmetric", p.witnesses["antisymmetric"]))


@register("quotient-order-antisymmetric-for-arbitrary-equivalence", "order-equiv",
          "an order induces an antisymmetric relation on the classes of any equivalence",
          expected_fail=True, fails_from=3, topic="classical-sets")
def _():
    return _antisym_oracle, _antisym_construct


@register("ordered-first-iso", "ordered-map",
          "a map into an ordered set factors through its kernel by an order embedding",
          topic="classical-sets")
def _():
    def oracle(d):
        f, sigma, E2 = d["f"], d["sigma"], d["E2"]
        n = len(f)
        eta = pr.pullback(f, sigma)
        ker = pr.pullback(f, E2)
        c = Checks()
        c("eta-quasiorder", pr.quasiorder(eta))
        c("ker-is-eta-symmetric-part", ker == pr.meet(eta, pr.inv(eta)))
        cls = pr.classes(ker)
        k = len(cls)
        theta = pr.lift_exists(cls, eta)
        c("theta-well-defined", theta == pr.lift_forall(cls, eta))
        c("theta-order", pr.order(theta, pr.diag(k)))
        phi, ok = _quotient_map(f, cls, E2)
        c("phi-well-defined", ok)
        c("phi-injective", _injective(phi, pr.diag(k), E2))
        c("phi-isotone", _preserves(theta, sigma, phi))
        c("phi-reverse-isotone", _reflects(theta, sigma, phi))
        if _surjective(f, E2):
            c("phi-bijective", _surjective(phi, E2))
        return c.verdict()

    def construct(d):
        f = _f(d)
        sigma = _R(f.codomain, d["sigma"])
        return _cert(mp.ordered_iso_classical(f, mp.pullback(f, sigma), sigma).certificate)
    return oracle, construct


def _quasi_factor(d):
    f, rho, sigma, E2 = d["f"], d["rho"], d["sigma"], d["E2"]
    cls = pr.classes(pr.meet(rho, pr.inv(rho)))
    phi, ok = _quotient_map(f, cls, E2)
    return cls, phi, ok


@register("ordered-quasiorder-factor", "ordered-map-quasi",
          "a map factors isotonically through the order defined by a quasiorder below its pull-back",
          topic="classical-sets")
def _():
    def oracle(d):
        f, rho, sigma, E2 = d["f"], d["rho"], d["sigma"], d["E2"]
        c = Checks()
        c("eps-in-kernel", pr.le(pr.meet(rho, pr.inv(rho)), pr.pullback(f, E2)))
        cls, phi, ok = _quasi_factor(d)
        c("phi-well-defined", ok)
        c("phi-isotone", _preserves(pr.lift_exists(cls, rho), sigma, phi))
        return c.verdict()

    def construct(d):
        f = _f(d)
        sigma = _R(f.codomain, d["sigma"])
        w = mp.ordered_iso_classical(f, mp.pullback(f, sigma), sigma, _R(f.domain, d["rho"]))
        return _cert(w.certificate)
    return oracle, construct


@register("quasiorder-factor-injective", "ordered-map-quasi",
          "the factor through a quasiorder below the pull-back is injective",
          expected_fail=True, topic="classical-sets")
def _():
    def oracle(d):
        cls, phi, _ = _quasi_factor(d)
        k = len(cls)
        w = pr.first((i, j) for i in range(k) for j in range(k) if i != j and d["E2"][phi[i]][phi[j]])
        return _bool(w is None, w)

    def construct(d):
        f = _f(d)
        sigma = _R(f.codomain, d["sigma"])
        w = mp.ordered_iso_classical(f, mp.pullback(f, sigma), sigma, _R(f.domain, d["rho"]))
        return _bool(w.variant.phi.injective)
    return oracle, construct


# == classical semigroups ============================================================

@register("relation-composition-monoid", "set-rel3",
          "relational composition is associative with the diagonal as identity", max_size=3,
          topic="classical-semigroups")
def _():
    def oracle(d):
        R, S, T = d["R"], d["S"], d["T"]
        D = pr.diag(len(R))
        c = Checks()
        c("associative", pr.compose(pr.compose(R, S), T) == pr.compose(R, pr.compose(S, T)))
        c("left-identity", pr.compose(D, R) == R)
        c("right-identity", pr.compose(R, D) == R)
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        R, S, T = (_R(A, d[k]) for k in "RST")
        D = Rel.diagonal(A.carrier)
        return _conds(associative=rc.compose(rc.compose(R, S), T) == rc.compose(R, rc.compose(S, T)),
                      identity=rc.compose(D, R) == R and rc.compose(R, D) == R)
    return oracle, construct


@register("cayley-classical", "semigroup",
          "left translations on the semigroup with an identity adjoined give a faithful representation",
          topic="classical-semigroups")
def _():
    def oracle(d):
        E1, _, M1 = _adjoin_identity(d["E"], d["P"], d["M"])
        m = len(E1)
        lam = [M1[a] for a in range(m)]
        c = Checks()
        w = pr.first((a, b) for a in range(m) for b in range(m)
                     if not all(E1[lam[M1[a][b]][x]][lam[a][lam[b][x]]] for x in range(m)))
        c("homomorphism", w is None, w)
        w = pr.first((a, b) for a in range(m) for b in range(m)
                     if not E1[a][b] and all(E1[lam[a][x]][lam[b][x]] for x in range(m)))
        c("injective", w is None, w)
        return c.verdict()

    def construct(d):
        return _cert(sg.regular_representation(_S(d["E"], d["P"], d["M"])).certificate)
    return oracle, construct


@register("compatible-iff-left-right", "semigroup-quasiorder",
          "a quasiorder is compatible exactly when it is left and right compatible",
          topic="classical-semigroups")
def _():
    def oracle(d):
        rho, M = d["rho"], d["M"]
        return _bool(pr.compatible(rho, M) == (pr.left_compatible(rho, M) and pr.right_compatible(rho, M)))

    def construct(d):
        Sg = _S(d["E"], d["P"], d["M"])
        cp = sg.check_compatibility(Sg, _R(Sg.base, d["rho"]))
        return _bool(cp.full == (cp.left and cp.right))
    return oracle, construct


@register("congruence-quotient-semigroup", "semigroup-equiv",
          "the classes of a congruence form a semigroup and the projection is an epimorphism",
          applies=lambda d: pr.compatible(d["eps"], d["M"]), topic="classical-semigroups")
def _():
    def oracle(d):
        cls = pr.classes(d["eps"])
        c = Checks()
        _quotient_semigroup(d["M"], cls, pr.empty(len(cls)), c)
        return c.verdict()

    def construct(d):
        Sg = _S(d["E"], d["P"], d["M"])
        return _cert(sg.quotient_semigroup(Sg, congruence=_R(Sg.base, d["eps"])).certificate)
    return oracle, construct


@register("first-iso-semigroup-classical", "semigroup-hom",
          "a homomorphism factors through its kernel congruence by an embedding",
          topic="classical-semigroups")
def _():
    def oracle(d):
        f, M, M2, E2 = d["f"], d["M"], d["M2"], d["E2"]
        ker = pr.pullback(f, E2)
        c = Checks()
        c("ker-congruence", pr.equivalence(ker) and pr.compatible(ker, M))
        cls = pr.classes(ker)
        k = len(cls)
        table = _quotient_semigroup(M, cls, pr.empty(k), c)
        phi, ok = _quotient_map(f, cls, E2)
        c("phi-well-defined", ok)
        if table is not None:
            c("phi-homomorphism", _hom(phi, table, M2, E2))
        c("phi-injective", _injective(phi, pr.diag(k), E2))
        if _surjective(f, E2):
            c("phi-isomorphism", _surjective(phi, E2))
        return c.verdict()

    def construct(d):
        S, T = _ST(d)
        return _cert(sg.semigroup_iso_theorems(S, T, d["f"], classical=True).certificate)
    return oracle, construct


@register("factor-through-congruence", "semigroup-hom",
          "a homomorphism factors through every congruence inside its kernel by a homomorphism",
          max_size=4, topic="classical-semigroups")
def _():
    def oracle(d):
        f, M, M2, E2 = d["f"], d["M"], d["M2"], d["E2"]
        n = len(f)
        ker = pr.pullback(f, E2)
        for eps in pr.equivalences(n):
            if not (pr.le(eps, ker) and pr.compatible(eps, M)):
                continue
            cls = pr.classes(eps)
            table, ok = pr.quotient_table(cls, M)
            phi, wd = _quotient_map(f, cls, E2)
            if not (ok and wd and _hom(phi, table, M2, E2)):
                return FAIL, ("factor", eps)
        return PASS, None

    def construct(d):
        S, T = _ST(d)
        f = SetoidMap(S.base, T.base, d["f"])
        ker, _ = mp.kernel_cokernel(f)
        for eps_raw in pr.equivalences(S.n):
            eps = _R(S.base, eps_raw)
            if not (eps <= ker and sg.is_congruence(S, eps)):
                continue
            q = sg.quotient_semigroup(S, congruence=eps)
            phi = mp.factor_through(f, eps)
            if sg.is_homomorphism(q.semigroup, T, phi.graph) is not None:
                return FAIL, ("factor", eps_raw)
        return PASS, None
    return oracle, construct


def _quasiorder_semigroup_oracle(d, c: Checks):
    rho, M = d["rho"], d["M"]
    n = len(M)
    eps = pr.meet(rho, pr.inv(rho))
    c("eps-congruence", pr.equivalence(eps) and pr.compatible(eps, M))
    c("greatest-congruence", _greatest_equivalence_below(rho, eps, n, M) is None)
    cls = pr.classes(eps)
    k = len(cls)
    table = _quotient_semigroup(M, cls, pr.empty(k), c)
    theta = pr.lift_exists(cls, rho)
    c("order", pr.order(theta, pr.diag(k)))
    if table is not None:
        c("order-compatible", pr.compatible(theta, table))
    idx = _idx(cls, n)
    c("projection-isotone", _preserves(rho, theta, idx))
    c("projection-reverse-isotone", _reflects(rho, theta, idx))


@register("ordered-semigroup-birkhoff-classical", "semigroup-quasiorder",
          "a compatible quasiorder gives an ordered quotient semigroup by the greatest congruence inside it",
          applies=lambda d: pr.compatible(d["rho"], d["M"]), topic="classical-semigroups")
def _():
    def oracle(d):
        c = Checks()
        _quasiorder_semigroup_oracle(d, c)
        return c.verdict()

    def construct(d):
        Sg = _S(d["E"], d["P"], d["M"])
        return _cert(sg.ordered_semigroup_birkhoff(Sg, _R(Sg.base, d["rho"]), side="classical").certificate)
    return oracle, construct


def _ordered_hom_oracle(d, c: Checks):
    f, M, M2, E2, sigma = d["f"], d["M"], d["M2"], d["E2"], d["sigma"]
    eta = pr.pullback(f, sigma)
    ker = pr.pullback(f, E2)
    c("ker-in-eta", pr.le(ker, eta))
    cls = pr.classes(ker)
    k = len(cls)
    table = _quotient_semigroup(M, cls, pr.empty(k), c)
    theta = pr.lift_exists(cls, eta)
    c("theta-order", pr.order(theta, pr.diag(k)))
    phi, ok = _quotient_map(f, cls, E2)
    c("phi-well-defined", ok)
    if table is not None:
        c("theta-compatible", pr.compatible(theta, table))
        c("phi-homomorphism", _hom(phi, table, M2, E2))
    c("phi-injective", _injective(phi, pr.diag(k), E2))
    c("phi-isotone", _preserves(theta, sigma, phi))
    c("phi-reverse-isotone", _reflects(theta, sigma, phi))
    if _surjective(f, E2):
        c("phi-order-isomorphism", _surjective(phi, E2))


@register("ordered-semigroup-first-iso", "semigroup-hom-order",
          "a homomorphism into an ordered semigroup factors through its kernel by an isotone embedding",
          topic="classical-semigroups")
def _():
    def oracle(d):
        c = Checks()
        _ordered_hom_oracle(d, c)
        return c.verdict()

    def construct(d):
        S, T = _ST(d)
        f = SetoidMap(S.base, T.base, d["f"])
        sigma = _R(T.base, d["sigma"])
        return _cert(sg.ordered_semigroup_iso(S, T, d["f"], mp.pullback(f, sigma), sigma).certificate)
    return oracle, construct


@register("ordered-semigroup-quasiorder-factor", "semigroup-hom-order-quasi",
          "a homomorphism factors isotonically through the ordered quotient of a compatible "
          "quasiorder below its pull-back", topic="classical-semigroups")
def _():
    def oracle(d):
        f, rho, sigma, M, M2, E2 = d["f"], d["rho"], d["sigma"], d["M"], d["M2"], d["E2"]
        c = Checks()
        eps = pr.meet(rho, pr.inv(rho))
        c("eps-in-kernel", pr.le(eps, pr.pullback(f, E2)))
        cls = pr.classes(eps)
        table, ok = pr.quotient_table(cls, M)
        c("multiplication-well-defined", ok)
        phi, wd = _quotient_map(f, cls, E2)
        c("phi-well-defined", wd)
        c("phi-homomorphism", _hom(phi, table, M2, E2))
        c("phi-isotone", _preserves(pr.lift_exists(cls, rho), sigma, phi))
        return c.verdict()

    def construct(d):
        S, T = _ST(d)
        f = SetoidMap(S.base, T.base, d["f"])
        sigma = _R(T.base, d["sigma"])
        w = sg.ordered_semigroup_iso(S, T, d["f"], mp.pullback(f, sigma), sigma, _R(S.base, d["rho"]))
        return _cert(w.certificate)
    return oracle, construct


# == constructive sets ===============================================================

@register("apartness-iff-complement-equivalence", "set-rel",
          "over the diagonal equality a relation is an apartness exactly when its complement is an "
          "equivalence", topic="constructive-sets")
def _():
    def oracle(d):
        R = d["R"]
        return _bool(pr.is_apartness(pr.diag(len(R)), R) == pr.equivalence(pr.neg(R)))

    def construct(d):
        A = _A(d["E"], d["P"])
        R = _R(A, d["R"])
        ok = not check_apartness_axioms(A.carrier, Rel.diagonal(A.carrier), R)
        return _bool(ok == rc.is_equivalence(A, ~R))
    return oracle, construct


@register("product-apartness", "set-pair",
          "the componentwise apartness on a product is an apartness, tight exactly when both factors are",
          topic="constructive-sets")
def _():
    def oracle(d):
        E, P, E2, P2 = d["E"], d["P"], d["E2"], d["P2"]
        n, m = len(E), len(E2)
        k = n * m
        Ep = pr.mat(k, lambda a, b: E[a // m][b // m] and E2[a % m][b % m])
        Pp = pr.mat(k, lambda a, b: P[a // m][b // m] or P2[a % m][b % m])
        c = Checks()
        c("apartness", pr.is_apartness(Ep, Pp), pr.apartness_witness(Ep, Pp))
        c("tight-iff-factors-tight", pr.tight(Ep, Pp) == (pr.tight(E, P) and pr.tight(E2, P2)))
        return c.verdict()

    def construct(d):
        A, B = _A(d["E"], d["P"]), _A(d["E2"], d["P2"])
        AB = product_apartness(A, B)
        return _bool(AB.tight == (A.tight and B.tight))
    return oracle, construct


def _se_self_maps(E, P):
    n = len(E)
    return [f for f in product(range(n), repeat=n) if _se(f, P, P) and all(
        E[f[x]][f[y]] for x in range(n) for y in range(n) if E[x][y])]


def _map_relations(E, P, fs):
    k, n = len(fs), len(E)
    Em = pr.mat(k, lambda i, j: all(E[fs[i][x]][fs[j][x]] for x in range(n)))
    Pm = pr.mat(k, lambda i, j: any(P[fs[i][x]][fs[j][x]] for x in range(n)))
    return Em, Pm


@register("se-maps-form-apartness-set", "set",
          "strongly extensional self-maps with pointwise equality and apartness form a set with apartness",
          max_size=3, topic="constructive-sets")
def _():
    def oracle(d):
        E, P = d["E"], d["P"]
        Em, Pm = _map_relations(E, P, _se_self_maps(E, P))
        return _bool(pr.is_apartness(Em, Pm), pr.apartness_witness(Em, Pm))

    def construct(d):
        T = sg.build_se_transformation_semigroup(_A(d["E"], d["P"]))
        T.as_apartness_set()
        return PASS, None
    return oracle, construct


@register("sd-implies-qd", "set-subset", "a strongly detachable subset is quasi-detachable",
          topic="constructive-sets")
def _():
    def oracle(d):
        _, sd, qd = pr.detachability(d["P"], d["Y"])
        return _bool(qd or not sd)

    def construct(d):
        A = _A(d["E"], d["P"])
        r = classify_detachability(A, Subset(A, d["Y"]))
        return _bool(r.qd or not r.sd)
    return oracle, construct


@register("qd-complements-agree", "set-subset",
          "a quasi-detachable subset has equal logical and apartness complements", topic="constructive-sets")
def _():
    def oracle(d):
        _, _, qd = pr.detachability(d["P"], d["Y"])
        logical, apart = pr.subset_complements(d["P"], d["Y"])
        return _bool(not qd or logical == apart)

    def construct(d):
        A = _A(d["E"], d["P"])
        Y = Subset(A, d["Y"])
        logical, apart = complements(A, Y)
        return _bool(not classify_detachability(A, Y).qd or logical == apart)
    return oracle, construct


@register("sd-implies-d", "set-subset", "a strongly detachable subset is detachable",
          topic="constructive-sets")
def _():
    def oracle(d):
        dd, sd, _ = pr.detachability(d["P"], d["Y"])
        return _bool(dd or not sd)

    def construct(d):
        A = _A(d["E"], d["P"])
        r = classify_detachability(A, Subset(A, d["Y"]))
        return _bool(r.d or not r.sd)
    return oracle, construct


def _rel4_applies(d):
    return True


@register("cocomposition-monotone", "set-rel4",
          "co-composition is monotone in both arguments", max_size=3, topic="constructive-sets")
def _():
    def oracle(d):
        R, S, T, U = d["R"], d["S"], d["T"], d["U"]
        return _bool(pr.le(pr.cocompose(R, S), pr.cocompose(pr.union(R, T), pr.union(S, U))))

    def construct(d):
        A = _A(d["E"], d["P"])
        R, S, T, U = (_R(A, d[k]) for k in "RSTU")
        return _bool(rc.cocompose(R, S) <= rc.cocompose(R | T, S | U))
    return oracle, construct


@register("cocomposition-absorption", "set-rel2",
          "co-composing with a strongly irreflexive relation stays inside the other factor",
          max_size=4, topic="constructive-sets")
def _():
    def oracle(d):
        R, S, P = d["R"], d["S"], d["P"]
        RS = pr.cocompose(R, S)
        c = Checks()
        if pr.strongly_irreflexive(R, P):
            c("left-absorbed", pr.le(RS, S))
            c("square-strongly-irreflexive", pr.strongly_irreflexive(pr.cocompose(R, R), P))
        if pr.strongly_irreflexive(S, P):
            c("right-absorbed", pr.le(RS, R))
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        R, S = _R(A, d["R"]), _R(A, d["S"])
        RS = rc.cocompose(R, S)
        si_r = rc.has(A, R, "strongly_irreflexive")
        si_s = rc.has(A, S, "strongly_irreflexive")
        return _conds(left=not si_r or RS <= S, right=not si_s or RS <= R,
                      square=not si_r or rc.has(A, rc.cocompose(R, R), "strongly_irreflexive"))
    return oracle, construct


@register("cotransitive-iff-below-cocomposite", "set-rel",
          "a relation is co-transitive exactly when it lies inside its co-composite with itself",
          topic="constructive-sets")
def _():
    def oracle(d):
        R = d["R"]
        return _bool(pr.cotransitive(R) == pr.le(R, pr.cocompose(R, R)))

    def construct(d):
        A = _A(d["E"], d["P"])
        R = _R(A, d["R"])
        return _bool(rc.has(A, R, "cotransitive") == (R <= rc.cocompose(R, R)))
    return oracle, construct


@register("apartness-complement-bridge", "set-rel",
          "properties of a relation transfer to its apartness complement", topic="constructive-sets")
def _():
    def oracle(d):
        R, E, P = d["R"], d["E"], d["P"]
        C = pr.apart_complement(R, P)
        c = Checks()
        c("strongly-irreflexive-iff-reflexive", pr.strongly_irreflexive(R, P) == pr.reflexive(C))
        c("symmetric", pr.symmetric(C) or not pr.symmetric(R))
        c("cotransitive-to-transitive", pr.transitive(C) or not pr.cotransitive(R))
        if pr.tight(E, P):
            c("coantisymmetric-to-antisymmetric", pr.antisymmetric(C, E) or not pr.coantisymmetric(R, P))
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        R = _R(A, d["R"])
        _, C = rc.rel_complements(A, R)
        p, q = rc.check_properties(A, R), rc.check_properties(A, C)
        return _conds(si=p.strongly_irreflexive == q.reflexive, symmetric=q.symmetric or not p.symmetric,
                      transitive=q.transitive or not p.cotransitive,
                      antisymmetric=not A.tight or q.antisymmetric or not p.coantisymmetric)
    return oracle, construct


@register("irreflexive-implies-strongly-irreflexive", "set-rel",
          "an irreflexive relation is strongly irreflexive", expected_fail=True, topic="constructive-sets")
def _():
    def oracle(d):
        R, E, P = d["R"], d["E"], d["P"]
        if not pr.irreflexive(R, E):
            return PASS, None
        w = pr.w_strongly_irreflexive(R, P)
        return _bool(w is None, w)

    def construct(d):
        A = _A(d["E"], d["P"])
        p = rc.check_properties(A, _R(A, d["R"]))
        return _bool(p.strongly_irreflexive or not p.irreflexive, p.witnesses.get("strongly_irreflexive"))
    return oracle, construct


@register("coquasiorder-complement", "set-coq",
          "a co-quasiorder is quasi-detachable, its two complements agree and the complement is a quasiorder",
          topic="constructive-sets")
def _():
    def oracle(d):
        tau, P = d["tau"], d["P"]
        n = len(P)
        c = Checks()
        w = pr.first((x, y, a, b) for x, y, a, b in product(range(n), repeat=4)
                     if tau[a][b] and not tau[x][y] and not P[x][a] and not P[y][b])
        c("quasi-detachable", w is None, w)
        c("complements-agree", pr.apart_complement(tau, P) == pr.neg(tau))
        c("complement-quasiorder", pr.quasiorder(pr.neg(tau)))
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        tau = _R(A, d["tau"])
        logical, apart = rc.rel_complements(A, tau)
        AA = product_apartness(A, A)
        qd = classify_detachability(AA, Subset(AA, tuple(tau.matrix.ravel()))).qd
        return _conds(quasi_detachable=qd, agree=logical == apart, quasiorder=rc.is_quasiorder(A, logical))
    return oracle, construct


@register("coquasiorder-union", "set-coq2", "the union of two co-quasiorders is a co-quasiorder",
          topic="constructive-sets")
def _():
    def oracle(d):
        return _bool(pr.coquasiorder(pr.union(d["tau"], d["sigma"]), d["P"]))

    def construct(d):
        A = _A(d["E"], d["P"])
        return _bool(rc.is_coquasiorder(A, _R(A, d["tau"]) | _R(A, d["sigma"])))
    return oracle, construct


@register("coequivalence-quotient", "set-coe",
          "the complement of a co-equivalence is an equivalence whose classes inherit an apartness",
          topic="constructive-sets")
def _():
    def oracle(d):
        E, P, kappa = d["E"], d["P"], d["kappa"]
        c = Checks()
        r = _coe_quotient(E, P, kappa, c)
        if r is not None:
            cls, idx, _ = r
            comp = pr.neg(kappa)
            c("kappa-associated-with-complement", pr.associated(kappa, comp))
            c("equality-is-apartness-complement", pr.apart_complement(kappa, P) == comp)
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        return _cert(qt.quotient_by_coequivalence(A, _R(A, d["kappa"])).certificate)
    return oracle, construct


def _coker_oracle(d, c: Checks):
    f, P, P2, E2 = d["f"], d["P"], d["P2"], d["E2"]
    ker, coker = pr.pullback(f, E2), pr.pullback(f, P2)
    c("coker-coequivalence", pr.coequivalence(coker, P))
    c("coker-associated-with-ker", pr.associated(coker, ker))
    c("ker-in-coker-complement", pr.le(ker, pr.apart_complement(coker, P)))
    return ker, coker


@register("cokernel-coequivalence", "map-se",
          "the co-kernel of an se-map is a co-equivalence associated with the kernel",
          topic="constructive-sets")
def _():
    def oracle(d):
        c = Checks()
        _coker_oracle(d, c)
        return c.verdict()

    def construct(d):
        f = _f(d)
        ker, coker = mp.kernel_cokernel(f)
        _, apart = rc.rel_complements(f.domain, coker)
        return _conds(coequivalence=rc.is_coequivalence(f.domain, coker),
                      associated=rc.associated_with(coker, ker), ker_inside=ker <= apart)
    return oracle, construct


def _factor_oracle(d, cls, qap, c: Checks):
    f, E2, P2 = d["f"], d["E2"], d["P2"]
    k = len(cls)
    phi, ok = _quotient_map(f, cls, E2)
    c("phi-well-defined", ok)
    idx = _idx(cls, len(f))
    c("factorization", all(E2[phi[idx[x]]][f[x]] for x in range(len(f))))
    return phi, {"injective": _injective(phi, pr.diag(k), E2), "se": _se(phi, qap, P2),
                 "a_injective": _preserves(qap, P2, phi), "surjective": _surjective(phi, E2)}


@register("first-apartness-iso", "map-se",
          "an se-map factors through its kernel, carrying the co-kernel apartness, by an a-injective se-injection",
          topic="constructive-sets")
def _():
    def oracle(d):
        c = Checks()
        ker, coker = _coker_oracle(d, c)
        cls, _, qap = _mixed_quotient(d["E"], d["P"], ker, coker, c)
        _, fl = _factor_oracle(d, cls, qap, c)
        c("phi-injective", fl["injective"])
        c("phi-a-injective", fl["a_injective"])
        c("phi-se", fl["se"])
        if _surjective(d["f"], d["E2"]):
            c("phi-apartness-bijection", fl["surjective"])
        return c.verdict()

    def construct(d):
        return _cert(mp.first_apartness_iso(_f(d)).certificate)
    return oracle, construct


@register("defines-apartness-iff-disjoint", "set-equiv-coe",
          "a co-equivalence induces an apartness on the classes of an equivalence exactly when the two are disjoint",
          topic="constructive-sets")
def _():
    def oracle(d):
        E, P, eps, kappa = d["E"], d["P"], d["eps"], d["kappa"]
        n = len(E)
        cls = pr.classes(eps)
        k = len(cls)
        qap = pr.lift_exists(cls, kappa)
        idx = _idx(cls, n)
        # representative independence of the induced apartness
        well = all(kappa[x][y] == kappa[a][b] for x, y, a, b in product(range(n), repeat=4)
                   if eps[x][a] and eps[y][b])
        defines = well and pr.is_apartness(pr.diag(k), qap)
        disjoint = not any(eps[x][y] and kappa[x][y] for x in range(n) for y in range(n))
        c = Checks()
        c("defines-iff-disjoint", defines == disjoint)
        if defines:
            c("projection-se", _se(idx, P, qap))
            c("projection-surjective", _surjective(idx, pr.diag(k)))
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        eps, kappa = _R(A, d["eps"]), _R(A, d["kappa"])
        r = qt.defines_apartness_check(A, eps, kappa)
        disjoint = (eps & kappa).is_empty()
        if r.ok:
            return _conds(iff=disjoint, certificate=r.quotient.certificate.ok)
        return _bool(not disjoint)
    return oracle, construct


def _second_iso_oracle(d, c: Checks):
    f, P, E2, P2, kappa = d["f"], d["P"], d["E2"], d["P2"], d["kappa"]
    ker, coker = pr.pullback(f, E2), pr.pullback(f, P2)
    cls, _, qap = _mixed_quotient(d["E"], P, ker, kappa, c)
    _, fl = _factor_oracle(d, cls, qap, c)
    return coker, fl


@register("second-apartness-iso", "map-coe",
          "factoring through the kernel with a disjoint co-equivalence: the factor is se exactly when the "
          "co-kernel lies inside it, a-injective exactly when it lies inside the co-kernel",
          topic="constructive-sets")
def _():
    def oracle(d):
        c = Checks()
        coker, fl = _second_iso_oracle(d, c)
        kappa, f = d["kappa"], d["f"]
        c("phi-injective", fl["injective"])
        c("phi-se-iff-coker-in-kappa", fl["se"] == pr.le(coker, kappa))
        c("phi-a-injective-iff-kappa-in-coker", fl["a_injective"] == pr.le(kappa, coker))
        c("phi-se-implies-f-se", not fl["se"] or _se(f, d["P"], d["P2"]))
        return c.verdict()

    def construct(d):
        f = _f(d)
        return _cert(mp.second_apartness_iso(f, _R(f.domain, d["kappa"])).certificate)
    return oracle, construct


@register("second-apartness-iso-phi-apartness-embedding", "map-coe",
          "the factor through the kernel with a disjoint co-equivalence is always an a-injective se-injection",
          expected_fail=True, topic="constructive-sets")
def _():
    def oracle(d):
        c = Checks()
        _, fl = _second_iso_oracle(d, c)
        c("phi-se", fl["se"])
        c("phi-a-injective", fl["a_injective"])
        return c.verdict()

    def construct(d):
        f = _f(d)
        w = mp.second_apartness_iso(f, _R(f.domain, d["kappa"]))
        return _conds(phi_se=w.flags["phi_se"], phi_a_injective=w.flags["phi_a_injective"])
    return oracle, construct


def _birkhoff_constructive_oracle(E, P, tau, c: Checks, prefix=""):
    kappa = pr.union(tau, pr.inv(tau))
    c(prefix + "symmetrisation-coequivalence", pr.coequivalence(kappa, P))
    if c.failed:
        return None
    r = _coe_quotient(E, P, kappa, c, prefix)
    if r is None:
        return None
    cls, idx, qap = r
    k = len(cls)
    ups = pr.lift_exists(cls, tau)
    c(prefix + "order-well-defined", ups == pr.lift_forall(cls, tau))
    c(prefix + "order-coorder", pr.coorder(ups, qap))
    c(prefix + "projection-isotone", _preserves(tau, ups, idx))
    c(prefix + "projection-reverse-isotone", _reflects(tau, ups, idx))
    return cls, idx, qap, ups


@register("constructive-birkhoff", "set-coq",
          "a co-quasiorder induces a co-order on the classes of the complement of its symmetrisation",
          topic="constructive-sets")
def _():
    def oracle(d):
        c = Checks()
        _birkhoff_constructive_oracle(d["E"], d["P"], d["tau"], c)
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        return _cert(qt.birkhoff_constructive(A, _R(A, d["tau"])).certificate)
    return oracle, construct


def _pullback_coq_oracle(d, c: Checks):
    f, E, P, E2, P2, sigma = d["f"], d["E"], d["P"], d["E2"], d["P2"], d["sigma"]
    mu = pr.pullback(f, sigma)
    kappa = pr.union(mu, pr.inv(mu))
    coker = pr.pullback(f, P2)
    c("mu-coquasiorder", pr.coquasiorder(mu, P))
    c("kappa-coequivalence", pr.coequivalence(kappa, P))
    c("kappa-in-coker", pr.le(kappa, coker))
    if pr.coorder(sigma, P2):
        c("kappa-equals-coker", kappa == coker)
    if c.failed:
        return None
    dom = _birkhoff_constructive_oracle(E, P, mu, c, "domain:")
    cod = _birkhoff_constructive_oracle(E2, P2, sigma, c, "codomain:")
    if dom is None or cod is None:
        return None
    cls_f, idx_f, qap_f, ups_f = dom
    cls_s, idx_s, qap_s, ups_s = cod
    psi = tuple(idx_s[f[c0[0]]] for c0 in cls_f)
    c("psi-well-defined", all(psi[idx_f[x]] == idx_s[f[x]] for x in range(len(f))))
    c("psi-se", _se(psi, qap_f, qap_s))
    c("psi-a-injective", _preserves(qap_f, qap_s, psi))
    c("psi-isotone", _preserves(ups_f, ups_s, psi))
    c("psi-reverse-isotone", _reflects(ups_f, ups_s, psi))
    return dom, cod, psi


@register("pullback-coquasiorder-factorization", "map-coq",
          "pulling a co-quasiorder back along an se-map and factoring through both co-ordered quotients",
          topic="constructive-sets")
def _():
    def oracle(d):
        c = Checks()
        _pullback_coq_oracle(d, c)
        return c.verdict()

    def construct(d):
        f = _f(d)
        return _cert(mp.co_order_factorization(f, _R(f.codomain, d["sigma"])).certificate)
    return oracle, construct


def _tau_factor_oracle(d, c: Checks):
    f, E, P, E2, P2, tau = d["f"], d["E"], d["P"], d["E2"], d["P2"], d["tau"]
    r = _birkhoff_constructive_oracle(E, P, tau, c, "tau:")
    if r is None:
        return None
    cls, idx, qap, _ = r
    phi, ok = _quotient_map(f, cls, E2)
    c("phi-well-defined", ok)
    c("phi-se", _se(phi, qap, P2))
    c("factorization", all(E2[phi[idx[x]]][f[x]] for x in range(len(f))))
    return cls, phi


def _tight_factor():
    def oracle(d):
        c = Checks()
        _tau_factor_oracle(d, c)
        return c.verdict()

    def construct(d):
        f = _f(d)
        w = mp.co_order_factorization(f, _R(f.codomain, d["sigma"]), _R(f.domain, d["tau"]))
        return _cert(w.certificate)
    return oracle, construct


def _sigma_coorder(d):
    return pr.coorder(d["sigma"], d["P2"])


register("tight-codomain-factorization", "map-coq-tau",
         "into a tight codomain an se-map factors through the co-ordered quotient of any co-quasiorder "
         "containing the pull-back", expected_fail=True, topic="constructive-sets")(_tight_factor)
register("tight-codomain-coorder-factorization", "map-coq-tau",
         "into a tight co-ordered codomain an se-map factors through the co-ordered quotient of any "
         "co-quasiorder containing the pull-back", applies=_sigma_coorder, topic="constructive-sets")(_tight_factor)


# == constructive semigroups =========================================================

@register("semigroup-axioms", "semigroup",
          "axioms (A) and (S) hold, and (S) is co-compatibility of the apartness",
          topic="constructive-semigroups")
def _():
    def oracle(d):
        E, P, M = d["E"], d["P"], d["M"]
        w = pr.semigroup_witness(E, P, M)
        c = Checks()
        c("axioms", w is None, w)
        c("apartness-co-compatible", pr.cocompatible(P, M))
        return c.verdict()

    def construct(d):
        A = _A(d["E"], d["P"])
        M = np.array(d["M"], dtype=np.intp)
        bad = sg.check_semigroup_axioms(A, M)
        if bad:
            return FAIL, tuple(str(v) for v in bad)
        return _bool(sg.check_compatibility(_S(d["E"], d["P"], d["M"]), A.ap).co_full)
    return oracle, construct


@register("se-transformation-semigroup", "set",
          "strongly extensional self-maps under composition form a semigroup with apartness",
          max_size=3, topic="constructive-semigroups")
def _():
    def oracle(d):
        E, P = d["E"], d["P"]
        fs = _se_self_maps(E, P)
        pos = {f: i for i, f in enumerate(fs)}
        k = len(fs)
        comp = [[pos.get(tuple(fs[i][x] for x in fs[j])) for j in range(k)] for i in range(k)]
        c = Checks()
        w = pr.first((i, j) for i in range(k) for j in range(k) if comp[i][j] is None)
        c("closed-under-composition", w is None, w)
        if w is None:
            Em, Pm = _map_relations(E, P, fs)
            M = tuple(tuple(r) for r in comp)
            sw = pr.semigroup_witness(Em, Pm, M)
            c("semigroup-with-apartness", sw is None, sw)
        return c.verdict()

    def construct(d):
        T = sg.build_se_transformation_semigroup(_A(d["E"], d["P"]))
        T.as_semigroup()
        return _cert(T.certificate)
    return oracle, construct


_TSE_CACHE: dict = {}


def _tse_for(S1: sg.ApartnessSemigroup):
    key = (S1.base.eq.matrix.tobytes(), S1.base.ap.matrix.tobytes(), S1.n)
    if key not in _TSE_CACHE:
        if len(_TSE_CACHE) > 256:
            _TSE_CACHE.clear()
        _TSE_CACHE[key] = sg.build_se_transformation_semigroup(S1.base)
    return _TSE_CACHE[key]


@register("cayley-embedding", "semigroup",
          "left translations se-embed a semigroup with apartness into the se-maps on the semigroup with "
          "an identity adjoined", max_size=5, topic="constructive-semigroups")
def _():
    def oracle(d):
        E1, P1, M1 = _adjoin_identity(d["E"], d["P"], d["M"])
        m = len(E1)
        c = Checks()
        w = pr.semigroup_witness(E1, P1, M1)
        c("extended-semigroup", w is None, w)
        lam = [M1[a] for a in range(m)]
        w = pr.first((a,) for a in range(m) if not _se(lam[a], P1, P1))
        c("translations-se", w is None, w)
        w = pr.first((a, b) for a in range(m) for b in range(m)
                     if not all(E1[lam[M1[a][b]][x]][lam[a][lam[b][x]]] for x in range(m)))
        c("homomorphism", w is None, w)
        # f_a # f_b means some x with a x # b x
        w = pr.first((a, b) for a in range(m) for b in range(m)
                     if any(P1[lam[a][x]][lam[b][x]] for x in range(m)) and not P1[a][b])
        c("se", w is None, w)
        w = pr.first((a, b) for a in range(m) for b in range(m)
                     if all(E1[lam[a][x]][lam[b][x]] for x in range(m)) and not E1[a][b])
        c("injective", w is None, w)
        return c.verdict()

    def construct(d):
        Sg = _S(d["E"], d["P"], d["M"])
        return _cert(sg.cayley_embedding(Sg, _tse_for(sg.adjoin_identity(Sg))).certificate)
    return oracle, construct


@register("co-compatible-iff-left-right", "semigroup-coq",
          "a co-quasiorder is co-compatible exactly when it is left and right co-compatible",
          topic="constructive-semigroups")
def _():
    def oracle(d):
        tau, M = d["tau"], d["M"]
        return _bool(pr.cocompatible(tau, M) == (pr.left_cocompatible(tau, M) and pr.right_cocompatible(tau, M)))

    def construct(d):
        Sg = _S(d["E"], d["P"], d["M"])
        cp = sg.check_compatibility(Sg, _R(Sg.base, d["tau"]))
        return _bool(cp.co_full == (cp.co_left and cp.co_right))
    return oracle, construct


@register("cocongruence-quotient-semigroup", "semigroup-coe",
          "the complement of a co-congruence gives a quotient semigroup with apartness and an se-epimorphism",
          applies=lambda d: pr.cocompatible(d["kappa"], d["M"]), topic="constructive-semigroups")
def _():
    def oracle(d):
        c = Checks()
        r = _coe_quotient(d["E"], d["P"], d["kappa"], c)
        if r is not None:
            cls, _, qap = r
            _quotient_semigroup(d["M"], cls, qap, c)
        return c.verdict()

    def construct(d):
        Sg = _S(d["E"], d["P"], d["M"])
        return _cert(sg.quotient_semigroup(Sg, cocongruence=_R(Sg.base, d["kappa"])).certificate)
    return oracle, construct


@register("first-apartness-iso-semigroup", "semigroup-hom-se",
          "an se-homomorphism factors through its kernel, with the co-kernel apartness, by an apartness embedding",
          topic="constructive-semigroups")
def _():
    def oracle(d):
        c = Checks()
        ker, coker = _coker_oracle(d, c)
        c("coker-co-compatible", pr.cocompatible(coker, d["M"]))
        cls, _, qap = _mixed_quotient(d["E"], d["P"], ker, coker, c)
        table = _quotient_semigroup(d["M"], cls, qap, c)
        phi, fl = _factor_oracle(d, cls, qap, c)
        if table is not None:
            c("phi-homomorphism", _hom(phi, table, d["M2"], d["E2"]))
        c("phi-apartness-embedding", fl["injective"] and fl["a_injective"] and fl["se"])
        if _surjective(d["f"], d["E2"]):
            c("phi-apartness-isomorphism", fl["surjective"])
        return c.verdict()

    def construct(d):
        S, T = _ST(d)
        return _cert(sg.semigroup_iso_theorems(S, T, d["f"]).certificate)
    return oracle, construct


@register("mixed-quotient-semigroup", "semigroup-equiv-coe",
          "a co-congruence induces an apartness on the quotient by a congruence exactly when they are disjoint; "
          "the quotient is then a semigroup with apartness",
          applies=lambda d: pr.compatible(d["eps"], d["M"]) and pr.cocompatible(d["kappa"], d["M"]),
          topic="constructive-semigroups")
def _():
    def oracle(d):
        E, P, M, eps, kappa = d["E"], d["P"], d["M"], d["eps"], d["kappa"]
        n = len(E)
        disjoint = not any(eps[x][y] and kappa[x][y] for x in range(n) for y in range(n))
        c = Checks()
        cls = pr.classes(eps)
        qap = pr.lift_exists(cls, kappa)
        k = len(cls)
        defines = qap == pr.lift_forall(cls, kappa) and pr.is_apartness(pr.diag(k), qap)
        c("defines-iff-disjoint", defines == disjoint)
        if defines:
            _mixed_quotient(E, P, eps, kappa, c)
            _quotient_semigroup(M, cls, qap, c)
        return c.verdict()

    def construct(d):
        Sg = _S(d["E"], d["P"], d["M"])
        eps, kappa = _R(Sg.base, d["eps"]), _R(Sg.base, d["kappa"])
        disjoint = (eps & kappa).is_empty()
        ok = qt.defines_apartness_check(Sg.base, eps, kappa).ok
        if not disjoint:
            return _bool(not ok)
        return _conds(iff=ok, quotient=sg.quotient_semigroup(Sg, eps, kappa).certificate.ok)
    return oracle, construct


def _hom_coe_applies(d):
    return pr.cocompatible(d["kappa"], d["M"])


@register("second-apartness-iso-semigroup", "semigroup-hom-coe",
          "a homomorphism with a co-congruence disjoint from its kernel: the quotient is a semigroup with "
          "apartness and the factor's se and a-injectivity follow the co-kernel inclusions",
          applies=_hom_coe_applies, topic="constructive-semigroups")
def _():
    def oracle(d):
        c = Checks()
        coker, fl = _second_iso_oracle(d, c)
        cls = pr.classes(pr.pullback(d["f"], d["E2"]))
        qap = pr.lift_exists(cls, d["kappa"])
        table = _quotient_semigroup(d["M"], cls, qap, c)
        phi, _ = _quotient_map(d["f"], cls, d["E2"])
        if table is not None:
            c("phi-homomorphism", _hom(phi, table, d["M2"], d["E2"]))
        c("phi-injective", fl["injective"])
        c("phi-se-iff-coker-in-kappa", fl["se"] == pr.le(coker, d["kappa"]))
        c("phi-a-injective-iff-kappa-in-coker", fl["a_injective"] == pr.le(d["kappa"], coker))
        return c.verdict()

    def construct(d):
        S, T = _ST(d)
        return _cert(sg.semigroup_iso_theorems(S, T, d["f"], kappa=_R(S.base, d["kappa"])).certificate)
    return oracle, construct


@register("second-apartness-iso-semigroup-phi-se", "semigroup-hom-coe",
          "for an se-homomorphism the factor with a disjoint co-congruence is an se-homomorphism",
          applies=lambda d: _hom_coe_applies(d) and _se(d["f"], d["P"], d["P2"]),
          expected_fail=True, topic="constructive-semigroups")
def _():
    def oracle(d):
        c = Checks()
        _, fl = _second_iso_oracle(d, c)
        c("phi-se", fl["se"])
        return c.verdict()

    def construct(d):
        S, T = _ST(d)
        w = sg.semigroup_iso_theorems(S, T, d["f"], kappa=_R(S.base, d["kappa"]))
        return _bool(w.flags["phi_se"])
    return oracle, construct


def _coq_semigroup_oracle(E, P, M, tau, c: Checks, prefix=""):
    c(prefix + "kappa-co-compatible", pr.cocompatible(pr.union(tau, pr.inv(tau)), M))
    r = _birkhoff_constructive_oracle(E, P, tau, c, prefix)
    if r is None:
        return None
    cls, idx, qap, ups = r
    table = _quotient_semigroup(M, cls, qap, c, prefix)
    if table is not None:
        c(prefix + "order-co-compatible", pr.cocompatible(ups, table))
    return cls, idx, qap, ups, table


@register("co-ordered-semigroup-birkhoff", "semigroup-coq",
          "a co-compatible co-quasiorder gives a co-ordered quotient semigroup with apartness",
          applies=lambda d: pr.cocompatible(d["tau"], d["M"]), topic="constructive-semigroups")
def _():
    def oracle(d):
        c = Checks()
        _coq_semigroup_oracle(d["E"], d["P"], d["M"], d["tau"], c)
        return c.verdict()

    def construct(d):
        Sg = _S(d["E"], d["P"], d["M"])
        return _cert(sg.ordered_semigroup_birkhoff(Sg, _R(Sg.base, d["tau"])).certificate)
    return oracle, construct


@register("co-ordered-semigroup-factorization", "semigroup-hom-coq",
          "pulling a co-compatible co-quasiorder back along an se-homomorphism gives co-ordered quotient "
          "semigroups joined by an isotone, reverse isotone, a-injective se-homomorphism",
          topic="constructive-semigroups")
def _():
    def oracle(d):
        c = Checks()
        mu = pr.pullback(d["f"], d["sigma"])
        c("mu-co-compatible", pr.cocompatible(mu, d["M"]))
        r = _pullback_coq_oracle(d, c)
        if r is not None:
            (cls_f, _, qap_f, ups_f), (cls_s, _, qap_s, _), psi = r
            tf = _quotient_semigroup(d["M"], cls_f, qap_f, c, "domain:")
            ts = _quotient_semigroup(d["M2"], cls_s, qap_s, c, "codomain:")
            if tf is not None:
                c("order-co-compatible", pr.cocompatible(ups_f, tf))
            if tf is not None and ts is not None:
                c("psi-homomorphism", _hom(psi, tf, ts, pr.diag(len(cls_s))))
        return c.verdict()

    def construct(d):
        S, T = _ST(d)
        w = sg.co_ordered_semigroup_factorization(S, T, d["f"], _R(T.base, d["sigma"]))
        return _cert(w.certificate)
    return oracle, construct


def _tight_semigroup_factor():
    def oracle(d):
        c = Checks()
        r = _tau_factor_oracle(d, c)
        if r is not None:
            cls, phi = r
            table, ok = pr.quotient_table(cls, d["M"])
            c("multiplication-well-defined", ok)
            c("phi-homomorphism", _hom(phi, table, d["M2"], d["E2"]))
        return c.verdict()

    def construct(d):
        S, T = _ST(d)
        w = sg.co_ordered_semigroup_factorization(S, T, d["f"], _R(T.base, d["sigma"]), _R(S.base, d["tau"]))
        return _cert(w.certificate)
    return oracle, construct


register("co-ordered-semigroup-tau-factorization", "semigroup-hom-coq-tau",
         "into a tight codomain an se-homomorphism factors through the co-ordered quotient semigroup of any "
         "co-compatible co-quasiorder containing the pull-back", expected_fail=True,
         topic="constructive-semigroups")(_tight_semigroup_factor)
register("co-ordered-semigroup-tau-coorder-factorization", "semigroup-hom-coq-tau",
         "into a tight co-ordered semigroup an se-homomorphism factors through the co-ordered quotient "
         "semigroup of any co-compatible co-quasiorder containing the pull-back", applies=_sigma_coorder,
         topic="constructive-semigroups")(_tight_semigroup_factor)


# == bundled fixtures ================================================================

def _fix_carrier(d):
    c = Carrier(tuple(d["labels"]))
    return ApartnessSet(c, Rel(c, np.array(d["E"])), Rel(c, np.array(d["P"])))


def _names(d, vec):
    return {d["labels"][i] for i, b in enumerate(vec) if b}


def _pairs(d, R):
    L = d["labels"]
    return {(L[x], L[y]) for x in range(len(R)) for y in range(len(R)) if R[x][y]}


@register("example-1", "fixture:example1",
          "an order induces an order on the classes of the given equivalence",
          expected_fail=True, fails_from=0, topic="fixtures")
def _():
    return _antisym_oracle, _antisym_construct


@register("example-2", "fixture:example2",
          "complements of {a}: apartness complement {c}, logical complement {b, c}; "
          "detachable but neither strongly nor quasi-detachable", topic="fixtures")
def _():
    def oracle(d):
        Y = d["subsets"]["Y"]
        logical, apart = pr.subset_complements(d["P"], Y)
        dd, sd, qd = pr.detachability(d["P"], Y)
        c = Checks()
        c("apart-complement", _names(d, apart) == {"c"}, sorted(_names(d, apart)))
        c("logical-complement", _names(d, logical) == {"b", "c"}, sorted(_names(d, logical)))
        c("detachability", (dd, sd, qd) == (True, False, False), (dd, sd, qd))
        c("not-tight", not pr.tight(d["E"], d["P"]))
        return c.verdict()

    def construct(d):
        A = _fix_carrier(d)
        Y = Subset(A, d["subsets"]["Y"])
        logical, apart = complements(A, Y)
        r = classify_detachability(A, Y)
        return _conds(apart=apart.labels() == {"c"}, logical=logical.labels() == {"b", "c"},
                      detachability=(r.d, r.sd, r.qd) == (True, False, False), not_tight=not A.tight)
    return oracle, construct


_EX3_COMPLEMENT = {("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "a")}


@register("example-3", "fixture:example3",
          "the apartness complement of alpha is the stated five pairs and a proper part of the logical complement",
          topic="fixtures")
def _():
    def oracle(d):
        alpha = d["relations"]["alpha"]
        C = pr.apart_complement(alpha, d["P"])
        c = Checks()
        c("apart-complement", _pairs(d, C) == _EX3_COMPLEMENT, sorted(_pairs(d, C)))
        c("proper-subset", pr.le(C, pr.neg(alpha)) and C != pr.neg(alpha))
        return c.verdict()

    def construct(d):
        A = _fix_carrier(d)
        alpha = _R(A, d["relations"]["alpha"])
        logical, apart = rc.rel_complements(A, alpha)
        return _conds(apart=set(apart.pairs()) == _EX3_COMPLEMENT, proper=apart < logical)
    return oracle, construct


@register("example-4", "fixture:example4", "the table satisfies (A) and (S) under the stated apartness",
          topic="fixtures")
def _():
    def oracle(d):
        w = pr.semigroup_witness(d["E"], d["P"], d["M"])
        return _bool(w is None, w)

    def construct(d):
        A = _fix_carrier(d)
        bad = sg.check_semigroup_axioms(A, np.array(d["M"], dtype=np.intp))
        return _bool(not bad, tuple(str(v) for v in bad))
    return oracle, construct


@register("example-5", "fixture:example5",
          "f and g are se-maps, neither apart nor equal, so the se-map semigroup is not tight",
          topic="fixtures")
def _():
    def oracle(d):
        E, P = d["E"], d["P"]
        f, g = d["maps"]["f"], d["maps"]["g"]
        n = len(E)
        c = Checks()
        c("f-se", _se(f, P, P))
        c("g-se", _se(g, P, P))
        c("not-apart", not any(P[f[x]][g[x]] for x in range(n)))
        c("not-equal", not all(E[f[x]][g[x]] for x in range(n)))
        Em, Pm = _map_relations(E, P, _se_self_maps(E, P))
        c("not-tight", not pr.tight(Em, Pm))
        return c.verdict()

    def construct(d):
        A = _fix_carrier(d)
        T = sg.build_se_transformation_semigroup(A)
        f, g = d["maps"]["f"], d["maps"]["g"]
        inside = f in T and g in T
        if not inside:
            return FAIL, ("membership",)
        i, j = T.index(f), T.index(g)
        return _conds(not_apart=not T.ap(i, j), not_equal=not T.eq(i, j), not_tight=not T.is_tight())
    return oracle, construct


@register("example-6", "fixture:example6", "tau is a co-quasiorder on the semigroup", topic="fixtures")
def _():
    def oracle(d):
        tau = d["relations"]["tau"]
        return _bool(pr.coquasiorder(tau, d["P"]))

    def construct(d):
        A = _fix_carrier(d)
        return _bool(rc.is_coquasiorder(A, _R(A, d["relations"]["tau"])))
    return oracle, construct


def theorem_ids(include_fixtures: bool = True) -> list[str]:
    return [t for t, s in REGISTRY.items() if include_fixtures or not s.family.startswith("fixture:")]


def family_of(theorem_id: str) -> str:
    return REGISTRY[theorem_id].family
