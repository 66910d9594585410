"""Instance families for the theorem registry.

Each family yields dictionaries of raw data (matrices as tuples of tuples
of bools, tables and graphs as tuples of ints) and can either walk every
instance at a given carrier size or draw one instance from a seeded
generator. All families use the diagonal equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

import numpy as np

from . import enumerate as en
from . import predicates as pr


@dataclass
class Instance:
    kind: str
    data: dict

    def describe(self) -> str:
        if self.kind.startswith("fixture:"):
            return self.kind
        parts = []
        for k, v in self.data.items():
            if isinstance(v, tuple) and v and isinstance(v[0], tuple) and isinstance(v[0][0], bool):
                parts.append(f"{k}=" + "/".join("".join("1" if b else "0" for b in row) for row in v))
            elif isinstance(v, tuple) and v and isinstance(v[0], tuple):
                parts.append(f"{k}=" + "/".join("".join(str(b) for b in row) for row in v))
            else:
                parts.append(f"{k}={v}")
        return " ".join(parts)


@dataclass(frozen=True)
class Family:
    name: str
    exhaustive: Callable[[int], Iterator[dict]]
    sample: Callable[[int, np.random.Generator], dict]
    max_exhaustive: int = 3       # larger sizes are sampled


FAMILIES: dict[str, Family] = {}


def family(name: str, max_exhaustive: int = 3):
    def deco(pair):
        ex, sm = pair()
        FAMILIES[name] = Family(name, ex, sm, max_exhaustive)
        return pair
    return deco


def _sets(n):
    E = pr.diag(n)
    for P in en.apartness_relations(n):
        yield E, P


def _sample_set(n, rng):
    return en.sample_apartness(rng, n)


def _pick(rng, seq):
    return seq[int(rng.integers(len(seq)))]


@family("set")
def _():
    def ex(n):
        for E, P in _sets(n):
            yield {"E": E, "P": P}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        return {"E": E, "P": P}
    return ex, sm


@family("set-pair")
def _():
    def ex(n):
        for E, P in _sets(n):
            for m in range(1, n + 1):
                for E2, P2 in _sets(m):
                    yield {"E": E, "P": P, "E2": E2, "P2": P2}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        E2, P2 = _sample_set(int(rng.integers(1, n + 1)), rng)
        return {"E": E, "P": P, "E2": E2, "P2": P2}
    return ex, sm


@family("set-subset")
def _():
    def ex(n):
        for E, P in _sets(n):
            for bits in product((False, True), repeat=n):
                yield {"E": E, "P": P, "Y": bits}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        return {"E": E, "P": P, "Y": tuple(bool(b) for b in rng.random(n) < 0.5)}
    return ex, sm


@family("set-rel")
def _():
    def ex(n):
        for E, P in _sets(n):
            for R in en.all_relations(n):
                yield {"E": E, "P": P, "R": R}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        # bias towards relations inside the apartness so that the
        # strongly irreflexive branch is exercised too
        R = en.random_relation(rng, n)
        if rng.random() < 0.5:
            R = pr.meet(R, P)
        return {"E": E, "P": P, "R": R}
    return ex, sm


@family("set-rel2", max_exhaustive=2)
def _():
    def ex(n):
        for E, P in _sets(n):
            for R in en.all_relations(n):
                for S in en.all_relations(n):
                    yield {"E": E, "P": P, "R": R, "S": S}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        R, S = en.random_relation(rng, n), en.random_relation(rng, n)
        if rng.random() < 0.5:
            R = pr.meet(R, P)
        if rng.random() < 0.5:
            S = pr.meet(S, P)
        return {"E": E, "P": P, "R": R, "S": S}
    return ex, sm


@family("set-rel3", max_exhaustive=2)
def _():
    def ex(n):
        rels = en.all_relations(n)
        for E, P in _sets(n):
            for R, S, T in product(rels, repeat=3):
                yield {"E": E, "P": P, "R": R, "S": S, "T": T}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        R, S = en.random_relation(rng, n), en.random_relation(rng, n)
        T = pr.union(R, en.random_relation(rng, n)) if rng.random() < 0.5 else en.random_relation(rng, n)
        return {"E": E, "P": P, "R": R, "S": S, "T": T}
    return ex, sm


@family("set-rel4", max_exhaustive=2)
def _():
    def ex(n):
        rels = en.all_relations(n)
        for E, P in _sets(n):
            for R, S, T, U in product(rels, repeat=4):
                yield {"E": E, "P": P, "R": R, "S": S, "T": T, "U": U}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        R, S, T, U = (en.random_relation(rng, n) for _ in range(4))
        return {"E": E, "P": P, "R": R, "S": S, "T": T, "U": U}
    return ex, sm


@family("set-equiv")
def _():
    def ex(n):
        for E, P in _sets(n):
            for eps in en.equivalences(n):
                yield {"E": E, "P": P, "eps": eps}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        return {"E": E, "P": P, "eps": en.random_partition(rng, n)}
    return ex, sm


@family("set-equiv-rel")
def _():
    def ex(n):
        for E, P in _sets(n):
            for eps in en.equivalences(n):
                for R in en.all_relations(n):
                    yield {"E": E, "P": P, "eps": eps, "R": R}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        return {"E": E, "P": P, "eps": en.random_partition(rng, n), "R": en.random_relation(rng, n)}
    return ex, sm


@family("set-quasiorder")
def _():
    def ex(n):
        for E, P in _sets(n):
            for rho in en.quasiorders(n):
                yield {"E": E, "P": P, "rho": rho}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        return {"E": E, "P": P, "rho": en.sample_quasiorder_above(rng, pr.diag(n))}
    return ex, sm


@family("order-equiv")
def _():
    # classical: the apartness is empty
    def ex(n):
        E = pr.diag(n)
        for alpha in en.orders(n):
            for eps in en.equivalences(n):
                yield {"E": E, "P": pr.empty(n), "alpha": alpha, "eps": eps}

    def sm(n, rng):
        E = pr.diag(n)
        for _ in range(1000):
            alpha = en.sample_quasiorder_above(rng, pr.diag(n))
            if pr.antisymmetric(alpha, E):
                break
        else:
            alpha = E
        return {"E": E, "P": pr.empty(n), "alpha": alpha, "eps": en.random_partition(rng, n)}
    return ex, sm


@family("set-coq")
def _():
    def ex(n):
        for E, P in _sets(n):
            for tau in en.coquasiorders(P):
                yield {"E": E, "P": P, "tau": tau}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        return {"E": E, "P": P, "tau": en.sample_coquasiorder(rng, P)}
    return ex, sm


@family("set-coq2")
def _():
    def ex(n):
        for E, P in _sets(n):
            pool = en.coquasiorders(P)
            for tau in pool:
                for sigma in pool:
                    yield {"E": E, "P": P, "tau": tau, "sigma": sigma}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        return {"E": E, "P": P, "tau": en.sample_coquasiorder(rng, P), "sigma": en.sample_coquasiorder(rng, P)}
    return ex, sm


@family("set-coe")
def _():
    def ex(n):
        for E, P in _sets(n):
            for kappa in en.coequivalences(P):
                yield {"E": E, "P": P, "kappa": kappa}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        return {"E": E, "P": P, "kappa": en.sample_coequivalence(rng, P)}
    return ex, sm


@family("set-equiv-coe")
def _():
    def ex(n):
        for E, P in _sets(n):
            for eps in en.equivalences(n):
                for kappa in en.coequivalences(P):
                    yield {"E": E, "P": P, "eps": eps, "kappa": kappa}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        return {"E": E, "P": P, "eps": en.random_partition(rng, n), "kappa": en.sample_coequivalence(rng, P)}
    return ex, sm


@family("set-coq-equiv")
def _():
    def ex(n):
        for E, P in _sets(n):
            for alpha in en.coquasiorders(P):
                for beta in en.equivalences(n):
                    yield {"E": E, "P": P, "alpha": alpha, "beta": beta}

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        alpha = en.sample_coquasiorder(rng, P)
        # half the draws are disjoint from alpha by construction
        beta = en.sample_equivalence_above(rng, pr.diag(n)) if rng.random() < 0.5 else \
            en.sample_equivalence_above(rng, pr.neg(pr.union(alpha, pr.inv(alpha))))
        if not pr.equivalence(beta):
            beta = pr.diag(n)
        return {"E": E, "P": P, "alpha": alpha, "beta": beta}
    return ex, sm


# -- maps ----------------------------------------------------------------------------

def _maps(n):
    for E, P in _sets(n):
        for m in range(1, n + 1):
            for E2, P2 in _sets(m):
                for f in en.maps(n, m):
                    yield {"E": E, "P": P, "E2": E2, "P2": P2, "f": tuple(f)}


def _sample_map(n, rng, se=False):
    E, P = _sample_set(n, rng)
    m = int(rng.integers(1, n + 1))
    E2, P2 = _sample_set(m, rng)
    if se or rng.random() < 0.5:
        f = en.sample_se_map(rng, E, P, E2, P2)
    else:
        f = tuple(int(v) for v in rng.integers(0, m, size=n))
    return {"E": E, "P": P, "E2": E2, "P2": P2, "f": f}


def _is_se(d):
    return pr.map_flags(d["f"], d["E"], d["P"], d["E2"], d["P2"])["se"]


@family("map")
def _():
    return _maps, _sample_map


@family("map-se")
def _():
    def ex(n):
        return (d for d in _maps(n) if _is_se(d))
    return ex, lambda n, rng: _sample_map(n, rng, se=True)


@family("map-equiv")
def _():
    def ex(n):
        for d in _maps(n):
            ker = pr.pullback(d["f"], d["E2"])
            for eps in en.equivalences(n):
                if pr.le(eps, ker):
                    yield dict(d, eps=eps)

    def sm(n, rng):
        d = _sample_map(n, rng)
        ker = pr.pullback(d["f"], d["E2"])
        blocks = pr.classes(ker)
        # refine each kernel class by a random partition of it
        lab = [0] * n
        nxt = 0
        for b in blocks:
            sub = en.random_partition(rng, len(b))
            cls = pr.classes(sub)
            for c in cls:
                for i in c:
                    lab[b[i]] = nxt
                nxt += 1
        return dict(d, eps=pr.mat(n, lambda x, y: lab[x] == lab[y]))
    return ex, sm


@family("map-coe")
def _():
    def ex(n):
        for d in _maps(n):
            ker = pr.pullback(d["f"], d["E2"])
            for kappa in en.coequivalences(d["P"]):
                if not any(kappa[x][y] and ker[x][y] for x in range(n) for y in range(n)):
                    yield dict(d, kappa=kappa)

    def sm(n, rng):
        d = _sample_map(n, rng)
        ker = pr.pullback(d["f"], d["E2"])
        # complement of an equivalence above both the kernel and the non-apart pairs
        eq = en.sample_equivalence_above(rng, pr.union(ker, pr.neg(d["P"])))
        return dict(d, kappa=pr.neg(eq))
    return ex, sm


@family("ordered-map")
def _():
    def ex(n):
        E = pr.diag(n)
        for m in range(1, n + 1):
            for sigma in en.orders(m):
                for f in en.maps(n, m):
                    yield {"E": E, "P": pr.empty(n), "E2": pr.diag(m), "P2": pr.empty(m),
                           "f": tuple(f), "sigma": sigma}

    def sm(n, rng):
        m = int(rng.integers(1, n + 1))
        sigma = _sample_order(rng, m)
        f = tuple(int(v) for v in rng.integers(0, m, size=n))
        return {"E": pr.diag(n), "P": pr.empty(n), "E2": pr.diag(m), "P2": pr.empty(m), "f": f, "sigma": sigma}
    return ex, sm


def _sample_order(rng, m):
    E = pr.diag(m)
    for _ in range(1000):
        s = en.sample_quasiorder_above(rng, E)
        if pr.antisymmetric(s, E):
            return s
    return E


@family("ordered-map-rel", max_exhaustive=2)
def _():
    def ex(n):
        for d in FAMILIES["ordered-map"].exhaustive(n):
            for rho in en.all_relations(n):
                yield dict(d, rho=rho)

    def sm(n, rng):
        return dict(FAMILIES["ordered-map"].sample(n, rng), rho=en.random_relation(rng, n))
    return ex, sm


@family("ordered-map-quasi")
def _():
    def ex(n):
        for d in FAMILIES["ordered-map"].exhaustive(n):
            eta = pr.pullback(d["f"], d["sigma"])
            for rho in en.quasiorders(n):
                if pr.le(rho, eta):
                    yield dict(d, rho=rho)

    def sm(n, rng):
        d = FAMILIES["ordered-map"].sample(n, rng)
        eta = pr.pullback(d["f"], d["sigma"])
        rho = en.transitive_closure(pr.union(pr.meet(en.random_relation(rng, n), eta), pr.diag(n)))
        return dict(d, rho=rho)
    return ex, sm


@family("map-coq")
def _():
    def ex(n):
        for d in _maps(n):
            if _is_se(d):
                for sigma in en.coquasiorders(d["P2"]):
                    yield dict(d, sigma=sigma)

    def sm(n, rng):
        d = _sample_map(n, rng, se=True)
        return dict(d, sigma=en.sample_coquasiorder(rng, d["P2"]))
    return ex, sm


@family("map-coq-tau")
def _():
    def ex(n):
        for d in _maps(n):
            if not (_is_se(d) and pr.tight(d["E2"], d["P2"])):
                continue
            for sigma in en.coquasiorders(d["P2"]):
                mu = pr.pullback(d["f"], sigma)
                for tau in en.coquasiorders(d["P"]):
                    if pr.le(mu, tau):
                        yield dict(d, sigma=sigma, tau=tau)

    def sm(n, rng):
        E, P = _sample_set(n, rng)
        m = int(rng.integers(1, n + 1))
        E2, P2 = pr.diag(m), pr.neg(pr.diag(m))
        f = en.sample_se_map(rng, E, P, E2, P2)
        sigma = en.sample_coquasiorder(rng, P2)
        mu = pr.pullback(f, sigma)
        # tau = complement of a quasiorder inside the complement of mu
        for _ in range(200):
            tau = en.sample_coquasiorder(rng, P)
            if pr.le(mu, tau):
                break
        else:
            tau = mu
        return {"E": E, "P": P, "E2": E2, "P2": P2, "f": f, "sigma": sigma, "tau": tau}
    return ex, sm


# -- semigroups ----------------------------------------------------------------------

def _semigroups(n):
    for E, P in _sets(n):
        for M in en.semigroups(n, E, P):
            yield {"E": E, "P": P, "M": M}


def _sample_semigroup(n, rng):
    E, P = _sample_set(n, rng)
    return {"E": E, "P": P, "M": en.sample_semigroup(rng, E, P)}


@family("semigroup")
def _():
    return _semigroups, _sample_semigroup


@family("semigroup-quasiorder")
def _():
    def ex(n):
        for d in _semigroups(n):
            for rho in en.quasiorders(n):
                yield dict(d, rho=rho)

    def sm(n, rng):
        d = _sample_semigroup(n, rng)
        return dict(d, rho=en.sample_quasiorder_above(rng, pr.diag(n)))
    return ex, sm


@family("semigroup-coq")
def _():
    def ex(n):
        for d in _semigroups(n):
            for tau in en.coquasiorders(d["P"]):
                yield dict(d, tau=tau)

    def sm(n, rng):
        d = _sample_semigroup(n, rng)
        return dict(d, tau=en.sample_coquasiorder(rng, d["P"]))
    return ex, sm


@family("semigroup-equiv")
def _():
    def ex(n):
        for d in _semigroups(n):
            for eps in en.equivalences(n):
                yield dict(d, eps=eps)

    def sm(n, rng):
        d = _sample_semigroup(n, rng)
        return dict(d, eps=en.random_partition(rng, n))
    return ex, sm


@family("semigroup-coe")
def _():
    def ex(n):
        for d in _semigroups(n):
            for kappa in en.coequivalences(d["P"]):
                yield dict(d, kappa=kappa)

    def sm(n, rng):
        d = _sample_semigroup(n, rng)
        return dict(d, kappa=en.sample_coequivalence(rng, d["P"]))
    return ex, sm


@family("semigroup-equiv-coe")
def _():
    def ex(n):
        for d in _semigroups(n):
            for eps in en.equivalences(n):
                for kappa in en.coequivalences(d["P"]):
                    yield dict(d, eps=eps, kappa=kappa)

    def sm(n, rng):
        d = _sample_semigroup(n, rng)
        return dict(d, eps=en.random_partition(rng, n), kappa=en.sample_coequivalence(rng, d["P"]))
    return ex, sm


def _homs(n, se_only=False):
    for d in _semigroups(n):
        for m in range(1, n + 1):
            for t in _semigroups(m):
                for f in en.maps(n, m):
                    if pr.homomorphism(f, d["M"], t["M"], t["E"]):
                        h = dict(d, E2=t["E"], P2=t["P"], M2=t["M"], f=tuple(f))
                        if not se_only or _is_se(h):
                            yield h


def _sample_hom(n, rng, se=False):
    d = _sample_semigroup(n, rng)
    m = int(rng.integers(1, n + 1))
    t = _sample_semigroup(m, rng)
    h = dict(d, E2=t["E"], P2=t["P"], M2=t["M"])
    for _ in range(300):
        f = en.sample_se_map(rng, d["E"], d["P"], t["E"], t["P"]) if se or rng.random() < 0.5 else \
            tuple(int(v) for v in rng.integers(0, m, size=n))
        if pr.homomorphism(f, d["M"], t["M"], t["E"]) and (not se or _is_se(dict(h, f=f))):
            return dict(h, f=f)
    # constant maps onto an idempotent are strongly extensional homomorphisms
    e = next(x for x in range(m) if t["M"][x][x] == x) if any(t["M"][x][x] == x for x in range(m)) else None
    if e is None:   # every finite semigroup has an idempotent; unreachable
        raise en.SamplingError("no idempotent")
    return dict(h, f=(e,) * n)


@family("semigroup-hom", max_exhaustive=2)
def _():
    return _homs, _sample_hom


@family("semigroup-hom-se", max_exhaustive=2)
def _():
    return (lambda n: _homs(n, se_only=True)), (lambda n, rng: _sample_hom(n, rng, se=True))


@family("semigroup-hom-coe", max_exhaustive=2)
def _():
    def ex(n):
        for h in _homs(n):
            ker = pr.pullback(h["f"], h["E2"])
            for kappa in en.coequivalences(h["P"]):
                if pr.cocompatible(kappa, h["M"]) and \
                        not any(kappa[x][y] and ker[x][y] for x in range(n) for y in range(n)):
                    yield dict(h, kappa=kappa)

    def sm(n, rng):
        h = _sample_hom(n, rng)
        ker = pr.pullback(h["f"], h["E2"])
        for _ in range(100):
            kappa = pr.neg(en.sample_equivalence_above(rng, pr.union(ker, pr.neg(h["P"]))))
            if pr.cocompatible(kappa, h["M"]):
                return dict(h, kappa=kappa)
        return dict(h, kappa=pr.empty(n))
    return ex, sm


@family("semigroup-hom-order", max_exhaustive=2)
def _():
    def ex(n):
        for h in _homs(n):
            m = len(h["E2"])
            for sigma in en.orders(m):
                if pr.compatible(sigma, h["M2"]):
                    yield dict(h, sigma=sigma)

    def sm(n, rng):
        h = _sample_hom(n, rng)
        m = len(h["E2"])
        for _ in range(100):
            sigma = _sample_order(rng, m)
            if pr.compatible(sigma, h["M2"]):
                return dict(h, sigma=sigma)
        return dict(h, sigma=pr.diag(m))
    return ex, sm


@family("semigroup-hom-order-quasi", max_exhaustive=2)
def _():
    def ex(n):
        for h in FAMILIES["semigroup-hom-order"].exhaustive(n):
            eta = pr.pullback(h["f"], h["sigma"])
            for rho in en.quasiorders(n):
                if pr.le(rho, eta) and pr.compatible(rho, h["M"]):
                    yield dict(h, rho=rho)

    def sm(n, rng):
        h = FAMILIES["semigroup-hom-order"].sample(n, rng)
        eta = pr.pullback(h["f"], h["sigma"])
        for _ in range(100):
            rho = en.transitive_closure(pr.union(pr.meet(en.random_relation(rng, n), eta), pr.diag(n)))
            if pr.compatible(rho, h["M"]):
                return dict(h, rho=rho)
        return dict(h, rho=pr.diag(n))
    return ex, sm


@family("semigroup-hom-coq", max_exhaustive=2)
def _():
    def ex(n):
        for h in _homs(n, se_only=True):
            for sigma in en.coquasiorders(h["P2"]):
                if pr.cocompatible(sigma, h["M2"]):
                    yield dict(h, sigma=sigma)

    def sm(n, rng):
        h = _sample_hom(n, rng, se=True)
        for _ in range(100):
            sigma = en.sample_coquasiorder(rng, h["P2"])
            if pr.cocompatible(sigma, h["M2"]):
                return dict(h, sigma=sigma)
        return dict(h, sigma=pr.empty(len(h["E2"])))
    return ex, sm


@family("semigroup-hom-coq-tau", max_exhaustive=2)
def _():
    def ex(n):
        for h in FAMILIES["semigroup-hom-coq"].exhaustive(n):
            if not pr.tight(h["E2"], h["P2"]):
                continue
            mu = pr.pullback(h["f"], h["sigma"])
            for tau in en.coquasiorders(h["P"]):
                if pr.le(mu, tau) and pr.cocompatible(tau, h["M"]):
                    yield dict(h, tau=tau)

    def sm(n, rng):
        for _ in range(50):
            h = FAMILIES["semigroup-hom-coq"].sample(n, rng)
            if not pr.tight(h["E2"], h["P2"]):
                continue
            mu = pr.pullback(h["f"], h["sigma"])
            for _ in range(50):
                tau = en.sample_coquasiorder(rng, h["P"])
                if pr.le(mu, tau) and pr.cocompatible(tau, h["M"]):
                    return dict(h, tau=tau)
            if pr.cocompatible(mu, h["M"]):
                return dict(h, tau=mu)
        raise en.SamplingError("no tight-codomain instance found")
    return ex, sm


def fixture_data(name: str) -> Instance:
    """A bundled fixture as raw data, tagged with the kind ``fixture:<name>``.

    Named relations appear both under ``relations`` and as top-level keys;
    a relation called ``epsilon`` is also available as ``eps``.
    """
    from ..structfile import load_fixture

    sf = load_fixture(name)
    n = sf.carrier.n

    def m(R):
        return tuple(tuple(bool(v) for v in row) for row in R.matrix)

    rels = {k: m(R) for k, R in sf.relations.items()}
    data = {"labels": sf.carrier.labels, "E": m(sf.eq), "P": m(sf.ap), "relations": rels,
            "subsets": {k: tuple(i in v for i in range(n)) for k, v in sf.subsets.items()},
            "maps": {k: tuple(int(g) for g in spec.graph) for k, spec in sf.maps.items()}}
    if sf.operation is not None:
        data["M"] = tuple(tuple(int(v) for v in row) for row in sf.operation)
    data.update(rels)
    if "epsilon" in rels:
        data["eps"] = rels["epsilon"]
    return Instance(f"fixture:{name}", data)
