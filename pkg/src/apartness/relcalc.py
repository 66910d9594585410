"""Relation calculus over a set with apartness.

Co-composition uses the universal reading: ``(x, z)`` is in ``a * b`` iff for
every ``y`` either ``a(x, y)`` or ``b(y, z)``. Under that reading a relation is
cotransitive exactly when it is contained in its own co-composite.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .carrier import ApartnessSet, Rel, least

KINDS = ("co-equivalence", "co-order", "co-quasiorder", "equivalence", "order", "quasiorder", "none")


def compose(alpha: Rel, beta: Rel) -> Rel:
    alpha._same(beta)
    m = (alpha.matrix.astype(np.int32) @ beta.matrix.astype(np.int32)) > 0
    return Rel(alpha.carrier, m)


def cocompose(alpha: Rel, beta: Rel) -> Rel:
    alpha._same(beta)
    # forall y (a(x,y) or b(y,z))  ==  not exists y (not a(x,y) and not b(y,z))
    na = (~alpha.matrix).astype(np.int32)
    nb = (~beta.matrix).astype(np.int32)
    return Rel(alpha.carrier, (na @ nb) == 0)


def associated_with(alpha: Rel, beta: Rel) -> bool:
    """``a(x,y) and b(y,z)`` always implies ``a(x,z)``."""
    return compose(alpha, beta) <= alpha


def rel_complements(A: ApartnessSet, alpha: Rel) -> tuple[Rel, Rel]:
    """Logical complement and apartness complement (under the product apartness)."""
    logical = ~alpha
    # (x,y) is apart from alpha iff no (a,b) in alpha has not x#a and not y#b
    N = (~A.ap.matrix).astype(np.int32)
    hits = N @ alpha.matrix.astype(np.int32) @ N.T
    return logical, Rel(A.carrier, hits == 0)


@dataclass(frozen=True)
class RelProperties:
    reflexive: bool
    symmetric: bool
    antisymmetric: bool
    transitive: bool
    irreflexive: bool
    strongly_irreflexive: bool
    cotransitive: bool
    coantisymmetric: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in PROPERTY_NAMES}


PROPERTY_NAMES = ("reflexive", "symmetric", "antisymmetric", "transitive", "irreflexive",
                  "strongly_irreflexive", "cotransitive", "coantisymmetric")


_MASKS = {
    "reflexive": lambda R, E, P: ~np.diag(R),
    "symmetric": lambda R, E, P: R & ~R.T,
    "antisymmetric": lambda R, E, P: R & R.T & ~E,
    "transitive": lambda R, E, P: R[:, :, None] & R[None, :, :] & ~R[:, None, :],
    "irreflexive": lambda R, E, P: R & E,
    "strongly_irreflexive": lambda R, E, P: R & ~P,
    # [x, y, z]: (x,y) in R but neither (x,z) nor (z,y)
    "cotransitive": lambda R, E, P: R[:, :, None] & ~R[:, None, :] & ~R.T[None, :, :],
    "coantisymmetric": lambda R, E, P: P & ~R & ~R.T,
}


def _masks(A: ApartnessSet, alpha: Rel, names=PROPERTY_NAMES) -> dict[str, np.ndarray]:
    R, E, P = alpha.matrix, A.eq.matrix, A.ap.matrix
    return {n: _MASKS[n](R, E, P) for n in names}


def check_properties(A: ApartnessSet, alpha: Rel) -> RelProperties:
    flags, wit = {}, {}
    for name, mask in _masks(A, alpha).items():
        w = least(mask)
        flags[name] = w is None
        if w is not None:
            wit[name] = A.carrier.names(w)
    return RelProperties(**flags, witnesses=wit)


def has(A: ApartnessSet, alpha: Rel, *names: str) -> bool:
    """Cheap conjunction of named properties (no witnesses)."""
    R, E, P = alpha.matrix, A.eq.matrix, A.ap.matrix
    return not any(_MASKS[n](R, E, P).any() for n in names)


def is_equivalence(A, r):
    return has(A, r, "reflexive", "symmetric", "transitive")


def is_quasiorder(A, r):
    return has(A, r, "reflexive", "transitive")


def is_order(A, r):
    return has(A, r, "reflexive", "transitive", "antisymmetric")


def is_coquasiorder(A, r):
    return has(A, r, "strongly_irreflexive", "cotransitive")


def is_coequivalence(A, r):
    return has(A, r, "strongly_irreflexive", "cotransitive", "symmetric")


def is_coorder(A, r):
    return has(A, r, "strongly_irreflexive", "cotransitive", "coantisymmetric")


@dataclass(frozen=True)
class RelClass:
    kind: str
    rel: Rel
    properties: RelProperties


def classify(A: ApartnessSet, alpha: Rel) -> RelClass:
    """Most specific kind; co-side first, equivalence before order on ties."""
    p = check_properties(A, alpha)
    coq = p.strongly_irreflexive and p.cotransitive
    q = p.reflexive and p.transitive
    if coq and p.symmetric:
        kind = "co-equivalence"
    elif coq and p.coantisymmetric:
        kind = "co-order"
    elif coq:
        kind = "co-quasiorder"
    elif q and p.symmetric:
        kind = "equivalence"
    elif q and p.antisymmetric:
        kind = "order"
    elif q:
        kind = "quasiorder"
    else:
        kind = "none"
    return RelClass(kind, alpha, p)
