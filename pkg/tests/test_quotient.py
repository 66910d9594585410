import pytest
from hypothesis import given

from apartness import (ApartnessSet, Rel, birkhoff_classical, birkhoff_constructive,
                       defines_apartness_check, induced_quotient_relation, quotient_by_coequivalence,
                       quotient_by_equivalence)
from apartness.quotient import EqNotRefined, NotACoquasiorder, NotAnEquivalence, partition
from apartness.relcalc import check_properties, is_coorder, is_order
from apartness.oracle import predicates as pr

from conftest import as_mat, set_with_coquasiorder, set_with_quasiorder


def test_partition_order_follows_first_member():
    A = ApartnessSet.discrete("abcd")
    eps = A.rel([(x, y) for x in "abcd" for y in "abcd" if (x in "bd") == (y in "bd")])
    classes, class_of = partition(eps)
    assert classes == ((0, 2), (1, 3)) and class_of == (0, 1, 0, 1)


def test_example1_induced_relation_not_antisymmetric(ex):
    sf = ex["example1"]
    A, alpha, eps = sf.apartness_set(), sf.relation("alpha"), sf.relation("epsilon")
    Q = quotient_by_equivalence(A, eps)
    assert Q.class_sets() == [{"a", "e"}, {"b"}, {"c", "d"}]
    theta, _ = induced_quotient_relation(Q, alpha)
    p = check_properties(Q.quotient, theta)
    # a <= d and c <= e put [a] and [c] below each other
    assert not p.antisymmetric
    assert p.witnesses["antisymmetric"] == ("[a]", "[c]")
    assert ("[c]", "[a]") in theta


def test_quotient_rejects_non_equivalence():
    A = ApartnessSet.discrete("ab")
    with pytest.raises(NotAnEquivalence):
        quotient_by_equivalence(A, A.rel([("a", "b")]))


def test_quotient_rejects_coarser_equality():
    c = ApartnessSet.discrete("ab").carrier
    A = ApartnessSet(c, Rel.full(c), Rel.empty(c))
    with pytest.raises(EqNotRefined):
        quotient_by_equivalence(A, Rel.diagonal(c))


def test_example6_constructive_birkhoff_on_the_set(ex):
    sf = ex["example6"]
    Q = birkhoff_constructive(sf.apartness_set(), sf.relation("tau"))
    assert Q.class_sets() == [{"a", "b"}, {"c"}, {"d"}, {"e"}]
    assert Q.certificate.ok
    assert is_coorder(Q.quotient, Q.induced_rel)
    # tau(c, a) lifts to ([c], [a])
    assert ("[c]", "[a]") in Q.induced_rel and ("[a]", "[c]") not in Q.induced_rel


def test_constructive_birkhoff_needs_coquasiorder():
    A = ApartnessSet.discrete("ab")
    with pytest.raises(NotACoquasiorder):
        birkhoff_constructive(A, A.rel([("a", "b")]))


def test_defines_apartness_reports_overlap():
    A = ApartnessSet.discrete("abc", [("a", "b"), ("a", "c"), ("b", "c")])
    kappa = A.ap
    eps = A.rel([("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "a")])
    r = defines_apartness_check(A, eps, kappa)
    assert not r.ok and r.witness == ("a", "b")
    r = defines_apartness_check(A, Rel.diagonal(A.carrier), kappa)
    assert r.ok and r.quotient.size == 3


@given(set_with_quasiorder())
def test_birkhoff_classical_matches_oracle(pair):
    A, rho = pair
    Q = birkhoff_classical(A, rho)
    R = as_mat(rho)
    cls = pr.classes(pr.meet(R, pr.inv(R)))
    assert [tuple(c) for c in Q.classes] == cls
    assert as_mat(Q.induced_rel) == pr.lift_exists(cls, R)
    assert is_order(Q.quotient, Q.induced_rel)


@given(set_with_coquasiorder())
def test_constructive_birkhoff_matches_oracle(pair):
    A, tau = pair
    Q = birkhoff_constructive(A, tau)
    T = as_mat(tau)
    cls = pr.classes(pr.neg(pr.union(T, pr.inv(T))))
    assert [tuple(c) for c in Q.classes] == cls
    assert as_mat(Q.induced_rel) == pr.lift_exists(cls, T) == pr.lift_forall(cls, T)
    assert pr.coorder(as_mat(Q.induced_rel), as_mat(Q.quotient.ap))
    assert Q.projection.se and Q.projection.surjective


@given(set_with_coquasiorder())
def test_coequivalence_quotient_is_apartness_set(pair):
    A, tau = pair
    kappa = tau | tau.inverse
    Q = quotient_by_coequivalence(A, kappa)
    assert pr.is_apartness(as_mat(Q.quotient.eq), as_mat(Q.quotient.ap))
    assert Q.projection.se
