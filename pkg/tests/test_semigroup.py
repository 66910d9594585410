import pytest
from hypothesis import given, settings, strategies as st

from apartness import (ApartnessSemigroup, ApartnessSet, AxiomError, Rel, build_se_transformation_semigroup,
                       cayley_embedding, check_compatibility, ordered_semigroup_birkhoff,
                       quotient_semigroup, semigroup_iso_theorems)
from apartness.semigroup import (NotCoCompatible, NotHomomorphism, adjoin_identity,
                                 check_semigroup_axioms, is_cocongruence, is_congruence,
                                 regular_representation)
from apartness.oracle import predicates as pr

from conftest import as_mat, semigroups, to_rel


def _ex4_with(ap_blocks, ex):
    sf = ex["example4"]
    A = ApartnessSet.from_partition(sf.carrier, ap_blocks)
    return A, sf.operation


def test_example4_satisfies_axioms(ex):
    Sg = ex["example4"].semigroup()
    assert check_semigroup_axioms(Sg.base, Sg.mul) == []


def test_example4_full_apartness_keeps_s(ex):
    # with the diagonal equality and every distinct pair apart, (S) only asks
    # that equal factors give equal products
    A, M = _ex4_with([[0], [1], [2], [3], [4]], ex)
    assert check_semigroup_axioms(A, M) == []


def test_example4_coarser_apartness_breaks_s(ex):
    A, M = _ex4_with([[0, 1, 2, 4], [3]], ex)
    v = check_semigroup_axioms(A, M)
    # aa = b and ac = d are apart, while a, a and a, c are not
    assert [(x.axiom, x.witness) for x in v] == [("S", ("a", "a", "a", "c"))]
    with pytest.raises(AxiomError):
        ApartnessSemigroup(A, M)


def test_associativity_witness():
    A = ApartnessSet.discrete("ab")
    # aa = b, everything else a: (aa)b = bb = a but a(ab) = aa = b
    M = [[1, 0], [0, 0]]
    v = check_semigroup_axioms(A, M)
    assert v[0].axiom == "A" and v[0].witness == ("a", "a", "b")


def test_example5_se_maps(ex):
    sf = ex["example5"]
    T = build_se_transformation_semigroup(sf.apartness_set())
    assert T.size == 15
    f, g = T.index(sf.map("f").graph), T.index(sf.map("g").graph)
    assert not T.ap(f, g) and not T.eq(f, g)
    assert not T.is_tight()
    assert T.certificate.ok


def test_example6_tau_is_not_co_compatible(ex):
    Sg = ex["example6"].semigroup()
    tau = ex["example6"].relation("tau")
    c = check_compatibility(Sg, tau)
    # a*c = d and c*c = c with (d, c) in tau, yet neither (a, c) nor (c, c) is
    assert not c.co_full and c.witnesses["co_full"] == ("a", "c", "c", "c")
    with pytest.raises(NotCoCompatible):
        ordered_semigroup_birkhoff(Sg, tau)


def test_cayley_on_example4(ex):
    w = cayley_embedding(ex["example4"].semigroup())
    assert w.certificate.ok and w.extended.n == 6
    assert len(set(w.graph)) == 6


def test_adjoin_identity_fresh_label():
    A = ApartnessSet.discrete(["1", "x"], [("1", "x")])
    Sg = ApartnessSemigroup(A, [[0, 0], [0, 0]])
    S1 = adjoin_identity(Sg)
    assert S1.labels[-1] == "1'"
    assert all(S1(2, a) == a == S1(a, 2) for a in range(3))


def test_homomorphism_check_reports_pair():
    A = ApartnessSet.discrete("ab")
    S = ApartnessSemigroup(A, [[0, 1], [1, 0]])
    T = ApartnessSemigroup(A, [[0, 0], [0, 0]])
    with pytest.raises(NotHomomorphism):
        semigroup_iso_theorems(S, T, (0, 1), classical=True)


@given(semigroups)
def test_axioms_match_oracle(Sg):
    assert pr.semigroup_witness(as_mat(Sg.base.eq), as_mat(Sg.base.ap), tuple(map(tuple, Sg.mul.tolist()))) is None


@given(semigroups, st.data())
def test_compatibility_flags_match_oracle(Sg, data):
    n = Sg.n
    bits = data.draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    R = tuple(tuple(bits[i * n:(i + 1) * n]) for i in range(n))
    M = tuple(map(tuple, Sg.mul.tolist()))
    c = check_compatibility(Sg, to_rel(Sg.base.carrier, R))
    assert c.full == pr.compatible(R, M)
    assert c.left == pr.left_compatible(R, M)
    assert c.right == pr.right_compatible(R, M)
    assert c.co_full == pr.cocompatible(R, M)
    assert c.co_left == pr.left_cocompatible(R, M)
    assert c.co_right == pr.right_cocompatible(R, M)


@settings(max_examples=30)
@given(semigroups)
def test_cayley_certificates(Sg):
    w = cayley_embedding(Sg)
    names = {c.name for c in w.certificate.checks}
    assert {"homomorphism", "se", "injective"} <= names and w.certificate.ok
    assert regular_representation(Sg).certificate.ok


@given(semigroups)
def test_cokernel_of_projection_is_cocongruence(Sg):
    ap = Sg.base.ap
    assert is_cocongruence(Sg, ap)
    assert is_congruence(Sg, Rel.diagonal(Sg.base.carrier))
    q = quotient_semigroup(Sg, cocongruence=ap)
    assert q.certificate.ok and q.semigroup.n == len(pr.classes(pr.neg(as_mat(ap))))


@given(semigroups)
def test_identity_iso(Sg):
    r = semigroup_iso_theorems(Sg, Sg, tuple(range(Sg.n)))
    assert r.certificate.ok and r.quotient.semigroup.n == Sg.n
