import pytest
from hypothesis import assume, given, strategies as st

from apartness import (ApartnessSet, CertificateFailure, Rel, SetoidMap, co_order_factorization,
                       first_apartness_iso, first_iso_classical, kernel_cokernel, second_apartness_iso)
from apartness.maps import KappaMeetsKernel, NotContainedInKernel, NotSe, factor_through, pullback
from apartness.relcalc import is_coequivalence
from apartness.oracle import predicates as pr
from apartness.oracle.enumerate import transitive_closure

from conftest import apartness_sets, as_mat, partitions, to_rel


@st.composite
def maps(draw, se=False):
    A = draw(apartness_sets(max_size=4))
    B = draw(apartness_sets(max_size=3))
    graph = tuple(draw(st.lists(st.integers(0, B.n - 1), min_size=A.n, max_size=A.n)))
    f = SetoidMap(A, B, graph)
    if se:
        assume(f.se)
    return f


def test_kernel_and_cokernel_by_hand():
    A = ApartnessSet.discrete("abc", [("a", "c"), ("b", "c")])
    B = ApartnessSet.discrete("xy", [("x", "y")])
    f = SetoidMap.from_labels(A, B, {"a": "x", "b": "x", "c": "y"})
    ker, coker = kernel_cokernel(f)
    assert sorted(ker.pairs()) == [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b"), ("c", "c")]
    assert coker == A.ap


def test_first_apartness_iso_on_a_quotient_map():
    A = ApartnessSet.discrete("abc", [("a", "c"), ("b", "c")])
    B = ApartnessSet.discrete("xy", [("x", "y")])
    f = SetoidMap.from_labels(A, B, {"a": "x", "b": "x", "c": "y"})
    w = first_apartness_iso(f)
    assert w.quotient.class_sets() == [{"a", "b"}, {"c"}]
    assert w.phi.apartness_bijective and w.certificate.ok


def test_first_apartness_iso_needs_se():
    A = ApartnessSet.discrete("ab")
    B = ApartnessSet.discrete("xy", [("x", "y")])
    with pytest.raises(NotSe):
        first_apartness_iso(SetoidMap(A, B, (0, 1)))


def test_factor_through_requires_containment():
    A = ApartnessSet.discrete("ab")
    f = SetoidMap(A, A, (0, 1))
    with pytest.raises(NotContainedInKernel):
        factor_through(f, Rel.full(A.carrier))


def test_second_iso_rejects_kappa_meeting_kernel():
    A = ApartnessSet.discrete("ab", [("a", "b")])
    B = ApartnessSet.discrete("x")
    with pytest.raises(KappaMeetsKernel):
        second_apartness_iso(SetoidMap(A, B, (0, 0)), A.ap)


def test_tight_codomain_variant_fails_for_non_coorder_sigma():
    # sigma empty is a co-quasiorder but not a co-order on a two-point tight set;
    # the identity then cannot factor through the one-class quotient by tau = {}
    A = ApartnessSet.discrete("ab", [("a", "b")])
    f = SetoidMap.identity(A)
    empty = Rel.empty(A.carrier)
    with pytest.raises(CertificateFailure) as e:
        co_order_factorization(f, empty, tau=empty)
    [check] = e.value.certificate.failures()
    assert check.name == "factor-well-defined" and check.witness == ("b",)


def test_tight_codomain_variant_with_coorder_sigma():
    A = ApartnessSet.discrete("ab", [("a", "b")])
    f = SetoidMap.identity(A)
    sigma = A.rel([("a", "b")])
    fac = co_order_factorization(f, sigma, tau=sigma)
    assert fac.phi.se and fac.kappa == A.ap


@given(maps())
def test_first_iso_classical_matches_oracle(f):
    w = first_iso_classical(f)
    ker = pr.pullback(f.graph, as_mat(f.codomain.eq))
    assert [tuple(c) for c in w.quotient.classes] == pr.classes(ker)
    assert w.phi.injective
    assert all(w.phi(w.quotient.projection(x)) == f(x) for x in range(f.domain.n))


@given(maps(se=True))
def test_first_apartness_iso_properties(f):
    w = first_apartness_iso(f)
    _, coker = kernel_cokernel(f)
    assert is_coequivalence(f.domain, coker)
    assert as_mat(w.quotient.induced_ap) == pr.lift_exists(pr.classes(as_mat(kernel_cokernel(f)[0])),
                                                          as_mat(coker))
    assert w.phi.injective and w.phi.a_injective and w.phi.se


@given(maps(), st.data())
def test_second_iso_biconditionals(f, data):
    ker, coker = kernel_cokernel(f)
    # kappa = complement of an equivalence coarser than ker and the non-apart pairs
    lab = data.draw(partitions(f.domain.n))
    base = pr.union(pr.union(as_mat(ker), pr.neg(as_mat(f.domain.ap))),
                    pr.mat(f.domain.n, lambda x, y: lab[x] == lab[y]))
    eq = transitive_closure(pr.union(base, pr.inv(base)))
    kappa = to_rel(f.domain.carrier, pr.neg(eq))
    w = second_apartness_iso(f, kappa)
    assert w.flags["phi_se"] == pr.le(as_mat(coker), as_mat(kappa))
    assert w.flags["phi_a_injective"] == pr.le(as_mat(kappa), as_mat(coker))


@given(maps(se=True))
def test_pullback_matches_oracle(f):
    sigma = f.codomain.ap
    assert as_mat(pullback(f, sigma)) == pr.pullback(f.graph, as_mat(sigma))
