import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from apartness.oracle import (FAIL, FAMILIES, PASS, REGISTRY, Instance, SignatureMismatch,
                              UnknownTheorem, find_counterexample, fixture_data, verify)
from apartness.oracle import enumerate as en
from apartness.oracle import predicates as pr
from apartness.oracle.enumerate import EnumSpec, SpaceTooLarge, enumerate_structures

EX2_AP = ((False, False, True), (False, False, True), (True, True, False))


# -- enumeration counts, checked against closed forms and hand counts ---------------

@pytest.mark.parametrize("n, bell", [(1, 1), (2, 2), (3, 5), (4, 15)])
def test_equivalences_are_bell_numbers(n, bell):
    assert len(en.equivalences(n)) == bell


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5)])
def test_apartnesses_over_the_diagonal(n, count):
    # an apartness over the diagonal is the complement of an equivalence
    assert len(en.apartness_relations(n)) == count
    assert sorted(en.apartness_relations(n)) == sorted(pr.neg(e) for e in en.equivalences(n))


@pytest.mark.parametrize("n, q, o", [(1, 1, 1), (2, 4, 3), (3, 29, 19), (4, 355, 219)])
def test_quasiorder_and_order_counts(n, q, o):
    # labelled preorders and partial orders
    assert len(en.quasiorders(n)) == q and len(en.orders(n)) == o


@pytest.mark.parametrize("n, count", [(1, 1), (2, 8), (3, 113)])
def test_associative_tables(n, count):
    # labelled semigroups of order n
    assert len(en.associative_tables(n)) == count


def test_semigroups_with_apartness_regression():
    counts = [sum(len(en.semigroups(n, pr.diag(n), P)) for P in en.apartness_relations(n)) for n in (1, 2, 3)]
    assert counts == [1, 16, 409]


def test_enum_spec_examples():
    assert len(list(enumerate_structures(EnumSpec(2, "apartness")))) == 2
    assert len(list(enumerate_structures(EnumSpec(1, "semigroup")))) == 1
    # empty, the whole apartness, {ac, bc} and {ca, cb}
    coq = list(enumerate_structures(EnumSpec(3, "co-quasiorder", over=(pr.diag(3), EX2_AP))))
    assert len(coq) == 4


def test_enum_spec_guards():
    with pytest.raises(SpaceTooLarge):
        list(enumerate_structures(EnumSpec(4, "semigroup")))
    with pytest.raises(ValueError):
        list(enumerate_structures(EnumSpec(2, "relation", budget=3)))
    with pytest.raises(ValueError):
        list(enumerate_structures(EnumSpec(2, "no-such-kind")))


def test_sampling_is_seeded():
    a = list(enumerate_structures(EnumSpec(3, "semigroup", budget=5, seed=7)))
    b = list(enumerate_structures(EnumSpec(3, "semigroup", budget=5, seed=7)))
    assert a == b


def test_exhaustive_order_is_stable():
    first = list(itertools.islice(FAMILIES["semigroup-coq"].exhaustive(2), 40))
    again = list(itertools.islice(FAMILIES["semigroup-coq"].exhaustive(2), 40))
    assert first == again


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_family_samples_are_valid(family):
    rng = np.random.default_rng(3)
    for n in (1, 2, 3):
        d = FAMILIES[family].sample(n, rng)
        assert pr.is_apartness(d["E"], d["P"])
        if "M" in d:
            assert pr.semigroup_witness(d["E"], d["P"], d["M"]) is None


# -- registry --------------------------------------------------------------------

def test_registry_entries_are_complete():
    for tid, spec in REGISTRY.items():
        assert spec.theorem_id == tid
        assert callable(spec.oracle) and callable(spec.construct)
        assert spec.summary and spec.topic
        assert spec.family in FAMILIES or spec.family.startswith("fixture:")


def test_expected_fail_entries():
    expected = {tid for tid, s in REGISTRY.items() if s.expected_fail}
    assert expected == {
        "example-1",
        "irreflexive-implies-strongly-irreflexive",
        "quotient-order-antisymmetric-for-arbitrary-equivalence",
        "quasiorder-factor-injective",
        "second-apartness-iso-phi-apartness-embedding",
        "second-apartness-iso-semigroup-phi-se",
        "tight-codomain-factorization",
        "co-ordered-semigroup-tau-factorization",
    }


def test_verify_example1_fails_with_witness():
    r = verify("example-1", fixture_data("example1"))
    assert r.verdict == FAIL and r.expected_fail
    assert r.witness == ("antisymmetric", ("[a]", "[c]"))
    assert r.agree


def test_verify_empty_coequivalence_passes():
    d = {"E": pr.diag(3), "P": pr.neg(pr.diag(3)), "kappa": pr.empty(3)}
    assert verify("coequivalence-quotient", Instance("set-coe", d)).verdict == PASS


def test_verify_errors():
    with pytest.raises(UnknownTheorem):
        verify("no-such-theorem", Instance("set", {}))
    with pytest.raises(SignatureMismatch):
        verify("coequivalence-quotient", Instance("set-coe", {"E": pr.diag(2)}))


@pytest.mark.parametrize("tid", sorted(t for t in REGISTRY if t.startswith("example-")))
def test_fixture_theorems_agree(tid):
    r = verify(tid, fixture_data(REGISTRY[tid].family.split(":")[1]))
    assert r.agree
    assert (r.verdict == FAIL) == REGISTRY[tid].expected_fail


@settings(max_examples=60)
@given(st.sampled_from(sorted(t for t, s in REGISTRY.items() if not s.family.startswith("fixture:"))),
       st.integers(0, 2 ** 32 - 1), st.integers(1, 3))
def test_oracle_and_construction_agree_on_samples(tid, seed, n):
    spec = REGISTRY[tid]
    n = min(n, spec.max_size)
    d = FAMILIES[spec.family].sample(n, np.random.default_rng(seed))
    r = verify(tid, Instance(spec.family, d))
    assert r.agree, (r.verdict, r.construction, r.witness, r.construction_witness)
    if not spec.expected_fail:
        assert r.verdict != FAIL


# -- counterexample search ---------------------------------------------------------

def test_find_counterexample_none_for_a_theorem():
    assert find_counterexample("sd-implies-qd", range(1, 4)) is None


def test_find_counterexample_irreflexive_gap():
    cx = find_counterexample("irreflexive-implies-strongly-irreflexive", [3], over=(pr.diag(3), EX2_AP))
    # {(b, a)} is irreflexive, and b, a are not apart
    assert cx.size == 3 and cx.witness == (1, 0)


def test_find_counterexample_respects_budget():
    assert find_counterexample("quotient-order-antisymmetric-for-arbitrary-equivalence", [3], budget=5) is None


def test_find_counterexample_alias():
    cx = find_counterexample("quotient-order-antisymmetric-for-arbitrary-ε", range(1, 6))
    assert cx is not None and cx.size <= 5
