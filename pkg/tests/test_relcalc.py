from hypothesis import given, strategies as st

from apartness import ApartnessSet, Rel, check_properties, classify, cocompose, compose, rel_complements
from apartness.relcalc import associated_with, is_coequivalence, is_coquasiorder, is_quasiorder
from apartness.oracle import predicates as pr

from conftest import as_mat, relations, set_with_coquasiorder, set_with_relation, to_rel


def test_example3_apartness_complement(ex):
    sf = ex["example3"]
    A, alpha = sf.apartness_set(), sf.relation("alpha")
    logical, apart = rel_complements(A, alpha)
    assert sorted(apart.pairs()) == [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b"), ("c", "c")]
    assert apart < logical and len(logical) == 7


def test_compose_small():
    A = ApartnessSet.discrete("abc")
    r = A.rel([("a", "b")])
    s = A.rel([("b", "c")])
    assert compose(r, s).pairs() == [("a", "c")]
    assert compose(s, r).is_empty()


def test_cocompose_of_full_and_empty():
    A = ApartnessSet.discrete("ab")
    full, empty = Rel.full(A.carrier), Rel.empty(A.carrier)
    # for all y: r(x,y) or s(y,z)
    assert cocompose(full, empty) == full
    assert cocompose(empty, empty) == empty
    assert cocompose(empty, full) == full


def test_classify_kinds():
    A = ApartnessSet.discrete("abc", [("a", "c"), ("b", "c")])
    assert classify(A, Rel.empty(A.carrier)).kind == "co-equivalence"
    assert classify(A, A.ap).kind == "co-equivalence"
    assert classify(A, A.rel([("a", "c"), ("b", "c")])).kind == "co-order"
    assert classify(A, Rel.full(A.carrier)).kind == "equivalence"
    assert classify(A, A.rel([("a", "a"), ("b", "b"), ("c", "c"), ("a", "b")])).kind == "order"
    le = A.rel([(x, y) for x in "abc" for y in "abc" if not (x == "c" and y != "c")])
    assert classify(A, le).kind == "quasiorder"
    assert classify(A, A.rel([("a", "b")])).kind == "none"


def test_property_witnesses_are_labelled():
    A = ApartnessSet.discrete("ab", [("a", "b")])
    p = check_properties(A, A.rel([("a", "b")]))
    assert not p.symmetric and p.witnesses["symmetric"] == ("a", "b")
    assert not p.reflexive and p.witnesses["reflexive"] == ("a",)


@given(set_with_relation())
def test_properties_match_oracle(pair):
    A, alpha = pair
    R, E, P = as_mat(alpha), as_mat(A.eq), as_mat(A.ap)
    p = check_properties(A, alpha)
    assert p.reflexive == pr.reflexive(R)
    assert p.symmetric == pr.symmetric(R)
    assert p.transitive == pr.transitive(R)
    assert p.antisymmetric == pr.antisymmetric(R, E)
    assert p.irreflexive == pr.irreflexive(R, E)
    assert p.strongly_irreflexive == pr.strongly_irreflexive(R, P)
    assert p.cotransitive == pr.cotransitive(R)
    assert p.coantisymmetric == pr.coantisymmetric(R, P)


@given(set_with_relation(), st.data())
def test_composition_matches_oracle(pair, data):
    A, r = pair
    s = to_rel(A.carrier, data.draw(relations(A.n)))
    assert as_mat(compose(r, s)) == pr.compose(as_mat(r), as_mat(s))
    assert as_mat(cocompose(r, s)) == pr.cocompose(as_mat(r), as_mat(s))
    assert associated_with(r, s) == pr.associated(as_mat(r), as_mat(s))


@given(set_with_relation())
def test_complements_match_oracle(pair):
    A, alpha = pair
    logical, apart = rel_complements(A, alpha)
    assert as_mat(logical) == pr.neg(as_mat(alpha))
    assert as_mat(apart) == pr.apart_complement(as_mat(alpha), as_mat(A.ap))
    assert apart <= logical


@given(set_with_coquasiorder())
def test_coquasiorder_complement_is_quasiorder(pair):
    A, tau = pair
    assert is_coquasiorder(A, tau)
    logical, apart = rel_complements(A, tau)
    assert apart == logical
    assert is_quasiorder(A, logical)
    assert is_coequivalence(A, tau | tau.inverse)


@given(set_with_relation())
def test_cotransitive_iff_below_cocomposite(pair):
    A, alpha = pair
    assert check_properties(A, alpha).cotransitive == (alpha <= cocompose(alpha, alpha))
