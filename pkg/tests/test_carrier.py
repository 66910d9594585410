import numpy as np
import pytest
from hypothesis import given

from apartness import (ApartnessError, ApartnessSet, AxiomError, Carrier, Rel, SetoidMap, Subset,
                       classify_detachability, complements, is_tight, product_apartness)
from apartness.carrier import (CarrierMismatch, NonExtensional, NonExtensionalSubset,
                               check_apartness_axioms, least)
from apartness.oracle import predicates as pr

from conftest import apartness_sets, as_mat


def test_carrier_rejects_duplicates_and_empty():
    with pytest.raises(ApartnessError):
        Carrier(("a", "a"))
    with pytest.raises(ApartnessError):
        Carrier(())


def test_carrier_lookup():
    c = Carrier(("x", "y", "z"))
    assert c.index("z") == 2 and c.names((2, 0)) == ("z", "x")
    with pytest.raises(ApartnessError):
        c.index("w")


def test_least_is_row_major_first_hit():
    m = np.zeros((3, 3, 3), dtype=bool)
    m[2, 0, 0] = m[1, 2, 1] = True
    assert least(m) == (1, 2, 1)
    assert least(np.zeros((2, 2), dtype=bool)) is None


def test_rel_algebra():
    c = Carrier(("a", "b"))
    r = Rel.from_pairs(c, [("a", "b")])
    assert r.inverse.pairs() == [("b", "a")]
    assert (r | r.inverse) == Rel.from_pairs(c, [("a", "b"), ("b", "a")])
    assert r < Rel.full(c) and not (r < r)
    assert (~r).pairs() == [("a", "a"), ("b", "a"), ("b", "b")]
    assert ("a", "b") in r and (1, 0) not in r
    assert len(Rel.diagonal(c)) == 2


def test_rel_carrier_mismatch():
    with pytest.raises(CarrierMismatch):
        Rel.empty(Carrier(("a",))) | Rel.empty(Carrier(("b",)))


def test_rel_matrix_is_frozen():
    r = Rel.diagonal(Carrier.of_size(2))
    with pytest.raises(ValueError):
        r.matrix[0, 1] = True


def test_axiom_witnesses():
    c = Carrier(("a", "b", "c"))
    eq = Rel.diagonal(c)
    # a#b only one way: symmetry fails at (a, b); c is apart from neither
    v = check_apartness_axioms(c, eq, Rel.from_pairs(c, [("a", "b")]))
    assert [(x.axiom, x.witness) for x in v] == [("Ap2", ("a", "b")), ("Ap3", ("a", "c", "b"))]
    # a#c symmetric but b apart from neither: co-transitivity fails at (a, b, c)
    v = check_apartness_axioms(c, eq, Rel.from_pairs(c, [("a", "c"), ("c", "a")]))
    assert [(x.axiom, x.witness) for x in v] == [("Ap3", ("a", "b", "c"))]
    v = check_apartness_axioms(c, eq, Rel.from_pairs(c, [("a", "a")]))
    assert v[0].axiom == "Ap1"


def test_ap5_catches_apart_and_equal():
    c = Carrier(("a", "b"))
    full = Rel.full(c)
    ap = Rel.from_pairs(c, [("a", "b"), ("b", "a")])
    names = [v.axiom for v in check_apartness_axioms(c, full, ap)]
    assert "Ap5" in names
    with pytest.raises(AxiomError):
        ApartnessSet(c, full, ap)


def test_tightness():
    assert ApartnessSet.discrete("ab", [("a", "b")]).tight
    assert not ApartnessSet.discrete("ab").tight
    assert is_tight(ApartnessSet.discrete("a"))


def test_example2_complements(ex):
    A, Y = ex["example2"].apartness_set(), ex["example2"].subset("Y")
    logical, apart = complements(A, Y)
    # c is apart from a; b is not, so only c is in the apartness complement
    assert apart.labels() == {"c"}
    assert logical.labels() == {"b", "c"}
    d = classify_detachability(A, Y)
    assert (d.d, d.sd, d.qd) == (True, False, False)


def test_subset_extensionality():
    c = Carrier(("a", "b"))
    A = ApartnessSet(c, Rel.full(c), Rel.empty(c))
    with pytest.raises(NonExtensionalSubset):
        Subset(A, (True, False))


def test_product_apartness_counts():
    A = ApartnessSet.discrete("ab", [("a", "b")])
    B = ApartnessSet.discrete("xy")
    P = product_apartness(A, B)
    # (p, q) apart iff first components apart: 2 * 2 * 2 = 8 ordered pairs
    assert P.n == 4 and len(P.ap) == 8
    assert not P.tight


def test_setoid_map_flags():
    A = ApartnessSet.discrete("abc", [("a", "c"), ("b", "c")])
    B = ApartnessSet.discrete("xy", [("x", "y")])
    f = SetoidMap.from_labels(A, B, {"a": "x", "b": "x", "c": "y"})
    assert f.se and f.surjective and not f.injective and f.a_injective
    g = SetoidMap.from_labels(A, B, {"a": "x", "b": "y", "c": "y"})
    # g(a) # g(b) while a, b are not apart
    assert not g.se


def test_setoid_map_rejects_non_extensional():
    c = Carrier(("a", "b"))
    A = ApartnessSet(c, Rel.full(c), Rel.empty(c))
    B = ApartnessSet.discrete("xy")
    with pytest.raises(NonExtensional):
        SetoidMap(A, B, (0, 1))
    with pytest.raises(ApartnessError):
        SetoidMap(A, B, (0, 5))


@given(apartness_sets())
def test_validated_sets_satisfy_oracle_axioms(A):
    assert pr.is_apartness(as_mat(A.eq), as_mat(A.ap))
    assert A.tight == pr.tight(as_mat(A.eq), as_mat(A.ap))


@given(apartness_sets())
def test_complements_match_oracle(A):
    P = as_mat(A.ap)
    for mask in range(2 ** A.n):
        Y = Subset(A, tuple(bool(mask >> i & 1) for i in range(A.n)))
        logical, apart = complements(A, Y)
        lo, ap = pr.subset_complements(P, Y.members)
        assert logical.members == tuple(lo) and apart.members == tuple(ap)
        assert apart <= logical
        d = classify_detachability(A, Y)
        assert (d.d, d.sd, d.qd) == tuple(pr.detachability(P, Y.members))
