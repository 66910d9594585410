import pytest

from apartness.oracle import REGISTRY, UnknownTheorem, fuzz_campaign, select_theorems
from apartness.oracle.campaign import TheoremReport, _plan


def test_worker_count_does_not_change_the_report():
    ids = ["coquasiorder-complement", "quotient-order-antisymmetric-for-arbitrary-equivalence",
           "co-compatible-iff-left-right"]
    one = fuzz_campaign([2, 3], ids, seed=5, workers=1).to_dict(timings=False)
    two = fuzz_campaign([2, 3], ids, seed=5, workers=2).to_dict(timings=False)
    assert one == two


def test_sampled_runs_are_seeded():
    a = fuzz_campaign([4], ["cocongruence-quotient-semigroup"], samples=30, seed=42).to_dict(timings=False)
    b = fuzz_campaign([4], ["cocongruence-quotient-semigroup"], samples=30, seed=42).to_dict(timings=False)
    assert a == b and a["theorems"][0]["modes"] == {"4": "sampled(30)"}


def test_example1_is_one_expected_failure():
    r = fuzz_campaign([2, 3], ["example-1"])
    t = r.get("example-1")
    assert t.instances == 1 and t.failed == 1 and not t.unexpected and r.ok


def test_first_failure_is_least_in_enumeration_order():
    r = fuzz_campaign([3], ["quotient-order-antisymmetric-for-arbitrary-equivalence"])
    t = r.theorems[0]
    assert t.failed > 0 and t.first_failure["index"] == 37


def test_expected_fail_that_passes_is_flagged():
    t = TheoremReport("x", "set", expected_fail=True, fails_from=2, modes={2: "exhaustive"},
                      instances=10, passed=10)
    assert t.unexpected
    # below the least size with a known counterexample a clean pass is fine
    t.fails_from = 3
    assert not t.unexpected


def test_disagreement_is_always_unexpected():
    t = TheoremReport("x", "set", expected_fail=False, instances=1, passed=1, disagreement_count=1)
    assert t.unexpected


def test_plan_respects_caps_and_size_limits():
    tid = "first-apartness-iso-semigroup"
    assert _plan(tid, [2, 3], None, 50) == [(2, "exhaustive", None), (3, "sampled(50)", 50)]
    assert _plan(tid, [3], None, 50, {"semigroup-hom-se": 3}) == [(3, "exhaustive", None)]
    assert _plan("example-4", [2, 3], None, 50) == [(0, "fixture", 1)]
    big = REGISTRY["cayley-embedding"].max_size + 1
    assert _plan("cayley-embedding", [big], 10, 50) == []


def test_select_theorems():
    assert select_theorems("all") == list(REGISTRY)
    assert set(select_theorems("kind:semigroup-hom-coe")) == {
        "second-apartness-iso-semigroup", "second-apartness-iso-semigroup-phi-se"}
    assert select_theorems("example-1, example-2") == ["example-1", "example-2"]
    with pytest.raises(UnknownTheorem):
        select_theorems(["nope"])
