"""Acceptance criteria, one test (or a pass/xfail pair) per criterion.

Campaign-backed criteria share session-scoped reports so each suite runs
once; criterion 10 reads the oracle/construction disagreement counts from
the same reports. Run with ``pytest tests/test_acceptance.py -v``; the
summary section lists one line per criterion.
"""
import os
import time

import pytest

from apartness import (ApartnessSet, birkhoff_constructive, build_se_transformation_semigroup,
                       check_compatibility, classify, classify_detachability, complements,
                       induced_quotient_relation, ordered_semigroup_birkhoff, quotient_by_equivalence,
                       rel_complements)
from apartness.relcalc import check_properties
from apartness.semigroup import NotCoCompatible, check_semigroup_axioms
from apartness.structfile import load_fixture
from apartness.oracle import REGISTRY, find_counterexample, fuzz_campaign
from apartness.oracle import predicates as pr
from apartness.oracle.suites import (BIRKHOFF_SUITE, COQUASIORDER_SUITE, MASTER_SUITE, SAMPLED_SUITE,
                                     SEMIGROUP_SUITE)

from conftest import as_mat

CPUS = len(os.sched_getaffinity(0))


def _timed(cfg):
    t0 = time.perf_counter()
    report = cfg.run()
    return report, time.perf_counter() - t0


@pytest.fixture(scope="session")
def coq_run():
    return _timed(COQUASIORDER_SUITE)


@pytest.fixture(scope="session")
def semigroup_run():
    return _timed(SEMIGROUP_SUITE)


@pytest.fixture(scope="session")
def sampled_run():
    return _timed(SAMPLED_SUITE)


@pytest.fixture(scope="session")
def birkhoff_run():
    return _timed(BIRKHOFF_SUITE)


def _summary(report) -> str:
    return ", ".join(f"{t.theorem_id} {t.passed}/{t.instances}" for t in report.theorems)


# -- fixtures ----------------------------------------------------------------------

def test_c1_example2_complements(record):
    t0 = time.perf_counter()
    sf = load_fixture("example2")
    A, Y = sf.apartness_set(), sf.subset("Y")
    logical, apart = complements(A, Y)
    d = classify_detachability(A, Y)
    dt = time.perf_counter() - t0
    # oracle: x is in the apartness complement iff x is apart from every member
    P = as_mat(A.ap)
    lo, ap = pr.subset_complements(P, Y.members)
    ok = (apart.labels() == {"c"} and logical.labels() == {"b", "c"}
          and (d.d, d.sd, d.qd) == (True, False, False) == pr.detachability(P, Y.members)
          and apart.members == ap and logical.members == lo and dt < 1.0)
    record("1", ok, f"apart={sorted(apart.labels())} logical={sorted(logical.labels())} "
                    f"d/sd/qd={d.d}/{d.sd}/{d.qd} in {dt * 1000:.1f} ms")
    assert ok


def test_c2_example3_apartness_complement(record):
    sf = load_fixture("example3")
    A, alpha = sf.apartness_set(), sf.relation("alpha")
    logical, apart = rel_complements(A, alpha)
    expected = {("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "a")}
    oracle = pr.apart_complement(as_mat(alpha), as_mat(A.ap))
    ok = set(apart.pairs()) == expected and as_mat(apart) == oracle and apart < logical
    record("2", ok, f"~alpha={sorted(apart.pairs())}, strictly inside the logical complement")
    assert ok


def test_c3_example4_valid_under_stated_apartness(record):
    Sg = load_fixture("example4").semigroup()
    ok = check_semigroup_axioms(Sg.base, Sg.mul) == [] and \
        pr.semigroup_witness(as_mat(Sg.base.eq), as_mat(Sg.base.ap), tuple(map(tuple, Sg.mul.tolist()))) is None
    record("3a", ok, "table satisfies (A) and (S) with the stated apartness")
    assert ok


@pytest.mark.xfail(strict=True, reason="with the diagonal equality, the full off-diagonal apartness "
                                       "reduces (S) to well-definedness, which every table satisfies")
def test_c3_flip_to_full_apartness_breaks_s(record):
    sf = load_fixture("example4")
    A = ApartnessSet.from_partition(sf.carrier, [[i] for i in range(sf.carrier.n)])
    v = [x for x in check_semigroup_axioms(A, sf.operation) if x.axiom == "S"]
    record("3b", bool(v), "flip to full off-diagonal apartness: (S) "
                          + (f"fails at {v[0].witness}" if v else "still holds (unattainable, see ledger)"))
    assert v


def test_c3_substitute_apartness_breaks_s(record):
    # keeping d apart from the rest but merging a, b, c, e does break (S)
    sf = load_fixture("example4")
    A = ApartnessSet.from_partition(sf.carrier, [[0, 1, 2, 4], [3]])
    v = [x for x in check_semigroup_axioms(A, sf.operation) if x.axiom == "S"]
    M = tuple(map(tuple, sf.operation.tolist()))
    ok = bool(v) and v[0].witness == ("a", "a", "a", "c") and \
        pr.semigroup_witness(as_mat(A.eq), as_mat(A.ap), M) is not None
    record("3c", ok, f"substitute apartness {{a,b,c,e}}|{{d}}: (S) fails at {v[0].witness if v else None}")
    assert ok


def test_c4_example5_se_maps(record):
    sf = load_fixture("example5")
    T = build_se_transformation_semigroup(sf.apartness_set())
    f, g = sf.map("f").graph, sf.map("g").graph
    i, j = T.index(f), T.index(g)
    # oracle: pointwise apartness and equality of the two graphs
    P = as_mat(sf.ap)
    apart = any(P[f[x]][g[x]] for x in range(3))
    equal = all(f[x] == g[x] for x in range(3))
    ok = (f in T and g in T and not T.ap(i, j) and not T.eq(i, j)
          and not apart and not equal and T.is_tight() is False)
    record("4", ok, f"|T|={T.size}, f={f} g={g}: neither apart nor equal, tight={T.is_tight()}")
    assert ok


def _example6():
    sf = load_fixture("example6")
    return sf.semigroup(), sf.relation("tau")


@pytest.mark.xfail(strict=True, reason="tau is not co-compatible: a*c = d, c*c = c and (d, c) in tau "
                                       "while neither (a, c) nor (c, c) is")
def test_c5_example6_tau_classifies_co_compatible(record):
    Sg, tau = _example6()
    kind = classify(Sg.base, tau).kind
    c = check_compatibility(Sg, tau)
    M = tuple(map(tuple, Sg.mul.tolist()))
    oracle = pr.cocompatible(as_mat(tau), M)
    ok = kind in ("co-quasiorder", "co-order") and c.co_full and oracle
    record("5a", ok, f"tau is a {kind}; co-compatible={c.co_full} (oracle {oracle}), "
                     f"witness {c.witnesses.get('co_full')}")
    assert ok


@pytest.mark.xfail(strict=True, raises=NotCoCompatible,
                   reason="the semigroup pipeline needs a co-compatible co-quasiorder")
def test_c5_example6_semigroup_pipeline_certificates(record):
    Sg, tau = _example6()
    try:
        q = ordered_semigroup_birkhoff(Sg, tau, side="constructive")
    except NotCoCompatible as e:
        record("5b", False, f"co-ordered quotient semigroup refused: {type(e).__name__}")
        raise
    record("5b", q.certificate.ok, "co-ordered quotient semigroup certificates")
    assert q.certificate.ok


def test_c5_example6_set_pipeline(record):
    Sg, tau = _example6()
    # oracle first: classes of the complement of tau u tau^-1
    T = as_mat(tau)
    oracle_classes = [set(Sg.labels[i] for i in c) for c in pr.classes(pr.neg(pr.union(T, pr.inv(T))))]
    assert oracle_classes == [{"a", "b"}, {"c"}, {"d"}, {"e"}]
    Q = birkhoff_constructive(Sg.base, tau)
    ok = (Q.class_sets() == oracle_classes and Q.certificate.ok
          and pr.coorder(as_mat(Q.induced_rel), as_mat(Q.quotient.ap)))
    record("5c", ok, f"kappa_tau -> quotient -> co-order: classes {[sorted(c) for c in Q.class_sets()]}, "
                     f"{len(Q.certificate.checks)} certificate checks pass")
    assert ok


def test_c6_example1_and_rediscovery(record):
    sf = load_fixture("example1")
    A, alpha, eps = sf.apartness_set(), sf.relation("alpha"), sf.relation("epsilon")
    Q = quotient_by_equivalence(A, eps)
    theta, _ = induced_quotient_relation(Q, alpha)
    p = check_properties(Q.quotient, theta)
    both = ("[a]", "[c]") in theta and ("[c]", "[a]") in theta
    t0 = time.perf_counter()
    cx = find_counterexample("quotient-order-antisymmetric-for-arbitrary-ε", range(1, 6))
    dt = time.perf_counter() - t0
    ok = (not p.antisymmetric and p.witnesses["antisymmetric"] == ("[a]", "[c]") and both
          and cx is not None and cx.size <= 5 and dt < 60)
    record("6", ok, f"antisymmetry fails at ([a], [c]); rediscovered at size {cx.size if cx else None} "
                    f"in {dt:.2f}s")
    assert ok


# -- exhaustive and sampled suites ---------------------------------------------------

def test_c7_coquasiorder_suite(record, coq_run):
    report, wall = coq_run
    exhaustive = all(m == "exhaustive" for t in report.theorems for m in t.modes.values())
    failures = sum(t.failed for t in report.theorems)
    ok = report.ok and failures == 0 and exhaustive and wall < COQUASIORDER_SUITE.budget_seconds
    record("7", ok, f"{_summary(report)}; {failures} failures, {wall:.1f}s")
    assert ok


@pytest.mark.slow
def test_c8_semigroup_suite(record, semigroup_run):
    report, wall = semigroup_run
    exhaustive = all(t.modes == {3: "exhaustive"} for t in report.theorems)
    failures = sum(t.failed for t in report.theorems)
    ok = report.ok and failures == 0 and exhaustive and wall < SEMIGROUP_SUITE.budget_seconds
    record("8a", ok, f"{_summary(report)}; {failures} failures, {wall / 60:.1f} min single worker")
    assert ok


@pytest.mark.xfail(CPUS < 4, strict=True, reason=f"only {CPUS} CPU(s) available; four workers cannot run in parallel")
def test_c8_linear_speedup(record):
    ids = ["first-apartness-iso-semigroup"]
    t0 = time.perf_counter()
    one = fuzz_campaign([3], ids, samples=4000, seed=3, workers=1)
    t1 = time.perf_counter()
    four = fuzz_campaign([3], ids, samples=4000, seed=3, workers=4)
    t2 = time.perf_counter()
    speedup = (t1 - t0) / (t2 - t1)
    same = one.to_dict(timings=False) == four.to_dict(timings=False)
    ok = same and speedup >= 3.2
    record("8b", ok, f"4 workers: speedup {speedup:.2f}x on {CPUS} CPU(s), identical report={same}")
    assert ok


@pytest.mark.slow
def test_c9_sampled_suite(record, sampled_run, birkhoff_run):
    report, wall = sampled_run
    enough = all(t.instances >= 10_000 * len(t.modes) and set(t.modes) == {4, 5} for t in report.theorems)
    b_report, b_wall = birkhoff_run
    b_exhaustive = all(m == "exhaustive" for t in b_report.theorems for m in t.modes.values())
    failures = sum(t.failed for t in report.theorems) + sum(t.failed for t in b_report.theorems)
    ok = report.ok and b_report.ok and failures == 0 and enough and b_exhaustive
    record("9", ok, f"sizes 4-5: {_summary(report)} ({wall:.0f}s); "
                    f"n<=3 exhaustive: {_summary(b_report)}; {failures} failures")
    assert ok


@pytest.mark.slow
def test_c10_oracle_construction_agreement(record, coq_run, semigroup_run, sampled_run, birkhoff_run):
    reports = [coq_run[0], semigroup_run[0], sampled_run[0], birkhoff_run[0]]
    checked = sum(t.instances for r in reports for t in r.theorems)
    disagreements = sum(t.disagreement_count for r in reports for t in r.theorems)
    ok = disagreements == 0 and checked > 0
    record("10", ok, f"{disagreements} disagreements over {checked} instances in suites 7-9")
    assert ok


# -- campaign examples -------------------------------------------------------------

@pytest.mark.slow
def test_master_run_sizes_2_3(record):
    report, wall = _timed(MASTER_SUITE)
    covered = {t.theorem_id for t in report.theorems}
    ok = report.ok and covered == set(REGISTRY)
    record("master", ok, f"{len(covered)} theorems over sizes 2-3, unexpected={report.unexpected}, "
                         f"{sum(t.instances for t in report.theorems)} instances, {wall:.0f}s")
    assert ok


@pytest.mark.slow
def test_sampled_semigroup_kind_size_4(record):
    t0 = time.perf_counter()
    report = fuzz_campaign([4], "kind:semigroup", samples=10_000, seed=42)
    wall = time.perf_counter() - t0
    ok = report.ok
    record("semigroup-kind", ok, f"{len(report.theorems)} theorems x 10000 samples at size 4, "
                                 f"unexpected={report.unexpected}, {wall / 60:.1f} min")
    assert ok
