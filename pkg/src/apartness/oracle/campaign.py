"""Exhaustive and sampled campaigns over the theorem registry.

Instance streams are deterministic: exhaustive streams follow the family's
enumeration order, and sample ``i`` at size ``n`` draws from a generator
seeded by ``(seed, theorem, n, i)``. Workers take the instances whose
position is congruent to their rank, so the merged report does not depend
on the worker count.
"""
from __future__ import annotations

import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import islice
from typing import Iterable, Iterator, Sequence

import numpy as np

from .enumerate import SamplingError
from .instances import FAMILIES, Instance, fixture_data
from .registry import FAIL, NA, PASS, REGISTRY, UnknownTheorem, verify

DEFAULT_FALLBACK_SAMPLES = 300   # per size, for sizes beyond a family's exhaustive cap
MAX_DISAGREEMENTS = 10


@dataclass
class TheoremReport:
    theorem_id: str
    family: str
    expected_fail: bool
    fails_from: int = 0
    modes: dict = field(default_factory=dict)       # size -> "exhaustive" | "sampled(k)" | "fixture"
    instances: int = 0
    passed: int = 0
    failed: int = 0
    not_applicable: int = 0
    sampling_errors: int = 0
    disagreements: list = field(default_factory=list)
    disagreement_count: int = 0
    first_failure: dict | None = None
    seconds: float = 0.0

    @property
    def unexpected(self) -> bool:
        if self.disagreement_count:
            return True
        if self.expected_fail:
            reached = max(self.modes, default=-1) >= self.fails_from
            return reached and self.instances > 0 and self.failed == 0
        return self.failed > 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["unexpected"] = self.unexpected
        d["modes"] = {str(k): v for k, v in self.modes.items()}
        return d


@dataclass
class CampaignReport:
    sizes: tuple
    seed: int
    samples: int | None
    workers: int
    theorems: list[TheoremReport]
    seconds: float = 0.0

    @property
    def unexpected(self) -> list[str]:
        return [t.theorem_id for t in self.theorems if t.unexpected]

    @property
    def ok(self) -> bool:
        return not self.unexpected

    def get(self, theorem_id: str) -> TheoremReport:
        for t in self.theorems:
            if t.theorem_id == theorem_id:
                return t
        raise KeyError(theorem_id)

    def to_dict(self, timings: bool = True) -> dict:
        ths = [t.to_dict() for t in self.theorems]
        if not timings:
            for t in ths:
                t.pop("seconds")
        out = {"sizes": list(self.sizes), "seed": self.seed, "samples": self.samples,
               "theorems": ths, "unexpected": self.unexpected,
               "totals": {"instances": sum(t.instances for t in self.theorems),
                          "failed": sum(t.failed for t in self.theorems),
                          "disagreements": sum(t.disagreement_count for t in self.theorems)}}
        if timings:
            out["workers"] = self.workers
            out["seconds"] = self.seconds
        return out


def theorem_hash(theorem_id: str) -> int:
    return zlib.crc32(theorem_id.encode())


def select_theorems(theorems: str | Sequence[str] = "all") -> list[str]:
    """``"all"``, a list of ids, or ``"kind:<prefix>"`` to pick theorems by family prefix."""
    if theorems == "all" or theorems is None:
        return list(REGISTRY)
    if isinstance(theorems, str):
        if theorems.startswith("kind:"):
            prefix = theorems[5:]
            return [t for t, s in REGISTRY.items() if s.family.startswith(prefix)]
        theorems = [t.strip() for t in theorems.split(",") if t.strip()]
    for t in theorems:
        if resolve(t) not in REGISTRY:
            raise UnknownTheorem(t)
    return [resolve(t) for t in theorems]


ALIASES = {"quotient-order-antisymmetric-for-arbitrary-ε": "quotient-order-antisymmetric-for-arbitrary-equivalence"}


def resolve(theorem_id: str) -> str:
    return ALIASES.get(theorem_id, theorem_id)


def _sample_stream(theorem_id: str, n: int, seed: int, count: int) -> Iterator[tuple[int, dict | None]]:
    fam = FAMILIES[REGISTRY[theorem_id].family]
    h = theorem_hash(theorem_id)
    for i in range(count):
        rng = np.random.default_rng(np.random.SeedSequence([seed, h, n, i]))
        try:
            yield i, fam.sample(n, rng)
        except SamplingError:
            yield i, None


def _plan(theorem_id: str, sizes: Sequence[int], samples: int | None, fallback: int,
          caps: dict | None = None):
    """(size, mode, count) triples for a theorem; fixtures run once."""
    spec = REGISTRY[theorem_id]
    if spec.family.startswith("fixture:"):
        return [(0, "fixture", 1)]
    cap = (caps or {}).get(spec.family, FAMILIES[spec.family].max_exhaustive)
    out = []
    for n in sizes:
        if n > spec.max_size or n < 1:
            continue
        if samples is None and n <= cap:
            out.append((n, "exhaustive", None))
        else:
            out.append((n, f"sampled({samples or fallback})", samples or fallback))
    return out


def _stream(theorem_id, n, mode, count, seed):
    spec = REGISTRY[theorem_id]
    if mode == "fixture":
        yield 0, fixture_data(spec.family.split(":", 1)[1])
    elif mode == "exhaustive":
        fam = FAMILIES[spec.family]
        for i, d in enumerate(fam.exhaustive(n)):
            yield i, Instance(spec.family, d)
    else:
        for i, d in _sample_stream(theorem_id, n, seed, count):
            yield i, (None if d is None else Instance(spec.family, d))


def _run_share(args):
    """Check the instances of one (theorem, size) whose position is ``rank`` mod ``workers``."""
    theorem_id, n, mode, count, seed, rank, workers, construct = args
    out = {"instances": 0, "passed": 0, "failed": 0, "na": 0, "sampling_errors": 0,
           "disagreements": [], "disagreement_count": 0, "first_failure": None}
    for i, inst in _stream(theorem_id, n, mode, count, seed):
        if i % workers != rank:
            continue
        if inst is None:
            out["sampling_errors"] += 1
            continue
        r = verify(theorem_id, inst, construct=construct)
        out["instances"] += 1
        if r.verdict == NA:
            out["na"] += 1
        elif r.verdict == PASS:
            out["passed"] += 1
        else:
            out["failed"] += 1
            if out["first_failure"] is None:
                out["first_failure"] = {"size": n, "index": i, "instance": r.instance,
                                        "witness": _plain(r.witness)}
        if not r.agree:
            out["disagreement_count"] += 1
            if len(out["disagreements"]) < MAX_DISAGREEMENTS:
                out["disagreements"].append({"size": n, "index": i, "instance": r.instance,
                                             "oracle": r.verdict, "construction": r.construction,
                                             "oracle_witness": _plain(r.witness),
                                             "construction_witness": _plain(r.construction_witness)})
    return out


def _plain(w):
    if isinstance(w, (tuple, list)):
        return [_plain(v) for v in w]
    if isinstance(w, (np.integer,)):
        return int(w)
    if isinstance(w, (np.bool_,)):
        return bool(w)
    if w is None or isinstance(w, (int, float, str, bool)):
        return w
    return str(w)


def _merge(report: TheoremReport, n: int, parts: Iterable[dict]) -> None:
    parts = list(parts)
    report.instances += sum(p["instances"] for p in parts)
    report.passed += sum(p["passed"] for p in parts)
    report.failed += sum(p["failed"] for p in parts)
    report.not_applicable += sum(p["na"] for p in parts)
    report.sampling_errors += sum(p["sampling_errors"] for p in parts)
    report.disagreement_count += sum(p["disagreement_count"] for p in parts)
    dis = sorted((d for p in parts for d in p["disagreements"]), key=lambda d: d["index"])
    report.disagreements = (report.disagreements + dis)[:MAX_DISAGREEMENTS]
    fails = [p["first_failure"] for p in parts if p["first_failure"] is not None]
    if report.first_failure is None and fails:
        report.first_failure = min(fails, key=lambda f: f["index"])


def fuzz_campaign(sizes: Iterable[int], theorems: str | Sequence[str] = "all", samples: int | None = None,
                  seed: int = 0, workers: int = 1, construct: bool = True,
                  fallback_samples: int = DEFAULT_FALLBACK_SAMPLES,
                  caps: dict | None = None) -> CampaignReport:
    """Check each selected theorem on every instance of every size.

    ``samples=None`` walks each family exhaustively up to its cap and samples
    ``fallback_samples`` instances beyond it; an integer samples that many
    instances per size. ``caps`` overrides the exhaustive cap of named
    instance families, e.g. ``{"semigroup-hom-se": 3}``.
    """
    sizes = tuple(sorted(set(sizes)))
    ids = select_theorems(theorems)
    workers = max(1, int(workers))
    t0 = time.perf_counter()
    reports = []
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for tid in ids:
            spec = REGISTRY[tid]
            rep = TheoremReport(tid, spec.family, spec.expected_fail, spec.fails_from)
            t1 = time.perf_counter()
            for n, mode, count in _plan(tid, sizes, samples, fallback_samples, caps):
                rep.modes[n] = mode
                jobs = [(tid, n, mode, count, seed, r, workers, construct) for r in range(workers)]
                parts = pool.map(_run_share, jobs) if pool else map(_run_share, jobs)
                _merge(rep, n, parts)
            rep.seconds = time.perf_counter() - t1
            reports.append(rep)
    finally:
        if pool:
            pool.shutdown()
    return CampaignReport(sizes, seed, samples, workers, reports, time.perf_counter() - t0)


@dataclass(frozen=True)
class Counterexample:
    theorem_id: str
    size: int
    index: int
    instance: Instance
    witness: object

    def to_dict(self) -> dict:
        return {"theorem_id": self.theorem_id, "size": self.size, "index": self.index,
                "instance": self.instance.describe(), "witness": _plain(self.witness)}


def find_counterexample(theorem_id: str, sizes: Iterable[int], budget: int = 1_000_000,
                        over: tuple | None = None) -> Counterexample | None:
    """The least instance, in enumeration order, on which the oracle verdict is a failure.

    ``over`` fixes the ``(E, P)`` pair of the instances searched. At most
    ``budget`` instances are examined in total.
    """
    tid = resolve(theorem_id)
    if tid not in REGISTRY:
        raise UnknownTheorem(theorem_id)
    spec = REGISTRY[tid]
    if spec.family.startswith("fixture:"):
        inst = fixture_data(spec.family.split(":", 1)[1])
        r = verify(tid, inst, construct=False)
        return Counterexample(tid, len(inst.data["E"]), 0, inst, r.witness) if r.verdict == FAIL else None
    fam = FAMILIES[spec.family]
    seen = 0
    for n in sorted(set(sizes)):
        stream = fam.exhaustive(n)
        if over is not None:
            E, P = over
            if len(E) != n:
                continue
            stream = (d for d in stream if d["E"] == E and d["P"] == P)
        for i, d in enumerate(islice(stream, max(0, budget - seen))):
            seen += 1
            inst = Instance(spec.family, d)
            r = verify(tid, inst, construct=False)
            if r.verdict == FAIL:
                return Counterexample(tid, n, i, inst, r.witness)
        if seen >= budget:
            break
    return None
