"""Named campaign configurations used by the acceptance tests and scripts."""
from __future__ import annotations

from dataclasses import dataclass, field

from .campaign import CampaignReport, fuzz_campaign


@dataclass(frozen=True)
class SuiteConfig:
    name: str
    theorems: tuple[str, ...] | str      # ids, "all" or "kind:<family prefix>"
    sizes: tuple[int, ...]
    samples: int | None = None          # None: exhaustive up to each family cap
    seed: int = 0
    caps: dict = field(default_factory=dict)
    budget_seconds: float | None = None  # single-worker wall-clock budget

    def run(self, workers: int = 1, **overrides) -> CampaignReport:
        theorems = self.theorems if isinstance(self.theorems, str) else list(self.theorems)
        kw = dict(sizes=self.sizes, theorems=theorems, samples=self.samples,
                  seed=self.seed, workers=workers, caps=dict(self.caps))
        kw.update(overrides)
        return fuzz_campaign(**kw)


COQUASIORDER_SUITE = SuiteConfig(
    "coquasiorders",
    ("coquasiorder-complement", "constructive-birkhoff"),
    sizes=(1, 2, 3),
    budget_seconds=5 * 60,
)

SEMIGROUP_SUITE = SuiteConfig(
    "semigroups",
    ("cayley-embedding", "first-apartness-iso-semigroup"),
    sizes=(3,),
    caps={"semigroup": 3, "semigroup-hom-se": 3},
    budget_seconds=30 * 60,
)

SAMPLED_SUITE = SuiteConfig(
    "sampled",
    ("second-apartness-iso", "co-compatible-iff-left-right"),
    sizes=(4, 5),
    samples=10_000,
    seed=42,
)

BIRKHOFF_SUITE = SuiteConfig(
    "birkhoff",
    ("birkhoff-classical", "ordered-semigroup-birkhoff-classical"),
    sizes=(1, 2, 3),
)

MASTER_SUITE = SuiteConfig("master", "all", sizes=(2, 3))

SUITES = {s.name: s for s in (COQUASIORDER_SUITE, SEMIGROUP_SUITE, SAMPLED_SUITE,
                              BIRKHOFF_SUITE, MASTER_SUITE)}
