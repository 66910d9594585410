"""Brute-force oracle: direct quantifier predicates, instance families,
a theorem registry pairing each predicate with a construction-side check,
and seeded campaigns over it."""
from .campaign import (CampaignReport, Counterexample, TheoremReport, find_counterexample,
                       fuzz_campaign, select_theorems)
from .instances import FAMILIES, Instance, fixture_data
from .registry import (FAIL, NA, PASS, REGISTRY, SignatureMismatch, TheoremCheck, TheoremSpec,
                       UnknownTheorem, theorem_ids, verify)
