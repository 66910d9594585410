"""Finite sets and semigroups with apartness: relation calculus, quotients,
isomorphism theorems and a brute-force oracle."""
from .carrier import (ApartnessError, ApartnessSet, AxiomError, AxiomViolation, Carrier,
                      Detachability, Rel, SetoidMap, Subset, classify_detachability, complements,
                      is_tight, product_apartness, validate_apartness_set)
from .certificate import Certificate, CertificateFailure
from .relcalc import (associated_with, check_properties, classify, cocompose, compose,
                      rel_complements)
from .quotient import (birkhoff_classical, birkhoff_constructive, defines_apartness_check,
                       induced_quotient_relation, quotient_by_coequivalence, quotient_by_equivalence)
from .maps import (classify_map, co_order_factorization, first_apartness_iso, first_iso_classical,
                   kernel_cokernel, ordered_iso_classical, second_apartness_iso)
from .semigroup import (ApartnessSemigroup, build_se_transformation_semigroup, cayley_embedding,
                        check_compatibility, ordered_semigroup_birkhoff, quotient_semigroup,
                        semigroup_iso_theorems, validate_semigroup)

__version__ = "0.1.0"
