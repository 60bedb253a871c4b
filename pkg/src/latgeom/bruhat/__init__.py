"""Weak order on permutations and the dominance relation between descent sets."""

from .dominance import (
    DominanceCache,
    DominanceResult,
    DominanceUndecided,
    DominanceWitness,
    dominates,
    lift_witness,
    set_from_word,
    validate_witness,
    word_from_set,
)
from .perms import (
    DescentClass,
    Permutation,
    beta_transforms,
    boolean_flag_h,
    complement,
    count_orderings_before,
    descent_class,
    r_minus,
    reversal,
    t_circ_beta,
    weak_leq,
)
from .sweeps import (
    ConjectureReport,
    HallResult,
    SupersetCount,
    build_hall_matching,
    check_grouped_bijection,
    check_subset_map,
    count_dominating_supersets,
    grouped_inequality_holds,
    superset_bound,
    qualifying_sets,
    matching_range,
    verify_conjecture,
    verify_grouped_inequality,
)

__all__ = [
    "ConjectureReport",
    "DescentClass",
    "DominanceCache",
    "DominanceResult",
    "DominanceUndecided",
    "DominanceWitness",
    "HallResult",
    "Permutation",
    "SupersetCount",
    "beta_transforms",
    "boolean_flag_h",
    "build_hall_matching",
    "check_grouped_bijection",
    "check_subset_map",
    "complement",
    "count_dominating_supersets",
    "count_orderings_before",
    "descent_class",
    "dominates",
    "grouped_inequality_holds",
    "superset_bound",
    "lift_witness",
    "qualifying_sets",
    "r_minus",
    "reversal",
    "set_from_word",
    "t_circ_beta",
    "matching_range",
    "validate_witness",
    "verify_conjecture",
    "verify_grouped_inequality",
    "weak_leq",
    "word_from_set",
]
