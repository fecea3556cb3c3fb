"""Weierstrass semigroups dominated by two coprime generators a < b.

Numerical semigroup arithmetic, cusp delta invariants, the semigroups forced
at a second totally ramified point of the degree-a pencil, and a classifier
deciding when a semigroup can occur at most once on a smooth curve.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BNotLarger,
    ConstraintViolated,
    GenusTooLarge,
    HypothesisMismatch,
    NonCoprimeGenerators,
    NonIntegral,
    NotClosed,
    NotCoprime,
    NotCoprimeMu,
    SemigroupError,
    TooLarge,
)
from .semigroup import (  # noqa: E402
    Hypotheses,
    NumericalSemigroup,
    TwoGenParams,
    contains,
    parse_canonical,
    second_generator,
    sg_from_gaps,
    sg_from_generators,
    standing_hypotheses_check,
    two_gen_params,
    union_with,
)
from .cusp import CuspType, MultiplicitySequence, delta_closed, euclid_sequence, max_genus_with_cusp  # noqa: E402
from .pencil import (  # noqa: E402
    TrivialNewNonGaps,
    WindowProfile,
    n_of_m,
    sharp_semigroup_S,
    trivial_new_nongaps,
    window_profiles,
    ws_of_Q_full_genus,
)
from .engine import (  # noqa: E402
    CriterionOutcome,
    Kind,
    RuleId,
    Status,
    Verdict,
    classify,
    classify_bounds,
)
from .census import (  # noqa: E402
    CensusRow,
    brute_force_enumerate,
    census_classify,
    enumerate_containing,
    family_4_1,
    family_4_2,
    family_4_3,
)
