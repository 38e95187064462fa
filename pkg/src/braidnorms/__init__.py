"""Exact braid-closure link invariants.

Braid words (standard and band generators), closure combinatorics,
Bennequin and relative Bennequin numbers, the cabled diagram pair for a
nonnegative cohomology class, Thurston norm brackets, exact Laurent
polynomial arithmetic, and the braid polynomial P(v, z) with the HOMFLY
polynomial and its degree bounds.  All arithmetic is exact over the
integers.
"""

from .bennequin import (
    CablePair,
    NormBracket,
    band_positive_bracket,
    bennequin_number,
    cable_pair,
    class_lower_bound,
    relative_bennequin,
    relative_bennequin_subset,
    scholium_lower_bound,
    thurston_bracket,
)
from .braid import (
    BraidLetter,
    BraidWord,
    GeneratorProfile,
    ParseError,
    band_gen,
    band_to_standard,
    from_codes,
    generator_profile,
    parse_braid,
    permutation,
    print_braid,
    sigma,
)
from .diagram import (
    ClosureProfile,
    EulerReport,
    band_seifert_euler,
    closure_profile,
    linking_matrix,
    punctured_component_euler,
    seifert_euler,
)
from .homfly import (
    BudgetExceededError,
    HomflyReport,
    PHI,
    band_minimize,
    conway,
    homfly_h,
    homfly_p,
    homfly_report,
    homogeneous_top_term,
    max_bennequin_certificate,
    mfw_check,
    morton_check_3braid,
    skein_oracle,
)
from .poly import (
    ExactDivisionError,
    LaurentVZ,
    MultiPoly,
    alexander_norm,
    dump_multipoly,
    eval_v0,
    exact_div,
    load_multipoly,
    mcmullen_check,
    min_v_degree,
)

__version__ = "0.1.0"
