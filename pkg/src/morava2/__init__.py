"""Mod-2 Morava K-theory ring presentations with Groebner-basis normal forms
and exact finite-group cross-checks."""

from .errors import (
    BudgetExceededError,
    ContextMismatchError,
    ExponentOverflowError,
    GroupConstructionError,
    MissingImageError,
    Morava2Error,
    NotDivisibleError,
    NotInSubringError,
    TruncationRequiredError,
)
from .gf2poly import GRLEX, LEX, ELIM, CheckResult, Poly, RingContext, VarSpec
from .groebner import (
    BuchbergerLimits,
    FiniteStaircase,
    GroebnerBasis,
    Ideal,
    KernelPresentation,
    TruncatedStaircase,
    buchberger,
    kernel_of_map,
    normal_form,
    quotient_basis,
    rank,
    staircase_is_finite,
)
from .groups import (
    FiniteGroup,
    QuadRational,
    Quaternion,
    binary_icosahedral,
    binary_octahedral,
    binary_tetrahedral,
    build_group,
    commuting_tuple_classes,
    conjugacy_classes,
    cyclic_group,
    hurwitz_units,
    quaternion_group,
    subgroup_index,
    sylow2_conjugates,
)
from .invariants import (
    InvariantSpace,
    RingMap,
    check_order,
    check_well_defined,
    elementary_symmetric_check,
    identity_map,
    invariant_space,
    sigma_q8,
)
from .presentations import (
    FAMILIES,
    FGPair,
    PresentationSpec,
    build,
    family_context,
    fg_recursion,
    kappa,
    presentation_text,
    transfer_sum,
    two_power_series,
)
from .verifier import (
    SUITES,
    ClaimReport,
    RunConfig,
    exit_code,
    render_json,
    render_text,
    run_suite,
)

__version__ = "0.1.0"
