"""Local classification of normal finite abelian covers at a branch point.

The input is the combinatorial data of the cover at the point: the ambient
group G and, for each branch component through the point, a cyclic subgroup
with a generating character of its dual.  From that data alone the package
decides whether the points upstairs are locally simple, Gorenstein (with an
explicit lifted-character certificate), a local complete intersection, or
smooth, and constructs the Artinian fiber algebra behind those verdicts.
"""

from .groups import (
    AbelianGroup,
    Character,
    DEFAULT_ENUMERATION_LIMIT,
    Element,
    Hom,
    LimitExceeded,
    RootExponent,
    discrete_log,
    element_order,
    enumerate_subgroup,
    image_subgroup,
    kernel_generators,
    restrict_character,
    smith_normal_form,
    solve_character_congruences,
)
from .cover import (
    BranchDatum,
    CombinatorialData,
    InvalidCoverData,
    KernelDescription,
    RamificationFactorization,
    ValidationIssue,
    is_locally_simple,
    kernel_K,
    ramification_factorization,
    sum_map,
    validate,
)
from .fiber import (
    DEFAULT_FIBER_ORDER_LIMIT,
    FiberRing,
    HilbertNumerator,
    alpha_exponents,
    build_fiber_ring,
    epsilon,
    hilbert_numerator,
    invariant_monomials_up_to_degree,
    socle_basis,
)
from .classify import (
    ClassificationReport,
    GorensteinChecks,
    LCI,
    NOT_LCI,
    NOT_SMOOTH,
    SMOOTH_CONDITIONAL,
    UNKNOWN,
    classify,
    gorenstein_lift,
    gorenstein_socle,
    gorenstein_watanabe,
    lci_classify,
    smoothness_check,
)

__version__ = "0.1.0"
