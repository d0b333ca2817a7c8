"""Decision layer: Gorenstein through four independent routes, the complete
intersection decision table, smoothness, and the aggregated report.

Every verdict is local at the chosen point.  Versions of the deciders that
need the fiber ring run on the totally ramified restriction; the Gorenstein
truth value is unchanged by that restriction because characters of the image
subgroup extend to the whole group."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groups import (
    Character,
    DEFAULT_ENUMERATION_LIMIT,
    RootExponent,
    solve_character_congruences,
)
from .cover import (
    CombinatorialData,
    KernelDescription,
    kernel_K,
    ramification_factorization,
)
from .fiber import (
    DEFAULT_FIBER_ORDER_LIMIT,
    build_fiber_ring,
    hilbert_numerator,
    socle_basis,
)

LCI = "LCI"
NOT_LCI = "NotLCI"
UNKNOWN = "Unknown"

REASON_LOCALLY_SIMPLE = "locally-simple"
REASON_NOT_GORENSTEIN = "lci-implies-gorenstein"
REASON_RIGID_QUOTIENT = "rigid-quotient"
REASON_A_TYPE_SURFACE = "A-type-surface"
REASON_OPEN_CASE = "open-general-case"
REASON_LIMIT = "limit"

SMOOTH_CONDITIONAL = "Smooth-conditional"
NOT_SMOOTH = "NotSmooth"

SMOOTHNESS_ASSUMPTION = (
    "branch divisors are smooth and pairwise transverse at the point "
    "(a rank condition on their local equations, not derivable from the "
    "combinatorial data)"
)

#: Sketch of why each reason code decides the verdict, for report rendering.
REASON_NOTES = {
    REASON_LOCALLY_SIMPLE: "K = 0, so the fiber ring is a complete intersection",
    REASON_NOT_GORENSTEIN: "complete intersections are Gorenstein, and this point is not",
    REASON_RIGID_QUOTIENT: (
        "every nonzero element of K moves >= 3 coordinates, so the quotient "
        "singularity has codimension >= 3; such quotients are rigid "
        "(Schlessinger) while singular complete intersections never are"
    ),
    REASON_A_TYPE_SURFACE: (
        "a two-coordinate diagonal K inside SL(2) is cyclic acting by "
        "(t, t^-1), an A-type hypersurface singularity"
    ),
    REASON_OPEN_CASE: "no known criterion settles this configuration",
    REASON_LIMIT: "kernel enumeration needed for the rigidity test exceeded its bound",
}


class CrossCheckError(RuntimeError):
    """The independent Gorenstein deciders disagreed; indicates a bug."""


@dataclass(frozen=True)
class GorensteinChecks:
    """Outcome of each Gorenstein route.  `socle` and `hilbert_palindromic`
    are None when the fiber ring was not built (group order over the bound)."""

    lift: bool
    watanabe: bool
    socle: bool | None
    hilbert_palindromic: bool | None

    def agree(self) -> bool:
        votes = {v for v in (self.lift, self.watanabe, self.socle, self.hilbert_palindromic)
                 if v is not None}
        return len(votes) == 1


@dataclass(frozen=True)
class ClassificationReport:
    locally_simple: bool
    totally_ramified: bool
    etale_index: int
    kernel: KernelDescription
    gorenstein: bool
    certificate: Character | None
    cross_checks: GorensteinChecks
    lci: str
    lci_reason: str
    smooth: str
    assumptions: tuple[str, ...]


def gorenstein_lift(data: CombinatorialData) -> Character | None:
    """A character chi of the ambient group restricting to every psi_i
    (chi(g_i) = a_i/d_i), or None.  The point is Gorenstein exactly when such
    a lift exists.  Deterministic: the lexicographically smallest lift is
    returned when several exist (only possible for non-surjective data)."""
    constraints = [
        (datum.generator, RootExponent(datum.char_residue, datum.order))
        for datum in data.branch
    ]
    return solve_character_congruences(data.group, constraints)


def gorenstein_watanabe(data: CombinatorialData, *, kernel: KernelDescription | None = None) -> bool:
    """SL test on the kernel: the fiber is Gorenstein iff the determinant of
    the diagonal K-action is trivial, i.e. sum_i t_i a_i / d_i is an integer
    on every kernel generator (t_1, ..., t_s)."""
    kd = kernel if kernel is not None else kernel_K(data, enumeration_limit=0)
    orders = data.orders
    residues = [datum.char_residue for datum in data.branch]
    for gen in kd.generators:
        total = Fraction(0)
        for t, a, d in zip(gen.residues, residues, orders):
            total += Fraction(t * a, d)
        if total.denominator != 1:
            return False
    return True


def gorenstein_socle(data: CombinatorialData, *, order_limit: int = DEFAULT_FIBER_ORDER_LIMIT) -> bool:
    """Socle test on the fiber ring of the totally ramified restriction:
    Gorenstein iff the socle is one-dimensional."""
    restricted = ramification_factorization(data).restricted
    ring = build_fiber_ring(restricted, order_limit=order_limit)
    return len(socle_basis(ring)) == 1


def lci_classify(
    data: CombinatorialData,
    *,
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
    kernel: KernelDescription | None = None,
) -> tuple[str, str]:
    """Complete-intersection verdict with its reason code.

    Decision table, applied in order:
      1. K = 0                      -> LCI      (locally-simple)
      2. not Gorenstein             -> NotLCI   (lci-implies-gorenstein)
      3. min support of K >= 3      -> NotLCI   (rigid-quotient)
      4. s = 2 (Gorenstein here)    -> LCI      (A-type-surface)
      5. otherwise                  -> Unknown  (open-general-case)
    Rules 3 and 4 are mutually exclusive (s = 2 caps supports at 2).  When
    the kernel is too large to enumerate and rule 3 cannot be decided the
    verdict is Unknown with reason `limit`.
    """
    kd = kernel if kernel is not None else kernel_K(data, enumeration_limit=enumeration_limit)
    if kd.order == 1:
        return LCI, REASON_LOCALLY_SIMPLE
    if not gorenstein_watanabe(data, kernel=kd):
        return NOT_LCI, REASON_NOT_GORENSTEIN
    if kd.min_support is not None and kd.min_support >= 3:
        return NOT_LCI, REASON_RIGID_QUOTIENT
    if data.size == 2:
        return LCI, REASON_A_TYPE_SURFACE
    if kd.min_support is None:
        return UNKNOWN, REASON_LIMIT
    return UNKNOWN, REASON_OPEN_CASE


def smoothness_check(data: CombinatorialData) -> str:
    """Smooth-conditional iff the sum map is injective (which covers the
    unramified empty-data case); otherwise NotSmooth.  Conditional on the
    branch divisors meeting like coordinate hyperplanes at the point; that
    assumption is carried on every report."""
    kd = kernel_K(data, enumeration_limit=0)
    return SMOOTH_CONDITIONAL if kd.order == 1 else NOT_SMOOTH


def classify(
    data: CombinatorialData,
    *,
    fiber_order_limit: int = DEFAULT_FIBER_ORDER_LIMIT,
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> ClassificationReport:
    """Full local classification of valid combinatorial data.

    Factors the cover, runs every decider on the totally ramified part, and
    asserts that all computed Gorenstein routes agree before reporting.  The
    certificate is a character of the original ambient group.  Routes that
    would exceed `fiber_order_limit` are recorded as skipped (None) rather
    than aborting the report; the lift and SL routes always run.
    """
    kd = kernel_K(data, enumeration_limit=enumeration_limit)
    fact = ramification_factorization(data)
    restricted = fact.restricted

    certificate = gorenstein_lift(data)
    watanabe = gorenstein_watanabe(data, kernel=kd)
    socle_ok: bool | None = None
    palindromic: bool | None = None
    if restricted.group.order <= fiber_order_limit:
        ring = build_fiber_ring(restricted, order_limit=fiber_order_limit)
        socle_ok = len(socle_basis(ring)) == 1
        palindromic = hilbert_numerator(restricted, order_limit=fiber_order_limit).palindromic

    checks = GorensteinChecks(certificate is not None, watanabe, socle_ok, palindromic)
    if not checks.agree():
        raise CrossCheckError(f"Gorenstein deciders disagree: {checks}")
    gorenstein = certificate is not None

    lci, lci_reason = lci_classify(data, enumeration_limit=enumeration_limit, kernel=kd)
    smooth = SMOOTH_CONDITIONAL if kd.order == 1 else NOT_SMOOTH

    return ClassificationReport(
        locally_simple=kd.order == 1,
        totally_ramified=fact.totally_ramified,
        etale_index=fact.etale_index,
        kernel=kd,
        gorenstein=gorenstein,
        certificate=certificate,
        cross_checks=checks,
        lci=lci,
        lci_reason=lci_reason,
        smooth=smooth,
        assumptions=(SMOOTHNESS_ASSUMPTION,),
    )
