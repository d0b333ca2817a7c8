"""Combinatorial data of a cover at a point: validation, the sum map and its
kernel, and the totally-ramified / etale factorization."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .groups import (
    AbelianGroup,
    DEFAULT_ENUMERATION_LIMIT,
    Element,
    Hom,
    RootExponent,
    _relation_matrix,
    closure,
    image_subgroup,
    kernel_generators,
    smith_normal_form,
)


@dataclass(frozen=True)
class BranchDatum:
    """One branch component through the point: a cyclic subgroup H = <generator>
    of the ambient group together with the character psi of H generating its
    dual, encoded by psi(generator) = char_residue / ord(generator)."""

    generator: Element
    char_residue: int

    def __post_init__(self):
        object.__setattr__(self, "char_residue", int(self.char_residue) % self.order)

    @property
    def order(self) -> int:
        return self.generator.order()

    @property
    def char_value(self) -> RootExponent:
        """psi(generator) as an exact element of Q/Z."""
        return RootExponent(self.char_residue, self.order)

    def canonical(self) -> "BranchDatum":
        """The same pair (H, psi) written against the canonical generator of H:
        the order-d element of H with lexicographically smallest residues.
        Replacing g by u*g transports the residue a to a*u mod d."""
        d = self.order
        best_u, best = 1, self.generator
        for u in range(2, d):
            if gcd(u, d) != 1:
                continue
            candidate = u * self.generator
            if candidate.residues < best.residues:
                best_u, best = u, candidate
        return BranchDatum(best, (self.char_residue * best_u) % d)

    def pair_key(self) -> tuple[tuple[int, ...], int]:
        c = self.canonical()
        return (c.generator.residues, c.char_residue)


@dataclass(frozen=True)
class CombinatorialData:
    """The ambient group G and the ordered branch data {(H_i, psi_i)} at the point."""

    group: AbelianGroup
    branch: tuple[BranchDatum, ...]

    def __post_init__(self):
        object.__setattr__(self, "branch", tuple(self.branch))

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(datum.order for datum in self.branch)

    @property
    def size(self) -> int:
        return len(self.branch)


@dataclass(frozen=True)
class ValidationIssue:
    code: str  # NonGeneratingCharacter | TrivialInertia | DuplicatePair | MalformedElement
    index: int
    message: str

    def __str__(self) -> str:
        return f"branch[{self.index}]: {self.code}: {self.message}"


class InvalidCoverData(ValueError):
    """Carries every violation found while validating combinatorial data."""

    def __init__(self, issues):
        self.issues = tuple(issues)
        super().__init__("; ".join(str(i) for i in self.issues))


def validate(data: CombinatorialData) -> CombinatorialData:
    """Canonicalized data, or InvalidCoverData listing every violation.

    Checks: generators live in the ambient group, inertia is nontrivial
    (order >= 2), the character generates the dual (gcd(a, d) = 1), and no
    two entries name the same pair (H, psi) once both are written against
    canonical generators.  Idempotent on valid data.
    """
    issues: list[ValidationIssue] = []
    canonical: list[BranchDatum | None] = []
    for i, datum in enumerate(data.branch):
        if datum.generator.group != data.group:
            issues.append(ValidationIssue(
                "MalformedElement", i,
                f"generator lies in {datum.generator.group}, not {data.group}"))
            canonical.append(None)
            continue
        d = datum.order
        if d == 1:
            issues.append(ValidationIssue(
                "TrivialInertia", i, "generator is the identity"))
            canonical.append(None)
            continue
        if gcd(datum.char_residue, d) != 1:
            issues.append(ValidationIssue(
                "NonGeneratingCharacter", i,
                f"gcd({datum.char_residue}, {d}) != 1, character does not generate the dual"))
            canonical.append(None)
            continue
        canonical.append(datum.canonical())
    seen: dict[tuple[tuple[int, ...], int], int] = {}
    for i, datum in enumerate(canonical):
        if datum is None:
            continue
        key = (datum.generator.residues, datum.char_residue)
        if key in seen:
            issues.append(ValidationIssue(
                "DuplicatePair", i,
                f"same subgroup and character as branch[{seen[key]}]"))
        else:
            seen[key] = i
    if issues:
        raise InvalidCoverData(issues)
    return CombinatorialData(data.group, tuple(canonical))


def sum_map(data: CombinatorialData) -> Hom:
    """nu: Z/d_1 + ... + Z/d_s -> G, (t_1, ..., t_s) |-> sum t_i * g_i."""
    source = AbelianGroup(data.orders)
    return Hom(source, data.group, tuple(d.generator for d in data.branch))


@dataclass(frozen=True)
class KernelDescription:
    """K = ker(nu) inside H = Z/d_1 + ... + Z/d_s.

    min_support is the least number of nonzero coordinates over the nonzero
    elements of K; it is only trustworthy under full enumeration, so both
    `elements` and `min_support` are None when the order exceeds the bound.
    """

    generators: tuple[Element, ...]
    order: int
    min_support: int | None
    elements: tuple[Element, ...] | None


def kernel_K(data: CombinatorialData, *, enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT) -> KernelDescription:
    nu = sum_map(data)
    gens, order = kernel_generators(nu)
    elements = None
    min_support = None
    if order <= enumeration_limit:
        tuples = closure(nu.source.moduli, (g.residues for g in gens), enumeration_limit)
        elements = tuple(nu.source.element(t) for t in tuples)
        if order > 1:
            min_support = min(e.support for e in elements if not e.is_identity)
    return KernelDescription(gens, order, min_support, elements)


def is_locally_simple(data: CombinatorialData) -> bool:
    """True iff the sum map is injective, i.e. K = 0."""
    nu = sum_map(data)
    _, image_order = image_subgroup(nu)
    return image_order == nu.source.order


@dataclass(frozen=True)
class RamificationFactorization:
    """Splitting of the cover at the point into a totally ramified part and an
    etale part: M = im(nu) with its index |T| = |G| / |M|, and the branch data
    rewritten inside M."""

    image_generators: tuple[Element, ...]
    image_order: int
    etale_index: int
    restricted: CombinatorialData

    @property
    def totally_ramified(self) -> bool:
        return self.etale_index == 1


def ramification_factorization(data: CombinatorialData) -> RamificationFactorization:
    """Factor through the subgroup M generated by the inertia groups.

    When nu is already surjective the restricted data is the input itself.
    Otherwise M is presented abstractly through the Smith normal form of the
    relation lattice {x in Z^s : sum x_i g_i = 0}, and each branch generator
    is transported along the isomorphism Z^s / lattice ~ M.
    """
    nu = sum_map(data)
    image_gens, image_order = image_subgroup(nu)
    etale_index = data.group.order // image_order
    if etale_index == 1:
        return RamificationFactorization(image_gens, image_order, 1, data)

    s = data.size
    r = data.group.rank
    _, D1, V1 = smith_normal_form(_relation_matrix(nu))
    rank1 = sum(1 for k in range(r) if D1[k][k])
    # x-parts of the kernel basis span the relation lattice (full rank s).
    lattice = [[V1[i][k] for k in range(rank1, s + r)] for i in range(s)]
    U2, D2, _ = smith_normal_form(lattice)
    diag = [D2[i][i] for i in range(s)]
    if prod(diag) != image_order:
        raise ArithmeticError("image presentation disagrees with image order")
    kept = [i for i, d in enumerate(diag) if d > 1]
    subgroup = AbelianGroup(tuple(diag[i] for i in kept))
    new_branch = []
    for j, datum in enumerate(data.branch):
        residues = [U2[i][j] % diag[i] for i in kept]
        moved = subgroup.element(residues)
        if moved.order() != datum.order:
            raise ArithmeticError("generator order changed under restriction")
        new_branch.append(BranchDatum(moved, datum.char_residue).canonical())
    restricted = CombinatorialData(subgroup, tuple(new_branch))
    return RamificationFactorization(image_gens, image_order, etale_index, restricted)
