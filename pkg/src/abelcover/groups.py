"""Exact arithmetic for finite abelian groups.

Groups are direct sums of cyclic groups Z/m_1 + ... + Z/m_r kept in the
decomposition the caller supplies.  Characters take values in Q/Z (an exact
stand-in for roots of unity), homomorphisms are generator-image tables, and
the integer linear algebra underneath everything is Smith normal form over
arbitrary-precision ints.  No floating point anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod

#: Cap on operations that walk a group or subgroup element by element.
DEFAULT_ENUMERATION_LIMIT = 10**6

#: Group orders up to which a failed congruence solve is re-verified by brute force.
DEFAULT_CROSS_CHECK_LIMIT = 512


class LimitExceeded(Exception):
    """An operation would enumerate more elements than its configured bound."""


# ---------------------------------------------------------------------------
# Integer matrices (lists of rows of ints)


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_vec(matrix: list[list[int]], vector: list[int]) -> list[int]:
    return [sum(a * x for a, x in zip(row, vector)) for row in matrix]


def smith_normal_form(matrix) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Diagonalize an integer matrix: returns (U, D, V) with U*A*V = D.

    U and V are square unimodular, D is diagonal with non-negative entries and
    each diagonal entry divides the next.  Total on rectangular matrices,
    including empty ones.

    >>> U, D, V = smith_normal_form([[2, 4], [6, 8]])
    >>> [D[0][0], D[1][1]]
    [2, 4]
    """
    A = [[int(x) for x in row] for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("matrix rows must all have the same length")
    U = _identity(m)
    V = _identity(n)
    D = A

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, c: int) -> None:
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst: int, src: int, c: int) -> None:
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            if D[t][t] < 0:
                D[t] = [-x for x in D[t]]
                U[t] = [-x for x in U[t]]
            p = D[t][t]
            restart = False
            # Clear the pivot column; a nonzero remainder is a smaller pivot.
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    if D[i][t]:
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    if D[t][j]:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            # The pivot must divide the remaining submatrix (divisibility chain).
            offender = None
            for i in range(t + 1, m):
                if any(D[i][j] % p for j in range(t + 1, n)):
                    offender = i
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
    return U, D, V


# ---------------------------------------------------------------------------
# Root-of-unity exponents: exact elements of Q/Z


@dataclass(frozen=True)
class RootExponent:
    """An element a/b of Q/Z, standing in for the root of unity exp(2*pi*i*a/b).

    Canonical form: 0 <= num < den and gcd(num, den) = 1 (zero is 0/1).
    Addition is rational addition mod 1.
    """

    num: int = 0
    den: int = 1

    def __post_init__(self):
        f = Fraction(self.num, self.den) % 1
        object.__setattr__(self, "num", f.numerator)
        object.__setattr__(self, "den", f.denominator)

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    def __add__(self, other: "RootExponent") -> "RootExponent":
        f = Fraction(self.num, self.den) + Fraction(other.num, other.den)
        return RootExponent(f.numerator, f.denominator)

    def __neg__(self) -> "RootExponent":
        return RootExponent(-self.num, self.den)

    def __sub__(self, other: "RootExponent") -> "RootExponent":
        return self + (-other)

    def __mul__(self, k: int) -> "RootExponent":
        return RootExponent(self.num * k, self.den)

    __rmul__ = __mul__

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


# ---------------------------------------------------------------------------
# Groups, elements, characters, homomorphisms


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group given as Z/m_1 + ... + Z/m_r, every m_j >= 2.

    The empty tuple is the trivial group.  The decomposition is kept exactly
    as given; it is never rewritten into invariant factors behind the
    caller's back.
    """

    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli)
        if any(m < 2 for m in moduli):
            raise ValueError(f"moduli must all be >= 2, got {moduli}")
        object.__setattr__(self, "moduli", moduli)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    def element(self, residues) -> "Element":
        return Element(self, tuple(residues))

    def identity(self) -> "Element":
        return Element(self, (0,) * self.rank)

    def generators(self) -> tuple["Element", ...]:
        return tuple(
            Element(self, tuple(1 if i == j else 0 for i in range(self.rank)))
            for j in range(self.rank)
        )

    def invariant_factors(self) -> tuple[int, ...]:
        """Invariant-factor moduli d_1 | d_2 | ... of this group, from the
        Smith normal form of its diagonal relation matrix.  Offered as an
        explicit normalization; nothing in the package applies it behind the
        caller's back."""
        n = self.rank
        diag = [[self.moduli[i] if i == j else 0 for j in range(n)] for i in range(n)]
        _, D, _ = smith_normal_form(diag)
        return tuple(D[i][i] for i in range(n) if D[i][i] > 1)

    def normalized(self) -> "AbelianGroup":
        return AbelianGroup(self.invariant_factors())

    def elements(self):
        """All elements in lexicographic residue order.  O(|G|), no guard."""
        for residues in itertools.product(*(range(m) for m in self.moduli)):
            yield Element(self, residues)

    def character(self, residues) -> "Character":
        return Character(self, tuple(residues))

    def trivial_character(self) -> "Character":
        return Character(self, (0,) * self.rank)

    def characters(self):
        """All |G| characters in lexicographic residue order."""
        for residues in itertools.product(*(range(m) for m in self.moduli)):
            yield Character(self, residues)

    def __str__(self) -> str:
        if not self.moduli:
            return "trivial"
        return " x ".join(f"Z/{m}" for m in self.moduli)


@dataclass(frozen=True)
class Element:
    group: AbelianGroup
    residues: tuple[int, ...]

    def __post_init__(self):
        if len(self.residues) != self.group.rank:
            raise ValueError(
                f"expected {self.group.rank} residues, got {len(self.residues)}"
            )
        reduced = tuple(int(r) % m for r, m in zip(self.residues, self.group.moduli))
        object.__setattr__(self, "residues", reduced)

    def __add__(self, other: "Element") -> "Element":
        if other.group != self.group:
            raise ValueError("elements of different groups")
        return Element(self.group, tuple(a + b for a, b in zip(self.residues, other.residues)))

    def __neg__(self) -> "Element":
        return Element(self.group, tuple(-r for r in self.residues))

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, k: int) -> "Element":
        return Element(self.group, tuple(k * r for r in self.residues))

    __rmul__ = __mul__

    @property
    def is_identity(self) -> bool:
        return all(r == 0 for r in self.residues)

    @property
    def support(self) -> int:
        """Number of nonzero coordinates."""
        return sum(1 for r in self.residues if r)

    def order(self) -> int:
        """Smallest n >= 1 with n*self = 0, via lcm of coordinate orders."""
        return lcm(*(m // gcd(r, m) for r, m in zip(self.residues, self.group.moduli)))

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.residues)) + ")"


def element_order(e: Element) -> int:
    return e.order()


@dataclass(frozen=True)
class Character:
    """A character of a finite abelian group, as residues c_j against each
    cyclic factor: the value at e is sum_j c_j * e_j / m_j in Q/Z."""

    group: AbelianGroup
    residues: tuple[int, ...]

    def __post_init__(self):
        if len(self.residues) != self.group.rank:
            raise ValueError(
                f"expected {self.group.rank} residues, got {len(self.residues)}"
            )
        reduced = tuple(int(r) % m for r, m in zip(self.residues, self.group.moduli))
        object.__setattr__(self, "residues", reduced)

    def __call__(self, e: Element) -> RootExponent:
        if e.group != self.group:
            raise ValueError("element of a different group")
        total = Fraction(0)
        for c, x, m in zip(self.residues, e.residues, self.group.moduli):
            total += Fraction(c * x, m)
        return RootExponent(total.numerator, total.denominator)

    def __mul__(self, other: "Character") -> "Character":
        if other.group != self.group:
            raise ValueError("characters of different groups")
        return Character(self.group, tuple(a + b for a, b in zip(self.residues, other.residues)))

    def inverse(self) -> "Character":
        return Character(self.group, tuple(-r for r in self.residues))

    @property
    def is_trivial(self) -> bool:
        return all(r == 0 for r in self.residues)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.residues)) + ")"


def restrict_character(chi: Character, g: Element) -> RootExponent:
    """chi(g); the restriction of chi to <g> is determined by this value."""
    return chi(g)


@dataclass(frozen=True)
class Hom:
    """Homomorphism between finite abelian groups as a generator-image table.

    Well-definedness (m_j * images[j] = 0 in the target) is checked at
    construction.
    """

    source: AbelianGroup
    target: AbelianGroup
    images: tuple[Element, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if len(images) != self.source.rank:
            raise ValueError("one image per source generator required")
        for j, img in enumerate(images):
            if img.group != self.target:
                raise ValueError(f"image {j} lies in a different group")
            if not (self.source.moduli[j] * img).is_identity:
                raise ValueError(
                    f"not a homomorphism: {self.source.moduli[j]} * {img} != 0"
                )
        object.__setattr__(self, "images", images)

    def __call__(self, e: Element) -> Element:
        if e.group != self.source:
            raise ValueError("element of a different group")
        out = self.target.identity()
        for x, img in zip(e.residues, self.images):
            out = out + x * img
        return out


def _relation_matrix(f: Hom) -> list[list[int]]:
    """Columns: images of the source generators, then the target relations."""
    s, r = f.source.rank, f.target.rank
    B = [[0] * (s + r) for _ in range(r)]
    for j, img in enumerate(f.images):
        for k in range(r):
            B[k][j] = img.residues[k]
    for k in range(r):
        B[k][s + k] = f.target.moduli[k]
    return B


def _image_order(f: Hom) -> int:
    r = f.target.rank
    if r == 0:
        return 1
    _, D, _ = smith_normal_form(_relation_matrix(f))
    covolume = prod(D[k][k] for k in range(r))
    return f.target.order // covolume


def kernel_generators(f: Hom) -> tuple[tuple[Element, ...], int]:
    """Generators of ker f and its order |source| / |image f|."""
    s, r = f.source.rank, f.target.rank
    if s == 0:
        return (), 1
    if r == 0:
        return f.source.generators(), f.source.order
    U, D, V = smith_normal_form(_relation_matrix(f))
    rank = sum(1 for k in range(r) if D[k][k])
    gens: list[Element] = []
    seen: set[tuple[int, ...]] = set()
    for k in range(rank, s + r):
        e = f.source.element([V[i][k] for i in range(s)])
        if not e.is_identity and e.residues not in seen:
            seen.add(e.residues)
            gens.append(e)
    image_order = f.target.order // prod(D[k][k] for k in range(rank))
    return tuple(gens), f.source.order // image_order


def image_subgroup(f: Hom) -> tuple[tuple[Element, ...], int]:
    """Generators of im f (the nonzero generator images) and its order."""
    gens: list[Element] = []
    seen: set[tuple[int, ...]] = set()
    for img in f.images:
        if not img.is_identity and img.residues not in seen:
            seen.add(img.residues)
            gens.append(img)
    return tuple(gens), _image_order(f)


def closure(moduli: tuple[int, ...], generators, limit: int = DEFAULT_ENUMERATION_LIMIT) -> list[tuple[int, ...]]:
    """All residue tuples in the subgroup generated by the given tuples,
    sorted lexicographically.  Raises LimitExceeded past `limit` elements."""
    zero = (0,) * len(moduli)
    elems = {zero}
    frontier = [zero]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % m for a, b, m in zip(x, g, moduli))
                if y not in elems:
                    if len(elems) >= limit:
                        raise LimitExceeded(
                            f"subgroup enumeration exceeded {limit} elements"
                        )
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(elems)


def enumerate_subgroup(group: AbelianGroup, generators, limit: int = DEFAULT_ENUMERATION_LIMIT) -> list[Element]:
    """All elements of the subgroup generated by `generators`, lex-sorted."""
    tuples = closure(group.moduli, (g.residues for g in generators), limit)
    return [Element(group, t) for t in tuples]


# ---------------------------------------------------------------------------
# Discrete logarithms and character congruences


def discrete_log(base: RootExponent, target: RootExponent, order: int) -> int:
    """The unique t in [0, order) with t*base = target in Q/Z.

    Requires base = a/order with gcd(a, order) = 1, and target's denominator
    dividing `order`.  The result is re-checked before returning.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if base.den != order:
        raise ValueError(f"base must have exact order {order}, got {base}")
    if order % target.den:
        raise ValueError(f"{target} does not lie in the group generated by {base}")
    t = (pow(base.num, -1, order) * (target.num * (order // target.den))) % order
    if t * base != target:
        raise ArithmeticError("discrete log failed its own check")
    return t


def solve_character_congruences(
    group: AbelianGroup,
    constraints,
    *,
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
    cross_check_limit: int = DEFAULT_CROSS_CHECK_LIMIT,
) -> Character | None:
    """A character chi of `group` with chi(g) = value for every (g, value)
    constraint, or None when no such character exists.

    The congruences sum_j c_j g_j / m_j = value (mod 1) are cleared to a
    single modulus L = lcm of all moduli and value denominators and solved by
    Smith normal form.  When solutions exist the lexicographically smallest
    one is returned, so the output is deterministic.  A None answer is
    re-checked against full character enumeration while |G| stays within
    `cross_check_limit`.
    """
    constraints = list(constraints)
    r = group.rank
    for g, value in constraints:
        if g.group != group:
            raise ValueError("constraint element of a different group")
        if g.order() % value.den:
            raise ValueError(
                f"constraint value {value} has denominator not dividing ord({g}) = {g.order()}"
            )
    if not constraints or r == 0:
        # Any violated constraint on the trivial group was caught above
        # (orders are 1, so all values are 0/1).
        return group.trivial_character()

    L = lcm(*group.moduli, *(value.den for _, value in constraints))
    k = len(constraints)
    M = [
        [(g.residues[j] * (L // group.moduli[j])) % L for j in range(r)]
        for g, _ in constraints
    ]
    b = [(value.num * (L // value.den)) % L for _, value in constraints]

    # Solve M c = b (mod L) as B (c; y) = b over Z with B = [M | L*I].
    B = [M[i] + [L if i == j else 0 for j in range(k)] for i in range(k)]
    U, D, V = smith_normal_form(B)
    rank = sum(1 for i in range(k) if D[i][i])
    c = _mat_vec(U, b)
    w = [0] * (r + k)
    solvable = True
    for idx in range(k):
        d = D[idx][idx]
        if d == 0:
            if c[idx] != 0:
                solvable = False
                break
        elif c[idx] % d:
            solvable = False
            break
        else:
            w[idx] = c[idx] // d
    if not solvable:
        if group.order <= cross_check_limit:
            for chi in group.characters():
                if all(chi(g) == value for g, value in constraints):
                    raise ArithmeticError("congruence solver missed a solution")
        return None
    z = _mat_vec(V, w)
    particular = group.character(z[:r])

    # Homogeneous solutions form a subgroup of the dual; take the lex-least
    # point of the solution coset when that subgroup is small enough.
    hom_gens = [
        tuple(V[i][idx] % group.moduli[i] for i in range(r))
        for idx in range(rank, r + k)
    ]
    chi = particular
    try:
        coset = [
            tuple((a + b_) % m for a, b_, m in zip(particular.residues, shift, group.moduli))
            for shift in closure(group.moduli, hom_gens, enumeration_limit)
        ]
        chi = group.character(min(coset))
    except LimitExceeded:
        pass
    for g, value in constraints:
        if chi(g) != value:
            raise ArithmeticError("congruence solver produced a bad solution")
    return chi
