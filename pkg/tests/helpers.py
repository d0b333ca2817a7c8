"""Shared oracles and sample generators for the test suite.

Everything here is deliberately independent of the code paths under test:
determinants come from rational Gaussian elimination, kernels and character
searches from full enumeration, discrete logs from linear scans."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, prod

from abelcover import (
    AbelianGroup,
    BranchDatum,
    CombinatorialData,
    Element,
    Hom,
    InvalidCoverData,
    RootExponent,
    image_subgroup,
    sum_map,
    validate,
)


# ---------------------------------------------------------------------------
# Linear algebra oracles


def exact_det(matrix) -> Fraction:
    """Determinant by fraction-free-enough Gaussian elimination over Q."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for i in range(col + 1, n):
            factor = rows[i][col] * inv
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[col])]
    return det


def matmul(A, B):
    if not A or not B:
        return []
    return [[sum(A[i][k] * B[k][j] for k in range(len(B)))
             for j in range(len(B[0]))] for i in range(len(A))]


def assert_snf_contract(A, U, D, V):
    m, n = len(A), len(A[0]) if A else 0
    assert matmul(matmul(U, A), V) == D
    assert abs(exact_det(U)) == 1
    assert abs(exact_det(V)) == 1
    for i in range(m):
        for j in range(n):
            if i != j:
                assert D[i][j] == 0
    diag = [D[k][k] for k in range(min(m, n))]
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert b == 0 or (a != 0 and b % a == 0) or (a == 0 and b == 0)


# ---------------------------------------------------------------------------
# Enumeration oracles


def brute_kernel(f: Hom) -> set[tuple[int, ...]]:
    return {e.residues for e in f.source.elements() if f(e).is_identity}


def brute_image(f: Hom) -> set[tuple[int, ...]]:
    return {f(e).residues for e in f.source.elements()}


def brute_character_solutions(group: AbelianGroup, constraints) -> list:
    out = []
    for chi in group.characters():
        if all(chi(g) == value for g, value in constraints):
            out.append(chi)
    return out


def brute_discrete_log(base: RootExponent, target: RootExponent, order: int) -> int | None:
    for t in range(order):
        if t * base == target:
            return t
    return None


def brute_element_order(e: Element) -> int:
    acc = e
    n = 1
    while not acc.is_identity:
        acc = acc + e
        n += 1
    return n


def series_counts(numerator: tuple[int, ...], orders, max_degree: int) -> list[int]:
    """Coefficients of numerator(t) / prod(1 - t^d) up to max_degree."""
    coeffs = list(numerator[: max_degree + 1])
    coeffs += [0] * (max_degree + 1 - len(coeffs))
    for d in orders:
        # multiply by 1 / (1 - t^d): prefix-sum with stride d
        for k in range(d, max_degree + 1):
            coeffs[k] += coeffs[k - d]
    return coeffs


def chain_law_oracle(data: CombinatorialData) -> bool:
    """Gorenstein test for data on a cyclic p-group, straight from the chain
    description: all subgroup orders distinct, and the character of each
    smaller subgroup is the restriction of the largest subgroup's character."""
    orders = data.orders
    if len(set(orders)) != len(orders):
        return False
    if not data.branch:
        return True
    top = max(data.branch, key=lambda d: d.order)
    for datum in data.branch:
        # write datum.generator as t * top.generator by scanning
        t = None
        for cand in range(top.order):
            if cand * top.generator == datum.generator:
                t = cand
                break
        if t is None:
            return False
        if t * RootExponent(top.char_residue, top.order) != datum.char_value:
            return False
    return True


# ---------------------------------------------------------------------------
# Fixed example data


def z2cubed_data() -> CombinatorialData:
    G = AbelianGroup((2, 2, 2))
    e1, e2, e3 = G.generators()
    return validate(CombinatorialData(G, (
        BranchDatum(e1, 1),
        BranchDatum(e2, 1),
        BranchDatum(e3, 1),
        BranchDatum(e1 + e2 + e3, 1),
    )))


def zpqr_data(p=3, q=5, r=7, alpha=1, beta=1) -> CombinatorialData:
    G = AbelianGroup((p * q * r,))
    return validate(CombinatorialData(G, (
        BranchDatum(G.element((q,)), alpha),
        BranchDatum(G.element((r,)), beta),
    )))


def z3_two_datum() -> CombinatorialData:
    """G = Z/3 with both generating characters of the full subgroup: the
    standard non-Gorenstein instance (socle dimension 2)."""
    G = AbelianGroup((3,))
    one = G.element((1,))
    return validate(CombinatorialData(G, (BranchDatum(one, 1), BranchDatum(one, 2))))


def dual_numbers_data() -> CombinatorialData:
    G = AbelianGroup((2,))
    return validate(CombinatorialData(G, (BranchDatum(G.element((1,)), 1),)))


def z3sq_gorenstein() -> CombinatorialData:
    """(Z/3)^2 with three lines compatible with the character (1, 1):
    Gorenstein, K of order 3, all kernel supports = 3."""
    G = AbelianGroup((3, 3))
    return validate(CombinatorialData(G, (
        BranchDatum(G.element((1, 0)), 1),
        BranchDatum(G.element((0, 1)), 1),
        BranchDatum(G.element((1, 1)), 2),
    )))


def z6_unknown_case() -> CombinatorialData:
    """Z/6 chain with a support-2 kernel element and s = 3: Gorenstein but in
    the genuinely open lci regime."""
    G = AbelianGroup((6,))
    return validate(CombinatorialData(G, (
        BranchDatum(G.element((3,)), 1),
        BranchDatum(G.element((2,)), 1),
        BranchDatum(G.element((1,)), 1),
    )))


def single_datum_z105() -> CombinatorialData:
    G = AbelianGroup((105,))
    return validate(CombinatorialData(G, (BranchDatum(G.element((5,)), 1),)))


# ---------------------------------------------------------------------------
# Random sampling


def random_group(rng, max_order=512, max_rank=3) -> AbelianGroup:
    while True:
        rank = rng.randint(1, max_rank)
        moduli = tuple(rng.choice((2, 2, 3, 3, 4, 5, 6, 7, 8, 9, 12, 16)) for _ in range(rank))
        if prod(moduli) <= max_order:
            return AbelianGroup(moduli)


def random_data(
    rng,
    group: AbelianGroup,
    *,
    max_branch=6,
    min_branch=1,
    require_total=False,
    max_H=20000,
    tries=400,
) -> CombinatorialData:
    """A random valid data set over `group`, optionally totally ramified.
    |H| = prod d_i is capped so kernel enumeration stays cheap."""
    nonzero = [e for e in group.elements() if not e.is_identity]
    for _ in range(tries):
        s = rng.randint(min_branch, max_branch)
        branch = []
        keys = set()
        H = 1
        for _ in range(s):
            for _ in range(40):
                g = rng.choice(nonzero)
                d = g.order()
                if H * d > max_H:
                    continue
                a = rng.choice([x for x in range(1, d) if gcd(x, d) == 1])
                datum = BranchDatum(g, a)
                key = datum.pair_key()
                if key not in keys:
                    keys.add(key)
                    branch.append(datum)
                    H *= d
                    break
            else:
                break
        if len(branch) != s:
            continue
        try:
            data = validate(CombinatorialData(group, tuple(branch)))
        except InvalidCoverData:
            continue
        if require_total:
            _, image_order = image_subgroup(sum_map(data))
            if image_order != group.order:
                continue
        return data
    raise RuntimeError(f"failed to sample data over {group}")


def random_total_data(rng, *, max_order=512, max_branch=5, max_H=20000) -> CombinatorialData:
    while True:
        group = random_group(rng, max_order=max_order)
        try:
            return random_data(
                rng, group,
                max_branch=max_branch, require_total=True, max_H=max_H, tries=80)
        except RuntimeError:
            continue
