"""Command-line interface.

Reads a cover document (JSON: the ambient group's moduli plus the branch
list of generator / character pairs), validates it, and runs one of the
classification or fiber-ring commands.  A built-in registry replays the
standard worked examples with their expected verdicts.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import gcd
from typing import Callable

from .groups import AbelianGroup, LimitExceeded
from .cover import (
    BranchDatum,
    CombinatorialData,
    InvalidCoverData,
    ramification_factorization,
    validate,
)
from .fiber import (
    DEFAULT_FIBER_ORDER_LIMIT,
    build_fiber_ring,
    hilbert_numerator,
    invariant_monomials_up_to_degree,
    socle_basis,
)
from .classify import ClassificationReport, classify

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_LIMIT = 2


class DocumentError(ValueError):
    """Syntax or schema problem in an input document, with its location."""

    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


class RegistryError(ValueError):
    """Unknown example name or bad example parameters."""


# ---------------------------------------------------------------------------
# Documents


@dataclass(frozen=True)
class BranchEntry:
    generator: tuple[int, ...]
    character: int


@dataclass(frozen=True)
class CoverDocument:
    group: tuple[int, ...]
    branch: tuple[BranchEntry, ...]

    def to_data(self) -> CombinatorialData:
        grp = AbelianGroup(self.group)
        return CombinatorialData(
            grp,
            tuple(BranchDatum(grp.element(entry.generator), entry.character)
                  for entry in self.branch),
        )

    def to_json_dict(self) -> dict:
        return {
            "group": list(self.group),
            "branch": [
                {"generator": list(entry.generator), "character": entry.character}
                for entry in self.branch
            ],
        }


def _expect_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(where, f"expected an integer, got {value!r}")
    return value


def parse_input(text: str) -> CoverDocument:
    """Parse a cover document, rejecting unknown fields and malformed shapes.

    Errors carry the JSON path (or line/column for syntax errors)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    if not isinstance(obj, dict):
        raise DocumentError("$", "document must be a JSON object")
    unknown = sorted(set(obj) - {"group", "branch"})
    if unknown:
        raise DocumentError("$", f"unknown fields: {', '.join(unknown)}")
    if "group" not in obj or "branch" not in obj:
        raise DocumentError("$", "fields 'group' and 'branch' are required")
    if not isinstance(obj["group"], list):
        raise DocumentError("group", "must be a list of moduli")
    moduli = []
    for i, m in enumerate(obj["group"]):
        m = _expect_int(m, f"group[{i}]")
        if m < 2:
            raise DocumentError(f"group[{i}]", f"modulus must be >= 2, got {m}")
        moduli.append(m)
    if not isinstance(obj["branch"], list):
        raise DocumentError("branch", "must be a list")
    branch = []
    for i, entry in enumerate(obj["branch"]):
        where = f"branch[{i}]"
        if not isinstance(entry, dict):
            raise DocumentError(where, "must be an object")
        unknown = sorted(set(entry) - {"generator", "character"})
        if unknown:
            raise DocumentError(where, f"unknown fields: {', '.join(unknown)}")
        if "generator" not in entry or "character" not in entry:
            raise DocumentError(where, "fields 'generator' and 'character' are required")
        gen = entry["generator"]
        if not isinstance(gen, list):
            raise DocumentError(f"{where}.generator", "must be a list of residues")
        if len(gen) != len(moduli):
            raise DocumentError(
                f"{where}.generator",
                f"expected {len(moduli)} residues, got {len(gen)}")
        residues = tuple(_expect_int(x, f"{where}.generator[{j}]") for j, x in enumerate(gen))
        character = _expect_int(entry["character"], f"{where}.character")
        branch.append(BranchEntry(residues, character))
    return CoverDocument(tuple(moduli), tuple(branch))


def print_document(doc: CoverDocument) -> str:
    return json.dumps(doc.to_json_dict(), indent=2) + "\n"


# ---------------------------------------------------------------------------
# Report rendering


def report_to_json_dict(report: ClassificationReport) -> dict:
    kernel = {
        "order": report.kernel.order,
        "generators": [list(g.residues) for g in report.kernel.generators],
        "min_support": report.kernel.min_support,
    }
    checks = {
        "lift": report.cross_checks.lift,
        "watanabe": report.cross_checks.watanabe,
        "socle": report.cross_checks.socle,
        "hilbert_palindromic": report.cross_checks.hilbert_palindromic,
    }
    return {
        "locally_simple": report.locally_simple,
        "totally_ramified": report.totally_ramified,
        "etale_index": report.etale_index,
        "kernel": kernel,
        "gorenstein": report.gorenstein,
        "certificate": list(report.certificate.residues) if report.certificate else None,
        "cross_checks": checks,
        "lci": report.lci,
        "lci_reason": report.lci_reason,
        "smooth": report.smooth,
        "assumptions": list(report.assumptions),
    }


def _yesno(value) -> str:
    if value is None:
        return "skipped (limit)"
    return "yes" if value else "no"


def render_report(data: CombinatorialData, report: ClassificationReport) -> str:
    lines = []
    lines.append(f"group: {data.group} (order {data.group.order})")
    lines.append(f"branch components: {data.size}")
    for i, datum in enumerate(data.branch):
        lines.append(
            f"  [{i}] generator {datum.generator}  order {datum.order}"
            f"  character {datum.char_residue}/{datum.order}")
    lines.append(f"locally simple: {_yesno(report.locally_simple)}")
    lines.append(
        f"totally ramified: {_yesno(report.totally_ramified)}"
        f" (etale index {report.etale_index})")
    support = report.kernel.min_support
    lines.append(
        f"kernel K: order {report.kernel.order}, min support "
        + (str(support) if support is not None else "n/a"))
    if report.kernel.generators:
        gens = ", ".join(str(g) for g in report.kernel.generators)
        lines.append(f"  generators: {gens}")
    lines.append(f"gorenstein: {_yesno(report.gorenstein)}")
    if report.certificate is not None:
        lines.append(f"  certificate: character {report.certificate}")
    c = report.cross_checks
    lines.append(
        "  cross-checks: lift=" + _yesno(c.lift)
        + " watanabe=" + _yesno(c.watanabe)
        + " socle=" + _yesno(c.socle)
        + " hilbert=" + _yesno(c.hilbert_palindromic))
    lines.append(f"lci: {report.lci} ({report.lci_reason})")
    lines.append(f"smooth: {report.smooth}")
    lines.append("assumptions:")
    for a in report.assumptions:
        lines.append(f"  - {a}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Example registry


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _crt(a1: int, m1: int, a2: int, m2: int) -> int:
    """Solve x = a1 (mod m1), x = a2 (mod m2); moduli need not be coprime."""
    g = gcd(m1, m2)
    if (a2 - a1) % g:
        raise ValueError("incompatible congruences")
    l = m1 // g * m2
    t = ((a2 - a1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g)
    return (a1 + m1 * t) % l


def _build_z2cubed(p: dict) -> CoverDocument:
    return CoverDocument((2, 2, 2), (
        BranchEntry((1, 0, 0), 1),
        BranchEntry((0, 1, 0), 1),
        BranchEntry((0, 0, 1), 1),
        BranchEntry((1, 1, 1), 1),
    ))


def _expected_z2cubed(p: dict) -> dict:
    return {
        "locally_simple": False,
        "totally_ramified": True,
        "etale_index": 1,
        "kernel.order": 2,
        "kernel.min_support": 4,
        "gorenstein": True,
        "certificate": [1, 1, 1],
        "lci": "NotLCI",
        "lci_reason": "rigid-quotient",
        "smooth": "NotSmooth",
    }


def _check_zpqr(p: dict) -> None:
    pp, q, r = p["p"], p["q"], p["r"]
    if not (_is_prime(pp) and _is_prime(q) and _is_prime(r) and pp < q < r):
        raise RegistryError(f"zpqr needs primes p < q < r, got {pp}, {q}, {r}")
    if gcd(p["alpha"], pp * r) != 1:
        raise RegistryError(f"alpha = {p['alpha']} must be coprime to p*r = {pp * r}")
    if gcd(p["beta"], pp * q) != 1:
        raise RegistryError(f"beta = {p['beta']} must be coprime to p*q = {pp * q}")


def _build_zpqr(p: dict) -> CoverDocument:
    _check_zpqr(p)
    pp, q, r = p["p"], p["q"], p["r"]
    return CoverDocument((pp * q * r,), (
        BranchEntry((q,), p["alpha"] % (pp * r)),
        BranchEntry((r,), p["beta"] % (pp * q)),
    ))


def _expected_zpqr(p: dict) -> dict:
    pp, q, r = p["p"], p["q"], p["r"]
    gorenstein = (p["alpha"] - p["beta"]) % pp == 0
    expected = {
        "locally_simple": False,
        "totally_ramified": True,
        "kernel.order": pp,
        "gorenstein": gorenstein,
        "lci": "LCI" if gorenstein else "NotLCI",
        "lci_reason": "A-type-surface" if gorenstein else "lci-implies-gorenstein",
        "smooth": "NotSmooth",
    }
    if gorenstein:
        expected["certificate"] = [_crt(p["alpha"] % (pp * r), pp * r,
                                        p["beta"] % (pp * q), pp * q)]
    return expected


def _check_zpn(p: dict) -> None:
    if not _is_prime(p["p"]):
        raise RegistryError(f"p = {p['p']} must be prime")
    if p["n"] < 1:
        raise RegistryError("n must be >= 1")
    if not 1 <= p["s"] <= p["n"]:
        raise RegistryError(f"s must lie in [1, n] = [1, {p['n']}]")
    if gcd(p["c"], p["p"]) != 1:
        raise RegistryError(f"c = {p['c']} must be coprime to p = {p['p']}")


def _build_zpn_chain(p: dict) -> CoverDocument:
    """Chain data on the cyclic group of order p^n: the s subgroups of orders
    p^(n-s+1) < ... < p^n with characters all restricted from one generator
    of the dual, the canonical Gorenstein configuration."""
    _check_zpn(p)
    pp, n, s, c = p["p"], p["n"], p["s"], p["c"]
    entries = []
    for i in range(1, s + 1):
        k = n - s + i
        entries.append(BranchEntry((pp ** (n - k),), c % (pp ** k)))
    return CoverDocument((pp ** n,), tuple(entries))


def _expected_zpn_chain(p: dict) -> dict:
    pp, n, s = p["p"], p["n"], p["s"]
    orders = [pp ** (n - s + i) for i in range(1, s + 1)]
    kernel_order = 1
    for d in orders:
        kernel_order *= d
    kernel_order //= pp ** n
    expected = {
        "locally_simple": s == 1,
        "totally_ramified": True,
        "etale_index": 1,
        "kernel.order": kernel_order,
        "gorenstein": True,
        "smooth": "Smooth-conditional" if s == 1 else "NotSmooth",
    }
    if s == 1:
        expected["lci"] = "LCI"
        expected["lci_reason"] = "locally-simple"
    elif s == 2:
        expected["lci"] = "LCI"
        expected["lci_reason"] = "A-type-surface"
    else:
        expected["lci"] = "Unknown"
        expected["lci_reason"] = "open-general-case"
    return expected


def _check_elementary(p: dict) -> None:
    if not _is_prime(p["p"]):
        raise RegistryError(f"p = {p['p']} must be prime")
    if p["n"] < 1:
        raise RegistryError("n must be >= 1")


def _build_elementary(p: dict) -> CoverDocument:
    """The locally simple configuration on (Z/p)^n: the n coordinate
    subgroups, each with character residue 1."""
    _check_elementary(p)
    pp, n = p["p"], p["n"]
    entries = tuple(
        BranchEntry(tuple(1 if j == i else 0 for j in range(n)), 1)
        for i in range(n)
    )
    return CoverDocument((pp,) * n, entries)


def _expected_elementary(p: dict) -> dict:
    return {
        "locally_simple": True,
        "totally_ramified": True,
        "etale_index": 1,
        "kernel.order": 1,
        "gorenstein": True,
        "certificate": [1] * p["n"],
        "lci": "LCI",
        "lci_reason": "locally-simple",
        "smooth": "Smooth-conditional",
    }


@dataclass(frozen=True)
class ExampleEntry:
    name: str
    summary: str
    defaults: dict
    build: Callable[[dict], CoverDocument]
    expected: Callable[[dict], dict]


REGISTRY = {
    "z2cubed": ExampleEntry(
        "z2cubed",
        "(Z/2)^3 with four branch lines: Gorenstein but not locally simple, not lci",
        {},
        _build_z2cubed,
        _expected_z2cubed,
    ),
    "zpqr": ExampleEntry(
        "zpqr",
        "Z/pqr surface point: Gorenstein iff alpha = beta (mod p), then an A-type lci",
        {"p": 3, "q": 5, "r": 7, "alpha": 1, "beta": 1},
        _build_zpqr,
        _expected_zpqr,
    ),
    "zpn-chain": ExampleEntry(
        "zpn-chain",
        "Z/p^n with a chain of s subgroups and matching characters: always Gorenstein",
        {"p": 2, "n": 3, "s": 3, "c": 1},
        _build_zpn_chain,
        _expected_zpn_chain,
    ),
    "elementary": ExampleEntry(
        "elementary",
        "(Z/p)^n with the n coordinate subgroups: locally simple, smooth point",
        {"p": 2, "n": 3},
        _build_elementary,
        _expected_elementary,
    ),
}


def examples_registry(name: str, params: dict | None = None) -> CoverDocument:
    """The document of a named built-in example, with parameter overrides."""
    if name not in REGISTRY:
        raise RegistryError(
            f"unknown example '{name}'; known: {', '.join(sorted(REGISTRY))}")
    entry = REGISTRY[name]
    merged = dict(entry.defaults)
    for key, value in (params or {}).items():
        if key not in entry.defaults:
            raise RegistryError(
                f"example '{name}' has no parameter '{key}'; "
                f"known: {', '.join(sorted(entry.defaults)) or 'none'}")
        merged[key] = value
    return entry.build(merged)


def expected_report(name: str, params: dict | None = None) -> dict:
    entry = REGISTRY[name]
    merged = dict(entry.defaults)
    merged.update(params or {})
    return entry.expected(merged)


# ---------------------------------------------------------------------------
# Commands: each returns (text, exit code)


def _validated(doc: CoverDocument) -> CombinatorialData:
    return validate(doc.to_data())


def cmd_validate(doc: CoverDocument) -> tuple[str, int]:
    try:
        data = _validated(doc)
    except InvalidCoverData as exc:
        lines = ["invalid cover data:"]
        lines += [f"  {issue}" for issue in exc.issues]
        return "\n".join(lines) + "\n", EXIT_INVALID
    lines = [f"valid: {data.group} with {data.size} branch components"]
    for i, datum in enumerate(data.branch):
        lines.append(
            f"  [{i}] generator {datum.generator}  order {datum.order}"
            f"  character {datum.char_residue}/{datum.order}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_classify(doc: CoverDocument, *, as_json: bool = False,
                 fiber_order_limit: int = DEFAULT_FIBER_ORDER_LIMIT) -> tuple[str, int]:
    try:
        data = _validated(doc)
    except InvalidCoverData as exc:
        return f"invalid cover data: {exc}\n", EXIT_INVALID
    report = classify(data, fiber_order_limit=fiber_order_limit)
    if as_json:
        return json.dumps(report_to_json_dict(report), indent=2) + "\n", EXIT_OK
    return render_report(data, report), EXIT_OK


def cmd_fiber(doc: CoverDocument, *, table: bool = False,
              max_order: int = DEFAULT_FIBER_ORDER_LIMIT) -> tuple[str, int]:
    try:
        data = _validated(doc)
    except InvalidCoverData as exc:
        return f"invalid cover data: {exc}\n", EXIT_INVALID
    fact = ramification_factorization(data)
    lines = []
    if fact.etale_index > 1:
        lines.append(
            f"etale index {fact.etale_index}: the fiber is {fact.etale_index} "
            "disjoint copies of the totally ramified fiber below")
    try:
        ring = build_fiber_ring(fact.restricted, order_limit=max_order)
    except LimitExceeded as exc:
        return f"limit exceeded: {exc}\n", EXIT_LIMIT
    lines.append(f"fiber ring dimension: {ring.dimension}")
    lines.append("basis (character : exponents : degree):")
    for chi, alpha in zip(ring.characters, ring.alphas):
        lines.append(f"  w{chi} : {list(alpha)} : {sum(alpha)}")
    if table:
        lines.append("products (row * column, . = zero):")
        idx = ring.product_table()
        header = "      " + " ".join(f"{j:>4}" for j in range(ring.dimension))
        lines.append(header)
        for i, row in enumerate(idx):
            cells = " ".join(f"{'.' if v is None else v:>4}" for v in row)
            lines.append(f"  {i:>3} {cells}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_socle(doc: CoverDocument, *, max_order: int = DEFAULT_FIBER_ORDER_LIMIT) -> tuple[str, int]:
    try:
        data = _validated(doc)
    except InvalidCoverData as exc:
        return f"invalid cover data: {exc}\n", EXIT_INVALID
    fact = ramification_factorization(data)
    try:
        ring = build_fiber_ring(fact.restricted, order_limit=max_order)
    except LimitExceeded as exc:
        return f"limit exceeded: {exc}\n", EXIT_LIMIT
    basis = socle_basis(ring)
    lines = [f"socle dimension: {len(basis)}"]
    for chi in basis:
        lines.append(f"  w{chi} : exponents {list(ring.alpha(chi))}")
    lines.append("gorenstein: " + ("yes" if len(basis) == 1 else "no"))
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_hilbert(doc: CoverDocument, *, max_degree: int = 12,
                max_order: int = DEFAULT_FIBER_ORDER_LIMIT) -> tuple[str, int]:
    try:
        data = _validated(doc)
    except InvalidCoverData as exc:
        return f"invalid cover data: {exc}\n", EXIT_INVALID
    fact = ramification_factorization(data)
    try:
        numerator = hilbert_numerator(fact.restricted, order_limit=max_order)
        monomials = invariant_monomials_up_to_degree(fact.restricted, max_degree)
    except LimitExceeded as exc:
        return f"limit exceeded: {exc}\n", EXIT_LIMIT
    lines = [
        f"numerator: {numerator}",
        f"palindromic: {'yes' if numerator.palindromic else 'no'}",
        f"invariant monomial counts up to degree {max_degree}:",
    ]
    counts = [0] * (max_degree + 1)
    for alpha in monomials:
        counts[sum(alpha)] += 1
    for d, c in enumerate(counts):
        lines.append(f"  degree {d}: {c}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_factor(doc: CoverDocument) -> tuple[str, int]:
    try:
        data = _validated(doc)
    except InvalidCoverData as exc:
        return f"invalid cover data: {exc}\n", EXIT_INVALID
    fact = ramification_factorization(data)
    lines = [
        f"image subgroup order: {fact.image_order}",
        f"etale index: {fact.etale_index}",
        f"totally ramified: {'yes' if fact.totally_ramified else 'no'}",
        f"restricted group: {fact.restricted.group}",
    ]
    for i, datum in enumerate(fact.restricted.branch):
        lines.append(
            f"  [{i}] generator {datum.generator}  order {datum.order}"
            f"  character {datum.char_residue}/{datum.order}")
    return "\n".join(lines) + "\n", EXIT_OK


def _lookup(path: str, report: dict):
    node = report
    for part in path.split("."):
        node = node[part]
    return node


def cmd_example_run(name: str, params: dict) -> tuple[str, int]:
    doc = examples_registry(name, params)
    expected = expected_report(name, params)
    data = _validated(doc)
    report = report_to_json_dict(classify(data))
    lines = [f"example {name}:"]
    failures = 0
    for path in sorted(expected):
        want = expected[path]
        got = _lookup(path, report)
        if got == want:
            lines.append(f"  ok       {path} = {json.dumps(want)}")
        else:
            failures += 1
            lines.append(
                f"  MISMATCH {path}: expected {json.dumps(want)}, got {json.dumps(got)}")
    lines.append("result: " + ("PASS" if failures == 0 else f"FAIL ({failures} mismatches)"))
    return "\n".join(lines) + "\n", EXIT_OK if failures == 0 else EXIT_INVALID


def cmd_example_list() -> tuple[str, int]:
    lines = []
    for name in sorted(REGISTRY):
        entry = REGISTRY[name]
        defaults = " ".join(f"{k}={v}" for k, v in sorted(entry.defaults.items()))
        lines.append(f"{name:12} {entry.summary}")
        if defaults:
            lines.append(f"{'':12} parameters: {defaults}")
    return "\n".join(lines) + "\n", EXIT_OK


# ---------------------------------------------------------------------------
# Entry point


def _parse_params(pairs) -> dict:
    params = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise RegistryError(f"--param needs NAME=VALUE, got '{pair}'")
        key, _, value = pair.partition("=")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise RegistryError(f"parameter '{key}' needs an integer, got '{value}'") from None
    return params


def _read_document(path: str) -> CoverDocument:
    if path == "-":
        return parse_input(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return parse_input(handle.read())
    except OSError as exc:
        raise DocumentError(path, str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelcover",
        description="Classify the local structure of a finite abelian cover "
                    "at a branch point from its combinatorial data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("file", nargs="?", default="-",
                       help="cover document path, or - for stdin (default)")

    add_input(sub.add_parser("validate", help="check and canonicalize a document"))

    p = sub.add_parser("classify", help="full classification report")
    add_input(p)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--max-order", type=int, default=DEFAULT_FIBER_ORDER_LIMIT,
                   help="largest group order for the fiber-ring cross-checks")

    p = sub.add_parser("fiber", help="basis and products of the fiber ring")
    add_input(p)
    p.add_argument("--table", action="store_true", help="print the product table")
    p.add_argument("--max-order", type=int, default=DEFAULT_FIBER_ORDER_LIMIT)

    p = sub.add_parser("socle", help="socle of the fiber ring")
    add_input(p)
    p.add_argument("--max-order", type=int, default=DEFAULT_FIBER_ORDER_LIMIT)

    p = sub.add_parser("hilbert", help="degree data of the invariant ring")
    add_input(p)
    p.add_argument("--max-degree", type=int, default=12)
    p.add_argument("--max-order", type=int, default=DEFAULT_FIBER_ORDER_LIMIT)

    add_input(sub.add_parser("factor", help="totally ramified / etale factorization"))

    p = sub.add_parser("example", help="built-in worked examples")
    ex = p.add_subparsers(dest="example_command", required=True)
    ex.add_parser("list", help="list known examples")
    q = ex.add_parser("show", help="print an example document")
    q.add_argument("name")
    q.add_argument("--param", action="append", metavar="NAME=VALUE")
    q = ex.add_parser("run", help="classify an example and compare to its expected verdicts")
    q.add_argument("name")
    q.add_argument("--param", action="append", metavar="NAME=VALUE")

    return parser


def run_command(args) -> tuple[str, int]:
    if args.command == "example":
        if args.example_command == "list":
            return cmd_example_list()
        params = _parse_params(args.param)
        if args.example_command == "show":
            return print_document(examples_registry(args.name, params)), EXIT_OK
        return cmd_example_run(args.name, params)

    doc = _read_document(args.file)
    if args.command == "validate":
        return cmd_validate(doc)
    if args.command == "classify":
        return cmd_classify(doc, as_json=args.json, fiber_order_limit=args.max_order)
    if args.command == "fiber":
        return cmd_fiber(doc, table=args.table, max_order=args.max_order)
    if args.command == "socle":
        return cmd_socle(doc, max_order=args.max_order)
    if args.command == "hilbert":
        return cmd_hilbert(doc, max_degree=args.max_degree, max_order=args.max_order)
    if args.command == "factor":
        return cmd_factor(doc)
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = run_command(args)
    except (DocumentError, RegistryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except LimitExceeded as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
