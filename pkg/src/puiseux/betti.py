"""Betti graphs, exact Betti sets of finitely generated monoids, and
certificate-producing classification of elements of atomized monoids.

An element is a Betti element when its Betti graph (vertices: its
factorizations, edges: pairs sharing an atom) is disconnected. For
infinitely generated monoids the graph can have infinitely many vertices,
so exact verdicts are only issued when backed by a valuation argument or a
certified property of the base monoid; connectivity observed at a
truncation alone yields an Unknown verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import DomainError, NotAMember
from .factorizations import (
    Factorization,
    FactorizationSet,
    canonical_decomposition,
    enumerate_atomized,
    enumerate_fg,
    enumerate_geometric,
    iter_atomized,
    iter_geometric,
)
from .numerical import ScaledSemigroup, is_member
from .presentations import (
    Atomized,
    FinitelyGenerated,
    Geometric,
    MonoidSpec,
    UnitFractionGeometric,
    atom,
    base_member,
    base_properties,
    base_value,
    base_value_index,
    prime_at,
    validate,
)
from .rationals import format_rational, v_p


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class BettiGraph:
    element: Fraction
    vertices: FactorizationSet
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1


def betti_graph(zset: FactorizationSet) -> BettiGraph:
    """Graph on the factorization set with pairwise-gcd edges; components
    are ordered by their smallest (canonically first) vertex."""
    verts = zset.factorizations
    n = len(verts)
    uf = UnionFind(n)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if verts[i].gcd(verts[j]).items:
                edges.append((i, j))
                uf.union(i, j)
    comps: dict[int, list[int]] = {}
    for i in range(n):
        comps.setdefault(uf.find(i), []).append(i)
    components = tuple(tuple(comps[r]) for r in sorted(comps))
    return BettiGraph(zset.element, zset, tuple(edges), components)


# ---------------------------------------------------------------------------
# finitely generated monoids


def is_betti_fg(spec: FinitelyGenerated, b: Fraction) -> bool:
    return not betti_graph(enumerate_fg(spec, b)).connected


def betti_set_fg(spec: FinitelyGenerated) -> list[Fraction]:
    """The complete Betti set, by scanning the cleared-denominator semigroup
    up to F + 2*max(atoms); every larger element has a connected graph."""
    sg = ScaledSemigroup(spec.atoms)
    out = []
    for n in range(1, sg.scan_bound() + 1):
        if not is_member(n, sg.apery):
            continue
        if is_betti_fg(spec, sg.from_int(n)):
            out.append(sg.from_int(n))
    return out


def betti_set_fg_atomgraph_oracle(spec: FinitelyGenerated) -> list[Fraction]:
    """Independent cross-check that never enumerates factorization sets:
    for each candidate, build the graph on the atoms dividing it with an
    edge when the sum of two atoms divides it; disconnection is equivalent
    to being a Betti element."""
    sg = ScaledSemigroup(spec.atoms)
    gens = sg.gens
    out = []
    for n in range(1, sg.scan_bound() + 1):
        if not is_member(n, sg.apery):
            continue
        verts = [i for i, g in enumerate(gens) if is_member(n - g, sg.apery)]
        if len(verts) <= 1:
            continue
        uf = UnionFind(len(verts))
        for a in range(len(verts)):
            for b in range(a + 1, len(verts)):
                if is_member(n - gens[verts[a]] - gens[verts[b]], sg.apery):
                    uf.union(a, b)
        roots = {uf.find(i) for i in range(len(verts))}
        if len(roots) >= 2:
            out.append(sg.from_int(n))
    return out


# ---------------------------------------------------------------------------
# verdicts and certificates


@dataclass(frozen=True)
class ForcedAtom:
    """Every factorization of the element contains this atom (its prime-adic
    valuation of the element is negative), so the graph is connected."""

    index: int
    kind: str = "forced_atom"


@dataclass(frozen=True)
class SingleFactorization:
    kind: str = "single_factorization"


@dataclass(frozen=True)
class ValuationPath:
    """The base monoid is a valuation monoid and the element lies in it but
    is not a base value; any two factorizations have a common neighbor."""

    kind: str = "valuation_path"


@dataclass(frozen=True)
class DisconnectedWitness:
    """An exactly-isolated vertex plus a second factorization."""

    isolated: Factorization
    other: Factorization
    kind: str = "disconnected_witness"


@dataclass(frozen=True)
class TruncationOnly:
    truncation: int
    components: int
    kind: str = "truncation_only"


Certificate = Union[
    ForcedAtom, SingleFactorization, ValuationPath, DisconnectedWitness, TruncationOnly
]

BETTI = "betti"
NOT_BETTI = "not_betti"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class BettiVerdict:
    verdict: str
    certificate: Certificate
    truncation: int | None = None


def check_isolation_proof(spec: Atomized, j: int, q: Fraction) -> bool:
    """Re-verify the valuation argument isolating p_j * [atom j] in the
    graph of q = q_j: the element has zero p_j-adic valuation, so every
    factorization's j-th coefficient is a multiple of p_j, and a nonzero one
    already exhausts the whole element."""
    p = prime_at(spec, j)
    return base_value(spec, j) == q and v_p(q, p) == 0


def _isolated_vertex(spec: Atomized, j: int) -> Factorization:
    return Factorization.from_dict({j: prime_at(spec, j)})


def _antimatter_witness(spec: Atomized, j: int) -> Factorization:
    # q_j = m * q_{j+1} in a unit-fraction geometric base
    assert isinstance(spec.base, UnitFractionGeometric)
    m = spec.base.m
    return Factorization.from_dict({j + 1: m * prime_at(spec, j + 1)})


def classify_atomized(spec: Atomized, q: Fraction, T: int = 8) -> BettiVerdict:
    """Three-valued Betti classification with a machine-checkable
    certificate; raises NotAMember for elements outside the monoid."""
    validate(spec, prefix=T)
    if q < 0:
        raise NotAMember(f"{format_rational(q)} is not in the monoid")
    if q == 0:
        return BettiVerdict(NOT_BETTI, SingleFactorization(), None)
    cd = canonical_decomposition(spec, q)
    if cd is None:
        raise NotAMember(f"{format_rational(q)} is not in the monoid")
    if cd.fractional:
        return BettiVerdict(NOT_BETTI, ForcedAtom(cd.fractional[0][0]), None)
    # q lies in the base monoid N
    props = base_properties(spec.base)
    j = base_value_index(spec.base, q)
    if j is not None:
        validate(spec, prefix=max(T, j + 1))
        iso = _isolated_vertex(spec, j)
        assert check_isolation_proof(spec, j, q)
        if props["antimatter"] is True:
            return BettiVerdict(BETTI, DisconnectedWitness(iso, _antimatter_witness(spec, j)), None)
        for z in iter_atomized(spec, q, T):
            if z != iso:
                return BettiVerdict(BETTI, DisconnectedWitness(iso, z), None)
        zset = enumerate_atomized(spec, q, T)
        if zset.is_exact and len(zset.factorizations) <= 1:
            return BettiVerdict(NOT_BETTI, SingleFactorization(), None)
        graph = betti_graph(zset)
        return BettiVerdict(UNKNOWN, TruncationOnly(T, len(graph.components)), T)
    if props["valuation"] is True:
        return BettiVerdict(NOT_BETTI, ValuationPath(), None)
    zset = enumerate_atomized(spec, q, T)
    if zset.is_exact and len(zset.factorizations) <= 1:
        return BettiVerdict(NOT_BETTI, SingleFactorization(), None)
    graph = betti_graph(zset)
    return BettiVerdict(UNKNOWN, TruncationOnly(T, len(graph.components)), T)


# ---------------------------------------------------------------------------
# scans


@dataclass
class ScanReport:
    bound: Fraction
    truncation: int
    betti: list[tuple[Fraction, BettiVerdict]] = field(default_factory=list)
    not_betti: list[tuple[Fraction, BettiVerdict]] = field(default_factory=list)
    unknown: list[tuple[Fraction, BettiVerdict]] = field(default_factory=list)
    expected_betti: list[Fraction] | None = None
    consistent: bool | None = None

    def betti_values(self) -> list[Fraction]:
        return [q for q, _ in self.betti]


def _scan_candidates(spec: Atomized, bound: Fraction, T: int) -> list[Fraction]:
    """Nonzero elements of the base monoid N up to the bound: all reachable
    sums for a cyclic base, the m**-T grid for a unit-fraction base."""
    if isinstance(spec.base, UnitFractionGeometric):
        step = Fraction(1, spec.base.m ** T)
        count = int(bound / step)
        return [step * k for k in range(1, count + 1)]
    values = sorted(set(spec.base.values))
    seen = {Fraction(0)}
    frontier = [Fraction(0)]
    while frontier:
        x = frontier.pop()
        for v in values:
            y = x + v
            if y <= bound and y not in seen:
                seen.add(y)
                frontier.append(y)
    seen.discard(Fraction(0))
    return sorted(seen)


def _base_values_up_to(spec: Atomized, bound: Fraction, T: int) -> list[Fraction]:
    if isinstance(spec.base, UnitFractionGeometric):
        out = []
        v = Fraction(1)
        n = 0
        while n <= T:
            if v <= bound:
                out.append(v)
            v /= spec.base.m
            n += 1
        return out
    return sorted({v for v in spec.base.values if v <= bound})


def betti_scan_atomized(spec: Atomized, bound: Fraction, T: int = 8) -> ScanReport:
    """Classify every base-monoid candidate up to the bound. When the base
    is certified antimatter + valuation, the Betti set restricted to the
    window must be exactly the base values; the report records agreement."""
    validate(spec, prefix=T)
    candidates = sorted(set(_scan_candidates(spec, bound, T)) | set(_base_values_up_to(spec, bound, T)))
    report = ScanReport(bound=bound, truncation=T)
    for q in candidates:
        verdict = classify_atomized(spec, q, T)
        bucket = {
            BETTI: report.betti,
            NOT_BETTI: report.not_betti,
            UNKNOWN: report.unknown,
        }[verdict.verdict]
        bucket.append((q, verdict))
    props = base_properties(spec.base)
    if props["antimatter"] is True and props["valuation"] is True:
        expected = sorted(q for q in candidates if base_value_index(spec.base, q) is not None)
        report.expected_betti = expected
        report.consistent = report.betti_values() == expected and not report.unknown
    return report


def betti_set_geometric(spec: Geometric, bound: Fraction) -> list[Fraction]:
    """Exact Betti set up to the bound for ratio above 1 (enumeration is
    exact there); smaller ratios only admit truncated scanning."""
    validate(spec)
    if spec.q <= 1:
        raise DomainError("exact geometric Betti sets need ratio > 1")
    atoms = []
    a = Fraction(1)
    while a <= bound:
        atoms.append(a)
        a *= spec.q
    members = {Fraction(0)}
    frontier = [Fraction(0)]
    while frontier:
        x = frontier.pop()
        for v in atoms:
            y = x + v
            if y <= bound and y not in members:
                members.add(y)
                frontier.append(y)
    members.discard(Fraction(0))
    out = []
    for b in sorted(members):
        if not betti_graph(enumerate_geometric(spec, b)).connected:
            out.append(b)
    return out


# ---------------------------------------------------------------------------
# unrestricted unique factorization check


def _reachable_sums(atom_values: list[Fraction], bound: Fraction) -> list[Fraction]:
    seen = {Fraction(0)}
    frontier = [Fraction(0)]
    while frontier:
        x = frontier.pop()
        for v in atom_values:
            y = x + v
            if y <= bound and y not in seen:
                seen.add(y)
                frontier.append(y)
    seen.discard(Fraction(0))
    return sorted(seen)


def is_uufm_upto(spec: MonoidSpec, bound: Fraction, T: int = 8) -> bool:
    """True iff every scanned element has at most one factorization
    (restricted to the bound, and to the truncation window for infinitely
    generated specs)."""
    if isinstance(spec, FinitelyGenerated):
        sg = ScaledSemigroup(spec.atoms)
        top = sg.to_int(bound)
        limit = int(top) if top is not None else int(bound / sg.scale)
        for n in range(1, limit + 1):
            if not is_member(n, sg.apery):
                continue
            if len(enumerate_fg(spec, sg.from_int(n)).factorizations) > 1:
                return False
        return True
    if isinstance(spec, Atomized):
        validate(spec, prefix=T)
        atoms = [atom(spec, n) for n in range(1, T + 1)]
        for q in _reachable_sums(atoms, bound):
            count = 0
            for _ in iter_atomized(spec, q, T):
                count += 1
                if count > 1:
                    return False
        return True
    if isinstance(spec, Geometric):
        atoms = [atom(spec, n) for n in range(1, T + 2) if atom(spec, n) <= bound]
        for q in _reachable_sums(atoms, bound):
            if len(enumerate_geometric(spec, q, T).factorizations) > 1:
                return False
        return True
    raise DomainError(f"unknown spec kind {spec!r}")


# ---------------------------------------------------------------------------
# export


def graph_to_json_dict(graph: BettiGraph, spec: MonoidSpec) -> dict:
    return {
        "element": format_rational(graph.element),
        "vertices": [z.render(spec) for z in graph.vertices.factorizations],
        "edges": [list(e) for e in graph.edges],
        "components": [list(c) for c in graph.components],
    }


_DOT_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#a65628", "#f781bf", "#999999",
)


def graph_to_dot(graph: BettiGraph, spec: MonoidSpec) -> str:
    color_of = {}
    for ci, comp in enumerate(graph.components):
        for v in comp:
            color_of[v] = _DOT_PALETTE[ci % len(_DOT_PALETTE)]
    lines = [f'graph "betti_{format_rational(graph.element)}" {{']
    lines.append("  node [shape=box];")
    for i, z in enumerate(graph.vertices.factorizations):
        label = z.render(spec)
        lines.append(f'  v{i} [label="{label}", color="{color_of[i]}"];')
    for i, j in graph.edges:
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines)


def verdict_to_json_dict(verdict: BettiVerdict, spec: MonoidSpec) -> dict:
    cert = verdict.certificate
    payload: dict = {"kind": cert.kind}
    if isinstance(cert, ForcedAtom):
        payload["atom"] = format_rational(atom(spec, cert.index))
        payload["index"] = cert.index
    elif isinstance(cert, DisconnectedWitness):
        payload["isolated"] = cert.isolated.render(spec)
        payload["witness"] = cert.other.render(spec)
    elif isinstance(cert, TruncationOnly):
        payload["truncation"] = cert.truncation
        payload["components"] = cert.components
    return {
        "verdict": verdict.verdict,
        "certificate": payload,
        "truncation": verdict.truncation,
    }


def verdict_to_text(verdict: BettiVerdict, spec: MonoidSpec) -> str:
    cert = verdict.certificate
    if verdict.verdict == BETTI:
        assert isinstance(cert, DisconnectedWitness)
        return (
            f"Betti (isolated vertex {cert.isolated.render(spec)}; "
            f"witness {cert.other.render(spec)})"
        )
    if verdict.verdict == NOT_BETTI:
        if isinstance(cert, ForcedAtom):
            return f"NotBetti (forced atom {format_rational(atom(spec, cert.index))})"
        if isinstance(cert, ValuationPath):
            return "NotBetti (valuation path)"
        return "NotBetti (single factorization)"
    assert isinstance(cert, TruncationOnly)
    return (
        f"Unknown (truncation {cert.truncation}: "
        f"{cert.components} component(s) observed)"
    )
