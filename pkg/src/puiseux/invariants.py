"""Length-based factorization invariants: sets of lengths, delta sets, and
catenary degrees.

The distance between factorizations z, z' is
d(z, z') = max(|z - gcd(z,z')|, |z' - gcd(z,z')|), and the catenary degree
of an element is the smallest N such that any two of its factorizations are
joined by a chain with successive distances at most N. Truncated
factorization sets are refused for delta and catenary computations: a wrong
invariant is worse than no invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .betti import UnionFind
from .errors import TruncatedInput
from .factorizations import Factorization, FactorizationSet, enumerate_fg
from .numerical import ScaledSemigroup, is_member
from .presentations import FinitelyGenerated


@dataclass(frozen=True)
class LengthSet:
    element: Fraction
    lengths: tuple[int, ...]  # sorted distinct
    truncation: int | None = None

    @property
    def is_exact(self) -> bool:
        return self.truncation is None


def length_set(zset: FactorizationSet) -> LengthSet:
    lengths = tuple(sorted({z.length for z in zset.factorizations}))
    return LengthSet(zset.element, lengths, zset.truncation)


def delta_set(lengths: LengthSet) -> set[int]:
    """Gaps between consecutive lengths; exact input only."""
    if not lengths.is_exact:
        raise TruncatedInput("delta set of a truncated length set is refused")
    ls = lengths.lengths
    return {ls[i + 1] - ls[i] for i in range(len(ls) - 1)}


def distance(z: Factorization, z2: Factorization) -> int:
    g = z.gcd(z2)
    return max(z.length - g.length, z2.length - g.length)


def catenary_degree_element(zset: FactorizationSet) -> int:
    """Smallest N whose distance-threshold graph on the factorization set is
    connected; 0 for a single factorization."""
    if not zset.is_exact:
        raise TruncatedInput("catenary degree of a truncated set is refused")
    verts = zset.factorizations
    n = len(verts)
    if n <= 1:
        return 0
    pairs = sorted(
        (distance(verts[i], verts[j]), i, j)
        for i in range(n)
        for j in range(i + 1, n)
    )
    uf = UnionFind(n)
    remaining = n - 1
    for d, i, j in pairs:
        if uf.union(i, j):
            remaining -= 1
            if remaining == 0:
                return d
    raise AssertionError("threshold graph never connected")  # pragma: no cover


def catenary_degree_monoid_upto(
    spec: FinitelyGenerated,
) -> tuple[int, list[Fraction]]:
    """Maximum element catenary degree over the provably sufficient scan
    range [0, F + 2*max(atoms)] of the cleared-denominator semigroup, with
    the elements attaining it. The classical result places the supremum at
    a Betti element, all of which lie inside this range."""
    sg = ScaledSemigroup(spec.atoms)
    best = 0
    attaining: list[Fraction] = []
    for n in range(1, sg.scan_bound() + 1):
        if not is_member(n, sg.apery):
            continue
        c = catenary_degree_element(enumerate_fg(spec, sg.from_int(n)))
        if c > best:
            best = c
            attaining = [sg.from_int(n)]
        elif c == best and c > 0:
            attaining.append(sg.from_int(n))
    return best, attaining
