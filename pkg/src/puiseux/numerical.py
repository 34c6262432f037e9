"""Numerical semigroup machinery: Apery sets, Frobenius numbers, membership.

A rational finitely generated Puiseux monoid is handled by clearing
denominators: with L = lcm of the atom denominators and g = gcd of the
scaled atoms, x -> x * L / g is an isomorphism onto a numerical semigroup.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction


def apery_set(gens: tuple[int, ...]) -> list[int]:
    """Smallest semigroup element in each residue class mod min(gens).

    Requires positive generators with gcd 1. Computed as shortest paths on
    the residue graph (edges add a generator).
    """
    a0 = min(gens)
    dist: list[int | None] = [None] * a0
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for g in gens:
            if g == a0:
                continue
            nd = d + g
            nr = nd % a0
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    assert all(d is not None for d in dist)
    return dist  # type: ignore[return-value]


def frobenius_number(apery: list[int]) -> int:
    """Largest integer outside the semigroup; -1 when the semigroup is all
    of the nonnegative integers."""
    return max(apery) - len(apery)


def is_member(n: int, apery: list[int]) -> bool:
    if n < 0:
        return False
    return apery[n % len(apery)] <= n


class ScaledSemigroup:
    """Integer image of a finitely generated Puiseux monoid."""

    def __init__(self, atoms: tuple[Fraction, ...]):
        L = math.lcm(*(a.denominator for a in atoms))
        scaled = [a.numerator * (L // a.denominator) for a in atoms]
        g = math.gcd(*scaled)
        self.atoms = atoms
        self.scale = Fraction(g, L)  # integer n maps back to n * scale
        self.gens = tuple(s // g for s in scaled)
        self.apery = apery_set(self.gens)
        self.frobenius = frobenius_number(self.apery)

    def to_int(self, x: Fraction) -> int | None:
        """Image of x under the scaling, or None when x is not in the
        generated grid."""
        t = x / self.scale
        if t.denominator != 1:
            return None
        return t.numerator

    def from_int(self, n: int) -> Fraction:
        return n * self.scale

    def contains(self, x: Fraction) -> bool:
        t = self.to_int(x)
        return t is not None and is_member(t, self.apery)

    def scan_bound(self) -> int:
        """Inclusive integer bound F + 2*max(gens).

        Beyond it every Betti graph is connected: for n past the bound and
        factorizations z containing a_i and z' containing a_j, the element
        n - a_i - a_j exceeds F, so appending a_i + a_j to one of its
        factorizations gives a common neighbor of z and z'.
        """
        return self.frobenius + 2 * max(self.gens)


def fg_member(atoms: tuple[Fraction, ...], x: Fraction) -> bool:
    """Membership of x in the monoid generated by the given rationals."""
    if x == 0:
        return True
    if x < 0:
        return False
    return ScaledSemigroup(atoms).contains(x)
