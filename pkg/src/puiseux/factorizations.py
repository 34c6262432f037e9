"""Exact enumeration of factorization sets, the canonical decomposition of
elements of atomized monoids, and monoid membership.

A factorization is a finite multiset of atom indices (1-based internal
indices into the spec's atom sequence). Factorization sets carry either an
exact completeness flag or the truncation index they were computed under.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import DomainError, NotAMember, TruncationTooSmall
from .numerical import ScaledSemigroup, is_member
from .presentations import (
    Atomized,
    CyclicList,
    FinitelyGenerated,
    Geometric,
    MonoidSpec,
    UnitFractionGeometric,
    atom,
    base_member,
    base_value,
    prime_at,
    validate,
)
from .rationals import factor_positive, format_rational, v_p


@dataclass(frozen=True, order=True)
class Factorization:
    """Sorted (atom index, multiplicity) pairs; the empty tuple is the
    factorization of 0."""

    items: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def from_dict(coeffs: dict[int, int]) -> "Factorization":
        items = tuple(sorted((i, c) for i, c in coeffs.items() if c > 0))
        if any(c < 0 for _, c in items):
            raise DomainError("negative multiplicity")
        return Factorization(items)

    def coeff(self, index: int) -> int:
        for i, c in self.items:
            if i == index:
                return c
        return 0

    @property
    def length(self) -> int:
        return sum(c for _, c in self.items)

    def value(self, spec: MonoidSpec) -> Fraction:
        return sum((atom(spec, i) * c for i, c in self.items), Fraction(0))

    def gcd(self, other: "Factorization") -> "Factorization":
        mine = dict(self.items)
        common = {
            i: min(c, mine[i]) for i, c in other.items if i in mine
        }
        return Factorization.from_dict(common)

    def sub(self, other: "Factorization") -> "Factorization":
        """Pointwise subtraction; other must be a sub-factorization."""
        mine = dict(self.items)
        for i, c in other.items:
            if mine.get(i, 0) < c:
                raise DomainError("not a sub-factorization")
            mine[i] -= c
        return Factorization.from_dict(mine)

    def render(self, spec: MonoidSpec) -> str:
        if not self.items:
            return "0"
        return "+".join(
            f"{c}({format_rational(atom(spec, i))})" for i, c in self.items
        )


def gcd_fact(z: Factorization, z2: Factorization) -> Factorization:
    return z.gcd(z2)


EXACT = "exact"


@dataclass(frozen=True)
class FactorizationSet:
    element: Fraction
    factorizations: tuple[Factorization, ...]
    truncation: int | None = None  # None means the set is provably complete

    @property
    def is_exact(self) -> bool:
        return self.truncation is None


def _make_set(
    spec: MonoidSpec,
    element: Fraction,
    facts: list[Factorization],
    truncation: int | None,
) -> FactorizationSet:
    facts = sorted(set(facts))
    for z in facts:
        assert z.value(spec) == element, "factorization does not reassemble"
    return FactorizationSet(element, tuple(facts), truncation)


# ---------------------------------------------------------------------------
# finitely generated monoids


def enumerate_fg(spec: FinitelyGenerated, target: Fraction) -> FactorizationSet:
    """All solutions of sum c_i * a_i = target; always exact.

    Denominators are cleared to reduce the problem to a numerical-semigroup
    knapsack; the DFS walks atoms in descending value with residual
    membership pruning through the Apery table.
    """
    if target < 0:
        raise DomainError("target must be nonnegative")
    if target == 0:
        return _make_set(spec, target, [Factorization()], None)
    sg = ScaledSemigroup(spec.atoms)
    t = sg.to_int(target)
    if t is None or not is_member(t, sg.apery):
        return _make_set(spec, target, [], None)
    gens = sg.gens  # ascending, parallel to spec.atoms
    order = sorted(range(len(gens)), key=lambda i: -gens[i])
    results: list[Factorization] = []
    coeffs: dict[int, int] = {}

    def rec(pos: int, residual: int) -> None:
        if pos == len(order):
            if residual == 0:
                results.append(Factorization.from_dict(coeffs))
            return
        i = order[pos]
        g = gens[i]
        for c in range(residual // g, -1, -1):
            rest = residual - c * g
            if not is_member(rest, sg.apery):
                continue
            if c:
                coeffs[i + 1] = c
            rec(pos + 1, rest)
            coeffs.pop(i + 1, None)

    rec(0, t)
    return _make_set(spec, target, results, None)


# ---------------------------------------------------------------------------
# atomized monoids


def _mod_value(x: Fraction, p: int) -> int:
    """x mod p for a p-integral rational x."""
    return x.numerator * pow(x.denominator, -1, p) % p


def _forced_residue(r: Fraction, q_n: Fraction, p: int):
    """The unique c mod p with v_p(r - c * q_n / p) >= 0, or None when the
    deficiency of r at p is too deep to cancel."""
    v = v_p(r, p)
    if v >= 0:
        return 0
    if v <= -2:
        return None
    return _mod_value(r * p, p) * pow(_mod_value(q_n, p), -1, p) % p


def iter_atomized(spec: Atomized, target: Fraction, T: int) -> Iterator[Factorization]:
    """Generate every factorization of target supported on indices <= T."""
    atoms = [atom(spec, n) for n in range(1, T + 1)]
    primes = [prime_at(spec, n) for n in range(1, T + 1)]
    qs = [base_value(spec, n) for n in range(1, T + 1)]
    coeffs: dict[int, int] = {}

    def rec(n: int, r: Fraction) -> Iterator[Factorization]:
        if r == 0:
            yield Factorization.from_dict(coeffs)
            return
        if n > T:
            return
        p, a = primes[n - 1], atoms[n - 1]
        rho = _forced_residue(r, qs[n - 1], p)
        if rho is None:
            return
        c = rho
        while c * a <= r:
            if c:
                coeffs[n] = c
            yield from rec(n + 1, r - c * a)
            coeffs.pop(n, None)
            c += p

    yield from rec(1, target)


def _atomized_window_check(spec: Atomized, target: Fraction, T: int) -> None:
    """Reject windows that cannot contain an atom forced by a negative
    valuation of the target; silently returning {} would be unsound."""
    if target == 0:
        return
    for p, _ in factor_positive(target.denominator) if target.denominator > 1 else []:
        idx = spec.primes.index_of(p)
        if idx is not None and idx > T:
            raise TruncationTooSmall(
                f"prime {p} divides the target denominator but its atom "
                f"index {idx} exceeds the truncation {T}"
            )


def _atomized_exact(spec: Atomized, target: Fraction, T: int) -> bool:
    """Conservative: True only when no atom of index > T can appear.

    For n > T the target has nonnegative p_n-adic valuation (checked), so
    the coefficient of atom n is a multiple of p_n and a nonzero one
    contributes at least q_n. Exactness therefore holds when every later
    base value exceeds the target.
    """
    if target == 0:
        return True
    from .presentations import atom_count

    count = atom_count(spec)
    if count is not None and T >= count:
        return True
    if isinstance(spec.base, UnitFractionGeometric):
        return False
    assert isinstance(spec.base, CyclicList)
    return min(spec.base.values) > target


def enumerate_atomized(spec: Atomized, target: Fraction, T: int) -> FactorizationSet:
    if target < 0:
        raise DomainError("target must be nonnegative")
    validate(spec, prefix=T)
    if target == 0:
        return _make_set(spec, target, [Factorization()], None)
    _atomized_window_check(spec, target, T)
    from .presentations import atom_count

    count = atom_count(spec)
    window = T if count is None else min(T, count)
    facts = list(iter_atomized(spec, target, window))
    truncation = None if _atomized_exact(spec, target, T) else T
    return _make_set(spec, target, facts, truncation)


# ---------------------------------------------------------------------------
# geometric monoids


def iter_geometric(
    spec: Geometric, target: Fraction, exponents: list[int]
) -> Iterator[Factorization]:
    """DFS over the atoms q**e for e in exponents (descending), with exact
    residual tracking and per-prime valuation pruning on the denominator."""
    q = spec.q
    den_primes = [p for p, _ in factor_positive(q.denominator)]
    coeffs: dict[int, int] = {}

    def feasible(r: Fraction, max_exp: int) -> bool:
        # remaining atoms have valuation >= -max_exp * v_p(den) at each
        # denominator prime
        for p in den_primes:
            need = -max_exp * v_p(Fraction(q.denominator), p)
            if v_p(r, p) < need:
                return False
        return True

    def rec(pos: int, r: Fraction) -> Iterator[Factorization]:
        if r == 0:
            yield Factorization.from_dict(coeffs)
            return
        if pos == len(exponents):
            return
        e = exponents[pos]
        a = q ** e
        rest_max = exponents[pos + 1] if pos + 1 < len(exponents) else None
        for c in range(int(r / a), -1, -1):
            rest = r - c * a
            if rest_max is None:
                if rest != 0:
                    continue
            elif not feasible(rest, rest_max):
                continue
            if c:
                coeffs[e + 1] = c  # internal index = exponent + 1
            yield from rec(pos + 1, rest)
            coeffs.pop(e + 1, None)

    yield from rec(0, target)


def enumerate_geometric(
    spec: Geometric, target: Fraction, T: int = 8
) -> FactorizationSet:
    if target < 0:
        raise DomainError("target must be nonnegative")
    validate(spec)
    if target == 0:
        return _make_set(spec, target, [Factorization()], None)
    q = spec.q
    if q > 1:
        # only atoms q**e <= target can appear in a sum of positive terms
        exponents = []
        e, a = 0, Fraction(1)
        while a <= target:
            exponents.append(e)
            e += 1
            a *= q
        facts = list(iter_geometric(spec, target, exponents[::-1]))
        return _make_set(spec, target, facts, None)
    exponents = list(range(T, -1, -1))
    facts = list(iter_geometric(spec, target, exponents))
    return _make_set(spec, target, facts, T)


# ---------------------------------------------------------------------------
# canonical decomposition (atomized monoids)


@dataclass(frozen=True)
class CanonicalDecomposition:
    """q = n_q + sum of c_n * q_n / p_n with n_q in the base monoid N and
    0 < c_n < p_n for every stored index."""

    n_q: Fraction
    fractional: tuple[tuple[int, int], ...]  # (internal index, c_n)

    def reassemble(self, spec: Atomized) -> Fraction:
        return self.n_q + sum(
            (atom(spec, n) * c for n, c in self.fractional), Fraction(0)
        )


def canonical_decomposition(spec: Atomized, q: Fraction):
    """The unique reduced-coefficient decomposition of q, or None when q is
    not a member of the monoid.

    For each prime p_n dividing the denominator of q, the coefficient c_n is
    the unique residue in [0, p_n - 1] whose subtraction clears the p_n-adic
    deficiency; the remainder must land inside the base monoid N.
    """
    if q < 0:
        return None
    if q == 0:
        return CanonicalDecomposition(Fraction(0), ())
    fractional: list[tuple[int, int]] = []
    remainder = q
    for p, _ in factor_positive(q.denominator) if q.denominator > 1 else []:
        idx = spec.primes.index_of(p)
        if idx is None:
            continue  # not an atomization prime; left for the base oracle
        c = _forced_residue(q, base_value(spec, idx), p)
        if c is None:
            return None
        if c:
            fractional.append((idx, c))
            remainder -= c * atom(spec, idx)
    if remainder < 0:
        return None
    if not base_member(spec.base, remainder):
        return None
    return CanonicalDecomposition(remainder, tuple(sorted(fractional)))


# ---------------------------------------------------------------------------
# membership


def member(spec: MonoidSpec, q: Fraction, T: int = 8) -> bool:
    """True iff q belongs to the monoid. For atomized specs this is exactly
    'the canonical decomposition exists'; for geometric specs with ratio
    below 1 the check is truncated at T."""
    if q < 0:
        return False
    if q == 0:
        return True
    if isinstance(spec, FinitelyGenerated):
        return ScaledSemigroup(spec.atoms).contains(q)
    if isinstance(spec, Atomized):
        return canonical_decomposition(spec, q) is not None
    if isinstance(spec, Geometric):
        return bool(enumerate_geometric(spec, q, T).factorizations)
    raise DomainError(f"unknown spec kind {spec!r}")


def require_member(spec: MonoidSpec, q: Fraction, T: int = 8) -> None:
    if not member(spec, q, T):
        raise NotAMember(f"{format_rational(q)} is not in the monoid")
