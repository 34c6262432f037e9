"""Monoid descriptions: finitely generated atom lists, atomized families
(base sequence + prime sequence), and geometric powers, plus validation,
indexed atom access, JSON serialization, and base-monoid oracles.

Indexing is 1-based internally; ``index_origin`` (0 or 1) only affects how
indices are displayed, so printed atoms match the usual conventions for
each family.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import rationals
from .errors import DomainError, ValidationError
from .numerical import fg_member
from .rationals import format_rational, is_prime, next_prime_after, parse_rational

# ---------------------------------------------------------------------------
# base families


@dataclass(frozen=True)
class CyclicList:
    """q_n cycles through a fixed list of positive rationals."""

    values: tuple[Fraction, ...]

    def value_at(self, n: int) -> Fraction:
        return self.values[(n - 1) % len(self.values)]


@dataclass(frozen=True)
class UnitFractionGeometric:
    """q_n = 1 / m**(n-1) for a fixed integer m >= 2."""

    m: int

    def value_at(self, n: int) -> Fraction:
        return Fraction(1, self.m ** (n - 1))


BaseFamily = Union[CyclicList, UnitFractionGeometric]


# ---------------------------------------------------------------------------
# prime rules

_prime_cache: list[int] = [2, 3, 5, 7, 11, 13]


def _prime_at_least(count: int) -> list[int]:
    while len(_prime_cache) < count:
        _prime_cache.append(next_prime_after(_prime_cache[-1]))
    return _prime_cache


@dataclass(frozen=True)
class AllPrimesAscending:
    def prime_at(self, n: int) -> int:
        return _prime_at_least(n)[n - 1]

    def index_of(self, p: int) -> int | None:
        if not is_prime(p):
            return None
        seq = _prime_at_least(1)
        while seq[-1] < p:
            seq = _prime_at_least(len(seq) + 1)
        return seq.index(p) + 1 if p in seq else None


@dataclass(frozen=True)
class OddPrimesAscending:
    def prime_at(self, n: int) -> int:
        return AllPrimesAscending().prime_at(n + 1)

    def index_of(self, p: int) -> int | None:
        if p == 2:
            return None
        idx = AllPrimesAscending().index_of(p)
        return None if idx is None else idx - 1


@dataclass(frozen=True)
class PrimesAbove:
    b: int

    def prime_at(self, n: int) -> int:
        p = self.b
        for _ in range(n):
            p = next_prime_after(p)
        return p

    def index_of(self, p: int) -> int | None:
        if p <= self.b or not is_prime(p):
            return None
        q, idx = self.b, 0
        while q < p:
            q = next_prime_after(q)
            idx += 1
        return idx if q == p else None


@dataclass(frozen=True)
class ExplicitList:
    primes: tuple[int, ...]

    def prime_at(self, n: int) -> int:
        if n > len(self.primes):
            raise DomainError(f"prime index {n} beyond explicit list")
        return self.primes[n - 1]

    def index_of(self, p: int) -> int | None:
        return self.primes.index(p) + 1 if p in self.primes else None


PrimeRule = Union[AllPrimesAscending, OddPrimesAscending, PrimesAbove, ExplicitList]


# ---------------------------------------------------------------------------
# monoid specs


@dataclass(frozen=True)
class FinitelyGenerated:
    atoms: tuple[Fraction, ...]


@dataclass(frozen=True)
class Atomized:
    base: BaseFamily
    primes: PrimeRule
    index_origin: int = 1


@dataclass(frozen=True)
class Geometric:
    q: Fraction
    index_origin: int = 0


MonoidSpec = Union[FinitelyGenerated, Atomized, Geometric]


def atom_count(spec: MonoidSpec) -> int | None:
    """Number of atoms, or None when the monoid has infinitely many."""
    if isinstance(spec, FinitelyGenerated):
        return len(spec.atoms)
    if isinstance(spec, Atomized) and isinstance(spec.primes, ExplicitList):
        return len(spec.primes.primes)
    return None


def display_index(spec: MonoidSpec, n: int) -> int:
    origin = getattr(spec, "index_origin", 1)
    return n - 1 + origin


# ---------------------------------------------------------------------------
# validation


def validate(spec: MonoidSpec, prefix: int = 8) -> None:
    """Check the structural conditions of a spec; raises ValidationError.

    For atomized specs the primality / distinctness / coprimality conditions
    are checked for all indices up to ``prefix``.
    """
    if isinstance(spec, FinitelyGenerated):
        _validate_fg(spec)
    elif isinstance(spec, Atomized):
        _validate_atomized(spec, prefix)
    elif isinstance(spec, Geometric):
        _validate_geometric(spec)
    else:  # pragma: no cover
        raise ValidationError(f"unknown spec kind {spec!r}")


def _validate_fg(spec: FinitelyGenerated) -> None:
    atoms = spec.atoms
    if not atoms:
        raise ValidationError("empty generating set")
    if any(a <= 0 for a in atoms):
        raise ValidationError("generators must be positive")
    if list(atoms) != sorted(set(atoms)):
        raise ValidationError("generators must be distinct and sorted ascending")
    if len(atoms) == 1:
        return
    for i, a in enumerate(atoms):
        others = atoms[:i] + atoms[i + 1 :]
        if fg_member(others, a):
            raise ValidationError(
                f"generator {format_rational(a)} is a sum of the others"
            )


def _validate_atomized(spec: Atomized, prefix: int) -> None:
    if spec.index_origin not in (0, 1):
        raise ValidationError("index_origin must be 0 or 1")
    base = spec.base
    if isinstance(base, CyclicList):
        if not base.values:
            raise ValidationError("cyclic base needs at least one value")
        if any(v <= 0 for v in base.values):
            raise ValidationError("cyclic base values must be positive")
    elif isinstance(base, UnitFractionGeometric):
        if base.m < 2:
            raise ValidationError("unit-fraction base needs m >= 2")
    count = atom_count(spec)
    if count is not None:
        prefix = min(prefix, count)
    ps = [spec.primes.prime_at(n) for n in range(1, prefix + 1)]
    for n, p in enumerate(ps, start=1):
        if not is_prime(p):
            raise ValidationError(f"p_{n} = {p} is not prime")
    if len(set(ps)) != len(ps):
        raise ValidationError("atomization primes must be pairwise distinct")
    from math import gcd

    qs = [base.value_at(n) for n in range(1, prefix + 1)]
    for i, p in enumerate(ps, start=1):
        if gcd(p, qs[i - 1].numerator) != 1:
            raise ValidationError(
                f"gcd(p_{i}, numerator of q_{i}) = {p} violates coprimality"
            )
        for j, q in enumerate(qs, start=1):
            if gcd(p, q.denominator) != 1:
                raise ValidationError(
                    f"gcd(p_{i}, denominator of q_{j}) != 1 (p = {p})"
                )


def _validate_geometric(spec: Geometric) -> None:
    q = spec.q
    if q.numerator < 2 or q.denominator < 2:
        raise ValidationError(
            "geometric ratio must be a non-integer with non-integer reciprocal"
        )


# ---------------------------------------------------------------------------
# atoms


def base_value(spec: Atomized, n: int) -> Fraction:
    return spec.base.value_at(n)


def prime_at(spec: Atomized, n: int) -> int:
    return spec.primes.prime_at(n)


def atom(spec: MonoidSpec, n: int) -> Fraction:
    """The n-th atom (1-based internal index)."""
    if n < 1:
        raise DomainError("atom index must be >= 1")
    if isinstance(spec, FinitelyGenerated):
        if n > len(spec.atoms):
            raise DomainError(f"atom index {n} out of range")
        return spec.atoms[n - 1]
    if isinstance(spec, Atomized):
        count = atom_count(spec)
        if count is not None and n > count:
            raise DomainError(f"atom index {n} out of range")
        return base_value(spec, n) / prime_at(spec, n)
    if isinstance(spec, Geometric):
        return spec.q ** (n - 1)
    raise DomainError(f"unknown spec kind {spec!r}")


def atoms_up_to_value(
    spec: MonoidSpec, bound: Fraction, truncation: int
) -> list[tuple[int, Fraction, bool]]:
    """Atoms in the working window, as (display index, value, exceeds bound).

    Atoms above the bound are flagged, not dropped: they can still appear in
    factorizations of elements with negative valuations.
    """
    count = atom_count(spec)
    n_max = truncation if count is None else min(count, truncation)
    if isinstance(spec, FinitelyGenerated):
        n_max = len(spec.atoms)
    out = []
    for n in range(1, n_max + 1):
        a = atom(spec, n)
        out.append((display_index(spec, n), a, a > bound))
    return out


# ---------------------------------------------------------------------------
# base-monoid oracles


def base_member(base: BaseFamily, x: Fraction) -> bool:
    """Membership in N, the monoid generated by the base sequence."""
    if x < 0:
        return False
    if x == 0:
        return True
    if isinstance(base, UnitFractionGeometric):
        # N is every nonnegative rational whose denominator divides a power
        # of m, i.e. whose denominator's prime factors all divide m.
        d = x.denominator
        for p, _ in rationals.factor_positive(d) if d > 1 else []:
            if base.m % p != 0:
                return False
        return True
    return fg_member(tuple(sorted(set(base.values))), x)


def base_properties(base: BaseFamily) -> dict:
    """Certified antimatter / valuation flags for the base monoid N.

    A unit-fraction geometric base is antimatter (q_n = m * q_{n+1}) and a
    valuation monoid (divisibility in N is just <=). A cyclic base is never
    antimatter; it is a valuation monoid exactly when its distinct values
    are totally ordered by divisibility inside N, which forces N to be
    cyclic.
    """
    if isinstance(base, UnitFractionGeometric):
        return {"antimatter": True, "valuation": True}
    values = sorted(set(base.values))
    if len(values) == 1:
        return {"antimatter": False, "valuation": True}
    ordered = all(
        base_member(base, values[i + 1] - values[i]) for i in range(len(values) - 1)
    )
    return {"antimatter": False, "valuation": ordered}


def base_value_index(base: BaseFamily, q: Fraction) -> int | None:
    """Smallest internal index n with q_n = q, decided in closed form."""
    if isinstance(base, CyclicList):
        if q in base.values:
            return base.values.index(q) + 1
        return None
    if q.numerator != 1:
        return None
    d, k = q.denominator, 0
    while d > 1:
        if d % base.m != 0:
            return None
        d //= base.m
        k += 1
    return k + 1


# ---------------------------------------------------------------------------
# constructors for the families used in the literature


def minimal_generators(atoms: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Reduce a generating set to the atoms of the monoid it generates.

    A listed generator expressible from the others is not an atom (e.g. 17
    in <5,7,17,23>), and keeping it would distort factorization sets and the
    Betti set, so file ingestion normalizes through this function.
    """
    if any(a <= 0 for a in atoms):
        raise ValidationError("generators must be positive")
    gens = sorted(set(a for a in atoms))
    changed = True
    while changed and len(gens) > 1:
        changed = False
        for i, a in enumerate(gens):
            others = tuple(gens[:i] + gens[i + 1 :])
            if fg_member(others, a):
                gens.pop(i)
                changed = True
                break
    return tuple(gens)


def construct_prop44(b: int) -> Atomized:
    """Cyclic base 1, 2, ..., b atomized at ascending primes above b."""
    if b < 1:
        raise DomainError("b must be >= 1")
    spec = Atomized(
        base=CyclicList(tuple(Fraction(r) for r in range(1, b + 1))),
        primes=PrimesAbove(b),
        index_origin=1,
    )
    validate(spec)
    return spec


def construct_grams() -> Atomized:
    """Base 1/2**n atomized at the ascending odd primes."""
    spec = Atomized(
        base=UnitFractionGeometric(2),
        primes=OddPrimesAscending(),
        index_origin=0,
    )
    validate(spec)
    return spec


def construct_reciprocal() -> Atomized:
    """Constant base 1 atomized at all primes: atoms 1/p."""
    spec = Atomized(
        base=CyclicList((Fraction(1),)),
        primes=AllPrimesAscending(),
        index_origin=1,
    )
    validate(spec)
    return spec


def construct_geometric(q: Fraction) -> Geometric:
    spec = Geometric(q)
    try:
        validate(spec)
    except ValidationError as exc:
        raise DomainError(str(exc)) from exc
    return spec


# ---------------------------------------------------------------------------
# JSON spec files


def spec_to_dict(spec: MonoidSpec) -> dict:
    if isinstance(spec, FinitelyGenerated):
        return {
            "kind": "finitely_generated",
            "atoms": [format_rational(a) for a in spec.atoms],
        }
    if isinstance(spec, Atomized):
        if isinstance(spec.base, CyclicList):
            base = {
                "variant": "cyclic_list",
                "values": [format_rational(v) for v in spec.base.values],
            }
        else:
            base = {"variant": "unit_fraction_geometric", "m": spec.base.m}
        primes: dict
        if isinstance(spec.primes, AllPrimesAscending):
            primes = {"variant": "all_primes_ascending"}
        elif isinstance(spec.primes, OddPrimesAscending):
            primes = {"variant": "odd_primes_ascending"}
        elif isinstance(spec.primes, PrimesAbove):
            primes = {"variant": "primes_above", "b": spec.primes.b}
        else:
            primes = {"variant": "explicit_list", "primes": list(spec.primes.primes)}
        return {
            "kind": "atomized",
            "index_origin": spec.index_origin,
            "base": base,
            "primes": primes,
        }
    return {"kind": "geometric", "q": format_rational(spec.q)}


def _require_keys(d: dict, allowed: set[str], where: str) -> None:
    unknown = set(d) - allowed
    if unknown:
        raise ValidationError(f"unknown keys {sorted(unknown)} in {where}")


def spec_from_dict(d: dict) -> MonoidSpec:
    if not isinstance(d, dict) or "kind" not in d:
        raise ValidationError("monoid spec must be an object with a 'kind'")
    kind = d["kind"]
    if kind == "finitely_generated":
        _require_keys(d, {"kind", "atoms"}, "finitely_generated spec")
        atoms = minimal_generators(tuple(parse_rational(a) for a in d["atoms"]))
        spec: MonoidSpec = FinitelyGenerated(atoms)
    elif kind == "atomized":
        _require_keys(d, {"kind", "index_origin", "base", "primes"}, "atomized spec")
        base_d = d["base"]
        variant = base_d.get("variant")
        if variant == "cyclic_list":
            _require_keys(base_d, {"variant", "values"}, "cyclic_list base")
            base: BaseFamily = CyclicList(
                tuple(parse_rational(v) for v in base_d["values"])
            )
        elif variant == "unit_fraction_geometric":
            _require_keys(base_d, {"variant", "m"}, "unit_fraction_geometric base")
            base = UnitFractionGeometric(int(base_d["m"]))
        else:
            raise ValidationError(f"unknown base variant {variant!r}")
        primes_d = d["primes"]
        pvariant = primes_d.get("variant")
        if pvariant == "all_primes_ascending":
            _require_keys(primes_d, {"variant"}, "prime rule")
            rule: PrimeRule = AllPrimesAscending()
        elif pvariant == "odd_primes_ascending":
            _require_keys(primes_d, {"variant"}, "prime rule")
            rule = OddPrimesAscending()
        elif pvariant == "primes_above":
            _require_keys(primes_d, {"variant", "b"}, "prime rule")
            rule = PrimesAbove(int(primes_d["b"]))
        elif pvariant == "explicit_list":
            _require_keys(primes_d, {"variant", "primes"}, "prime rule")
            rule = ExplicitList(tuple(int(p) for p in primes_d["primes"]))
        else:
            raise ValidationError(f"unknown prime rule variant {pvariant!r}")
        spec = Atomized(base, rule, int(d.get("index_origin", 1)))
    elif kind == "geometric":
        _require_keys(d, {"kind", "q"}, "geometric spec")
        spec = Geometric(parse_rational(d["q"]))
    else:
        raise ValidationError(f"unknown spec kind {kind!r}")
    validate(spec)
    return spec


def load_spec(path: str) -> MonoidSpec:
    with open(path) as fh:
        return spec_from_dict(json.load(fh))


def save_spec(spec: MonoidSpec, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(spec_to_dict(spec), fh, indent=2)
        fh.write("\n")
