"""Runnable property suites tying the implementation to the structural
facts it relies on. Shared by the CLI `verify` subcommand and the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .betti import (
    BETTI,
    betti_graph,
    betti_scan_atomized,
    betti_set_fg,
    check_isolation_proof,
    classify_atomized,
    is_uufm_upto,
)
from .factorizations import (
    Factorization,
    canonical_decomposition,
    enumerate_atomized,
)
from .presentations import (
    Atomized,
    FinitelyGenerated,
    atom,
    base_member,
    base_value,
    prime_at,
    UnitFractionGeometric,
    validate,
)
from .rationals import format_rational


def random_base_element(spec: Atomized, rng: random.Random, bound: Fraction) -> Fraction:
    """A random element of the base monoid N with value at most bound."""
    base = spec.base
    if isinstance(base, UnitFractionGeometric):
        e = rng.randrange(0, 5)
        top = int(bound * base.m ** e)
        return Fraction(rng.randrange(0, top + 1), base.m ** e)
    total = Fraction(0)
    for _ in range(4):
        v = rng.choice(base.values)
        if total + v <= bound and rng.random() < 0.7:
            total += v
    return total


def random_member(
    spec: Atomized, rng: random.Random, bound: Fraction, window: int = 4
) -> Fraction:
    """A random monoid element below the bound, built from its canonical
    form: a base part plus a few reduced fractional terms with indices
    inside the window."""
    while True:
        q = random_base_element(spec, rng, bound)
        for n in rng.sample(range(1, window + 1), k=rng.randrange(0, 3)):
            p = prime_at(spec, n)
            c = rng.randrange(1, p)
            q += c * atom(spec, n)
        if 0 < q <= bound:
            return q


def brute_force_decompositions(
    spec: Atomized, q: Fraction, window: int
) -> list[tuple[Fraction, tuple[tuple[int, int], ...]]]:
    """Exhaustive search for reduced-coefficient decompositions supported on
    the window: every coefficient vector with c_n < p_n is tried and the
    remainder checked against the base oracle. Independent of the valuation
    shortcut used by canonical_decomposition."""
    found = []
    coeffs: list[tuple[int, int]] = []

    def rec(n: int, r: Fraction) -> None:
        if n > window:
            if base_member(spec.base, r):
                found.append((r, tuple(coeffs)))
            return
        p = prime_at(spec, n)
        a = atom(spec, n)
        c = 0
        while c < p and c * a <= r:
            if c:
                coeffs.append((n, c))
            rec(n + 1, r - c * a)
            if c:
                coeffs.pop()
            c += 1

    rec(1, q)
    return found


def suite_lemma41(
    spec: Atomized,
    T: int = 8,
    bound: Fraction = Fraction(3),
    samples: int = 100,
    seed: int = 0,
    brute_window: int = 4,
) -> tuple[bool, list[str]]:
    """Canonical decomposition: round trip, coefficient ranges, and
    uniqueness against the exhaustive window search."""
    validate(spec, prefix=T)
    rng = random.Random(seed)
    lines = []
    ok = True
    for _ in range(samples):
        q = random_member(spec, rng, bound, window=brute_window)
        cd = canonical_decomposition(spec, q)
        if cd is None:
            ok = False
            lines.append(f"FAIL member {format_rational(q)} not decomposed")
            continue
        if cd.reassemble(spec) != q:
            ok = False
            lines.append(f"FAIL round trip for {format_rational(q)}")
        if not all(0 < c < prime_at(spec, n) for n, c in cd.fractional):
            ok = False
            lines.append(f"FAIL coefficient range for {format_rational(q)}")
        found = brute_force_decompositions(spec, q, brute_window)
        if len(found) != 1 or found[0] != (cd.n_q, cd.fractional):
            ok = False
            lines.append(
                f"FAIL uniqueness for {format_rational(q)}: {len(found)} found"
            )
    lines.append(
        ("PASS" if ok else "FAIL")
        + f" canonical decomposition suite ({samples} samples)"
    )
    return ok, lines


def suite_thm42(
    spec: Atomized, T: int = 10, jmax: int = 8
) -> tuple[bool, list[str]]:
    """Isolated-vertex certificates: for each j, the length-p_j vertex of
    the graph of q_j has degree zero at the truncation, and the valuation
    proof of exact isolation checks."""
    validate(spec, prefix=max(T, jmax))
    ok = True
    lines = []
    for j in range(1, jmax + 1):
        qj = base_value(spec, j)
        if not check_isolation_proof(spec, j, qj):
            ok = False
            lines.append(f"FAIL valuation proof at j={j}")
            continue
        # the graph of q_j can grow like the binary partition numbers for
        # geometric bases; a window a few indices past j already exercises
        # the certificate, whose valuation proof is truncation-independent
        zset = enumerate_atomized(spec, qj, min(T, j + 5))
        iso = Factorization.from_dict({j: prime_at(spec, j)})
        verts = zset.factorizations
        if iso not in verts:
            ok = False
            lines.append(f"FAIL isolated vertex missing at j={j}")
            continue
        degree = sum(
            1 for z in verts if z != iso and z.gcd(iso).items
        )
        if degree:
            ok = False
            lines.append(f"FAIL vertex degree {degree} at j={j}")
        else:
            lines.append(
                f"PASS j={j}: vertex {iso.render(spec)} isolated among "
                f"{len(verts)} factorization(s)"
            )
    lines.append(("PASS" if ok else "FAIL") + f" isolation suite (j <= {jmax})")
    return ok, lines


def suite_cor43(
    spec: Atomized, bound: Fraction = Fraction(1), T: int = 6
) -> tuple[bool, list[str]]:
    """Scan consistency: over a certified antimatter valuation base, the
    Betti elements in the window are exactly the base values; every Betti
    verdict lies inside the base monoid."""
    report = betti_scan_atomized(spec, bound, T)
    lines = []
    ok = True
    for q, verdict in report.betti:
        if not base_member(spec.base, q):
            ok = False
            lines.append(f"FAIL Betti verdict outside base monoid: {format_rational(q)}")
    if report.consistent is not None:
        if report.consistent:
            lines.append(
                "PASS Betti set in window = base values: "
                + " ".join(format_rational(q) for q in report.betti_values())
            )
        else:
            ok = False
            lines.append(
                f"FAIL scan mismatch: got {report.betti_values()}, "
                f"expected {report.expected_betti}"
            )
    else:
        lines.append("SKIP base not certified antimatter + valuation")
    lines.append(("PASS" if ok else "FAIL") + " scan suite")
    return ok, lines


def suite_prop21(spec: FinitelyGenerated) -> tuple[bool, list[str]]:
    """Empty Betti set iff single minimal generator, and the unrestricted
    unique factorization check agrees."""
    from .numerical import ScaledSemigroup

    bset = betti_set_fg(spec)
    cyclic = len(spec.atoms) == 1
    sg = ScaledSemigroup(spec.atoms)
    bound = sg.from_int(max(sg.scan_bound(), 1))
    uufm = is_uufm_upto(spec, bound)
    ok = (not bset) == cyclic and uufm == (not bset)
    lines = [
        ("PASS" if ok else "FAIL")
        + f" Betti set {'empty' if not bset else 'nonempty'}, "
        + f"{len(spec.atoms)} generator(s), uufm={uufm}"
    ]
    return ok, lines
