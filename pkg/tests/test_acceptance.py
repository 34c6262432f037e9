"""Acceptance suite: ten criteria, one test and one PASS/FAIL line each.

Every criterion is exact (symbolic rational arithmetic, no tolerances).
Run with `pytest -v tests/test_acceptance.py` for the per-criterion lines,
or `-s` to also see the printed summaries.
"""

import json
import random
import time
from fractions import Fraction as F
from itertools import product

import oracles
import puiseux as pz
import puiseux.presentations as px
from puiseux.cli import run
from puiseux.verify import suite_lemma41, suite_thm42


def report(n, ok, detail):
    line = f"[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    assert ok, line


def random_fg_specs(count, seed, max_atoms=4, max_value=30):
    rng = random.Random(seed)
    specs = []
    while len(specs) < count:
        k = rng.randint(1, max_atoms)
        gens = {F(rng.randint(1, max_value)) for _ in range(k)}
        atoms = px.minimal_generators(tuple(sorted(gens)))
        specs.append(px.FinitelyGenerated(atoms))
    return specs


def test_criterion_01_documented_betti_set(tmp_path, capsys):
    """betti-set on <5,7,17,23> = {28, 30, 46}; graph of 40 connected,
    graph of 46 disconnected; vertex sets match the brute-force oracle.
    Exact; < 5 s."""
    t0 = time.time()
    path = tmp_path / "n.json"
    path.write_text(
        json.dumps({"kind": "finitely_generated", "atoms": ["5", "7", "17", "23"]})
    )
    assert run(["betti-set", "--monoid", str(path)]) == 0
    out = capsys.readouterr().out.strip()
    spec = px.load_spec(str(path))
    g40 = pz.betti_graph(pz.enumerate_fg(spec, F(40)))
    g46 = pz.betti_graph(pz.enumerate_fg(spec, F(46)))
    verts_ok = True
    for target, graph in ((F(40), g40), (F(46), g46)):
        got = {
            tuple(z.coeff(i) for i in range(1, len(spec.atoms) + 1))
            for z in graph.vertices.factorizations
        }
        verts_ok &= got == oracles.fg_factorizations(list(spec.atoms), target)
    elapsed = time.time() - t0
    ok = out == "28 30 46" and g40.connected and not g46.connected and verts_ok
    ok &= elapsed < 5
    report(1, ok, f"betti-set='{out}', graph(40) connected, graph(46) "
           f"disconnected, oracle vertex sets match, {elapsed:.2f}s")


def test_criterion_02_reciprocal_betti_is_one():
    """classify(1) = Betti with an exact certificate; 200 members != 1
    below 3 all classify NotBetti at T = 10. Exact; < 30 s."""
    t0 = time.time()
    spec = pz.construct_reciprocal()
    v1 = pz.classify_atomized(spec, F(1), T=10)
    ok = v1.verdict == "betti" and v1.certificate.kind == "disconnected_witness"
    members = sorted(
        {
            F(a, 2) + F(b, 3) + F(c, 5) + F(d, 7)
            for a, b, c, d in product(range(2), range(3), range(5), range(7))
        }
        | {F(n) + F(1, 2) for n in range(3)}
    )
    members = [q for q in members if 0 < q < F(3) and q != 1][:200]
    assert len(members) == 200
    bad = [q for q in members if pz.classify_atomized(spec, q, T=10).verdict != "not_betti"]
    elapsed = time.time() - t0
    ok &= not bad and elapsed < 30
    report(2, ok, f"classify(1)=Betti, {len(members)} members NotBetti "
           f"({len(bad)} exceptions), {elapsed:.2f}s")


def test_criterion_03_grams_scan():
    """betti_scan bound 1, T = 6 certifies exactly the dyadics 1/2^n and
    rejects every other candidate, with no unknowns. Exact; < 60 s."""
    t0 = time.time()
    report_scan = pz.betti_scan_atomized(pz.construct_grams(), F(1), T=6)
    want = [F(1, 2 ** n) for n in range(6, -1, -1)]
    elapsed = time.time() - t0
    ok = (
        report_scan.betti_values() == want
        and not report_scan.unknown
        and all(q not in want for q, _ in report_scan.not_betti)
        and elapsed < 60
    )
    report(3, ok, f"Betti window = {{1/64..1}}, {len(report_scan.not_betti)} "
           f"NotBetti, 0 unknown, {elapsed:.2f}s")


def test_criterion_04_prop44_counts():
    """For b in {1,2,3,5}: scan(bound b+1, T=4b) yields Betti set exactly
    {1..b}. Exact; < 2 min total."""
    t0 = time.time()
    ok = True
    sizes = []
    for b in (1, 2, 3, 5):
        rep = pz.betti_scan_atomized(pz.construct_prop44(b), F(b + 1), T=4 * b)
        ok &= rep.betti_values() == [F(k) for k in range(1, b + 1)]
        ok &= not rep.unknown
        sizes.append(len(rep.betti_values()))
    elapsed = time.time() - t0
    ok &= elapsed < 120
    report(4, ok, f"|Betti| = {sizes} for b = [1, 2, 3, 5], {elapsed:.2f}s")


def test_criterion_05_geometric():
    """Betti sets of M_q: q = 3/2 bound 5 -> {3, 9/2}; q = 5/2 bound 6 ->
    {5}. Exact."""
    got32 = pz.betti_set_geometric(pz.construct_geometric(F(3, 2)), F(5))
    got52 = pz.betti_set_geometric(pz.construct_geometric(F(5, 2)), F(6))
    ok = got32 == [F(3), F(9, 2)] and got52 == [F(5)]
    report(5, ok, f"q=3/2: {got32}, q=5/2: {got52}")


def test_criterion_06_canonical_decomposition_suite():
    """500 random members of each fixture: round-trip, coefficient range,
    and uniqueness against brute force. Exact; < 2 min."""
    t0 = time.time()
    ok = True
    for spec in (pz.construct_grams(), pz.construct_reciprocal(), pz.construct_prop44(3)):
        passed, lines = suite_lemma41(spec, T=8, samples=500, seed=17)
        ok &= passed
    elapsed = time.time() - t0
    ok &= elapsed < 120
    report(6, ok, f"3 x 500 members round-trip with unique coefficients, {elapsed:.2f}s")


def test_criterion_07_single_generator_iff_no_betti():
    """Over 50 random fg specs (<= 4 atoms <= 30): Betti set empty iff one
    minimal generator, and is_uufm_upto agrees. Exact."""
    from puiseux.numerical import ScaledSemigroup

    ok = True
    for spec in random_fg_specs(50, seed=23):
        bset = pz.betti_set_fg(spec)
        sg = ScaledSemigroup(spec.atoms)
        bound = sg.from_int(max(sg.scan_bound(), 1))
        uufm = pz.is_uufm_upto(spec, bound)
        ok &= (not bset) == (len(spec.atoms) == 1) == uufm
    report(7, ok, "50/50 specs: empty Betti set <=> single generator <=> UFM")


def test_criterion_08_oracle_equivalence():
    """betti_set_fg agrees with the atom-graph oracle on 50 random specs
    plus the documented fixture. Exact."""
    specs = random_fg_specs(50, seed=41)
    specs.append(px.FinitelyGenerated(px.minimal_generators((F(5), F(7), F(17), F(23)))))
    ok = all(
        pz.betti_set_fg(s) == pz.betti_set_fg_atomgraph_oracle(s) for s in specs
    )
    report(8, ok, f"{len(specs)}/{len(specs)} specs agree with the atom-graph oracle")


def test_criterion_09_isolated_vertex_suite():
    """Every atomized fixture, every j <= 8: the length-p_j vertex has
    degree 0 at every tested truncation and the valuation proof checks.
    Exact."""
    ok = True
    for spec in (pz.construct_grams(), pz.construct_reciprocal(), pz.construct_prop44(3)):
        passed, _ = suite_thm42(spec, T=10, jmax=8)
        ok &= passed
    report(9, ok, "3 fixtures x 8 indices: isolated vertices certified")


def test_criterion_10_catenary_at_betti():
    """The attaining set of the monoid catenary degree meets the Betti set
    for <2,3>, <5,7,17,23>, and 20 random numerical monoids. Exact within
    the scan range."""
    rng = random.Random(59)
    specs = [
        px.FinitelyGenerated((F(2), F(3))),
        px.FinitelyGenerated(px.minimal_generators((F(5), F(7), F(17), F(23)))),
    ]
    while len(specs) < 22:
        gens = {F(rng.randint(2, 25)) for _ in range(rng.randint(2, 4))}
        atoms = px.minimal_generators(tuple(sorted(gens)))
        if len(atoms) >= 2:
            specs.append(px.FinitelyGenerated(atoms))
    ok = True
    for spec in specs:
        cat, attaining = pz.catenary_degree_monoid_upto(spec)
        bset = pz.betti_set_fg(spec)
        ok &= cat > 0 and bool(set(attaining) & set(bset))
    report(10, ok, f"{len(specs)}/{len(specs)} monoids attain the catenary "
           "degree at a Betti element")
