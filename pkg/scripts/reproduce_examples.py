#!/usr/bin/env python3
"""Reproduce the worked examples from the docs in one run.

Covers the four-generator numerical monoid, the reciprocal-of-primes
monoid, Grams' monoid, the b-Betti-element family, and two geometric
monoids. Everything is exact rational arithmetic.
"""

from fractions import Fraction as F

import puiseux as pz
import puiseux.presentations as px
from puiseux.betti import verdict_to_text


def header(title):
    print()
    print(title)
    print("-" * len(title))


def main():
    header("Numerical monoid <5,7,17,23> (17 = 2*5 + 7 is not an atom)")
    spec = px.FinitelyGenerated(px.minimal_generators((F(5), F(7), F(17), F(23))))
    print("minimal generators:", " ".join(str(a) for a in spec.atoms))
    print("Betti set:", " ".join(str(b) for b in pz.betti_set_fg(spec)))
    for b in (F(40), F(46)):
        g = pz.betti_graph(pz.enumerate_fg(spec, b))
        state = "connected" if g.connected else "disconnected"
        verts = ", ".join(z.render(spec) for z in g.vertices.factorizations)
        print(f"graph of {b}: {state}; vertices {verts}")
    ls = pz.length_set(pz.enumerate_fg(spec, F(46)))
    print(f"lengths of 46: {list(ls.lengths)}, delta {sorted(pz.delta_set(ls))}, "
          f"catenary {pz.catenary_degree_element(pz.enumerate_fg(spec, F(46)))}")

    header("Reciprocal monoid <1/p : p prime>")
    rec = pz.construct_reciprocal()
    for q in (F(1), F(5, 6), F(2)):
        v = pz.classify_atomized(rec, q, T=10)
        print(f"classify({q}): {verdict_to_text(v, rec)}")
    d = pz.canonical_decomposition(rec, F(5, 6))
    print("canonical decomposition of 5/6:",
          f"n_q={d.n_q},", " ".join(f"c[{px.atom(rec, n)}]={c}" for n, c in d.fractional))

    header("Grams' monoid <1/(2^n p_n)>")
    grams = pz.construct_grams()
    rep = pz.betti_scan_atomized(grams, F(1), T=6)
    print("scan bound 1, T=6")
    print("  Betti:", " ".join(str(q) for q in rep.betti_values()))
    print(f"  NotBetti: {len(rep.not_betti)} candidates, unknown: {len(rep.unknown)}")

    header("Family with exactly b Betti elements")
    for b in (1, 2, 3):
        rep = pz.betti_scan_atomized(pz.construct_prop44(b), F(b + 1), T=4 * b)
        print(f"b={b}: Betti set {{{' '.join(str(q) for q in rep.betti_values())}}}")

    header("Geometric monoids M_q = <q^n>")
    for q, bound in ((F(3, 2), F(5)), (F(5, 2), F(6))):
        bset = pz.betti_set_geometric(pz.construct_geometric(q), bound)
        print(f"q={q}, bound {bound}: Betti set {{{' '.join(str(x) for x in bset)}}}")


if __name__ == "__main__":
    main()
