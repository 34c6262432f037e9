from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
import puiseux as pz
import puiseux.presentations as px
from puiseux.betti import (
    DisconnectedWitness,
    ForcedAtom,
    SingleFactorization,
    ValuationPath,
    graph_to_dot,
    graph_to_json_dict,
    verdict_to_text,
)


def test_betti_graph_46_disconnected(fg_5_7_23):
    g = pz.betti_graph(pz.enumerate_fg(fg_5_7_23, F(46)))
    assert len(g.vertices.factorizations) == 2
    assert len(g.components) == 2 and not g.edges and not g.connected


def test_betti_graph_40_connected(fg_5_7_23):
    g = pz.betti_graph(pz.enumerate_fg(fg_5_7_23, F(40)))
    assert len(g.vertices.factorizations) == 3 and g.connected


def test_betti_set_fg_documented(fg_5_7_23):
    assert pz.betti_set_fg(fg_5_7_23) == [F(28), F(30), F(46)]


def test_betti_set_fg_matches_bruteforce(fg_5_7_23):
    # [DERIVED] scan every reachable sum up to the library's own bound
    from puiseux.numerical import ScaledSemigroup

    sg = ScaledSemigroup(fg_5_7_23.atoms)
    bound = sg.from_int(sg.scan_bound())
    assert pz.betti_set_fg(fg_5_7_23) == oracles.fg_betti_set(
        list(fg_5_7_23.atoms), bound
    )


def test_betti_set_two_generators():
    # <a, b> coprime has the single Betti element ab
    assert pz.betti_set_fg(px.FinitelyGenerated((F(2), F(3)))) == [F(6)]
    assert pz.betti_set_fg(px.FinitelyGenerated((F(3), F(5)))) == [F(15)]


def test_betti_set_single_generator():
    assert pz.betti_set_fg(px.FinitelyGenerated((F(7),))) == []
    assert pz.betti_set_fg(px.FinitelyGenerated((F(3, 2),))) == []


@settings(max_examples=50, deadline=None)
@given(st.sets(st.integers(min_value=2, max_value=30), min_size=1, max_size=4))
def test_atomgraph_oracle_agreement(gens):
    atoms = px.minimal_generators(tuple(F(g) for g in sorted(gens)))
    spec = px.FinitelyGenerated(atoms)
    assert pz.betti_set_fg(spec) == pz.betti_set_fg_atomgraph_oracle(spec)


def test_classify_reciprocal(reciprocal):
    v = pz.classify_atomized(reciprocal, F(1), T=10)
    assert v.verdict == "betti" and isinstance(v.certificate, DisconnectedWitness)

    v = pz.classify_atomized(reciprocal, F(5, 6), T=10)
    assert v.verdict == "not_betti" and isinstance(v.certificate, ForcedAtom)

    v = pz.classify_atomized(reciprocal, F(2), T=10)
    assert v.verdict == "not_betti" and isinstance(v.certificate, ValuationPath)


def test_classify_grams(grams):
    v = pz.classify_atomized(grams, F(1, 2), T=6)
    assert v.verdict == "betti"
    assert verdict_to_text(v, grams) == "Betti (isolated vertex 5(1/10); witness 14(1/28))"

    v = pz.classify_atomized(grams, F(3, 4), T=6)
    assert v.verdict == "not_betti" and isinstance(v.certificate, ValuationPath)

    v = pz.classify_atomized(grams, F(1, 3), T=6)
    assert v.verdict == "not_betti" and isinstance(v.certificate, ForcedAtom)


def test_classify_nonmember_raises(reciprocal):
    with pytest.raises(pz.NotAMember):
        pz.classify_atomized(reciprocal, F(1, 4), T=10)


def test_scan_grams_window(grams):
    report = pz.betti_scan_atomized(grams, F(1, 2), T=5)
    assert report.betti_values() == [F(1, 32), F(1, 16), F(1, 8), F(1, 4), F(1, 2)]
    assert not report.unknown
    assert report.consistent


def test_scan_prop44(prop44_3):
    report = pz.betti_scan_atomized(prop44_3, F(4), T=12)
    assert report.betti_values() == [F(1), F(2), F(3)]
    assert F(4) in [q for q, _ in report.not_betti]
    assert not report.unknown


def test_geometric_betti_sets():
    assert pz.betti_set_geometric(pz.construct_geometric(F(3, 2)), F(5)) == [
        F(3),
        F(9, 2),
    ]
    assert pz.betti_set_geometric(pz.construct_geometric(F(5, 2)), F(6)) == [F(5)]


def test_is_uufm(reciprocal):
    assert pz.is_uufm_upto(reciprocal, F(1, 2), T=5)
    assert not pz.is_uufm_upto(px.FinitelyGenerated((F(2), F(3))), F(10))
    assert pz.is_uufm_upto(px.FinitelyGenerated((F(3),)), F(30))


def test_graph_exports(fg_5_7_23):
    g = pz.betti_graph(pz.enumerate_fg(fg_5_7_23, F(46)))
    dot = graph_to_dot(g, fg_5_7_23)
    assert 'label="5(5)+3(7)"' in dot and 'label="2(23)"' in dot
    # determinism
    assert dot == graph_to_dot(pz.betti_graph(pz.enumerate_fg(fg_5_7_23, F(46))), fg_5_7_23)

    data = graph_to_json_dict(g, fg_5_7_23)
    assert len(data["components"]) == 2 and len(data["vertices"]) == 2


def test_isolation_certificates(reciprocal, grams, prop44_3):
    from puiseux.betti import check_isolation_proof

    for spec in (reciprocal, grams, prop44_3):
        for j in range(1, 9):
            assert check_isolation_proof(spec, j, px.base_value(spec, j))
        # the proof requires v_{p_j}(q) = 0, so a wrong element fails
        assert not check_isolation_proof(spec, 1, px.atom(spec, 1))
