import json
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

import puiseux.presentations as px
from puiseux import errors


def test_validate_fg_accepts_minimal():
    px.validate(px.FinitelyGenerated((F(5), F(7), F(23))))


def test_validate_fg_rejects_non_minimal():
    # 17 = 2*5 + 7 is generated by the others
    with pytest.raises(errors.ValidationError):
        px.validate(px.FinitelyGenerated((F(5), F(7), F(17), F(23))))


def test_validate_fg_rejects_zero_and_duplicates():
    with pytest.raises(errors.ValidationError):
        px.validate(px.FinitelyGenerated((F(0), F(2))))
    with pytest.raises(errors.ValidationError):
        px.validate(px.FinitelyGenerated((F(2), F(2), F(3))))


def test_minimal_generators_reduces():
    assert px.minimal_generators((F(5), F(7), F(17), F(23))) == (F(5), F(7), F(23))
    assert px.minimal_generators((F(2), F(3), F(4))) == (F(2), F(3))
    assert px.minimal_generators((F(1, 2), F(3, 2))) == (F(1, 2),)


def test_loader_normalizes_fg_atoms():
    spec = px.spec_from_dict(
        {"kind": "finitely_generated", "atoms": ["5", "7", "17", "23"]}
    )
    assert spec.atoms == (F(5), F(7), F(23))


def test_atomized_validation_coprimality():
    # prime 3 divides the numerator of q_1 = 3, violating gcd(p_1, n(q_1)) = 1
    bad = px.Atomized(base=px.CyclicList((F(3),)), primes=px.ExplicitList((3, 5, 7)))
    with pytest.raises(errors.ValidationError):
        px.validate(bad, prefix=3)


def test_atomized_validation_clamps_to_explicit_list():
    # an explicit prime list describes a finite atom family; validating a
    # longer prefix just clamps to what exists
    spec = px.Atomized(
        base=px.CyclicList((F(1),)), primes=px.ExplicitList((2, 3, 5))
    )
    px.validate(spec, prefix=5)
    with pytest.raises(errors.DomainError):
        px.prime_at(spec, 4)


def test_geometric_validation():
    px.validate(px.Geometric(F(3, 2)))
    for q in (F(2), F(1, 3), F(1), F(4, 2)):
        if q.denominator >= 2 and q.numerator >= 2:
            continue
        with pytest.raises(errors.ValidationError):
            px.validate(px.Geometric(q))


def test_grams_atoms(grams):
    # documented atoms of Grams' monoid: 1/(2^(n-1) p_n) with p_n the odd primes
    assert px.atom(grams, 1) == F(1, 3)
    assert px.atom(grams, 2) == F(1, 10)
    assert px.atom(grams, 3) == F(1, 28)
    assert px.atom(grams, 4) == F(1, 88)
    assert px.prime_at(grams, 4) == 11


def test_reciprocal_atoms(reciprocal):
    # documented atoms 1/p over all primes
    assert [px.atom(reciprocal, n) for n in (1, 2, 3, 4)] == [
        F(1, 2),
        F(1, 3),
        F(1, 5),
        F(1, 7),
    ]


def test_prop44_base_cycles(prop44_3):
    vals = [px.base_value(prop44_3, n) for n in range(1, 7)]
    assert vals == [F(1), F(2), F(3), F(1), F(2), F(3)]


def test_atoms_up_to_value(grams):
    rows = px.atoms_up_to_value(grams, F(1, 20), 6)
    inside = [(i, v) for i, v, exceeds in rows if not exceeds]
    assert inside == [(2, F(1, 28)), (3, F(1, 88)), (4, F(1, 208)), (5, F(1, 544))]


def test_base_member_unit_fraction_geometric():
    base = px.UnitFractionGeometric(2)
    assert px.base_member(base, F(3, 8))
    assert px.base_member(base, F(5))
    assert not px.base_member(base, F(1, 3))
    # composite ratio: 1/4 = 9/36 lies in <1/6^n>
    assert px.base_member(px.UnitFractionGeometric(6), F(1, 4))


def test_base_member_cyclic(prop44_3):
    base = prop44_3.base
    assert px.base_member(base, F(0))
    assert px.base_member(base, F(4))
    assert not px.base_member(base, F(1, 2))


def test_base_properties():
    assert px.base_properties(px.UnitFractionGeometric(2)) == {
        "antimatter": True,
        "valuation": True,
    }
    props = px.base_properties(px.CyclicList((F(2), F(3))))
    assert props["antimatter"] is False


def test_spec_roundtrip(tmp_path, grams, reciprocal, prop44_3):
    for spec in (grams, reciprocal, prop44_3, px.construct_geometric(F(3, 2))):
        path = tmp_path / "m.json"
        px.save_spec(spec, str(path))
        again = px.load_spec(str(path))
        assert px.spec_to_dict(again) == px.spec_to_dict(spec)


def test_spec_from_dict_rejects_unknown_keys():
    with pytest.raises(errors.ValidationError):
        px.spec_from_dict({"kind": "geometric", "q": "3/2", "extra": 1})
    with pytest.raises(errors.ValidationError):
        px.spec_from_dict({"kind": "mystery"})


def test_spec_json_is_string_rationals(grams, tmp_path):
    path = tmp_path / "g.json"
    px.save_spec(grams, str(path))
    data = json.loads(path.read_text())
    assert data["kind"] == "atomized"
    assert data["base"]["variant"] == "unit_fraction_geometric"


@given(st.lists(st.integers(min_value=1, max_value=40), min_size=1, max_size=5))
def test_minimal_generators_preserve_monoid(xs):
    atoms = tuple(sorted({F(x) for x in xs}))
    reduced = px.minimal_generators(atoms)
    assert set(reduced) <= set(atoms)
    # every removed atom is reachable from the survivors
    from puiseux.numerical import fg_member

    for a in atoms:
        assert fg_member(reduced, a)
