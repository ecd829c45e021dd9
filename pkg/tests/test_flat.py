import pytest
from hypothesis import given

from conftest import flat_diagrams
from virtknot.codes import parse
from virtknot.flat import FlatDomainError, FlatRelation, flat_relations, is_flat_detected, parity
from virtknot.laurent import poly_S

VHOPF = "A+ | A-"
L_PRIME = "A+ B+ | A- B-"
FLAT_HOPF = "A+ B- | A- B+"
UNLINK = " | "


def test_parity_values():
    assert parity(parse(VHOPF)) == 1
    assert parity(parse(UNLINK)) == 0
    assert parity(parse(FLAT_HOPF)) == 0
    assert parity(parse(L_PRIME)) == 0


def test_parity_ignores_self_chords():
    assert parity(parse("A+ B+ A- | B-")) == 1


def test_single_component_rejected():
    with pytest.raises(FlatDomainError):
        parity(parse("A+ A-"))
    with pytest.raises(FlatDomainError):
        is_flat_detected(parse("A+ B+ A- B-"))


def test_l_prime_relations():
    gens, rels = flat_relations(parse(L_PRIME))
    assert gens == [0, 1]
    assert rels == [FlatRelation(0, 2), FlatRelation(1, -2)]
    assert rels[0].coefficient == poly_S({2: 1, 0: -1})
    assert rels[1].coefficient == poly_S({-2: 1, 0: -1})
    assert [str(r) for r in rels] == ["(s^2 - 1)*a = 0", "(s^-2 - 1)*b = 0"]
    assert is_flat_detected(parse(L_PRIME))


def test_unlink_and_hopf_are_free():
    for code in (UNLINK, FLAT_HOPF):
        _, rels = flat_relations(parse(code))
        assert all(r.trivial and r.coefficient.is_zero() for r in rels)
        assert not is_flat_detected(parse(code))


def test_vhopf_detected():
    _, rels = flat_relations(parse(VHOPF))
    assert [r.exponent for r in rels] == [1, -1]
    assert is_flat_detected(parse(VHOPF))


def test_relation_json():
    assert FlatRelation(1, -2).to_json() == {"generator": 1, "exponent": -2}


@given(flat_diagrams(max_chords=6, max_components=4))
def test_net_exponents_cancel(d):
    assert sum(r.exponent for r in flat_relations(d)[1]) == 0


@given(flat_diagrams(max_chords=6, max_components=3))
def test_exponent_parity_matches_mixed_chords(d):
    # a component's net exponent is odd iff it meets an odd number of mixed chords
    if d.n_components < 2:
        return
    for ci, rel in enumerate(flat_relations(d)[1]):
        own = len(d.components[ci])
        assert rel.exponent % 2 == own % 2
