import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import arrow_diagrams, flat_diagrams, plant_triangle, random_diagram
from virtknot.alexander import g_polynomial
from virtknot.bracket import f_polynomial, kauffman_bracket
from virtknot.codes import ARROW, OCD, canonical_form, parse
from virtknot.diagram import writhe
from virtknot.families import make_Dn, make_Kn, named_example
from virtknot.filamentation import find_filamentation
from virtknot.flat import flat_relations, parity
from virtknot.laurent import poly_A
from virtknot.moves import (
    AD1_ADD,
    AD1_REMOVE,
    AD2_ADD,
    AD2_REMOVE,
    AD3,
    ARROW_KINDS,
    FLAT1_ADD,
    FLAT1_REMOVE,
    FLAT2_REMOVE,
    FLAT3,
    FLAT_KINDS,
    FLIP,
    MoveError,
    MoveInstance,
    SearchExhausted,
    apply_move,
    enumerate_moves,
    inverse_move,
    jones_flip,
    reduce_search,
    replay,
)


def pick(rng, d, kinds):
    by_kind = {}
    for m in enumerate_moves(d, kinds):
        by_kind.setdefault(m.kind, []).append(m)
    if not by_kind:
        return None
    return rng.choice(by_kind[rng.choice(sorted(by_kind))])


def test_flat_curl_removal():
    ms = enumerate_moves(parse("A+ A-"), {FLAT1_REMOVE})
    assert len(ms) == 1
    assert apply_move(parse("A+ A-"), ms[0]).n_chords == 0


def test_curl_insertion_on_empty():
    empty = parse("", kind=ARROW)
    ms = enumerate_moves(empty, {AD1_ADD})
    assert {m.param_dict["sign"] for m in ms} == {1, -1}
    assert all(m.site == (0, 0) for m in ms)
    plus = next(m for m in ms if m.param_dict["sign"] == 1)
    one = apply_move(empty, plus)
    assert one.n_chords == 1
    (rm,) = enumerate_moves(one, {AD1_REMOVE})
    assert apply_move(one, rm) == empty


def test_a1_bigon():
    a1 = make_Kn(1)
    ms = enumerate_moves(a1, {AD2_REMOVE})
    assert ms
    assert apply_move(a1, ms[0]).n_chords == 0


def test_triangle_subcode_examples():
    d = parse("A-u B-u C+o A+o C-u B+o")
    (m,) = enumerate_moves(d, {AD3})
    assert str(apply_move(d, m)) == "B-u A-u A+o C+o B+o C-u"
    d2 = parse("C+o A+o A-u B-u C-u B+o")
    (m2,) = enumerate_moves(d2, {AD3})
    assert str(apply_move(d2, m2)) == "A+o C+o B-u A-u B+o C-u"
    assert apply_move(apply_move(d2, m2), inverse_move(d2, m2)) == d2


def test_triangle_across_components():
    d = parse("A-u B-u | C+o A+o | C-u B+o")
    ms = enumerate_moves(d, {AD3})
    # two-endpoint components read the same in both directions, so both templates fit
    assert {m.param_dict["pattern"] for m in ms} == {"pre", "post"}
    assert str(apply_move(d, ms[0])) == "B-u A-u | A+o C+o | B+o C-u"
    assert {canonical_form(apply_move(d, m)) for m in ms} == {canonical_form(d)}


def test_flat_triangle():
    d = parse("A- B- C+ A+ C- B+")
    ms = enumerate_moves(d, {FLAT3})
    assert ms and str(apply_move(d, ms[0])) == "B- A- A+ C+ B+ C-"


def test_kinds_respect_code_type():
    assert enumerate_moves(parse("A+ A-"), {AD1_REMOVE}) == []
    with pytest.raises(MoveError):
        apply_move(parse("A+ A-"), MoveInstance(AD1_REMOVE, ("A",)))
    with pytest.raises(MoveError):
        enumerate_moves(parse("A+ A-"), {"R7"})


def test_inapplicable_instances():
    tref = named_example("trefoil_right")
    with pytest.raises(MoveError):
        apply_move(tref, MoveInstance(AD1_REMOVE, ("A",)))
    with pytest.raises(MoveError):
        apply_move(tref, MoveInstance(AD2_REMOVE, ("A", "B")))
    with pytest.raises(MoveError):
        apply_move(tref, MoveInstance(AD3, ("A", "B", "C"), (("pattern", "pre"),)))
    with pytest.raises(MoveError):
        apply_move(tref, MoveInstance(AD1_ADD, (0, 99), (("role", "o"), ("sign", 1))))


def test_flip_rule():
    assert str(jones_flip(parse("A+o A-u"), "A")) == "A-u A+o"
    with pytest.raises(KeyError):
        jones_flip(parse("A+o A-u"), "B")


@pytest.mark.parametrize("n", range(0, 5))
def test_flip_then_bigon_steps_down_the_family(n):
    flipped = jones_flip(make_Kn(n + 2), "Y1")
    targets = {canonical_form(apply_move(flipped, m)) for m in enumerate_moves(flipped, {AD2_REMOVE})}
    assert canonical_form(make_Kn(n)) in targets
    assert f_polynomial(flipped) == f_polynomial(make_Kn(n + 2)) == f_polynomial(make_Kn(n))


@given(arrow_diagrams(max_chords=5, max_components=2, min_chords=1), st.data())
def test_flip_keeps_bracket_and_is_an_involution(d, data):
    chord = data.draw(st.sampled_from(d.chords))
    f = jones_flip(d, chord)
    assert kauffman_bracket(f) == kauffman_bracket(d)
    assert writhe(f) == writhe(d)
    assert jones_flip(f, chord) == d
    (m,) = [m for m in enumerate_moves(d, {FLIP}) if m.site == (chord,)]
    assert apply_move(d, m) == f


@given(arrow_diagrams(max_chords=4, max_components=2), st.randoms(use_true_random=False))
def test_arrow_moves_invert(d, rnd):
    if rnd.random() < 0.5:
        d = plant_triangle(d, rnd)
    for m in rnd.sample(enumerate_moves(d), k=min(8, len(enumerate_moves(d)))):
        e = apply_move(d, m)
        back = apply_move(e, inverse_move(d, m))
        assert canonical_form(back) == canonical_form(d)


@given(flat_diagrams(max_chords=4, max_components=2), st.randoms(use_true_random=False))
def test_flat_moves_invert(d, rnd):
    if rnd.random() < 0.5:
        d = plant_triangle(d, rnd)
    ms = enumerate_moves(d)
    for m in rnd.sample(ms, k=min(8, len(ms))):
        e = apply_move(d, m)
        assert canonical_form(apply_move(e, inverse_move(d, m))) == canonical_form(d)


@given(arrow_diagrams(max_chords=4, max_components=2), st.randoms(use_true_random=False))
def test_bracket_under_arrow_moves(d, rnd):
    if rnd.random() < 0.5:
        d = plant_triangle(d, rnd)
    before = kauffman_bracket(d)
    for kind in ARROW_KINDS:
        ms = enumerate_moves(d, {kind})
        if not ms:
            continue
        e = apply_move(d, rnd.choice(ms))
        after = kauffman_bracket(e)
        if kind in (AD1_ADD, AD1_REMOVE):
            dw = writhe(e) - writhe(d) if e.n_chords else -writhe(d)
            assert dw in (1, -1)
            assert after == before * poly_A({3 * dw: -1})
        else:
            assert after == before
        assert f_polynomial(e) == f_polynomial(d)
        assert g_polynomial(e) == g_polynomial(d)


def test_move_json_round_trip():
    d = plant_triangle(make_Kn(2), random.Random(0))
    for m in enumerate_moves(d) + enumerate_moves(d, {FLIP}):
        data = json.loads(json.dumps(m.to_json()))
        assert MoveInstance.from_json(data) == m


def test_flat_move_invariants_random_walk():
    rng = random.Random(17)
    for seed in (parse("A+ | A-"), parse("A+ B+ | A- B-"), parse("A+ B- | A- B+ C+ C-"), parse(" | ")):
        d = seed
        p0 = parity(d)
        e0 = [r.exponent for r in flat_relations(d)[1]]
        for _ in range(60):
            kinds = FLAT_KINDS if d.n_chords < 6 else (FLAT1_REMOVE, FLAT2_REMOVE, FLAT3)
            m = pick(rng, d, kinds)
            d = apply_move(d, m)
            assert parity(d) == p0
            assert [r.exponent for r in flat_relations(d)[1]] == e0


def test_filamentation_survives_planted_triangles():
    rng = random.Random(4)
    for _ in range(25):
        d = plant_triangle(random_diagram(rng, rng.randint(0, 3), 1, OCD), rng)
        has = find_filamentation(d) is not None
        for m in enumerate_moves(d, {FLAT3, FLAT2_REMOVE, FLAT1_REMOVE}):
            assert (find_filamentation(apply_move(d, m)) is not None) == has


def test_reduce_a1():
    res = reduce_search(make_Kn(1), 4, 1000)
    assert res.diagram.n_chords == 0
    assert len(res.path) <= 2
    assert replay(make_Kn(1), res.path) == res.diagram


def test_reduce_flat_curl():
    res = reduce_search(parse("A+ A-"), 2, 10)
    assert res.diagram.n_chords == 0
    assert [m.kind for m in res.path] == [FLAT1_REMOVE]


def test_reduce_multi_step_certificate():
    # a curl nested inside a bigon: two reductions in a row
    d = parse("A+o B-o C+o C-u A-u B+u")
    res = reduce_search(d, 4, 5000)
    assert res.diagram.n_chords == 0
    assert canonical_form(replay(d, res.path)) == canonical_form(res.diagram)


def test_reduce_d2_exhausts():
    with pytest.raises(SearchExhausted) as info:
        reduce_search(make_Dn(2), 6, 10**4)
    assert info.value.result.diagram.n_chords == 3
    assert info.value.reason == "max_chords"


def test_reduce_step_budget():
    with pytest.raises(SearchExhausted) as info:
        reduce_search(make_Dn(2), 7, 50)
    assert info.value.reason == "max_steps"
    assert info.value.result.states == 50


def test_reduce_budgets_validated():
    with pytest.raises(ValueError):
        reduce_search(parse("A+ A-"), 0, 10)
    with pytest.raises(ValueError):
        reduce_search(make_Dn(3), 2, 10)


def test_reduce_is_deterministic():
    d = parse("A+o B-o C+o C-u A-u B+u")
    assert reduce_search(d, 4, 5000).to_json() == reduce_search(d, 4, 5000).to_json()
