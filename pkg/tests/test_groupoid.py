import pytest

from arrquiver.arrangement import (boolean, chamber_distance, concurrent_lines, coordinate_cross,
                                   enumerate_faces, line_point, parallel_points, segment_meets)
from arrquiver.groupoid import (GroupoidError, check_representation, collinearity_presentation, crossing_chambers,
                                crossing_word, cyclic_chambers, evaluate, long_form_product, salvetti_presentation,
                                zifferblatt_check)
from arrquiver.quiver import transition
from samples import tran_broken, validated_samples

VALID = validated_samples()

ARRS = {
    "line": line_point(), "cross": coordinate_cross(), "lines3": concurrent_lines(3),
    "lines4": concurrent_lines(4), "boolean3": boolean(3),
}
SALVETTI = {"line": (2, 0), "cross": (8, 4), "lines3": (12, 6), "lines4": (16, 8), "boolean3": (24, 24)}


@pytest.mark.parametrize("name", sorted(SALVETTI))
def test_salvetti_counts(name):
    pres = salvetti_presentation(ARRS[name])
    assert (len(pres.generators), len(pres.relations)) == SALVETTI[name]


def _oracle_chamber_triples(a):
    p = enumerate_faces(a)
    ch = p.chambers()
    return sum(1 for x in ch for y in ch for z in ch
               if len({x, y, z}) == 3 and segment_meets(a, p.faces[x], p.faces[y], p.faces[z]))


@pytest.mark.parametrize("name", ["line", "cross", "lines3"])
def test_collinearity_presentation_matches_oracle(name):
    a = ARRS[name]
    pres = collinearity_presentation(a)
    k = len(pres.objects)
    assert len(pres.generators) == k * (k - 1)
    assert len(pres.relations) == _oracle_chamber_triples(a)


def test_collinearity_golden():
    pres = collinearity_presentation(concurrent_lines(3))
    assert (len(pres.generators), len(pres.relations)) == (30, 36)


def test_affine_rejected():
    with pytest.raises(GroupoidError):
        salvetti_presentation(parallel_points())


@pytest.mark.parametrize("name", sorted(ARRS))
def test_crossing_words_are_geodesics(name):
    a = ARRS[name]
    p = enumerate_faces(a)
    pres = salvetti_presentation(a)
    for x in p.chambers():
        for y in p.chambers():
            w = crossing_word(a, x, y, pres)
            assert len(w) == chamber_distance(a, p.faces[x], p.faces[y])
            if w:
                assert pres.ends(w) == (x, y)


def test_crossing_needs_chambers():
    a = coordinate_cross()
    p = enumerate_faces(a)
    with pytest.raises(GroupoidError):
        crossing_chambers(a, p.find("0+"), p.find("++"))


def test_cyclic_order_alternates_adjacency():
    a = concurrent_lines(4)
    p = enumerate_faces(a)
    ring = cyclic_chambers(a, p.find("0000"))
    assert len(ring) == 8
    for x, y in zip(ring, ring[1:] + ring[:1]):
        assert chamber_distance(a, p.faces[x], p.faces[y]) == 1


@pytest.fixture(params=[k for k, q in VALID.items() if not q.arrangement.affine_mode])
def sample(request):
    return VALID[request.param]


def test_both_presentations_hold(sample):
    a = sample.arrangement
    assert check_representation(sample, salvetti_presentation(a)).verdict
    assert check_representation(sample, collinearity_presentation(a)).verdict


def test_zifferblatt(sample):
    assert zifferblatt_check(sample).verdict


def test_long_form_equals_transition(sample):
    p = sample.poset
    a = sample.arrangement
    for x in p.chambers():
        for y in p.chambers():
            assert long_form_product(sample, a, x, y) == transition(sample, x, y)


def test_crossing_word_evaluates_to_transition(sample):
    a = sample.arrangement
    p = sample.poset
    pres = salvetti_presentation(a)
    for x in p.chambers():
        for y in p.chambers():
            w = crossing_word(a, x, y, pres)
            assert evaluate(sample, pres, w, start=x) == transition(sample, x, y)


def test_broken_quiver_fails_relations():
    q = tran_broken()
    a = q.arrangement
    assert not check_representation(q, collinearity_presentation(a)).verdict
    assert not zifferblatt_check(q).verdict

