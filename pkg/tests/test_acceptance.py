"""Acceptance suite: one group of tests per criterion.

Every test is named ``test_cNN_...``; the conftest prints one PASS/FAIL line
per criterion at the end of the run. Run directly with
``python3 tests/test_acceptance.py`` for just these lines.
"""

from fractions import Fraction

import pytest

from arrquiver.arrangement import (boolean, brute_force_faces, chamber_distance, collinear, compose, compose_oracle,
                                   concurrent_lines, coordinate_cross, enumerate_faces, flats, line_point,
                                   parallel_points, s1_cells)
from arrquiver.cousin import (elementary_inclusions, global_complex, perversity_support_check, smoothness_check,
                              stalk_cohomology, stalk_complex, strata)
from arrquiver.exactla import Matrix
from arrquiver.groupoid import (check_representation, collinearity_presentation, crossing_word,
                                salvetti_presentation, zifferblatt_check)
from arrquiver.onedim import (b_isomorphism, constant, fourier, half_monodromy, is_b_morphism, is_p_morphism,
                              local_system, p_isomorphism, PObject, skyscraper, to_B, to_P)
from arrquiver.quiver import constant_quiver, dual, multiplicities, restrict_flat, slice, validate
from oracles import oracle_triples
from samples import inv_broken, mon_broken, sky_quiver, tran_broken, validated_samples

ARRS = {"line": line_point(), "cross": coordinate_cross(), "lines3": concurrent_lines(3), "boolean3": boolean(3)}
TEST_ARRS = dict(ARRS, lines4=concurrent_lines(4), parallel=parallel_points())
VALID = validated_samples()
LAMBDAS = [2, -1, Fraction(1, 3)]


# 1. face enumeration

@pytest.mark.parametrize("name,count", [("line", 3), ("cross", 9), ("lines3", 13), ("boolean3", 27)])
def test_c01_face_enumeration(name, count):
    a = ARRS[name]
    faces = enumerate_faces(a).faces
    assert len(faces) == count
    assert {f.signs for f in faces} == brute_force_faces(a)


# 2. composition

@pytest.mark.parametrize("name", sorted(ARRS))
def test_c02_composition(name):
    a = ARRS[name]
    p = enumerate_faces(a)
    lat = flats(a)
    n = len(p)
    for i in range(n):
        for j in range(n):
            k = p.compose(i, j)
            assert p.faces[k].signs == compose(p.faces[i].signs, p.faces[j].signs) \
                == compose_oracle(a, p.faces[i], p.faces[j])
            # the span of C o D is the smallest flat containing C and D
            both = p.faces[i].zero_set & p.faces[j].zero_set
            smallest = min((L for L in lat.flats if L.hyperplanes <= both), key=lambda L: L.dim)
            assert p.faces[k].zero_set == smallest.hyperplanes
            for m in range(n):
                assert p.compose(k, m) == p.compose(i, p.compose(j, m))


# 3. collinearity

@pytest.mark.slow
@pytest.mark.parametrize("name,triples", [("line", 27), ("lines3", 2197)])
def test_c03_collinearity(name, triples):
    a = ARRS[name]
    p = enumerate_faces(a)
    truth = oracle_triples(a)
    checked = 0
    for i, A in enumerate(p.faces):
        for j, B in enumerate(p.faces):
            for k, C in enumerate(p.faces):
                assert collinear(a, A, B, C) == ((i, j, k) in truth), (A.label, B.label, C.label)
                checked += 1
    assert checked == triples


# 4. axioms and Cousin complexes

@pytest.mark.parametrize("name", sorted(TEST_ARRS))
def test_c04_constant_quiver(name):
    a = TEST_ARRS[name]
    q = constant_quiver(enumerate_faces(a))
    assert validate(q).verdict
    for cell in s1_cells(q.poset):
        stalk_complex(q, cell)  # construction checks d^2 = 0
    assert global_complex(q).cohomology() == (1,) + (0,) * a.n


def test_c04_skyscraper():
    q = sky_quiver()
    assert validate(q).verdict
    assert global_complex(q).cohomology() == (0, 1)


# 5. mutation detection

def _labels(p, idx):
    return tuple(p.label(i) for i in idx)


def test_c05_mon_mutation():
    q = mon_broken()
    r = validate(q)
    assert not r.verdict
    assert [_labels(q.poset, pair) for pair, _ in r.mon_violations] == [("0", "+")]
    assert not r.tran_violations and not r.inv_violations


def test_c05_inv_mutation():
    q = inv_broken()
    r = validate(q)
    p = q.poset
    assert [_labels(p, pair) for pair, _ in r.inv_violations] == [("-", "+")]
    assert not r.mon_violations and not r.tran_violations
    # smoothness breaks at the wall inclusion [0,+] <= [+,+]
    bad = {(p.label(lo.C), p.label(lo.D), p.label(hi.C), p.label(hi.D)) for _, lo, hi, _ in
           smoothness_check(q).failures}
    assert ("0", "+", "+", "+") in bad


@pytest.mark.slow
def test_c05_tran_mutation():
    q = tran_broken()
    r = validate(q)
    assert r.tran_violations and not r.mon_violations and not r.inv_violations
    found = {t for t, _, _ in r.tran_violations}
    assert found <= oracle_triples(q.arrangement)
    # the stalk complexes stop being complexes
    rep = perversity_support_check(q)
    assert any("d^2 != 0" in str(f[3]) for f in rep.failures)
    assert not smoothness_check(q).verdict


# 6. smoothness and perversity

@pytest.mark.parametrize("name", sorted(VALID))
def test_c06_smoothness_and_perversity(name):
    q = VALID[name]
    h = stalk_cohomology(q)
    for cells in strata(q.poset).values():
        assert len({h[c] for c in cells}) == 1
    rep = smoothness_check(q)
    assert rep.verdict and rep.checked == len(elementary_inclusions(q.poset))
    assert perversity_support_check(q).verdict
    assert perversity_support_check(dual(q)).verdict


# 7. functoriality

@pytest.mark.parametrize("name", sorted(VALID))
def test_c07_functoriality(name):
    q = VALID[name]
    for L in flats(q.arrangement).flats:
        assert validate(restrict_flat(q, L)).verdict
    for c in range(len(q.poset)):
        assert validate(slice(q, c)).verdict
    assert dual(dual(q)) == q
    assert validate(dual(q)).verdict


def test_c07_duality_commutes_with_validation():
    for q in (mon_broken(), inv_broken(), tran_broken()):
        assert dual(dual(q)) == q
        assert validate(dual(q)).verdict == validate(q).verdict is False


# 8. dimension-1 dictionary

def _p_samples():
    out = [PObject(1, 0, Matrix.zeros(1, 0), Matrix.zeros(0, 1)),
           PObject(0, 1, Matrix.zeros(0, 1), Matrix.zeros(1, 0))]
    return out + [local_system(lam) for lam in LAMBDAS]


@pytest.mark.parametrize("p", _p_samples(), ids=["k,0", "0,k", "lambda=2", "lambda=-1", "lambda=1/3"])
def test_c08_round_trips(p):
    back = to_P(to_B(p))
    a, b = p_isomorphism(p, back)
    assert a.is_invertible() and b.is_invertible() and is_p_morphism(p, back, a, b)
    bb = to_B(p)
    again = to_B(to_P(bb))
    t = b_isomorphism(bb, again)
    assert t is not None and t.is_invertible() and is_b_morphism(bb, again, t)


@pytest.mark.parametrize("lam", LAMBDAS)
def test_c08_half_monodromy(lam):
    b = to_B(local_system(lam))
    a1, c1 = half_monodromy(b, "+")
    a2, c2 = half_monodromy(b, "-")
    assert is_p_morphism(to_P(b, "+"), to_P(b, "-"), a1, c1)
    assert is_p_morphism(to_P(b, "-"), to_P(b, "+"), a2, c2)
    assert c2 @ c1 == Matrix.scalar(lam) and a2 @ a1 == Matrix.scalar(lam)


def test_c08_fourier():
    assert fourier(constant()) == skyscraper()
    for p in _p_samples():
        b = to_B(p)
        assert fourier(fourier(b)) == b


# 9. groupoid

def test_c09_salvetti_counts():
    for a, counts in ((concurrent_lines(3), (12, 6)), (coordinate_cross(), (8, 4))):
        pres = salvetti_presentation(a)
        assert (len(pres.generators), len(pres.relations)) == counts


@pytest.mark.parametrize("name", ["cross", "lines3"])
def test_c09_crossing_words(name):
    a = ARRS[name]
    p = enumerate_faces(a)
    pres = salvetti_presentation(a)
    for x in p.chambers():
        for y in p.chambers():
            assert len(crossing_word(a, x, y, pres)) == chamber_distance(a, p.faces[x], p.faces[y])


@pytest.mark.parametrize("name", sorted(k for k, q in VALID.items() if not q.arrangement.affine_mode))
def test_c09_representations(name):
    q = VALID[name]
    a = q.arrangement
    assert check_representation(q, salvetti_presentation(a)).verdict
    assert check_representation(q, collinearity_presentation(a)).verdict
    assert zifferblatt_check(q).verdict


# 10. multiplicities

@pytest.mark.parametrize("name", ["line", "cross", "lines3", "lines4", "parallel"])
@pytest.mark.parametrize("d", [1, 2, 3])
def test_c10_constant_multiplicities(name, d):
    q = constant_quiver(enumerate_faces(TEST_ARRS[name]), d)
    m = multiplicities(q)
    assert m[frozenset()] == d and all(v == 0 for k, v in m.items() if k)


def test_c10_skyscraper():
    assert multiplicities(sky_quiver()) == {frozenset(): 0, frozenset({0}): 1}


@pytest.mark.parametrize("name", sorted(VALID))
def test_c10_representatives_agree(name):
    q = VALID[name]
    p = q.poset
    by_flat = {}
    for i, f in enumerate(p.faces):
        by_flat.setdefault(f.zero_set, set()).add(q.dims[i])
    assert all(len(ds) == 1 for ds in by_flat.values())
    m = multiplicities(q)
    # every face dimension is recovered from the flats containing it
    for i, f in enumerate(p.faces):
        assert q.dims[i] == sum(v for k, v in m.items() if k <= f.zero_set)


# 11. affine mode

def test_c11_affine():
    a = parallel_points()
    p = enumerate_faces(a)
    assert len(p) == 5 and {f.signs for f in p.faces} == brute_force_faces(a)
    truth = oracle_triples(a)
    n = 0
    for i, A in enumerate(p.faces):
        for j, B in enumerate(p.faces):
            for k, C in enumerate(p.faces):
                assert collinear(a, A, B, C) == ((i, j, k) in truth)
                n += 1
    assert n == 125
    assert validate(constant_quiver(p)).verdict


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
