import random

import pytest

from arrlab.arrangement import WeakCombinatorics, parse_arrangement
from arrlab.errors import InvalidMatroid, PencilArrangement
from arrlab.fixtures import load_arrangement, matroid_path
from arrlab.matroid import (Matroid3, characteristic_polynomial,
                            divisionally_free_rank3, matroid_from_arrangement,
                            matroids_isomorphic, nonfree_by_multiplicity,
                            validate_matroid, weak_combinatorics_of_matroid)

M1 = Matroid3.from_json(matroid_path("m1"))
M2 = Matroid3.from_json(matroid_path("m2"))


def test_fixture_matroids_valid():
    assert validate_matroid(M1)
    assert validate_matroid(M2)
    assert len(M1.nonbases) == 14
    assert len(M2.nonbases) == 21


def test_uniform_matroid_valid():
    assert validate_matroid(Matroid3(6, []))
    assert weak_combinatorics_of_matroid(Matroid3(4, [])).as_vector() == [4, 6]


def test_flat_inconsistency_detected():
    # {0,1,2} and {0,1,3} force 0,1,2,3 collinear; {0,2,3} is missing
    bad = Matroid3(5, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])
    assert not validate_matroid(bad)
    with pytest.raises(InvalidMatroid):
        weak_combinatorics_of_matroid(bad)


def test_matroid_weak_combinatorics():
    assert weak_combinatorics_of_matroid(M1).as_vector() == [12, 24, 14]
    assert weak_combinatorics_of_matroid(M2).as_vector() == [12, 21, 9, 3]


def test_triangle_matroid_empty():
    m = matroid_from_arrangement(load_arrangement("triangle"))
    assert m.nonbases == frozenset()


def test_pencil_rejected():
    pencil = parse_arrangement({"lines": [
        [["1", "0"], ["0", "0"], ["0", "0"]],
        [["0", "0"], ["1", "0"], ["0", "0"]],
        [["1", "0"], ["1", "0"], ["0", "0"]],
        [["1", "0"], ["-1", "0"], ["0", "0"]]]})
    with pytest.raises(PencilArrangement):
        matroid_from_arrangement(pencil)


def test_matroid_matches_arrangement_combinatorics():
    for name in ("qa", "qb", "l1", "l2"):
        a = load_arrangement(name)
        from arrlab.arrangement import weak_combinatorics
        m = matroid_from_arrangement(a)
        assert weak_combinatorics_of_matroid(m) == weak_combinatorics(a)


@pytest.mark.parametrize("literal,chi0,verdict", [
    ("(10;21,1,0,0,0,1)", "(t-4)(t-5)", "NonFree"),
    ("(11;19,5,0,0,0,1)", "(t-5)^2", "NonFree"),
    ("(12;26,4,0,0,0,0,1)", "(t-5)(t-6)", "NonFree"),
    ("(13;16,6,4,2)", "(t-6)^2", "Inconclusive"),
    ("(15;24,12,0,0,3)", "(t-7)^2", "Inconclusive"),
])
def test_screening_filters(literal, chi0, verdict):
    w = WeakCombinatorics.parse(literal)
    cp = characteristic_polynomial(w)
    assert str(cp) == chi0
    assert nonfree_by_multiplicity(w) == verdict


def test_charpoly_division_exact():
    for name in ("qa", "l1", "l2"):
        w = weak_combinatorics_of_matroid(
            matroid_from_arrangement(load_arrangement(name)))
        cp = characteristic_polynomial(w)
        # chi == (t-1) * chi0 coefficient-wise
        a, b, c = cp.chi0
        assert cp.chi == (a, b - a, c - b, -c)
        assert sum(cp.chi) == 0  # chi(1) = 0


def test_divisional_freeness():
    qa = matroid_from_arrangement(load_arrangement("qa"))
    qb = matroid_from_arrangement(load_arrangement("qb"))
    assert not divisionally_free_rank3(qa)
    assert not divisionally_free_rank3(qb)
    near_pencil = Matroid3(4, [(0, 1, 2)])
    cp = characteristic_polynomial(weak_combinatorics_of_matroid(near_pencil))
    assert cp.integer_roots == (1, 2)
    assert divisionally_free_rank3(near_pencil)
    assert divisionally_free_rank3(matroid_from_arrangement(load_arrangement("triangle")))


def test_isomorphism_witness_roundtrip():
    rng = random.Random(31)
    for m in (M1, M2):
        perm = list(range(m.n))
        rng.shuffle(perm)
        relabeled = m.relabel(tuple(perm))
        w = matroids_isomorphic(m, relabeled)
        assert w is not None
        assert {tuple(sorted(w[x] for x in t)) for t in m.nonbases} == set(relabeled.nonbases)
        # necessary conditions for isomorphism
        assert weak_combinatorics_of_matroid(m) == weak_combinatorics_of_matroid(relabeled)
        assert characteristic_polynomial(weak_combinatorics_of_matroid(m)) == \
            characteristic_polynomial(weak_combinatorics_of_matroid(relabeled))


def test_nonisomorphic_pairs():
    qa = matroid_from_arrangement(load_arrangement("qa"))
    qb = matroid_from_arrangement(load_arrangement("qb"))
    assert matroids_isomorphic(qa, qb) is None
    l1 = matroid_from_arrangement(load_arrangement("l1"))
    l2 = matroid_from_arrangement(load_arrangement("l2"))
    assert matroids_isomorphic(l1, l2) is None
    assert matroids_isomorphic(M1, M2) is None


def test_points_on_line_counts():
    # every line of QA: flats through it partition the other 12 lines
    qa = matroid_from_arrangement(load_arrangement("qa"))
    flats = qa.rank2_flats()
    for h in range(qa.n):
        covered = sum(len(f) - 1 for f in flats if h in f)
        assert qa.points_on_line(h) == len([f for f in flats if h in f]) + 12 - covered


def test_json_round_trip():
    import json
    m = Matroid3.from_json(json.loads(M1.to_json()))
    assert m == M1
