import json
import random
from fractions import Fraction
from math import comb

import pytest

from arrlab.arrangement import (Line, defining_polynomial, intersection_points,
                                parse_arrangement, serialize_arrangement,
                                transform, weak_combinatorics)
from arrlab.errors import (DuplicateLine, MalformedInput,
                           ReducibleMinimalPolynomial, SingularTransform,
                           ZeroLine)
from arrlab.exactnum import QQ, QuadField
from arrlab.fixtures import ARRANGEMENTS, load_arrangement

PENCIL = {"label": "pencil", "lines": [
    [["1", "0"], ["0", "0"], ["0", "0"]],
    [["0", "0"], ["1", "0"], ["0", "0"]],
    [["1", "0"], ["1", "0"], ["0", "0"]]]}


def test_parse_triangle():
    a = load_arrangement("triangle")
    assert len(a.lines) == 3 and a.field.is_rational and a.label == "triangle"


def test_parse_qb_field_and_size():
    a = load_arrangement("qb")
    assert len(a.lines) == 13
    assert a.field == QuadField(1, 1)


def test_duplicate_proportional_lines_rejected():
    with pytest.raises(DuplicateLine):
        parse_arrangement({"lines": [
            [["1", "0"], ["0", "0"], ["0", "0"]],
            [["2", "0"], ["0", "0"], ["0", "0"]]]})


def test_zero_line_rejected():
    with pytest.raises(ZeroLine):
        parse_arrangement({"lines": [[["0", "0"], ["0", "0"], ["0", "0"]]]})


def test_malformed_inputs():
    with pytest.raises(MalformedInput):
        parse_arrangement("{not json")
    with pytest.raises(MalformedInput):
        parse_arrangement({"nolines": []})
    with pytest.raises(MalformedInput):
        parse_arrangement({"lines": [[["1/0", "0"], ["1", "0"], ["0", "0"]]]})
    with pytest.raises(ReducibleMinimalPolynomial):
        parse_arrangement({"field": {"alpha_sq_c1": "0/1", "alpha_sq_c0": "4/1"},
                           "lines": [[["1", "0"], ["0", "0"], ["0", "0"]]]})


def test_triangle_points_all_double():
    pts = intersection_points(load_arrangement("triangle"))
    assert len(pts) == 3
    assert all(p.multiplicity == 2 for p in pts)


def test_pencil_single_triple_point():
    pts = intersection_points(parse_arrangement(PENCIL))
    assert len(pts) == 1
    p = pts[0]
    assert p.incident == (0, 1, 2)
    assert [c.a for c in p.point] == [0, 0, 1]


def test_qa_point_counts():
    pts = intersection_points(load_arrangement("qa"))
    assert len(pts) == 28
    by_mult = {}
    for p in pts:
        by_mult[p.multiplicity] = by_mult.get(p.multiplicity, 0) + 1
    assert by_mult == {2: 16, 3: 6, 4: 4, 5: 2}
    # incidence is exact: every incident line vanishes, others do not
    a = load_arrangement("qa")
    for p in pts:
        for i, ln in enumerate(a.lines):
            assert (i in p.incident) == ln.evaluate(p.point).is_zero()


@pytest.mark.parametrize("name,vec", [
    ("qa", [13, 16, 6, 4, 2]),
    ("qb", [13, 16, 6, 4, 2]),
    ("l1", [12, 9, 19]),
    ("l2", [12, 9, 19]),
])
def test_fixture_weak_combinatorics(name, vec):
    assert weak_combinatorics(load_arrangement(name)).as_vector() == vec


def test_pair_count_identity_all_fixtures():
    for name in ARRANGEMENTS:
        a = load_arrangement(name)
        w = weak_combinatorics(a)
        assert sum(comb(m, 2) * c for m, c in w.t.items()) == comb(w.d, 2)


def test_defining_polynomial_small():
    tri = load_arrangement("triangle")
    f = defining_polynomial(tri)
    assert f.degree == 3
    assert sorted(f.coeffs) == [(1, 1, 1)]
    a = parse_arrangement({"lines": [
        [["1", "0"], ["0", "0"], ["0", "0"]],
        [["0", "0"], ["1", "0"], ["0", "0"]],
        [["1", "0"], ["1", "0"], ["0", "0"]]]})
    f = defining_polynomial(a)
    assert f.coeffs == {(2, 1, 0): QQ.one(), (1, 2, 0): QQ.one()}


def test_qa_expansion_matches_factored_evaluation():
    a = load_arrangement("qa")
    f = defining_polynomial(a)
    rng = random.Random(13)
    for _ in range(20):
        pt = tuple(a.field.element(Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                                   Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
                   for _ in range(3))
        prod = a.field.one()
        for ln in a.lines:
            prod = prod * ln.evaluate(pt)
        assert f.evaluate(pt) == prod


def test_transform_identity_and_swap():
    a = load_arrangement("triangle")
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert transform(a, ident).lines == a.lines
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    swapped = transform(a, swap)
    assert set(swapped.lines) == set(a.lines)


def test_singular_transform_rejected():
    with pytest.raises(SingularTransform):
        transform(load_arrangement("triangle"), [[1, 0, 0], [1, 0, 0], [0, 0, 1]])


def test_transform_preserves_weak_combinatorics():
    rng = random.Random(5)
    a = load_arrangement("qa")
    w = weak_combinatorics(a)
    for _ in range(10):
        g = [[a.field.element(Fraction(rng.randint(-3, 3), rng.randint(1, 2)),
                              Fraction(rng.randint(-1, 1)))
              for _ in range(3)] for _ in range(3)]
        try:
            t = transform(a, g)
        except SingularTransform:
            continue
        assert weak_combinatorics(t) == w


def test_scale_invariance_of_lines():
    a = load_arrangement("qa")
    c = a.field.element(Fraction(-7, 3), Fraction(2))
    for ln in a.lines:
        assert Line(tuple(x * c for x in ln.coeffs)) == ln


def test_serialization_round_trip_and_stability():
    for name in ("qa", "l2"):
        a = load_arrangement(name)
        text = serialize_arrangement(a)
        b = parse_arrangement(text)
        assert b.lines == a.lines and b.field == a.field and b.label == a.label
        assert serialize_arrangement(b) == text
        obj = json.loads(text)
        assert list(obj)[0] == "label"
