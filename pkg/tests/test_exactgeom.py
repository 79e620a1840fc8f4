import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dctri.errors import DegenerateInputError, IdenticalLinesError
from dctri.exactgeom import (
    ConvexPolygon,
    CrossKind,
    HomogPoint,
    Point,
    Segment,
    clip_polygon_halfplane,
    convex_hull,
    is_general_plus_position,
    is_general_plus_position_bruteforce,
    is_general_position,
    line_intersection,
    line_through,
    orient,
    orient_h,
    point_in_convex_polygon,
    polygon_area2,
    segments_cross,
)

P = Point


def test_orient_canonical_triples():
    assert orient(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orient(P(0, 0), P(1, 1), P(2, 2)) == 0
    assert orient(P(0, 0), P(0, 1), P(1, 0)) == -1


coord = st.integers(min_value=-50, max_value=50)
point = st.builds(P, coord, coord)


@given(point, point, point)
def test_orient_antisymmetry(a, b, c):
    assert orient(a, b, c) == -orient(a, c, b) == orient(b, c, a)


@given(point, point, point, point)
@settings(max_examples=200)
def test_segments_cross_symmetric(a, b, c, d):
    if a == b or c == d:
        return
    s, t = Segment(a, b), Segment(c, d)
    assert segments_cross(s, t) == segments_cross(t, s)


def test_segments_cross_kinds():
    assert segments_cross(Segment(P(0, 0), P(2, 2)),
                          Segment(P(0, 2), P(2, 0))) == CrossKind.PROPER
    assert segments_cross(Segment(P(0, 0), P(1, 0)),
                          Segment(P(1, 0), P(2, 1))) == CrossKind.SHARED_ENDPOINT
    assert segments_cross(Segment(P(0, 0), P(1, 0)),
                          Segment(P(0, 1), P(1, 1))) == CrossKind.DISJOINT
    # collinear overlap and endpoint-in-interior are both improper
    assert segments_cross(Segment(P(0, 0), P(2, 0)),
                          Segment(P(1, 0), P(3, 0))) == CrossKind.OVERLAP
    assert segments_cross(Segment(P(0, 0), P(2, 0)),
                          Segment(P(1, 0), P(1, 2))) == CrossKind.OVERLAP
    # collinear, sharing the single endpoint only
    assert segments_cross(Segment(P(0, 0), P(1, 0)),
                          Segment(P(1, 0), P(2, 0))) == CrossKind.SHARED_ENDPOINT


def test_convex_hull_square():
    pts = [P(0, 0), P(1, 0), P(1, 1), P(0, 1)]
    assert sorted(convex_hull(pts)) == [0, 1, 2, 3]
    pts.append(P(Fraction(1, 2), Fraction(1, 2)))
    hull = convex_hull(pts)
    assert sorted(hull) == [0, 1, 2, 3]
    # CCW check
    for i in range(len(hull)):
        a, b, c = (pts[hull[i]], pts[hull[(i + 1) % 4]], pts[hull[(i + 2) % 4]])
        assert orient(a, b, c) == 1


def test_convex_hull_degenerate():
    with pytest.raises(DegenerateInputError):
        convex_hull([P(0, 0), P(1, 1), P(2, 2), P(3, 3)])
    with pytest.raises(DegenerateInputError):
        convex_hull([P(0, 0), P(1, 0)])
    # boundary collinearity is rejected, not canonicalized
    with pytest.raises(DegenerateInputError):
        convex_hull([P(0, 0), P(2, 0), P(1, 0), P(0, 2)])


def _brute_hull(pts):
    # a point is on the hull iff some line through it has all others on one side
    n = len(pts)
    hull = set()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            signs = {orient(pts[i], pts[j], pts[k])
                     for k in range(n) if k not in (i, j)}
            if 0 not in signs and len(signs) == 1:
                hull.add(i)
                hull.add(j)
    return hull


def test_convex_hull_matches_bruteforce():
    rng = random.Random(7)
    for trial in range(40):
        n = rng.randint(4, 12)
        pts = []
        while len(pts) < n:
            cand = P(rng.randint(-30, 30), rng.randint(-30, 30))
            if cand not in pts:
                pts.append(cand)
        try:
            hull = convex_hull(pts)
        except DegenerateInputError:
            continue
        assert set(hull) == _brute_hull(pts)


def test_general_position():
    assert is_general_position([P(0, 0), P(1, 0), P(0, 1), P(1, 1)])
    assert not is_general_position([P(0, 0), P(1, 1), P(2, 2), P(0, 5)])
    assert is_general_position([])


def _regular_hexagon():
    # rational hexagon with the three main diagonals through the origin
    pts = [P(2, 0), P(1, 2), P(-1, 2), P(-2, 0), P(-1, -2), P(1, -2)]
    return pts


def test_general_plus_small_sets_trivially_fine():
    # with 4 points every triple of lines reuses a point
    assert is_general_plus_position([P(0, 0), P(3, 1), P(1, 3), P(4, 4)])


def test_general_plus_hexagon():
    hexagon = _regular_hexagon()
    assert is_general_position(hexagon)
    assert not is_general_plus_position(hexagon)
    # random rational perturbation clears the concurrency
    rng = random.Random(3)
    for _ in range(5):
        pert = [P(p.x + Fraction(rng.randint(1, 97), 1009),
                  p.y + Fraction(rng.randint(1, 97), 1013))
                for p in hexagon]
        assert is_general_plus_position(pert) == \
            is_general_plus_position_bruteforce(pert)


def test_general_plus_matches_bruteforce_random():
    rng = random.Random(11)
    for _ in range(15):
        pts = [P(rng.randint(-12, 12), rng.randint(-12, 12)) for _ in range(7)]
        if len({(p.x, p.y) for p in pts}) < 7:
            continue
        assert is_general_plus_position(pts) == \
            is_general_plus_position_bruteforce(pts)


def test_general_plus_implies_general():
    rng = random.Random(13)
    for _ in range(20):
        pts = [P(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(6)]
        if is_general_plus_position(pts):
            assert is_general_position(pts)


def test_line_intersection():
    x_axis = (P(0, 0), P(1, 0))
    y_axis = (P(0, 0), P(0, 1))
    got = line_intersection(x_axis, y_axis)
    assert (got.x, got.y, got.w) == (0, 0, 1) or (got.x, got.y) == (0, 0)
    par = line_intersection((P(0, 0), P(1, 0)), (P(0, 1), P(1, 1)))
    assert par.is_at_infinity()
    assert (abs(par.x), par.y) == (1, 0)
    diag = line_intersection((P(0, 0), P(1, 1)), (P(0, 2), P(2, 0)))
    assert diag.to_point() == P(1, 1)
    with pytest.raises(IdenticalLinesError):
        line_intersection((P(0, 0), P(1, 1)), (P(2, 2), P(3, 3)))


def test_orient_h_matches_affine():
    p = HomogPoint(3, 4, 1)
    rng = random.Random(5)
    for _ in range(50):
        a = P(rng.randint(-9, 9), rng.randint(-9, 9))
        b = P(rng.randint(-9, 9), rng.randint(-9, 9))
        assert orient_h(p, a, b) == orient(P(3, 4), a, b)
    # direction pivot sorts along the orthogonal axis
    up = HomogPoint(0, 1, 0)
    assert orient_h(up, P(0, 0), P(1, 5)) == orient_h(up, P(0, 3), P(1, -2))
    # negated weight reverses every sign
    neg = HomogPoint(-3, -4, -1)
    for _ in range(20):
        a = P(rng.randint(-9, 9), rng.randint(-9, 9))
        b = P(rng.randint(-9, 9), rng.randint(-9, 9))
        assert orient_h(neg, a, b) == -orient_h(p, a, b)


def test_point_in_convex_polygon():
    square = ConvexPolygon([P(0, 0), P(1, 0), P(1, 1), P(0, 1)])
    assert point_in_convex_polygon(P(Fraction(1, 2), Fraction(1, 2)), square) == "inside"
    assert point_in_convex_polygon(P(0, Fraction(1, 2)), square) == "boundary"
    assert point_in_convex_polygon(P(2, 2), square) == "outside"


def test_clip_polygon_halfplane():
    square = [P(0, 0), P(4, 0), P(4, 4), P(0, 4)]
    left = clip_polygon_halfplane(square, line_through(P(2, 0), P(2, 4)), False)
    assert polygon_area2(left) == polygon_area2(square) / 2
    gone = clip_polygon_halfplane(square, line_through(P(0, -1), P(1, -1)), False)
    assert gone == [] or polygon_area2(gone) == 0
