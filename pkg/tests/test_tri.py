import random

import pytest

from dctri.errors import NotSimplePolygonError, PreconditionError
from dctri.exactgeom import Point
from dctri.pointsets import PointSet, gen_double_circle, random_point_set
from dctri.tri import (
    Correspondence,
    EdgeSet,
    SimplePolygon,
    check_cyclic_mapping,
    diagonal_inside_polygon,
    is_unavoidable_edge,
    point_in_simple_polygon,
    polygon_triangles,
    port_polygon_triangulation,
    triangulate_point_set,
    triangulate_polygon,
    verify_compatible,
    verify_triangulation,
)

from helpers import enumerate_triangulations

P = Point


def square_set():
    return PointSet([P(0, 0), P(4, 0), P(4, 4), P(0, 4)])


def test_unavoidable_hull_edge_and_diagonal():
    ps = square_set()
    assert is_unavoidable_edge(ps, (0, 1))
    assert not is_unavoidable_edge(ps, (0, 2))  # the other diagonal crosses it


def test_double_circle_cycle_is_unavoidable():
    dc = gen_double_circle(4)
    for e in dc.cycle_edges():
        assert is_unavoidable_edge(dc.base, e)


def test_triangulate_triangle_and_square():
    tri3 = triangulate_point_set(PointSet([P(0, 0), P(2, 0), P(0, 2)]))
    assert len(tri3) == 3
    ps = square_set()
    t = triangulate_point_set(ps, EdgeSet(4, [(1, 3)]))
    assert len(t) == 5 and (1, 3) in t
    assert verify_triangulation(ps, t)


def test_triangulate_required_crossing_rejected():
    ps = square_set()
    with pytest.raises(PreconditionError):
        triangulate_point_set(ps, EdgeSet(4, [(0, 2), (1, 3)]))


def test_triangulation_cardinality_random():
    rng = random.Random(5)
    for trial in range(15):
        ps = random_point_set(rng.randint(3, 6), rng.randint(0, 4), seed=trial)
        t = triangulate_point_set(ps)
        n, h = len(ps), len(ps.hull)
        assert len(t) == 3 * n - 3 - h
        assert verify_triangulation(ps, t)


def test_double_circle_cycle_completion_verifies():
    dc = gen_double_circle(5)
    required = EdgeSet(len(dc.base), dc.cycle_edges())
    t = triangulate_point_set(dc.base, required)
    assert verify_triangulation(dc.base, t)
    assert all(e in t for e in dc.cycle_edges())


def test_verify_triangulation_rejects_non_maximal():
    ps = square_set()
    assert not verify_triangulation(ps, EdgeSet(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))


def test_unavoidable_matches_enumeration():
    rng = random.Random(31)
    for trial in range(6):
        ps = random_point_set(rng.randint(3, 5), rng.randint(0, 2),
                              seed=100 + trial)
        alltris = enumerate_triangulations(ps)
        always = set.intersection(*[set(t.edges) for t in alltris])
        n = len(ps)
        for i in range(n):
            for j in range(i + 1, n):
                assert is_unavoidable_edge(ps, (i, j)) == ((i, j) in always), \
                    (trial, i, j)


def test_polygon_triangulation_counts():
    tri = SimplePolygon([P(0, 0), P(4, 0), P(2, 3)])
    assert len(triangulate_polygon(tri)) == 0
    pent = SimplePolygon([P(0, 0), P(4, 0), P(5, 3), P(2, 5), P(-1, 3)])
    d = triangulate_polygon(pent)
    assert len(d) == 2
    tris = polygon_triangles(pent, d)
    assert len(tris) == 3


def test_polygon_triangulation_nonconvex():
    # a dart: reflex vertex at (2, 1)
    dart = SimplePolygon([P(0, 0), P(4, 0), P(2, 4), P(2, 1)])
    d = triangulate_polygon(dart)
    assert len(d) == 1
    assert d.sorted_edges() == [(1, 3)] or d.sorted_edges() == [(0, 2)]
    # only one of the two diagonals is actually inside
    inside = [e for e in [(0, 2), (1, 3)] if diagonal_inside_polygon(dart, *e)]
    assert d.sorted_edges() == inside


def test_diagonal_inside_polygon():
    square = SimplePolygon([P(0, 0), P(4, 0), P(4, 4), P(0, 4)])
    assert diagonal_inside_polygon(square, 0, 2)
    dart = SimplePolygon([P(0, 0), P(4, 0), P(2, 4), P(2, 1)])
    assert not diagonal_inside_polygon(dart, 0, 2)
    assert diagonal_inside_polygon(dart, 1, 3)
    with pytest.raises(PreconditionError):
        diagonal_inside_polygon(square, 0, 1)


def test_point_in_simple_polygon():
    dart = SimplePolygon([P(0, 0), P(4, 0), P(2, 4), P(2, 1)])
    assert point_in_simple_polygon(P(1, "1/4"), dart) == "inside"
    assert point_in_simple_polygon(P(3, 3), dart) == "outside"
    assert point_in_simple_polygon(P(2, 1), dart) == "boundary"


def test_simple_polygon_validation():
    with pytest.raises(NotSimplePolygonError):
        SimplePolygon([P(0, 0), P(4, 4), P(4, 0), P(0, 4)])


def test_port_convex_to_convex():
    hexv = [P(2, 0), P(1, 2), P(-1, 2), P(-2, 0), P(-1, -2), P(1, -2)]
    poly_q = SimplePolygon(hexv)
    fanned = SimplePolygon([p.scale(3) for p in hexv])
    tq = triangulate_polygon(poly_q)
    tp = port_polygon_triangulation(fanned, poly_q, tq)
    assert tp.edges == tq.edges


def test_port_blocked_diagonal_raises():
    square = SimplePolygon([P(0, 0), P(4, 0), P(4, 4), P(0, 4)])
    dart = SimplePolygon([P(0, 0), P(4, 0), P(2, 4), P(2, 1)])
    tq = EdgeSet(4, [(0, 2)])
    with pytest.raises(PreconditionError):
        port_polygon_triangulation(dart, square, tq)


def test_port_fan_to_star_shaped():
    # convex pentagon fanned from vertex 0, ported to a polygon where
    # vertex 0 sees everything
    pent = SimplePolygon([P(0, 0), P(4, 0), P(5, 3), P(2, 5), P(-1, 3)])
    fan = EdgeSet(5, [(0, 2), (0, 3)])
    tgt = SimplePolygon([P(0, 0), P(4, 0), P(1, 1), P(2, 5), P(-1, 3)])
    ported = port_polygon_triangulation(tgt, pent, fan)
    assert ported.edges == fan.edges


def test_verify_compatible_identity():
    ps = square_set()
    t = triangulate_point_set(ps)
    f = Correspondence(range(4))
    assert verify_compatible(ps, ps, f, t, t)
    smaller = EdgeSet(4, list(t.sorted_edges())[:-1])
    assert not verify_compatible(ps, ps, f, t, smaller)


def test_verify_compatible_symmetry():
    rng = random.Random(8)
    for trial in range(5):
        ps = random_point_set(4, 2, seed=trial)
        qs = random_point_set(4, 2, seed=1000 + trial)
        tp = triangulate_point_set(ps)
        tq = triangulate_point_set(qs)
        perm = list(range(6))
        rng.shuffle(perm)
        f = Correspondence(perm)
        fwd = verify_compatible(ps, qs, f, tp, tq)
        back = verify_compatible(qs, ps, f.inverse(), tq, tp)
        assert fwd == back


def test_check_cyclic_mapping():
    hexv = [P(2, 0), P(1, 2), P(-1, 2), P(-2, 0), P(-1, -2), P(1, -2)]
    p = PointSet(hexv)
    q = PointSet([v.scale(2) for v in hexv])
    rot = {p.hull[k]: q.hull[(k + 2) % 6] for k in range(6)}
    assert check_cyclic_mapping(p, q, rot)
    swap = dict(rot)
    a, b = p.hull[0], p.hull[1]
    swap[a], swap[b] = swap[b], swap[a]
    assert not check_cyclic_mapping(p, q, swap)
    # reflections preserve hull edges and are accepted
    refl = {p.hull[k]: q.hull[(6 - k) % 6] for k in range(6)}
    assert check_cyclic_mapping(p, q, refl)
