import random
from fractions import Fraction

import pytest

from dctri.errors import PreconditionError
from dctri.exactgeom import Point, convex_hull, is_general_plus_position
from dctri.pointsets import (
    GDCSpec,
    PointSet,
    _build_gdc,
    certify_gdc,
    gen_double_circle,
    gen_generalized_double_circle,
    order_type_signature,
    perturb_to_general_plus,
    random_point_set,
    same_order_type,
)


def test_double_circle_basic_counts():
    dc = gen_double_circle(3)
    assert len(dc.base) == 6
    assert len(dc.base.hull) == 3
    dc8 = gen_double_circle(8)
    assert len(dc8.base) == 16
    assert certify_gdc(dc8)


def test_double_circle_hull_is_outer_ring():
    dc = gen_double_circle(5)
    assert set(convex_hull(dc.base.points)) == set(dc.outer)
    assert len(dc.base.interior) == 5


def test_double_circle_epsilon_halving_keeps_signature():
    for n in (4, 5, 7, 10):
        dc = gen_double_circle(n)
        half = _build_gdc(dc.spec, dc.inset / 2)
        assert order_type_signature(dc.base) == order_type_signature(half.base)


def test_gdc_111_is_double_circle():
    gdc = gen_generalized_double_circle(GDCSpec((1, 1, 1)))
    assert len(gdc.base) == 6
    assert all(len(ix) == 1 for ix in gdc.inner)


def test_gdc_123():
    gdc = gen_generalized_double_circle(GDCSpec((1, 2, 3)))
    assert len(gdc.base) == 9
    assert len(gdc.base.hull) == 3
    assert certify_gdc(gdc)


def test_gdc_with_zero_counts():
    gdc = gen_generalized_double_circle(GDCSpec((0, 0, 2)))
    assert len(gdc.base) == 5
    assert len(gdc.base.hull) == 3
    assert certify_gdc(gdc)


def test_gdc_spec_validation():
    with pytest.raises(PreconditionError):
        GDCSpec((1, 1))
    with pytest.raises(PreconditionError):
        GDCSpec((1, -1, 1))


def test_certify_rejects_reflected_inner_point():
    dc = gen_double_circle(4)
    pts = list(dc.base.points)
    k = dc.inner[0][0]
    pts[k] = pts[k].scale(3)  # push it outside the hull
    broken = type(dc)(PointSet(pts), dc.outer, dc.inner, dc.spec, dc.inset)
    assert not certify_gdc(broken)


def test_certify_rejects_swapped_chain_order():
    gdc = gen_generalized_double_circle(GDCSpec((3, 1, 1)))
    inner = [list(ix) for ix in gdc.inner]
    inner[0][0], inner[0][1] = inner[0][1], inner[0][0]
    broken = type(gdc)(gdc.base, gdc.outer, inner, gdc.spec, gdc.inset)
    assert not certify_gdc(broken)


def test_signature_basics():
    ccw = PointSet([Point(0, 0), Point(1, 0), Point(0, 1)])
    sig = order_type_signature(ccw)
    assert sig.signs == (1,)
    mirrored = ccw.mirrored()
    assert order_type_signature(mirrored).signs == (-1,)
    assert same_order_type(ccw, ccw, [0, 1, 2])
    assert not same_order_type(ccw, mirrored, [0, 1, 2])


def test_double_circle_signature_under_identity():
    dc = gen_double_circle(5)
    half = _build_gdc(dc.spec, dc.inset / 2)
    assert same_order_type(dc.base, half.base, list(range(10)))


def test_perturb_identity_on_general_plus():
    ps = random_point_set(4, 3, seed=42)
    if ps.is_general_plus():
        assert perturb_to_general_plus(ps, seed=1) is ps


def test_perturb_hexagon():
    hexagon = PointSet([Point(2, 0), Point(1, 2), Point(-1, 2), Point(-2, 0),
                        Point(-1, -2), Point(1, -2)])
    assert not hexagon.is_general_plus()
    fixed = perturb_to_general_plus(hexagon, seed=9)
    assert is_general_plus_position(fixed.points)
    assert same_order_type(hexagon, fixed, list(range(6)))


def test_perturb_preserves_signature_random():
    rng = random.Random(21)
    for trial in range(5):
        ps = random_point_set(rng.randint(3, 6), rng.randint(1, 4), seed=trial)
        out = perturb_to_general_plus(ps, seed=trial)
        assert order_type_signature(out) == order_type_signature(ps)
        assert out.hull == ps.hull


def test_random_point_set_contract():
    ps = random_point_set(6, 4, seed=7)
    assert len(ps) == 10
    assert len(ps.hull) == 6
    assert set(ps.hull) == set(range(6))
