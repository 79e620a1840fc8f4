"""Compatible triangulations of (generalized) double circles.

Exact-rational geometric predicates, counted convex subdivisions, the
visibility subdivision, end-to-end compatible-triangulation pipelines and a
swap-state-graph conjecture checker over order type databases.
"""

from .exactgeom import (
    ConvexPolygon,
    CrossKind,
    HomogPoint,
    Point,
    Ray,
    Segment,
    convex_hull,
    is_general_plus_position,
    is_general_position,
    line_intersection,
    orient,
    point_in_convex_polygon,
    segments_cross,
)

__all__ = [
    "ConvexPolygon",
    "CrossKind",
    "HomogPoint",
    "Point",
    "Ray",
    "Segment",
    "convex_hull",
    "is_general_plus_position",
    "is_general_position",
    "line_intersection",
    "orient",
    "point_in_convex_polygon",
    "segments_cross",
]
