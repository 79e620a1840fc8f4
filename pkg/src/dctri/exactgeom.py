"""Exact rational plane geometry kernel.

Every coordinate is an arbitrary-precision rational (`fractions.Fraction`)
and every predicate is evaluated exactly; there is no floating point and no
epsilon anywhere.  Integer fast paths (`iorient`, cleared-denominator
coordinate lists) exist for the hot loops of the verifiers and the database
scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import DegenerateInputError, IdenticalLinesError

Coord = Fraction


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True, slots=True)
class Point:
    """A point of the rational plane."""

    x: Fraction
    y: Fraction

    def __init__(self, x, y):
        object.__setattr__(self, "x", _frac(x))
        object.__setattr__(self, "y", _frac(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k) -> "Point":
        k = _frac(k)
        return Point(self.x * k, self.y * k)

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


@dataclass(frozen=True, slots=True)
class HomogPoint:
    """Projective point (x : y : w); w = 0 encodes a direction at infinity.

    The sign of w is meaningful to callers that use homogeneous orientation
    tests: negating all three coordinates represents the same projective
    point but reverses every orient_h sign, which is how "beyond infinity"
    pivots are told apart from ordinary finite ones.
    """

    x: Fraction
    y: Fraction
    w: Fraction

    def __init__(self, x, y, w):
        x, y, w = _frac(x), _frac(y), _frac(w)
        if x == 0 and y == 0 and w == 0:
            raise DegenerateInputError("homogeneous point (0,0,0) is invalid")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "w", w)

    @staticmethod
    def from_point(p: Point) -> "HomogPoint":
        return HomogPoint(p.x, p.y, 1)

    def is_at_infinity(self) -> bool:
        return self.w == 0

    def to_point(self) -> Point:
        if self.w == 0:
            raise DegenerateInputError("point at infinity has no affine image")
        return Point(self.x / self.w, self.y / self.w)

    def canonical(self) -> "HomogPoint":
        """Scale so w ∈ {1, 0, -1}; for w = 0 reduce to a primitive direction."""
        if self.w != 0:
            return HomogPoint(self.x / abs(self.w), self.y / abs(self.w),
                              1 if self.w > 0 else -1)
        # direction: clear denominators, divide by gcd, fix sign of first nonzero
        dx, dy = self.x, self.y
        den = dx.denominator * dy.denominator
        ix, iy = int(dx * den), int(dy * den)
        g = gcd(ix, iy)
        ix, iy = ix // g, iy // g
        if ix < 0 or (ix == 0 and iy < 0):
            ix, iy = -ix, -iy
        return HomogPoint(ix, iy, 0)


@dataclass(frozen=True, slots=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateInputError("segment endpoints coincide")


@dataclass(frozen=True, slots=True)
class Ray:
    """Ray from `origin` in rational `direction` (a non-zero vector)."""

    origin: Point
    direction: tuple

    def __post_init__(self):
        dx, dy = self.direction
        if dx == 0 and dy == 0:
            raise DegenerateInputError("ray direction is the zero vector")

    def point_at(self, t) -> Point:
        t = _frac(t)
        return Point(self.origin.x + t * self.direction[0],
                     self.origin.y + t * self.direction[1])


# ---------------------------------------------------------------------------
# orientation predicates


def orient_value(a: Point, b: Point, c: Point) -> Fraction:
    """Twice the signed area of triangle (a, b, c); positive iff CCW."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def orient(a: Point, b: Point, c: Point) -> int:
    v = orient_value(a, b, c)
    return (v > 0) - (v < 0)


def iorient(ax, ay, bx, by, cx, cy) -> int:
    """Orientation sign on raw integer coordinates (hot-loop fast path)."""
    v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (v > 0) - (v < 0)


def orient_h(p: HomogPoint, a: Point, b: Point) -> int:
    """Orientation of (p, a, b) with p homogeneous.

    Equals orient(p, a, b) when p.w = 1; for p.w = 0 it orders a, b along
    the axis orthogonal to p's direction, and for p.w < 0 it is the reversal
    of the orientation around the affine image of p.
    """
    v = (p.x * (a.y - b.y) - p.y * (a.x - b.x)
         + p.w * (a.x * b.y - a.y * b.x))
    return (v > 0) - (v < 0)


def collinear_h(p: HomogPoint, a: Point, b: Point) -> bool:
    return orient_h(p, a, b) == 0


# ---------------------------------------------------------------------------
# lines in homogeneous form: (A, B, C) with A x + B y + C = 0,
# oriented so that eval_line(line_through(a, b), p) == orient_value(a, b, p).


def line_through(a: Point, b: Point) -> tuple:
    return (a.y - b.y, b.x - a.x, a.x * b.y - b.x * a.y)


def line_through_h(p: HomogPoint, a: Point) -> tuple:
    """Line through a homogeneous point and an affine point.

    Oriented so that for finite p with w > 0 it matches
    line_through(p_affine, a) up to a positive factor.
    """
    return (p.y - a.y * p.w, a.x * p.w - p.x, p.x * a.y - p.y * a.x)


def eval_line(line: tuple, p: Point) -> Fraction:
    A, B, C = line
    return A * p.x + B * p.y + C


def lines_cross_h(l1: tuple, l2: tuple) -> HomogPoint:
    """Homogeneous intersection of two lines (cross product of coefficients)."""
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    x = b1 * c2 - c1 * b2
    y = c1 * a2 - a1 * c2
    w = a1 * b2 - b1 * a2
    if x == 0 and y == 0 and w == 0:
        raise IdenticalLinesError("the two lines coincide")
    return HomogPoint(x, y, w)


def line_intersection(l1: tuple, l2: tuple) -> HomogPoint:
    """Intersection of line through l1=(p,q) and line through l2=(r,s).

    Returns a canonical HomogPoint; w = 0 iff the lines are parallel.
    """
    (p, q), (r, s) = l1, l2
    return lines_cross_h(line_through(p, q), line_through(r, s)).canonical()


# ---------------------------------------------------------------------------
# segment crossing classification


class CrossKind(Enum):
    DISJOINT = "disjoint"
    SHARED_ENDPOINT = "shared-endpoint-only"
    PROPER = "proper-cross"
    OVERLAP = "improper-overlap"


def _on_segment_collinear(a: Point, b: Point, p: Point) -> bool:
    # assumes p collinear with (a, b); closed-interval test
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def segments_cross(s: Segment, t: Segment) -> CrossKind:
    """Exact classification of how two segments meet."""
    a, b, c, d = s.a, s.b, t.a, t.b
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return CrossKind.PROPER

    if d1 == 0 and d2 == 0 and d3 == 0 and d4 == 0:
        # all four endpoints on one line: interval arithmetic along it
        pts = []
        for p in (a, b):
            if _on_segment_collinear(c, d, p):
                pts.append(p)
        for p in (c, d):
            if _on_segment_collinear(a, b, p):
                pts.append(p)
        if not pts:
            return CrossKind.DISJOINT
        distinct = {(p.x, p.y) for p in pts}
        if len(distinct) > 1:
            return CrossKind.OVERLAP
        p = pts[0]
        if (p in (a, b)) and (p in (c, d)):
            return CrossKind.SHARED_ENDPOINT
        return CrossKind.OVERLAP

    shared = {p for p in (a, b) if p in (c, d)}
    if shared:
        # non-collinear segments sharing an endpoint touch only there
        return CrossKind.SHARED_ENDPOINT
    # endpoint of one strictly inside the other?
    if d1 == 0 and _on_segment_collinear(c, d, a):
        return CrossKind.OVERLAP
    if d2 == 0 and _on_segment_collinear(c, d, b):
        return CrossKind.OVERLAP
    if d3 == 0 and _on_segment_collinear(a, b, c):
        return CrossKind.OVERLAP
    if d4 == 0 and _on_segment_collinear(a, b, d):
        return CrossKind.OVERLAP
    return CrossKind.DISJOINT


def segments_cross_properly(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff open segments (a,b) and (c,d) meet in exactly one point."""
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    if d1 * d2 >= 0:
        return False
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    return d3 * d4 < 0


# ---------------------------------------------------------------------------
# hull and position predicates


def int_coords(points) -> list:
    """Clear denominators: integer (x, y) pairs on a common positive scale."""
    den = 1
    for p in points:
        den = den * p.x.denominator // gcd(den, p.x.denominator)
        den = den * p.y.denominator // gcd(den, p.y.denominator)
    return [(int(p.x * den), int(p.y * den)) for p in points]


def convex_hull(points) -> list:
    """Indices of the convex hull in CCW order (Andrew's monotone chain).

    Raises DegenerateInputError for fewer than 3 points, all-collinear input,
    or a non-hull point lying on the hull boundary (inputs are expected in
    general position; boundary collinearity is not canonicalized away).
    """
    n = len(points)
    if n < 3:
        raise DegenerateInputError("hull needs at least 3 points")
    coords = int_coords(points)
    order = sorted(range(n), key=lambda i: coords[i])
    if len({coords[i] for i in order}) != n:
        raise DegenerateInputError("duplicate points")

    def chain(idx):
        out = []
        for i in idx:
            while len(out) >= 2:
                (ax, ay), (bx, by) = coords[out[-2]], coords[out[-1]]
                if iorient(ax, ay, bx, by, *coords[i]) > 0:
                    break
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInputError("all points collinear")
    hull_set = set(hull)
    h = len(hull)
    for k in range(h):
        ax, ay = coords[hull[k]]
        bx, by = coords[hull[(k + 1) % h]]
        for i in range(n):
            if i in hull_set:
                continue
            if iorient(ax, ay, bx, by, *coords[i]) == 0:
                raise DegenerateInputError(
                    "point %d lies on the hull boundary" % i)
    return hull


def is_general_position(points) -> bool:
    """No three points collinear (vacuously true below 3 points)."""
    n = len(points)
    if n < 3:
        return True
    coords = int_coords(points)
    if len(set(coords)) != n:
        return False
    for i in range(n):
        ax, ay = coords[i]
        for j in range(i + 1, n):
            bx, by = coords[j]
            ab_x, ab_y = bx - ax, by - ay
            for k in range(j + 1, n):
                cx, cy = coords[k]
                if ab_x * (cy - ay) - ab_y * (cx - ax) == 0:
                    return False
    return True


def _canonical_line(ax, ay, bx, by) -> tuple:
    A, B, C = ay - by, bx - ax, ax * by - bx * ay
    g = gcd(gcd(abs(A), abs(B)), abs(C))
    if g:
        A, B, C = A // g, B // g, C // g
    if A < 0 or (A == 0 and B < 0) or (A == 0 and B == 0 and C < 0):
        A, B, C = -A, -B, -C
    return A, B, C


def is_general_plus_position(points) -> bool:
    """General position and no three lines through six distinct points concurrent.

    Concurrency is projective (a vanishing 3x3 determinant of the line
    coefficient vectors), so triples of mutually parallel lines also fail.
    Implemented by hashing canonical intersections of all pairs of
    point-spanned lines with disjoint defining pairs: a repeated
    intersection is exactly a violation.
    """
    n = len(points)
    if n < 6:
        return is_general_position(points)
    if not is_general_position(points):
        return False
    coords = int_coords(points)
    lines = []
    for i in range(n):
        ax, ay = coords[i]
        for j in range(i + 1, n):
            bx, by = coords[j]
            lines.append((ay - by, bx - ax, ax * by - bx * ay, i, j))
    seen = {}
    m = len(lines)
    for u in range(m):
        a1, b1, c1, i1, j1 = lines[u]
        for v in range(u + 1, m):
            a2, b2, c2, i2, j2 = lines[v]
            if i2 == i1 or i2 == j1 or j2 == i1 or j2 == j1:
                continue
            x = b1 * c2 - c1 * b2
            y = c1 * a2 - a1 * c2
            w = a1 * b2 - b1 * a2
            g = gcd(gcd(abs(x), abs(y)), abs(w))
            if g:
                x, y, w = x // g, y // g, w // g
            if x < 0 or (x == 0 and y < 0) or (x == 0 and y == 0 and w < 0):
                x, y, w = -x, -y, -w
            key = (x, y, w)
            if key in seen:
                return False
            seen[key] = u
    return True


def is_general_plus_position_bruteforce(points) -> bool:
    """Independent oracle: test every triple of point-spanned lines directly."""
    n = len(points)
    if n < 6:
        return is_general_position(points)
    if not is_general_position(points):
        return False
    coords = int_coords(points)
    lines = []
    for i in range(n):
        for j in range(i + 1, n):
            ax, ay = coords[i]
            bx, by = coords[j]
            lines.append((ay - by, bx - ax, ax * by - bx * ay, i, j))
    m = len(lines)
    for u in range(m):
        for v in range(u + 1, m):
            if set(lines[u][3:]) & set(lines[v][3:]):
                continue
            for w in range(v + 1, m):
                pts = set(lines[u][3:]) | set(lines[v][3:]) | set(lines[w][3:])
                if len(pts) != 6:
                    continue
                (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = (
                    lines[u][:3], lines[v][:3], lines[w][:3])
                det = (a1 * (b2 * c3 - c2 * b3)
                       - b1 * (a2 * c3 - c2 * a3)
                       + c1 * (a2 * b3 - b2 * a3))
                if det == 0:
                    return False
    return True


# ---------------------------------------------------------------------------
# convex polygons


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex polygon as a CCW vertex tuple; strictly convex when required."""

    vertices: tuple

    def __init__(self, vertices, strict: bool = True):
        vertices = tuple(vertices)
        if len(vertices) < 3:
            raise DegenerateInputError("polygon needs at least 3 vertices")
        n = len(vertices)
        for i in range(n):
            s = orient(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n])
            if s < 0 or (strict and s == 0):
                raise DegenerateInputError(
                    "vertex sequence is not convex CCW at index %d" % i)
        object.__setattr__(self, "vertices", vertices)

    def __len__(self):
        return len(self.vertices)

    def edge(self, i: int) -> Segment:
        v = self.vertices
        return Segment(v[i % len(v)], v[(i + 1) % len(v)])

    def area2(self) -> Fraction:
        return polygon_area2(self.vertices)

    def locate(self, p: Point) -> str:
        return point_in_convex_polygon(p, self)


def polygon_area2(vertices) -> Fraction:
    """Twice the signed area (positive for CCW vertex order)."""
    s = Fraction(0)
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        s += a.x * b.y - b.x * a.y
    return s


def point_in_convex_polygon(p: Point, poly: ConvexPolygon) -> str:
    """Exact location: 'inside', 'boundary' or 'outside'."""
    on_edge = False
    v = poly.vertices
    n = len(v)
    for i in range(n):
        s = orient(v[i], v[(i + 1) % n], p)
        if s < 0:
            return "outside"
        if s == 0:
            a, b = v[i], v[(i + 1) % n]
            if _on_segment_collinear(a, b, p):
                on_edge = True
            else:
                return "outside"
    return "boundary" if on_edge else "inside"


def clip_polygon_halfplane(vertices, line: tuple, keep_positive: bool = True):
    """Clip a convex CCW polygon by a half-plane (exact Sutherland-Hodgman).

    Keeps points with eval_line >= 0 (or <= 0). Returns the possibly empty
    vertex list with duplicate consecutive vertices removed.
    """
    sign = 1 if keep_positive else -1
    out = []
    n = len(vertices)
    vals = [sign * eval_line(line, p) for p in vertices]
    for i in range(n):
        cur, nxt = vertices[i], vertices[(i + 1) % n]
        vc, vn = vals[i], vals[(i + 1) % n]
        if vc >= 0:
            out.append(cur)
        if (vc > 0 and vn < 0) or (vc < 0 and vn > 0):
            t = vc / (vc - vn)
            out.append(Point(cur.x + t * (nxt.x - cur.x),
                             cur.y + t * (nxt.y - cur.y)))
    dedup = []
    for p in out:
        if not dedup or p != dedup[-1]:
            dedup.append(p)
    while len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup
