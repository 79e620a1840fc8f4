"""Triangulations of point sets and simple polygons, porting, verification.

Point-set triangulations are maximal non-crossing edge sets (3n - 3 - h
edges); polygon triangulations are diagonal sets (p - 3 diagonals).  The
greedy completion scans candidate edges in lexicographic order so every
output is deterministic and usable in golden tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotSimplePolygonError, PreconditionError
from .exactgeom import (
    Point,
    Segment,
    CrossKind,
    int_coords,
    iorient,
    orient,
    segments_cross,
)
from .pointsets import PointSet, is_unavoidable_edge_coords


@dataclass(frozen=True)
class EdgeSet:
    """Unordered index-pair edges over a point set of a fixed size."""

    n: int
    edges: frozenset

    def __init__(self, n, edges):
        norm = set()
        for (i, j) in edges:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise PreconditionError("bad edge (%r, %r)" % (i, j))
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    def __len__(self):
        return len(self.edges)

    def __contains__(self, e):
        i, j = e
        return (min(i, j), max(i, j)) in self.edges

    def sorted_edges(self):
        return sorted(self.edges)

    def mapped(self, f) -> "EdgeSet":
        """Image under an index map f (sequence or dict)."""
        return EdgeSet(self.n, [(f[i], f[j]) for (i, j) in self.edges])

    def union(self, other) -> "EdgeSet":
        items = other.edges if isinstance(other, EdgeSet) else other
        return EdgeSet(self.n, set(self.edges) | set(items))


@dataclass(frozen=True)
class Correspondence:
    """A bijection between equal-size point sets, stored as a permutation."""

    map: tuple

    def __init__(self, perm):
        perm = tuple(perm)
        if sorted(perm) != list(range(len(perm))):
            raise PreconditionError("not a permutation")
        object.__setattr__(self, "map", perm)

    def __getitem__(self, i):
        return self.map[i]

    def __len__(self):
        return len(self.map)

    def inverse(self) -> "Correspondence":
        inv = [0] * len(self.map)
        for i, v in enumerate(self.map):
            inv[v] = i
        return Correspondence(inv)


class SimplePolygon:
    """Closed polygon given by its vertex cycle; edges must not cross."""

    def __init__(self, vertices, validate: bool = True):
        self.vertices = list(vertices)
        if len(self.vertices) < 3:
            raise NotSimplePolygonError("polygon needs at least 3 vertices")
        if validate and not self._is_simple():
            raise NotSimplePolygonError("polygon edges cross")

    def __len__(self):
        return len(self.vertices)

    def _is_simple(self) -> bool:
        v = self.vertices
        p = len(v)
        if len({(q.x, q.y) for q in v}) != p:
            return False
        for i in range(p):
            si = Segment(v[i], v[(i + 1) % p])
            for j in range(i + 1, p):
                kind = segments_cross(si, Segment(v[j], v[(j + 1) % p]))
                adjacent = j == i + 1 or (i == 0 and j == p - 1)
                if kind == CrossKind.PROPER or kind == CrossKind.OVERLAP:
                    return False
                if kind == CrossKind.SHARED_ENDPOINT and not adjacent:
                    return False
        return True

    def is_ccw(self) -> bool:
        s = 0
        v = self.vertices
        for i in range(len(v)):
            a, b = v[i], v[(i + 1) % len(v)]
            s += a.x * b.y - b.x * a.y
        return s > 0


def point_in_simple_polygon(p: Point, poly: SimplePolygon) -> str:
    """'inside' / 'boundary' / 'outside' by exact crossing-number walk."""
    v = poly.vertices
    n = len(v)
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        if orient(a, b, p) == 0 and \
                min(a.x, b.x) <= p.x <= max(a.x, b.x) and \
                min(a.y, b.y) <= p.y <= max(a.y, b.y):
            return "boundary"
    crossings = 0
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        if (a.y > p.y) != (b.y > p.y):
            # x coordinate of the edge at height p.y, compared exactly
            t = (p.y - a.y) / (b.y - a.y)
            x = a.x + t * (b.x - a.x)
            if x > p.x:
                crossings += 1
    return "inside" if crossings % 2 == 1 else "outside"


# ---------------------------------------------------------------------------
# unavoidable edges


def is_unavoidable_edge(ps: PointSet, e) -> bool:
    """Edge e belongs to every triangulation of ps.

    Equivalent characterization: no other point-spanned segment properly
    crosses e (a crosser could be completed to a triangulation excluding e;
    an uncrossed edge is forced by maximality).
    """
    i, j = e
    n = len(ps)
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise PreconditionError("bad edge")
    return is_unavoidable_edge_coords(ps.icoords(), (i, j))


# ---------------------------------------------------------------------------
# point-set triangulation (greedy lexicographic completion)


def _icross_properly(c, e1, e2) -> bool:
    (i, j), (k, l) = e1, e2
    if i in (k, l) or j in (k, l):
        return False
    ax, ay = c[i]
    bx, by = c[j]
    d3 = iorient(ax, ay, bx, by, *c[k])
    d4 = iorient(ax, ay, bx, by, *c[l])
    if d3 * d4 >= 0:
        return False
    cx, cy = c[k]
    dx, dy = c[l]
    return iorient(cx, cy, dx, dy, ax, ay) * iorient(cx, cy, dx, dy, bx, by) < 0


def triangulate_point_set(ps: PointSet, required: EdgeSet | None = None) -> EdgeSet:
    """Complete `required` to a full triangulation, scanning edges in lex order."""
    n = len(ps)
    coords = ps.icoords()
    chosen = []
    if required is not None:
        req = required.sorted_edges()
        for a in range(len(req)):
            for b in range(a + 1, len(req)):
                if _icross_properly(coords, req[a], req[b]):
                    raise PreconditionError("required edges cross: %r %r"
                                            % (req[a], req[b]))
        chosen = list(req)
    have = set(chosen)
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in have:
                continue
            e = (i, j)
            if any(_icross_properly(coords, e, f) for f in chosen):
                continue
            # reject edges with a point on their interior (possible only
            # for degenerate inputs; harmless to keep the guard)
            ax, ay = coords[i]
            bx, by = coords[j]
            bad = False
            for k in range(n):
                if k in e:
                    continue
                kx, ky = coords[k]
                if iorient(ax, ay, bx, by, kx, ky) == 0 and \
                        min(ax, bx) <= kx <= max(ax, bx) and \
                        min(ay, by) <= ky <= max(ay, by):
                    bad = True
                    break
            if bad:
                continue
            chosen.append(e)
            have.add(e)
    return EdgeSet(n, chosen)


def verify_triangulation(ps: PointSet, t: EdgeSet) -> bool:
    """Pairwise non-crossing, no point inside an edge, count = 3n - 3 - h."""
    n = len(ps)
    if t.n != n:
        return False
    h = len(ps.hull)
    edges = t.sorted_edges()
    if len(edges) != 3 * n - 3 - h:
        return False
    coords = ps.icoords()
    for a in range(len(edges)):
        i, j = edges[a]
        ax, ay = coords[i]
        bx, by = coords[j]
        for k in range(n):
            if k in (i, j):
                continue
            kx, ky = coords[k]
            if iorient(ax, ay, bx, by, kx, ky) == 0 and \
                    min(ax, bx) <= kx <= max(ax, bx) and \
                    min(ay, by) <= ky <= max(ay, by):
                return False
        for b in range(a + 1, len(edges)):
            if _icross_properly(coords, edges[a], edges[b]):
                return False
    return True


def verify_compatible(p: PointSet, q: PointSet, f: Correspondence,
                      tp: EdgeSet, tq: EdgeSet) -> bool:
    """Both are triangulations and tq is exactly the image of tp under f."""
    if len(p) != len(q) or len(f) != len(p):
        return False
    if not verify_triangulation(p, tp):
        return False
    if not verify_triangulation(q, tq):
        return False
    return tp.mapped(f.map).edges == tq.edges


def check_cyclic_mapping(p: PointSet, q: PointSet, f0) -> bool:
    """Hull edges map to hull edges in both directions.

    f0 maps P hull indices to Q hull indices (dict or full-size sequence).
    Reflections satisfy this edge-preservation condition and are accepted.
    """
    ph, qh = p.hull, q.hull
    if len(ph) != len(qh):
        return False
    try:
        fwd = {i: f0[i] for i in ph}
    except (KeyError, IndexError):
        return False
    if sorted(fwd.values()) != sorted(qh):
        return False
    hp = len(ph)
    p_edges = {frozenset((ph[k], ph[(k + 1) % hp])) for k in range(hp)}
    q_edges = {frozenset((qh[k], qh[(k + 1) % hp])) for k in range(hp)}
    mapped = {frozenset((fwd[a], fwd[b])) for e in p_edges for a, b in [tuple(e)]}
    return mapped == q_edges


# ---------------------------------------------------------------------------
# simple polygon triangulation (ear clipping)


def triangulate_polygon(poly: SimplePolygon) -> EdgeSet:
    """Diagonals of an ear-clipping triangulation (lowest-index ear first)."""
    verts = poly.vertices
    p = len(verts)
    if not poly.is_ccw():
        raise PreconditionError("polygon must be CCW")
    idx = list(range(p))
    diagonals = []
    while len(idx) > 3:
        clipped = False
        for pos in range(len(idx)):
            a = idx[(pos - 1) % len(idx)]
            b = idx[pos]
            c = idx[(pos + 1) % len(idx)]
            if orient(verts[a], verts[b], verts[c]) <= 0:
                continue
            ok = True
            for other in idx:
                if other in (a, b, c):
                    continue
                o = verts[other]
                if orient(verts[a], verts[b], o) >= 0 and \
                        orient(verts[b], verts[c], o) >= 0 and \
                        orient(verts[c], verts[a], o) >= 0:
                    ok = False
                    break
            if ok:
                diagonals.append((a, c))
                idx.pop(pos)
                clipped = True
                break
        if not clipped:
            raise NotSimplePolygonError("ear clipping failed; polygon not simple?")
    return EdgeSet(p, diagonals)


def polygon_triangles(poly: SimplePolygon, diagonals: EdgeSet):
    """Triangle list of the triangulated polygon (ears recovered by re-clip)."""
    verts = poly.vertices
    p = len(verts)
    allowed = set(diagonals.edges)
    idx = list(range(p))
    tris = []
    while len(idx) > 3:
        for pos in range(len(idx)):
            a = idx[(pos - 1) % len(idx)]
            b = idx[pos]
            c = idx[(pos + 1) % len(idx)]
            key = (min(a, c), max(a, c))
            boundary = abs(a - c) == 1 or abs(a - c) == p - 1
            if key in allowed or boundary:
                tris.append((a, b, c))
                idx.pop(pos)
                break
        else:
            raise PreconditionError("diagonal set does not triangulate polygon")
    tris.append(tuple(idx))
    return tris


def diagonal_inside_polygon(poly: SimplePolygon, i: int, j: int) -> bool:
    """Open segment (v_i, v_j) lies strictly inside the polygon."""
    p = len(poly)
    if i == j:
        raise PreconditionError("need two distinct vertices")
    if (abs(i - j) % p) in (1, p - 1):
        raise PreconditionError("adjacent vertices form an edge, not a diagonal")
    verts = poly.vertices
    a, b = verts[i], verts[j]
    seg = Segment(a, b)
    for k in range(p):
        c, d = verts[k], verts[(k + 1) % p]
        kind = segments_cross(seg, Segment(c, d))
        if kind in (CrossKind.PROPER, CrossKind.OVERLAP):
            return False
    for k in range(p):
        if k in (i, j):
            continue
        o = verts[k]
        if orient(a, b, o) == 0 and \
                min(a.x, b.x) <= o.x <= max(a.x, b.x) and \
                min(a.y, b.y) <= o.y <= max(a.y, b.y):
            return False
    mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    return point_in_simple_polygon(mid, poly) == "inside"


def port_polygon_triangulation(poly_p: SimplePolygon, poly_q: SimplePolygon,
                               tq: EdgeSet) -> EdgeSet:
    """Transfer a triangulation of poly_q to poly_p by vertex index.

    Every non-edge diagonal of tq must be a diagonal of poly_p; the ported
    set is then automatically non-crossing (index interleaving criterion).
    """
    p = len(poly_p)
    if len(poly_q) != p:
        raise PreconditionError("polygons must have the same vertex count")
    for (i, j) in tq.sorted_edges():
        boundary = (abs(i - j) % p) in (1, p - 1)
        if boundary:
            continue
        if not diagonal_inside_polygon(poly_p, i, j):
            raise PreconditionError(
                "diagonal (%d, %d) is blocked in the target polygon" % (i, j))
    return EdgeSet(p, tq.sorted_edges())
