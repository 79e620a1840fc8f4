"""Independent oracles used by the test suite.

The triangulation enumerator is deliberately separate from the library code:
it walks the flip graph starting from an arbitrary triangulation, extracting
triangle faces from the planar rotation system.
"""

from fractions import Fraction
from functools import cmp_to_key

from dctri.exactgeom import Point, orient, segments_cross_properly
from dctri.tri import EdgeSet, triangulate_point_set


def _dir_key(origin, pts):
    def cmp(i, j):
        a, b = pts[i] - origin, pts[j] - origin
        ha = 0 if (a.y > 0 or (a.y == 0 and a.x > 0)) else 1
        hb = 0 if (b.y > 0 or (b.y == 0 and b.x > 0)) else 1
        if ha != hb:
            return -1 if ha < hb else 1
        cr = a.x * b.y - a.y * b.x
        return -1 if cr > 0 else (1 if cr < 0 else 0)
    return cmp_to_key(cmp)


def triangle_faces(pts, edges):
    """Triangle faces of a crossing-free edge set via rotation-system walking."""
    n = len(pts)
    nbrs = {u: [] for u in range(n)}
    for (i, j) in edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    for u in range(n):
        nbrs[u].sort(key=_dir_key(pts[u], pts))
    pos = {u: {v: k for k, v in enumerate(nbrs[u])} for u in range(n)}
    seen = set()
    faces = []
    for (i, j) in edges:
        for (u, v) in ((i, j), (j, i)):
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                k = pos[b][a]
                w = nbrs[b][(k - 1) % len(nbrs[b])]
                a, b = b, w
            if len(face) == 3:
                faces.append(tuple(face))
    return faces


def enumerate_triangulations(ps, limit=200000):
    """All triangulations of the point set, by BFS over edge flips."""
    pts = ps.points
    start = triangulate_point_set(ps)
    seen = {start.edges}
    queue = [start.edges]
    while queue:
        cur = queue.pop()
        tris = triangle_faces(pts, sorted(cur))
        by_edge = {}
        for t in tris:
            for a in range(3):
                key = (min(t[a], t[(a + 1) % 3]), max(t[a], t[(a + 1) % 3]))
                by_edge.setdefault(key, []).append(t)
        for e, ts in by_edge.items():
            if len(ts) != 2:
                continue
            opp = []
            for t in ts:
                (x,) = [v for v in t if v not in e]
                opp.append(x)
            x, y = opp
            if not segments_cross_properly(pts[e[0]], pts[e[1]], pts[x], pts[y]):
                continue
            new = frozenset((cur - {e}) | {(min(x, y), max(x, y))})
            if new not in seen:
                seen.add(new)
                queue.append(new)
                if len(seen) > limit:
                    raise RuntimeError("too many triangulations")
    return [EdgeSet(len(ps), s) for s in seen]
