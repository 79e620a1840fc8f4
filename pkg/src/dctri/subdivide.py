"""Counted convex subdivisions of a convex polygon.

Splits a convex polygon into convex cells, cell i sitting on polygon edge i
and containing a prescribed number of the interior points.  The three-way
triangle split is computed by an exact event-driven sweep in which the two
split points climb from the base edge while the per-part point counts stay
invariant; an arrangement-based brute-force oracle provides an independent
route to the same answer and serves as the fallback whenever the sweep
detects a degeneracy.

Pivots may be ordinary vertices or homogeneous points (intersections of two
edge lines, possibly at or beyond infinity).  Non-finite pivots are handled
by a rational projective change of frame that maps the wedge onto an
ordinary triangle, so there is a single code path for all three positions
of the intersection point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .errors import (
    InfeasibleSplitError,
    PreconditionError,
    SweepDegeneracyError,
)
from .exactgeom import (
    ConvexPolygon,
    HomogPoint,
    Point,
    clip_polygon_halfplane,
    eval_line,
    is_general_plus_position,
    line_through,
    line_through_h,
    lines_cross_h,
    orient,
    orient_h,
    orient_value,
    point_in_convex_polygon,
    polygon_area2,
)


def _as_homog(p) -> HomogPoint:
    return p if isinstance(p, HomogPoint) else HomogPoint.from_point(p)


# ---------------------------------------------------------------------------
# request / result containers


@dataclass
class CountedSubdivisionRequest:
    polygon: ConvexPolygon
    interior: list
    counts: list

    def __post_init__(self):
        n = len(self.polygon)
        if len(self.counts) != n:
            raise PreconditionError("need one count per polygon edge")
        if any(c < 0 for c in self.counts):
            raise PreconditionError("counts must be nonnegative")
        if sum(self.counts) != len(self.interior):
            raise PreconditionError("counts must sum to the interior size")
        for p in self.interior:
            if point_in_convex_polygon(p, self.polygon) != "inside":
                raise PreconditionError("interior point not strictly inside")

    def validate_general_plus(self):
        pts = list(self.polygon.vertices) + list(self.interior)
        if not is_general_plus_position(pts):
            raise PreconditionError("configuration is not in general+ position")


@dataclass
class RegionAssignment:
    """Regions per polygon edge; entry i is None when counts[i] == 0."""

    polygon: ConvexPolygon
    interior: list
    counts: list
    regions: list          # list of vertex lists (CCW) or None
    point_indices: list    # list of index lists into `interior`


@dataclass(frozen=True)
class AngularOrder:
    pivot: object
    reference: Point
    order: tuple


def angular_order(pivot, reference: Point, points) -> AngularOrder:
    """Indices sorted by angle around the pivot, starting at the reference ray.

    All points must lie within an open half-plane wedge as seen from the
    pivot (always the case inside a convex polygon), so the pairwise
    orientation comparator is a total order; ties are degeneracies.
    """
    ph = _as_homog(pivot)
    idx = list(range(len(points)))

    def cmp(i, j):
        s = orient_h(ph, points[i], points[j])
        if s == 0:
            raise SweepDegeneracyError("angular tie around pivot")
        return -s

    idx.sort(key=cmp_to_key(cmp))
    return AngularOrder(pivot, reference, tuple(idx))


# ---------------------------------------------------------------------------
# classification of points against a split point


def _between_strict(a: Point, b: Point, p: Point) -> bool:
    # assumes collinearity; strict interior of segment (a, b)
    if a.x != b.x:
        lo, hi = min(a.x, b.x), max(a.x, b.x)
        return lo < p.x < hi
    lo, hi = min(a.y, b.y), max(a.y, b.y)
    return lo < p.y < hi


def _classify(apex: HomogPoint, bl: Point, br: Point, pts, q: Point,
              tau_apex=None):
    """Count points in the three parts cut out by q, or None if invalid.

    Parts: top = (apex, bl, q), middle = (q, bl, br), bottom = (apex, q, br).
    Returns None when q is outside the wedge triangle or some point lies on
    one of the three separating segments.
    """
    tau_q = orient_value(bl, br, q)
    if tau_q <= 0:
        return None
    if apex.w != 0 and tau_apex is not None and apex.w > 0 and tau_q >= tau_apex:
        return None
    # wedge sides: q strictly on the interior side of (apex,bl) and (apex,br)
    side_l = line_through_h(apex, bl)
    side_r = line_through_h(apex, br)
    sl_ref = eval_line(side_l, br)
    sr_ref = eval_line(side_r, bl)
    if sl_ref == 0 or sr_ref == 0:
        raise PreconditionError("degenerate wedge")
    vl, vr = eval_line(side_l, q), eval_line(side_r, q)
    if vl == 0 or vr == 0 or (vl > 0) != (sl_ref > 0) or (vr > 0) != (sr_ref > 0):
        return None

    cev = line_through_h(apex, q)
    s_bl = eval_line(cev, bl)
    if s_bl == 0:
        return None
    ct = ci = cb = 0
    for p in pts:
        tau_p = orient_value(bl, br, p)
        # incidence with the three separating segments
        if orient(bl, q, p) == 0 and _between_strict(bl, q, p):
            return None
        if orient(q, br, p) == 0 and _between_strict(q, br, p):
            return None
        v = eval_line(cev, p)
        if v == 0:
            on_apex_seg = tau_p > tau_q and (
                apex.w <= 0 or tau_apex is None or tau_p < tau_apex)
            if on_apex_seg:
                return None
        # middle triangle (bl, br, q) is all-affine and CCW
        if tau_p > 0 and orient(br, q, p) > 0 and orient(q, bl, p) > 0:
            ci += 1
            continue
        if v == 0:
            return None
        if (v > 0) == (s_bl > 0):
            ct += 1
        else:
            cb += 1
    return (ct, ci, cb)


# ---------------------------------------------------------------------------
# projective normalization of non-finite apexes


class _Frame:
    """Identity or projective frame mapping the wedge onto a finite triangle."""

    def __init__(self, rows=None):
        self.rows = rows
        self._inv = None

    def fwd(self, p: Point) -> Point:
        if self.rows is None:
            return p
        r1, r2, r3 = self.rows
        v = (p.x, p.y, Fraction(1))
        den = sum(a * b for a, b in zip(r3, v))
        if den <= 0:
            raise SweepDegeneracyError("point crosses the vanishing line")
        return Point(sum(a * b for a, b in zip(r1, v)) / den,
                     sum(a * b for a, b in zip(r2, v)) / den)

    def back(self, p: Point) -> Point:
        if self.rows is None:
            return p
        if self._inv is None:
            self._inv = _invert3(self.rows)
        i1, i2, i3 = self._inv
        v = (p.x, p.y, Fraction(1))
        w = sum(a * b for a, b in zip(i3, v))
        if w == 0:
            raise SweepDegeneracyError("preimage at infinity")
        return Point(sum(a * b for a, b in zip(i1, v)) / w,
                     sum(a * b for a, b in zip(i2, v)) / w)


def _invert3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0:
        raise SweepDegeneracyError("singular frame")
    adj = [
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    ]
    return [tuple(x / det for x in row) for row in adj]


def _finite_frame(apex: HomogPoint, bl: Point, br: Point, pts):
    """Map (apex, bl, br, pts) into a frame where the apex is finite.

    Returns (frame, apex', bl', br', pts').  For an already-finite positive
    apex this is the identity.
    """
    if apex.w > 0:
        return _Frame(), apex.to_point(), bl, br, list(pts)
    A, B, C = line_through(bl, br)
    if apex.w == 0:
        rate = A * apex.x + B * apex.y
        if rate <= 0:
            raise SweepDegeneracyError("apex direction does not rise over base")
        k = Fraction(-1)
    else:
        ah = apex.to_point()
        t_hat = A * ah.x + B * ah.y + C
        if t_hat >= 0:
            raise SweepDegeneracyError("beyond-infinity apex on the wrong side")
        k = t_hat / 2
    r3 = (A, B, C - k)
    e1, e2, ez = (Fraction(1), Fraction(0), Fraction(0)), \
                 (Fraction(0), Fraction(1), Fraction(0)), \
                 (Fraction(0), Fraction(0), Fraction(1))
    rows = None
    for r1, r2 in ((e1, e2), (e2, ez), (e1, ez)):
        cand = (r1, r2, r3)
        (a, b, c), (d, e, f), (g, h, i) = cand
        det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        if det > 0:
            rows = cand
            break
        if det < 0:
            rows = (r2, r1, r3)
            break
    frame = _Frame(rows)
    av = (apex.x, apex.y, apex.w)
    den = sum(a * b for a, b in zip(rows[2], av))
    if den <= 0:
        raise SweepDegeneracyError("apex not normalizable")
    apex_img = Point(sum(a * b for a, b in zip(rows[0], av)) / den,
                     sum(a * b for a, b in zip(rows[1], av)) / den)
    return frame, apex_img, frame.fwd(bl), frame.fwd(br), [frame.fwd(p) for p in pts]


# ---------------------------------------------------------------------------
# deterministic nudge search around a terminal sweep position


def _sorted_directions(vecs):
    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def cmp(u, v):
        hu, hv = half(u), half(v)
        if hu != hv:
            return -1 if hu < hv else 1
        cr = u[0] * v[1] - u[1] * v[0]
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    uniq = []
    for v in sorted(vecs, key=cmp_to_key(cmp)):
        if not uniq or cmp(uniq[-1], v) != 0:
            uniq.append(v)
    return uniq


def _nudge(apex: HomogPoint, bl: Point, br: Point, pts, target, q0: Point,
           tau_apex, accept=None) -> Point:
    """Find an exact point near q0 achieving the target count triple.

    Candidate directions are midpoints of the angular cones cut out at q0 by
    every configuration line through it, so any cell incident to q0 is hit.
    """
    vecs = []
    anchors = [bl, br] + list(pts)
    for p in anchors:
        if p == q0:
            continue
        d = (p.x - q0.x, p.y - q0.y)
        vecs.append(d)
        vecs.append((-d[0], -d[1]))
    ax_line = line_through_h(apex, q0)
    vecs.append((ax_line[1], -ax_line[0]))
    vecs.append((-ax_line[1], ax_line[0]))
    dirs_sorted = _sorted_directions(vecs)
    m = len(dirs_sorted)
    cands = []
    for i in range(m):
        u, v = dirs_sorted[i], dirs_sorted[(i + 1) % m]
        cands.append((u[0] + v[0], u[1] + v[1]))
    cands.extend(dirs_sorted)
    span = max(abs(bl.x - br.x), abs(bl.y - br.y), Fraction(1))
    for k in range(4, 120, 6):
        delta = span / (2 ** k)
        for (dx, dy) in cands:
            mag = max(abs(dx), abs(dy))
            if mag == 0:
                continue
            q = Point(q0.x + delta * dx / mag, q0.y + delta * dy / mag)
            got = _classify(apex, bl, br, pts, q, tau_apex)
            if got == target and (accept is None or accept(q)):
                return q
    raise InfeasibleSplitError("no admissible point near the terminal position")


# ---------------------------------------------------------------------------
# the R/S movement sweep (finite frame)


class _Mover:
    __slots__ = ("anchor", "mode", "p0", "p1", "target")

    def __init__(self, anchor):
        self.anchor = anchor      # bl for the left point, br for the right
        self.mode = "toward"
        self.p0 = None            # two points defining the current line
        self.p1 = None
        self.target = None        # interior point ahead on the cevian

    def pos(self, bl, br, h) -> Point:
        t0 = orient_value(bl, br, self.p0)
        t1 = orient_value(bl, br, self.p1)
        if t0 == t1:
            raise SweepDegeneracyError("mover line parallel to base")
        t = (h - t0) / (t1 - t0)
        return Point(self.p0.x + t * (self.p1.x - self.p0.x),
                     self.p0.y + t * (self.p1.y - self.p0.y))


def _line_pts_cross(a0, a1, b0, b1):
    x = lines_cross_h(line_through(a0, a1), line_through(b0, b1))
    if x.w == 0:
        return None
    return x.to_point()


def _sweep(apex: Point, bl: Point, br: Point, pts, ct, ci, cb):
    """Run the movement procedure; returns the terminal position q0."""
    tau = lambda p: orient_value(bl, br, p)
    tau_apex = tau(apex)
    if tau_apex <= 0:
        raise SweepDegeneracyError("apex not above base")

    def cmp(a, b):
        s = orient(apex, a, b)
        if s == 0:
            raise SweepDegeneracyError("two points collinear with the apex")
        return -s

    order = sorted(pts, key=cmp_to_key(cmp))
    m = len(order)
    a_r, a_s = order[ct], order[ct + ci - 1]

    R, S = _Mover(bl), _Mover(br)
    R.p0, R.p1, R.target = apex, a_r, a_r
    S.p0, S.p1, S.target = apex, a_s, a_s
    glued = a_r == a_s
    h = Fraction(0)

    for _ in range(8 * m + 64):
        events = []
        if glued:
            # single point climbing the cevian through the remaining target
            cev0, cev1, tgt = R.p0, R.p1, R.target
            events.append((tau(tgt), "end", None, None))
            for side, anchor in (("L", bl), ("R", br)):
                for b in pts:
                    if b is tgt:
                        continue
                    x = _line_pts_cross(cev0, cev1, anchor, b)
                    if x is None:
                        continue
                    tx = tau(x)
                    if tx > h and _between_strict(anchor, x, b):
                        events.append((tx, "end", side, x))
            if not events:
                raise SweepDegeneracyError("glued phase ran out of events")
            events.sort(key=lambda e: e[0])
            if len(events) > 1 and events[0][0] == events[1][0]:
                raise SweepDegeneracyError("coinciding glued events")
            t_ev, _, side, x = events[0]
            return x if side else R.pos(bl, br, t_ev)

        for mover in (R, S):
            tag = "R" if mover is R else "S"
            if mover.mode == "toward":
                events.append((tau(mover.target), tag, "hit_target", None, None))
                for b in pts:
                    if b is mover.target:
                        continue
                    x = _line_pts_cross(mover.p0, mover.p1, mover.anchor, b)
                    if x is None:
                        continue
                    tx = tau(x)
                    if tx > h and _between_strict(mover.anchor, x, b):
                        events.append((tx, tag, "lower_hit", b, x))
            else:
                for a in pts:
                    x = _line_pts_cross(mover.p0, mover.p1, apex, a)
                    if x is None:
                        continue
                    tx = tau(x)
                    if tx > h and tx < tau(a) < tau_apex:
                        events.append((tx, tag, "upper_hit", a, x))
        xc = _line_pts_cross(R.p0, R.p1, S.p0, S.p1)
        if xc is not None:
            tc = tau(xc)
            if h < tc < tau_apex:
                events.append((tc, "C", "collide", None, xc))
        if not events:
            raise SweepDegeneracyError("sweep ran out of events")
        events.sort(key=lambda e: e[0])
        t_ev = events[0][0]
        batch = [e for e in events if e[0] == t_ev]
        tags = [e[1] for e in batch]
        if len(batch) > 2 or len(set(tags)) != len(tags) or \
                (len(batch) == 2 and "C" in tags):
            raise SweepDegeneracyError("coinciding sweep events")
        for (_, tag, kind, payload, x) in batch:
            if kind == "collide":
                if R.mode == "away" and S.mode == "away":
                    return x
                if R.mode == "toward" and S.mode == "toward":
                    raise SweepDegeneracyError("toward/toward collision")
                keeper = R if R.mode == "toward" else S
                R.p0, R.p1, R.target = keeper.p0, keeper.p1, keeper.target
                glued = True
            else:
                mover = R if tag == "R" else S
                if kind == "hit_target":
                    mover.mode = "away"
                    mover.p0, mover.p1 = mover.anchor, mover.target
                    mover.target = None
                elif kind == "lower_hit":
                    mover.mode = "away"
                    mover.p0, mover.p1 = mover.anchor, payload
                    mover.target = None
                elif kind == "upper_hit":
                    mover.mode = "toward"
                    mover.p0, mover.p1 = apex, payload
                    mover.target = payload
        h = t_ev
    raise SweepDegeneracyError("sweep did not terminate")


# ---------------------------------------------------------------------------
# public splits


def _validate_split_input(apex: HomogPoint, bl, br, interior, ct, ci, cb):
    if ci < 1:
        raise PreconditionError("middle count must be at least 1")
    if ct < 0 or cb < 0:
        raise PreconditionError("counts must be nonnegative")
    if ct + ci + cb != len(interior):
        raise PreconditionError("counts must sum to the number of points")
    tau_apex = None
    if apex.w > 0:
        tau_apex = orient_value(bl, br, apex.to_point())
    side_l = line_through_h(apex, bl)
    side_r = line_through_h(apex, br)
    ref_l = eval_line(side_l, br)
    ref_r = eval_line(side_r, bl)
    for p in interior:
        if orient_value(bl, br, p) <= 0:
            raise PreconditionError("point not strictly above the base edge")
        if (eval_line(side_l, p) > 0) != (ref_l > 0) or \
                (eval_line(side_r, p) > 0) != (ref_r > 0):
            raise PreconditionError("point outside the wedge triangle")
        if tau_apex is not None and orient_value(bl, br, p) >= tau_apex:
            raise PreconditionError("point not strictly inside the triangle")
    return tau_apex


def split_triangle_three_oracle(p1, pi: Point, pj: Point, interior,
                                ct: int, ci: int, cb: int,
                                ensure_general_plus: bool = False) -> Point:
    """Brute-force split: enumerate arrangement cells, test each representative.

    Builds the arrangement of all lines joining a triangle corner to an
    interior point (plus the triangle edges), takes one representative next
    to every cell edge and returns the first with the requested counts.
    """
    apex = _as_homog(p1)
    tau_apex = _validate_split_input(apex, pi, pj, interior, ct, ci, cb)
    frame, fapex, fbl, fbr, fpts = _finite_frame(apex, pi, pj, interior)
    accept = _make_acceptor(apex, pi, pj, interior, (ct, ci, cb), tau_apex,
                            frame, ensure_general_plus)
    lines = []
    for corner in (fapex, fbl, fbr):
        for p in fpts:
            lines.append((line_through(corner, p), corner, p))
    for a, b in ((fapex, fbl), (fbl, fbr), (fbr, fapex)):
        lines.append((line_through(a, b), a, b))
    for (ln, a, b) in lines:
        dirv = (b.x - a.x, b.y - a.y)
        crossings = []
        for (ln2, _, _) in lines:
            if ln2 is ln:
                continue
            try:
                x = lines_cross_h(ln, ln2)
            except Exception:
                continue
            if x.w == 0:
                continue
            xp = x.to_point()
            crossings.append(((xp.x - a.x) * dirv[0] + (xp.y - a.y) * dirv[1], xp))
        crossings.sort(key=lambda c: c[0])
        uniq = []
        for t, xp in crossings:
            if not uniq or uniq[-1][0] != t:
                uniq.append((t, xp))
        normal = (-dirv[1], dirv[0])
        for k in range(len(uniq) - 1):
            mid = Point((uniq[k][1].x + uniq[k + 1][1].x) / 2,
                        (uniq[k][1].y + uniq[k + 1][1].y) / 2)
            for sgn in (1, -1):
                nx, ny = sgn * normal[0], sgn * normal[1]
                best = None
                for (ln2, _, _) in lines:
                    ev = eval_line(ln2, mid)
                    if ev == 0:
                        continue
                    rate = ln2[0] * nx + ln2[1] * ny
                    if rate == 0:
                        continue
                    s = -ev / rate
                    if s > 0 and (best is None or s < best):
                        best = s
                step = (best / 2) if best is not None else Fraction(1)
                cand = Point(mid.x + step * nx, mid.y + step * ny)
                q = accept(cand)
                if q is not None:
                    return q
    raise InfeasibleSplitError("no arrangement cell matches the counts")


def _make_acceptor(apex, bl, br, interior, target, tau_apex, frame,
                   ensure_general_plus):
    """Candidate filter working on finite-frame points, verifying in the
    original frame."""

    def accept(cand_img):
        try:
            q = frame.back(cand_img)
        except SweepDegeneracyError:
            return None
        got = _classify(apex, bl, br, interior, q, tau_apex)
        if got != target:
            return None
        if ensure_general_plus:
            pts = [bl, br] + list(interior) + [q]
            if apex.w > 0:
                pts.append(apex.to_point())
            if not is_general_plus_position(pts):
                return None
        return q

    return accept


def split_triangle_three(p1, pi: Point, pj: Point, interior,
                         ct: int, ci: int, cb: int,
                         ensure_general_plus: bool = False) -> Point:
    """Split point Q for the triangle (p1, pi, pj).

    Postcondition: exactly ct points lie strictly inside (p1, pi, Q),
    cb inside (p1, Q, pj), ci inside (Q, pi, pj), and no point lies on the
    three separating segments.  Computed by the exact movement sweep; any
    detected degeneracy falls back to the arrangement oracle.
    """
    apex = _as_homog(p1)
    tau_apex = _validate_split_input(apex, pi, pj, interior, ct, ci, cb)
    try:
        frame, fapex, fbl, fbr, fpts = _finite_frame(apex, pi, pj, interior)
        q0_img = _sweep(fapex, fbl, fbr, fpts, ct, ci, cb)
        accept = _make_acceptor(apex, pi, pj, interior, (ct, ci, cb),
                                tau_apex, frame, ensure_general_plus)
        tau_apex_img = orient_value(fbl, fbr, fapex)

        def img_accept(q_img):
            return accept(q_img) is not None

        q_img = _nudge(HomogPoint.from_point(fapex), fbl, fbr, fpts,
                       (ct, ci, cb), q0_img, tau_apex_img, accept=img_accept)
        q = frame.back(q_img)
        return q
    except (SweepDegeneracyError, InfeasibleSplitError):
        return split_triangle_three_oracle(p1, pi, pj, interior, ct, ci, cb,
                                           ensure_general_plus)


# ---------------------------------------------------------------------------
# pivot split over a convex polygon


def pivot_split(polygon: ConvexPolygon, interior, counts,
                pivot=None, ensure_general_plus: bool = False):
    """Choose an edge (P_i, P_i+1) and a point Q splitting the counted polygon.

    The pivot is vertex 1 of the polygon unless an explicit (possibly
    homogeneous) pivot with a vertex chain is wanted; in that case pass
    `pivot` and let `polygon` hold the remaining chain counterclockwise.
    Returns (i, q) with 2 <= i <= n-1 in the 1-based edge numbering used
    throughout (edge i joins vertices i and i+1).
    """
    if pivot is None:
        verts = polygon.vertices
        piv = _as_homog(verts[0])
        chain = list(verts[1:])
    else:
        piv = _as_homog(pivot)
        chain = list(polygon.vertices) if isinstance(polygon, ConvexPolygon) \
            else list(polygon)
    return _pivot_split_h(piv, chain, list(counts), list(interior),
                          ensure_general_plus)


def _pivot_split_h(piv: HomogPoint, chain, counts, pts, ensure_gp=False):
    n = len(chain) + 1
    if len(counts) != n:
        raise PreconditionError("need one count per edge")
    if any(c < 1 for c in counts):
        raise PreconditionError("pivot split needs all counts positive")
    if sum(counts) != len(pts):
        raise PreconditionError("counts must sum to the number of points")
    if n < 3:
        raise PreconditionError("polygon too small")

    def before(a, b) -> bool:
        s = orient_h(piv, a, b)
        if s == 0:
            raise SweepDegeneracyError("angular tie at the pivot")
        return s > 0

    order = sorted(pts, key=cmp_to_key(
        lambda a, b: -1 if before(a, b) else 1))
    # chunk starts: chunk k (1-based) covers sorted positions
    # [sum(counts[:k-1]), sum(counts[:k]) )
    starts = [0]
    for c in counts:
        starts.append(starts[-1] + c)
    chosen = None
    for i in range(2, n):
        lam_i = order[starts[i - 1]]
        lam_next = order[starts[i]] if i < n else None
        p_i = chain[i - 2]
        p_next = chain[i - 1]
        cond1 = before(p_i, lam_i)            # lambda_i past P_i
        if lam_next is None:
            cond2 = True
        else:
            cond2 = not before(p_next, lam_next)  # lambda_{i+1} not past P_{i+1}
        if cond1 and cond2:
            chosen = i
            break
    if chosen is None:
        raise SweepDegeneracyError("no splittable edge index found")
    i = chosen
    p_i, p_next = chain[i - 2], chain[i - 1]
    m1 = sum(1 for p in pts if before(p, p_i))
    m2 = sum(1 for p in pts if before(p_next, p))
    ct = starts[i - 1] - m1
    cb = (starts[n] - starts[i]) - m2
    ci = counts[i - 1]
    if ct < 0 or cb < 0:
        raise SweepDegeneracyError("chunk counts inconsistent")
    wedge_pts = [p for p in pts if before(p_i, p) and before(p, p_next)]
    if len(wedge_pts) != ct + ci + cb:
        raise SweepDegeneracyError("wedge point count mismatch")
    q = split_triangle_three(piv, p_i, p_next, wedge_pts, ct, ci, cb,
                             ensure_general_plus=ensure_gp)
    return i, q


# ---------------------------------------------------------------------------
# the full counted convex subdivision


def _find_edge(verts, a: Point, b: Point):
    n = len(verts)
    for k in range(n):
        if verts[k] == a and verts[(k + 1) % n] == b:
            return k
    return None


def _clip_keep_witness(verts, line, witness: Point):
    s = eval_line(line, witness)
    if s == 0:
        raise SweepDegeneracyError("witness on the clip line")
    return clip_polygon_halfplane(verts, line, keep_positive=s > 0)


def _strictly_inside(verts, p: Point) -> bool:
    n = len(verts)
    for k in range(n):
        if orient(verts[k], verts[(k + 1) % n], p) <= 0:
            return False
    return True


def _helper(verts, labels, pts_idx, pts, zero_tag=0):
    """Recursive subdivision of a convex polygon with consecutive free edges.

    `labels[k]` is either None (free edge) or (edge_id, count > 0) for edge
    (verts[k], verts[k+1]).  `pts_idx` are indices into the caller's point
    list, `pts` the matching points.  Returns {edge_id: (region_verts,
    point_index_list)}.
    """
    actives = [(k, lab[0], lab[1]) for k, lab in enumerate(labels) if lab]
    if not actives:
        if pts:
            raise SweepDegeneracyError("points left over in a free region")
        return {}
    if len(actives) == 1:
        k, eid, c = actives[0]
        if c != len(pts):
            raise SweepDegeneracyError("single-region count mismatch")
        return {eid: (list(verts), list(pts_idx))}

    p = len(verts)
    # rotate so that actives are consecutive and identify the cyclic run
    active_ks = {k for k, _, _ in actives}
    if len(actives) == p:
        start = 0
    else:
        start = None
        for k, _, _ in actives:
            if (k - 1) % p not in active_ks:
                start = k
                break
        if start is None:
            raise SweepDegeneracyError("free edges are not consecutive")
    run = [(start + t) % p for t in range(len(actives))]
    if any(r not in active_ks for r in run):
        raise SweepDegeneracyError("active edges are not consecutive")
    lab = {k: labels[k] for k in run}

    if len(actives) == 2:
        return _split_two(verts, run, lab, pts_idx, pts)

    # paper frame: first active edge is (P_{i+1}, P_{i+2}), last is (P_n, P_1)
    k1, kt = run[0], run[-1]
    w1, w2 = verts[k1], verts[(k1 + 1) % p]
    u1, u2 = verts[kt], verts[(kt + 1) % p]
    piv = _make_pivot(u1, u2, w1, w2)
    chain = [verts[(k + 1) % p] for k in run[:-1]]   # P_{i+2} .. P_n
    counts = [lab[k][1] for k in run]
    i_split, q = _pivot_split_h(piv, chain, counts, pts)
    bl, br = chain[i_split - 2], chain[i_split - 1]
    base_k = run[i_split - 1]
    base_eid = lab[base_k][0]

    cev = line_through_h(piv, q)
    top_line = line_through(bl, q)
    bot_line = line_through(q, br)

    alpha_w = _first_off_line([chain[j] for j in range(i_split - 2)][::-1] + [w1],
                              top_line)
    gamma_w = _first_off_line([chain[j] for j in range(i_split - 1, len(chain))]
                              + [u2], bot_line)
    g_alpha = _clip_keep_witness(verts, cev, bl)
    g_alpha = _clip_keep_witness(g_alpha, top_line, alpha_w)
    g_gamma = _clip_keep_witness(verts, cev, br)
    g_gamma = _clip_keep_witness(g_gamma, bot_line, gamma_w)
    g_beta = _clip_keep_witness(verts, top_line, br)
    g_beta = _clip_keep_witness(g_beta, bot_line, bl)

    in_a = [k for k in range(len(pts)) if _strictly_inside(g_alpha, pts[k])]
    in_b = [k for k in range(len(pts)) if _strictly_inside(g_beta, pts[k])]
    in_g = [k for k in range(len(pts)) if _strictly_inside(g_gamma, pts[k])]
    if sorted(in_a + in_b + in_g) != list(range(len(pts))):
        raise SweepDegeneracyError("regions do not partition the points")
    exp_a = sum(lab[k][1] for k in run[:i_split - 1])
    exp_g = sum(lab[k][1] for k in run[i_split:])
    if len(in_a) != exp_a or len(in_b) != lab[base_k][1] or len(in_g) != exp_g:
        raise SweepDegeneracyError("split counts mismatch")

    out = {base_eid: (g_beta, [pts_idx[k] for k in in_b])}
    out.update(_recurse_side(g_alpha, [lab[k] for k in run[:i_split - 1]],
                             verts, run[:i_split - 1], in_a, pts_idx, pts))
    out.update(_recurse_side(g_gamma, [lab[k] for k in run[i_split:]],
                             verts, run[i_split:], in_g, pts_idx, pts))
    return out


def _first_off_line(cands, line):
    for c in cands:
        if eval_line(line, c) != 0:
            return c
    raise SweepDegeneracyError("no witness off the cut line")


def _recurse_side(region_verts, active_labels, verts, run_ks, in_idx,
                  pts_idx, pts):
    p = len(verts)
    sub_labels = []
    rn = len(region_verts)
    for k in range(rn):
        sub_labels.append(None)
    for (k_orig, labval) in zip(run_ks, active_labels):
        a, b = verts[k_orig], verts[(k_orig + 1) % p]
        pos = _find_edge(region_verts, a, b)
        if pos is None:
            raise SweepDegeneracyError("active edge lost while clipping")
        sub_labels[pos] = labval
    sub_pts = [pts[k] for k in in_idx]
    sub_idx = [pts_idx[k] for k in in_idx]
    return _helper(region_verts, sub_labels, sub_idx, sub_pts)


def _make_pivot(u1: Point, u2: Point, w1: Point, w2: Point) -> HomogPoint:
    """Pivot for lines (u1,u2) and (w1,w2): finite beyond u2/w1, a direction
    when parallel, or a beyond-infinity point (negative weight) otherwise."""
    if u2 == w1:
        # adjacent edges: the pivot is the shared polygon vertex itself
        return HomogPoint(u2.x, u2.y, 1)
    x = lines_cross_h(line_through(u1, u2), line_through(w1, w2))
    if x.w == 0:
        return HomogPoint(u2.x - u1.x, u2.y - u1.y, 0)
    xp = x.to_point()
    du = (u2.x - u1.x, u2.y - u1.y)
    t_num = (xp.x - u1.x) * du[0] + (xp.y - u1.y) * du[1]
    t_den = du[0] ** 2 + du[1] ** 2
    beyond_u = t_num > t_den  # strictly past u2
    dw = (w1.x - w2.x, w1.y - w2.y)
    s_num = (xp.x - w2.x) * dw[0] + (xp.y - w2.y) * dw[1]
    s_den = dw[0] ** 2 + dw[1] ** 2
    beyond_w = s_num > s_den  # strictly past w1
    if beyond_u != beyond_w:
        raise SweepDegeneracyError("inconsistent pivot side")
    if beyond_u:
        return HomogPoint(xp.x, xp.y, 1)
    return HomogPoint(-xp.x, -xp.y, -1)


def _split_two(verts, run, lab, pts_idx, pts):
    """Base case: two consecutive counted edges, split by a ray from the
    shared vertex."""
    p = len(verts)
    ka, kb = run
    if (ka + 1) % p != kb:
        raise SweepDegeneracyError("two active edges must share a vertex")
    v = verts[kb]                    # shared vertex (paper's P_n)
    nxt = verts[(kb + 1) % p]        # along the second active edge
    cb = lab[kb][1]

    def cmp(a, b):
        s = orient(v, a, b)
        if s == 0:
            raise SweepDegeneracyError("angular tie at the shared vertex")
        return -s

    order = sorted(pts, key=cmp_to_key(cmp))
    lo, hi = order[cb - 1], order[cb]
    weights = [(1, 1), (1, 3), (3, 1), (1, 7), (7, 1), (3, 5), (5, 3)]
    for (wa, wb) in weights:
        mid = Point((wa * lo.x + wb * hi.x) / (wa + wb),
                    (wa * lo.y + wb * hi.y) / (wa + wb))
        ray = line_through(v, mid)
        if any(eval_line(ray, x) == 0 for x in pts):
            continue
        side_b = _clip_keep_witness(verts, ray, order[0])
        side_a = _clip_keep_witness(verts, ray, order[-1])
        in_b = [k for k in range(len(pts)) if _strictly_inside(side_b, pts[k])]
        in_a = [k for k in range(len(pts)) if _strictly_inside(side_a, pts[k])]
        if len(in_b) != cb or len(in_a) != lab[ka][1] or \
                len(in_b) + len(in_a) != len(pts):
            continue
        req_a = _find_edge(side_a, verts[ka], verts[(ka + 1) % p])
        req_b = _find_edge(side_b, verts[kb], verts[(kb + 1) % p])
        if req_a is None or req_b is None:
            continue
        return {
            lab[ka][0]: (side_a, [pts_idx[k] for k in in_a]),
            lab[kb][0]: (side_b, [pts_idx[k] for k in in_b]),
        }
    raise SweepDegeneracyError("no clean splitting ray at the shared vertex")


def convex_subdivision(req: CountedSubdivisionRequest,
                       validate: bool = False) -> RegionAssignment:
    """Subdivide the polygon into convex cells with the requested counts.

    Zero-count edges are handled by planting a virtual point just inside the
    edge midpoint, running the all-positive subdivision and discarding the
    virtual regions; the virtual depth is decreased until each virtual point
    is the sole occupant of its region.
    """
    if validate:
        req.validate_general_plus()
    verts = list(req.polygon.vertices)
    n = len(verts)
    counts = list(req.counts)
    pts = list(req.interior)

    if all(c == 0 for c in counts):
        return RegionAssignment(req.polygon, pts, counts,
                                [None] * n, [[] for _ in range(n)])

    zeros = [i for i in range(n) if counts[i] == 0]
    if not zeros:
        labels = [(i, counts[i]) for i in range(n)]
        got = _helper(verts, labels, list(range(len(pts))), pts)
        return _assemble(req, got)

    base_pts = verts + pts
    for k in range(3, 48):
        virtuals = []
        ok = True
        for i in zeros:
            a, b = verts[i], verts[(i + 1) % n]
            mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
            vp = Point(mid.x - (b.y - a.y) / 2 ** k,
                       mid.y + (b.x - a.x) / 2 ** k)
            virtuals.append(vp)
        allp = base_pts + virtuals
        if not _no_collinear_with(virtuals, allp):
            continue
        if any(not _strictly_inside(verts, vp) for vp in virtuals):
            continue
        aug_counts = [c if c else 1 for c in counts]
        aug_pts = pts + virtuals
        labels = [(i, aug_counts[i]) for i in range(n)]
        try:
            got = _helper(verts, labels, list(range(len(aug_pts))), aug_pts)
        except (SweepDegeneracyError, InfeasibleSplitError):
            continue
        for pos, i in enumerate(zeros):
            vidx = len(pts) + pos
            if got[i][1] != [vidx]:
                ok = False
                break
        if not ok:
            continue
        for i in zeros:
            got[i] = None
        return _assemble(req, got)
    raise InfeasibleSplitError("virtual point placement failed")


def _no_collinear_with(news, allp) -> bool:
    m = len(allp)
    for vp in news:
        for i in range(m):
            if allp[i] is vp or allp[i] == vp:
                continue
            for j in range(i + 1, m):
                if allp[j] is vp or allp[j] == vp:
                    continue
                if orient(vp, allp[i], allp[j]) == 0:
                    return False
    return True


def _assemble(req, got) -> RegionAssignment:
    n = len(req.polygon)
    regions, assigned = [], []
    for i in range(n):
        entry = got.get(i)
        if entry is None:
            regions.append(None)
            assigned.append([])
        else:
            regions.append(list(entry[0]))
            assigned.append(sorted(entry[1]))
    return RegionAssignment(req.polygon, list(req.interior), list(req.counts),
                            regions, assigned)


# ---------------------------------------------------------------------------
# validation of a region assignment (used by tests and the acceptance suite)


def validate_region_assignment(ra: RegionAssignment) -> list:
    """Return a list of violated properties (empty when fully valid)."""
    errs = []
    verts = ra.polygon.vertices
    n = len(verts)
    for i in range(n):
        reg = ra.regions[i]
        if ra.counts[i] == 0:
            if reg is not None and len(ra.point_indices[i]) != 0:
                errs.append("edge %d: zero count but nonempty region" % i)
            continue
        if reg is None:
            errs.append("edge %d: missing region" % i)
            continue
        m = len(reg)
        for k in range(m):
            if orient(reg[k], reg[(k + 1) % m], reg[(k + 2) % m]) < 0:
                errs.append("edge %d: region not convex" % i)
                break
        if _find_edge(reg, verts[i], verts[(i + 1) % n]) is None:
            errs.append("edge %d: region misses its polygon edge" % i)
        if len(ra.point_indices[i]) != ra.counts[i]:
            errs.append("edge %d: wrong point count" % i)
        for k, p in enumerate(ra.interior):
            inside = _strictly_inside(reg, p)
            if inside != (k in set(ra.point_indices[i])):
                errs.append("edge %d: point %d misassigned" % (i, k))
            if not inside and _on_boundary(reg, p):
                errs.append("edge %d: point %d on region boundary" % (i, k))
    live = [r for r in ra.regions if r]
    for a in range(len(live)):
        for b in range(a + 1, len(live)):
            if _convex_overlap(live[a], live[b]):
                errs.append("regions %d/%d overlap" % (a, b))
    return errs


def _on_boundary(reg, p: Point) -> bool:
    m = len(reg)
    for k in range(m):
        a, b = reg[k], reg[(k + 1) % m]
        if orient(a, b, p) == 0 and \
                min(a.x, b.x) <= p.x <= max(a.x, b.x) and \
                min(a.y, b.y) <= p.y <= max(a.y, b.y):
            return True
    return False


def _convex_overlap(r1, r2) -> bool:
    cur = list(r1)
    for k in range(len(r2)):
        if not cur:
            return False
        cur = clip_polygon_halfplane(cur, line_through(r2[k], r2[(k + 1) % len(r2)]),
                                     keep_positive=True)
    return bool(cur) and len(cur) >= 3 and polygon_area2(cur) > 0
