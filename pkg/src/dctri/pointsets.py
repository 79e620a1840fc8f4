"""Point sets, double circles and generalized double circles.

Generators produce rational realizations whose correctness is defined by the
certificate (`certify_gdc`), not by metric regularity: the constructions
downstream depend only on the order type.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateInputError, PreconditionError
from .exactgeom import (
    Point,
    convex_hull,
    int_coords,
    iorient,
    is_general_plus_position,
    is_general_position,
    orient,
)


class PointSet:
    """An ordered point list with its CCW hull indices.

    Instances cache derived data (integer coordinates, hull, the general+
    certificate) because pipeline code asks for them repeatedly.
    """

    def __init__(self, points, hull=None):
        self.points = list(points)
        self._hull = list(hull) if hull is not None else None
        self._int_coords = None
        self._general_plus = None

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    @property
    def hull(self):
        if self._hull is None:
            self._hull = convex_hull(self.points)
        return self._hull

    @property
    def interior(self):
        hull_set = set(self.hull)
        return [i for i in range(len(self.points)) if i not in hull_set]

    def icoords(self):
        if self._int_coords is None:
            self._int_coords = int_coords(self.points)
        return self._int_coords

    def is_general_plus(self) -> bool:
        if self._general_plus is None:
            self._general_plus = is_general_plus_position(self.points)
        return self._general_plus

    def mirrored(self) -> "PointSet":
        """Reflect across the x axis (reverses every orientation)."""
        return PointSet([Point(p.x, -p.y) for p in self.points])


@dataclass(frozen=True)
class GDCSpec:
    """Per-edge interior counts (c_1, ..., c_n) of a generalized double circle."""

    counts: tuple

    def __init__(self, counts):
        counts = tuple(int(c) for c in counts)
        if len(counts) < 3:
            raise PreconditionError("need n >= 3 edge counts")
        if any(c < 0 for c in counts):
            raise PreconditionError("counts must be nonnegative")
        object.__setattr__(self, "counts", counts)

    @property
    def n(self):
        return len(self.counts)

    @property
    def total(self):
        return len(self.counts) + sum(self.counts)


@dataclass
class GDCPointSet:
    """A realized (c_1, ..., c_n)-double circle.

    `outer` are the hull indices P_1..P_n in CCW order; `inner[i]` lists the
    indices of A_{i,1}..A_{i,c_i} along hull edge i.  `inset` is the rational
    depth parameter that stands in for the paper-style offset distance.
    """

    base: PointSet
    outer: list
    inner: list
    spec: GDCSpec
    inset: Fraction

    def cycle(self):
        """The natural spanning cycle as an index list (closed implicitly)."""
        seq = []
        for i in range(self.spec.n):
            seq.append(self.outer[i])
            seq.extend(self.inner[i])
        return seq

    def cycle_edges(self):
        seq = self.cycle()
        return [(seq[k], seq[(k + 1) % len(seq)]) for k in range(len(seq))]


# ---------------------------------------------------------------------------
# generators


def _rational_ngon(n: int, scale: int = 2 ** 20):
    """Rational approximation of the regular n-gon on the unit circle."""
    pts = []
    for k in range(n):
        ang = 2 * math.pi * k / n
        pts.append(Point(Fraction(round(math.cos(ang) * scale), scale),
                         Fraction(round(math.sin(ang) * scale), scale)))
    return pts


def _build_gdc(spec: GDCSpec, t: Fraction) -> GDCPointSet:
    n = spec.n
    ring = _rational_ngon(n)
    pts = list(ring)
    inner = []
    for i in range(n):
        a, b = ring[i], ring[(i + 1) % n]
        c = spec.counts[i]
        idxs = []
        for j in range(1, c + 1):
            s = Fraction(j, c + 1)
            edge_pt = Point(a.x + s * (b.x - a.x), a.y + s * (b.y - a.y))
            # deeper in the middle so the chain is strictly convex
            depth = t * (1 + 4 * s * (1 - s))
            idxs.append(len(pts))
            pts.append(Point(edge_pt.x * (1 - depth), edge_pt.y * (1 - depth)))
        inner.append(idxs)
    return GDCPointSet(PointSet(pts, hull=list(range(n))), list(range(n)),
                       inner, spec, t)


def gen_generalized_double_circle(spec: GDCSpec) -> GDCPointSet:
    """Build a certified (c_1, ..., c_n)-double circle.

    The inset depth starts at 1/4 of the circumradius and is halved until the
    certificate passes and one further halving leaves the order type
    signature unchanged, which pins the combinatorics of the family.
    """
    t = Fraction(1, 4)
    for _ in range(64):
        cand = _build_gdc(spec, t)
        half = _build_gdc(spec, t / 2)
        if certify_gdc(cand) and certify_gdc(half) and \
                _signature_equal(cand.base, half.base):
            return cand
        t /= 2
    raise DegenerateInputError("could not certify a double circle realization")


def gen_double_circle(n: int) -> GDCPointSet:
    if n < 3:
        raise PreconditionError("double circle needs n >= 3")
    return gen_generalized_double_circle(GDCSpec((1,) * n))


# ---------------------------------------------------------------------------
# certification


def _chain_strictly_convex(pts, chain) -> bool:
    """Closed polygon over `chain` indices is strictly convex (either turning)."""
    m = len(chain)
    if m < 3:
        return True
    signs = set()
    for k in range(m):
        a, b, c = (pts[chain[k]], pts[chain[(k + 1) % m]],
                   pts[chain[(k + 2) % m]])
        signs.add(orient(a, b, c))
    return signs in ({1}, {-1})


def is_unavoidable_edge_coords(coords, e) -> bool:
    """No other point-spanned segment properly crosses edge e (int coords)."""
    i, j = e
    ax, ay = coords[i]
    bx, by = coords[j]
    n = len(coords)
    for a in range(n):
        if a in (i, j):
            continue
        cx, cy = coords[a]
        d3 = iorient(ax, ay, bx, by, cx, cy)
        for b in range(a + 1, n):
            if b in (i, j):
                continue
            dx, dy = coords[b]
            d4 = iorient(ax, ay, bx, by, dx, dy)
            if d3 * d4 < 0:
                if iorient(cx, cy, dx, dy, ax, ay) * \
                        iorient(cx, cy, dx, dy, bx, by) < 0:
                    return False
    return True


def certify_gdc(ps: GDCPointSet) -> bool:
    """Check every defining property of a generalized double circle.

    Hull equals the outer ring, the whole set is in general position, each
    per-edge chain (P_i, A_{i,1}, ..., A_{i,c_i}, P_{i+1}) is strictly convex
    and every edge of the natural cycle is unavoidable.
    """
    pts = ps.base.points
    n = ps.spec.n
    try:
        hull = convex_hull(pts)
    except DegenerateInputError:
        return False
    if set(hull) != set(ps.outer):
        return False
    if not is_general_position(pts):
        return False
    for i in range(n):
        chain = [ps.outer[i]] + list(ps.inner[i]) + [ps.outer[(i + 1) % n]]
        if not _chain_strictly_convex(pts, chain):
            return False
    coords = ps.base.icoords()
    for e in ps.cycle_edges():
        if not is_unavoidable_edge_coords(coords, e):
            return False
    return True


# ---------------------------------------------------------------------------
# order type signatures


@dataclass(frozen=True)
class OrderTypeSignature:
    """Orientation sign of every index triple i < j < k."""

    n: int
    signs: tuple


def order_type_signature(ps) -> OrderTypeSignature:
    pts = ps.points if isinstance(ps, PointSet) else list(ps)
    n = len(pts)
    coords = int_coords(pts)
    signs = []
    for i in range(n):
        ax, ay = coords[i]
        for j in range(i + 1, n):
            bx, by = coords[j]
            for k in range(j + 1, n):
                s = iorient(ax, ay, bx, by, *coords[k])
                if s == 0:
                    raise DegenerateInputError(
                        "collinear triple (%d, %d, %d)" % (i, j, k))
                signs.append(s)
    return OrderTypeSignature(n, tuple(signs))


def _signature_equal(p, q) -> bool:
    return order_type_signature(p) == order_type_signature(q)


_PARITY3 = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1,
            (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}


def same_order_type(p: PointSet, q: PointSet, f) -> bool:
    """Signatures agree under the index bijection f (a sequence or mapping)."""
    if len(p) != len(q):
        return False
    n = len(p)
    fmap = [f[i] for i in range(n)]
    if sorted(fmap) != list(range(n)):
        raise PreconditionError("f is not a bijection")
    pc = int_coords(p.points)
    qc = int_coords(q.points)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                sp = iorient(*pc[i], *pc[j], *pc[k])
                sq = iorient(*qc[fmap[i]], *qc[fmap[j]], *qc[fmap[k]])
                if sp != sq:
                    return False
    return True


# ---------------------------------------------------------------------------
# perturbation to general+ position


def perturb_to_general_plus(ps: PointSet, seed: int = 0,
                            max_rounds: int = 48) -> PointSet:
    """Perturb into general+ position while preserving the order type.

    Already-general+ input is returned unchanged.  Offsets are deterministic
    pseudorandom rationals whose magnitude halves every round, so for any
    input that admits a perturbation at all the loop terminates quickly.
    """
    if ps.is_general_plus():
        return ps
    span = max(
        max(p.x for p in ps.points) - min(p.x for p in ps.points),
        max(p.y for p in ps.points) - min(p.y for p in ps.points),
        Fraction(1),
    )
    rng = random.Random(seed)
    base = order_type_signature(ps)
    identity = list(range(len(ps)))
    for k in range(10, 10 + max_rounds):
        eps = span / (2 ** k)
        cand = PointSet([
            Point(p.x + eps * Fraction(rng.randint(-64, 64), 64),
                  p.y + eps * Fraction(rng.randint(-64, 64), 64))
            for p in ps.points
        ])
        try:
            if order_type_signature(cand) != base:
                continue
        except DegenerateInputError:
            continue
        if cand.is_general_plus() and same_order_type(ps, cand, identity):
            cand._hull = list(ps.hull)
            return cand
    raise DegenerateInputError("could not perturb to general+ position")


# ---------------------------------------------------------------------------
# seeded random instances (used by the CLI demos and the test suite)


def random_point_set(n_hull: int, n_interior: int, seed: int = 0) -> PointSet:
    """A random point set with exactly n_hull hull points, general position."""
    if n_hull < 3:
        raise PreconditionError("need at least 3 hull points")
    rng = random.Random(seed)
    scale = 10 ** 6
    for _ in range(4000):
        pts = []
        # convex ring with jittered angles and radii
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n_hull))
        ok = all(angles[i + 1] - angles[i] > 1e-3 for i in range(n_hull - 1))
        if not ok:
            continue
        for ang in angles:
            r = rng.uniform(0.8, 1.0)
            pts.append(Point(Fraction(round(math.cos(ang) * r * scale), scale),
                             Fraction(round(math.sin(ang) * r * scale), scale)))
        for _ in range(n_interior):
            while True:
                x, y = rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)
                if x * x + y * y < 0.3:
                    pts.append(Point(Fraction(round(x * scale), scale),
                                     Fraction(round(y * scale), scale)))
                    break
        cand = PointSet(pts)
        if len({(p.x, p.y) for p in pts}) != len(pts):
            continue
        if not is_general_position(pts):
            continue
        try:
            if len(cand.hull) != n_hull:
                continue
        except DegenerateInputError:
            continue
        if set(cand.hull) != set(range(n_hull)):
            continue
        return cand
    raise DegenerateInputError("failed to sample a point set")
