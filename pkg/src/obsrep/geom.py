"""Exact planar primitives on integer coordinates.

Every predicate here is decided with arbitrary-precision integer (or
``fractions.Fraction``) arithmetic; no floating point is used anywhere, so
results are exact for any input size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GeometryError


@dataclass(frozen=True)
class Point:
    """A point with exact integer coordinates."""

    x: int
    y: int

    def __post_init__(self):
        if type(self.x) is not int or type(self.y) is not int:
            raise GeometryError(f"point coordinates must be plain ints, got {self!r}")

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


@dataclass(frozen=True)
class Segment:
    """A segment between two distinct points; ``open`` excludes the endpoints."""

    a: Point
    b: Point
    open: bool = True

    def __post_init__(self):
        if self.a == self.b:
            raise GeometryError(f"degenerate segment at {self.a!r}")


def orient(a, b, c) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear."""
    ax, ay = _coords(a)
    bx, by = _coords(b)
    cx, cy = _coords(c)
    return orient_xy(ax, ay, bx, by, cx, cy)


def orient_xy(ax, ay, bx, by, cx, cy) -> int:
    """``orient`` on raw coordinates (ints or Fractions)."""
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def _coords(p):
    """Accept a Point or a raw (x, y) pair."""
    if isinstance(p, Point):
        return p.x, p.y
    return p[0], p[1]


def on_closed_segment(a, b, p) -> bool:
    """True iff p lies on the closed segment [a, b] (endpoints included)."""
    ax, ay = _coords(a)
    bx, by = _coords(b)
    px, py = _coords(p)
    if orient_xy(ax, ay, bx, by, px, py) != 0:
        return False
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def on_open_segment(a, b, p) -> bool:
    """True iff p lies strictly between a and b on their segment."""
    ax, ay = _coords(a)
    bx, by = _coords(b)
    px, py = _coords(p)
    if orient_xy(ax, ay, bx, by, px, py) != 0:
        return False
    if ax != bx:
        return min(ax, bx) < px < max(ax, bx)
    return min(ay, by) < py < max(ay, by)


def open_segment_intersects_closed(a, b, c, d) -> bool:
    """Does the open segment (a, b) meet the closed segment [c, d]?

    Contact that happens only at a or b does not count; contact at c or d does.
    """
    ax, ay = _coords(a)
    bx, by = _coords(b)
    cx, cy = _coords(c)
    dx, dy = _coords(d)
    d1 = orient_xy(cx, cy, dx, dy, ax, ay)
    d2 = orient_xy(cx, cy, dx, dy, bx, by)
    d3 = orient_xy(ax, ay, bx, by, cx, cy)
    d4 = orient_xy(ax, ay, bx, by, dx, dy)
    if d1 == 0 and d2 == 0:
        # All four collinear: 1-D overlap of open (a,b) with closed [c,d].
        if ax != bx:
            lo_ab, hi_ab = min(ax, bx), max(ax, bx)
            lo_cd, hi_cd = min(cx, dx), max(cx, dx)
        else:
            lo_ab, hi_ab = min(ay, by), max(ay, by)
            lo_cd, hi_cd = min(cy, dy), max(cy, dy)
        return hi_cd > lo_ab and lo_cd < hi_ab
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d3 == 0 and on_open_segment(a, b, c):
        return True
    if d4 == 0 and on_open_segment(a, b, d):
        return True
    return False


def closed_segments_intersect(a, b, c, d) -> bool:
    """Do the closed segments [a, b] and [c, d] share at least one point?"""
    ax, ay = _coords(a)
    bx, by = _coords(b)
    cx, cy = _coords(c)
    dx, dy = _coords(d)
    d1 = orient_xy(cx, cy, dx, dy, ax, ay)
    d2 = orient_xy(cx, cy, dx, dy, bx, by)
    d3 = orient_xy(ax, ay, bx, by, cx, cy)
    d4 = orient_xy(ax, ay, bx, by, dx, dy)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        on_closed_segment(c, d, a)
        or on_closed_segment(c, d, b)
        or on_closed_segment(a, b, c)
        or on_closed_segment(a, b, d)
    )


def polygon_area2(vertices) -> int:
    """Twice the signed area of the vertex cycle (positive = counterclockwise)."""
    total = 0
    k = len(vertices)
    for i in range(k):
        x1, y1 = _coords(vertices[i])
        x2, y2 = _coords(vertices[(i + 1) % k])
        total += x1 * y2 - x2 * y1
    return total


@dataclass(frozen=True)
class Polygon:
    """A simple polygon, vertices in counterclockwise order, no holes.

    The constructor enforces: at least 3 vertices, all distinct, edges meet
    only at shared endpoints (simplicity), and signed area > 0.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        v = self.vertices
        k = len(v)
        if k < 3:
            raise GeometryError(f"polygon needs >= 3 vertices, got {k}")
        for i, j in combinations(range(k), 2):
            if v[i] == v[j]:
                raise GeometryError(f"polygon repeats vertex {v[i]!r} (positions {i}, {j})")
        for i in range(k):
            p, q, r = v[i - 1], v[i], v[(i + 1) % k]
            if orient(p, q, r) == 0 and (r.x - q.x) * (p.x - q.x) + (r.y - q.y) * (p.y - q.y) > 0:
                raise GeometryError(f"polygon edges fold back at {q!r}")
        for i in range(k):
            a, b = v[i], v[(i + 1) % k]
            for j in range(i + 1, k):
                if j == i or (j + 1) % k == i or (i + 1) % k == j:
                    continue  # adjacent edges share a vertex by construction
                c, d = v[j], v[(j + 1) % k]
                if closed_segments_intersect(a, b, c, d):
                    raise GeometryError(f"polygon is not simple: edges {i} and {j} intersect")
        if polygon_area2(v) <= 0:
            raise GeometryError("polygon vertices must be in counterclockwise order")

    def edges(self):
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def is_convex(self) -> bool:
        """Strict convexity: every consecutive turn is a left turn."""
        v = self.vertices
        k = len(v)
        return all(orient(v[i - 1], v[i], v[(i + 1) % k]) > 0 for i in range(k))


def point_in_polygon(q, polygon) -> int:
    """Locate q relative to the closed polygon region: +1 inside, 0 on boundary, -1 outside.

    Exact crossing-number test; q may have Fraction coordinates.
    """
    vertices = polygon.vertices if isinstance(polygon, Polygon) else tuple(polygon)
    qx, qy = _coords(q)
    k = len(vertices)
    for i in range(k):
        if on_closed_segment(vertices[i], vertices[(i + 1) % k], (qx, qy)):
            return 0
    inside = False
    for i in range(k):
        ux, uy = _coords(vertices[i])
        vx, vy = _coords(vertices[(i + 1) % k])
        if (uy > qy) != (vy > qy):
            o = orient_xy(ux, uy, vx, vy, qx, qy)
            # For an upward edge the crossing lies right of q iff q is left of u->v;
            # for a downward edge the test flips.
            if (o > 0) if vy > uy else (o < 0):
                inside = not inside
    return 1 if inside else -1


def segment_intersects_polygon(segment: Segment, polygon: Polygon) -> bool:
    """Does the segment meet the closed polygonal region?

    Requires both endpoints strictly outside the region; an endpoint inside or
    on the boundary raises :class:`GeometryError` (the scene is invalid).
    Boundary contact counts as intersection.
    """
    for endpoint in (segment.a, segment.b):
        if point_in_polygon(endpoint, polygon) >= 0:
            raise GeometryError(f"segment endpoint {endpoint!r} is inside or on an obstacle")
    xs = [v.x for v in polygon.vertices]
    ys = [v.y for v in polygon.vertices]
    if max(segment.a.x, segment.b.x) < min(xs) or min(segment.a.x, segment.b.x) > max(xs):
        return False
    if max(segment.a.y, segment.b.y) < min(ys) or min(segment.a.y, segment.b.y) > max(ys):
        return False
    test = open_segment_intersects_closed if segment.open else closed_segments_intersect
    return any(test(segment.a, segment.b, c, d) for c, d in polygon.edges())


def is_general_position(points):
    """Check that no two points coincide and no three are collinear.

    Returns ``(ok, violations)`` where violations lists index 2-tuples for
    duplicates and index 3-tuples for collinear triples.
    """
    pts = [(_coords(p)) for p in points]
    violations = []
    seen = {}
    for i, p in enumerate(pts):
        if p in seen:
            violations.append((seen[p], i))
        else:
            seen[p] = i
    for i, j, k in combinations(range(len(pts)), 3):
        (ax, ay), (bx, by), (cx, cy) = pts[i], pts[j], pts[k]
        if orient_xy(ax, ay, bx, by, cx, cy) == 0:
            violations.append((i, j, k))
    return (not violations), violations


def convex_hull(points):
    """Convex hull in counterclockwise order (strict: collinear points dropped)."""
    pts = sorted(set((_coords(p)) for p in points))
    if len(pts) <= 2:
        return pts
    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient_xy(*out[-2], *out[-1], *p) <= 0:
                out.pop()
            out.append(p)
        return out
    lower = chain(pts)
    upper = chain(reversed(pts))
    return lower[:-1] + upper[:-1]
