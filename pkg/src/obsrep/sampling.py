"""Seeded random generators for scenes, convex obstacles and point placements.

All functions take an explicit ``random.Random`` so every caller is
reproducible from its seed.
"""

from __future__ import annotations

from .errors import SearchError
from .geom import Point, Polygon, convex_hull, point_in_polygon
from .scene import Scene


def _collinear_with_any_pair(pts, q):
    qx, qy = q
    for i in range(len(pts)):
        ax, ay = pts[i]
        for j in range(i + 1, len(pts)):
            bx, by = pts[j]
            if (bx - ax) * (qy - ay) == (by - ay) * (qx - ax):
                return True
    return False


def random_convex_polygon(rng, max_vertices=6, span=300, max_tries=200) -> Polygon:
    """A strictly convex lattice polygon: hull of a few random points in a box."""
    for _ in range(max_tries):
        k = rng.randint(4, max(4, max_vertices + 1))
        raw = [(rng.randint(-span, span), rng.randint(-span, span)) for _ in range(k)]
        hull = convex_hull(raw)
        if len(hull) >= 3:
            return Polygon(tuple(Point(x, y) for x, y in hull))
    raise SearchError("could not sample a convex polygon")


def random_single_obstacle_scene(rng, n_points, coord_bound=1000, max_tries=4000) -> Scene:
    """A valid scene: one strictly convex obstacle, n labeled points outside it.

    Coordinates stay within ``[-coord_bound, coord_bound]``; the joint point
    set (vertices plus obstacle corners) is kept in general position by
    rejection.
    """
    span = max(4, coord_bound // 3)
    poly = random_convex_polygon(rng, span=span)
    taken = [(v.x, v.y) for v in poly.vertices]
    pts = []
    tries = 0
    while len(pts) < n_points:
        tries += 1
        if tries > max_tries:
            raise SearchError("could not place scene points in general position")
        q = (rng.randint(-coord_bound, coord_bound), rng.randint(-coord_bound, coord_bound))
        if q in taken or point_in_polygon(q, poly) >= 0 or _collinear_with_any_pair(taken, q):
            continue
        taken.append(q)
        pts.append(Point(*q))
    return Scene(tuple(pts), (poly,))


def iter_single_obstacle_scenes(rng, count, max_points=10, coord_bound=1000):
    """``count`` random scenes with 2..max_points vertices each."""
    for _ in range(count):
        yield random_single_obstacle_scene(rng, rng.randint(2, max_points), coord_bound)


def random_placement(rng, n, grid, max_tries=20000):
    """n labeled grid points in [0, grid)^2, in general position, distinct x.

    Distinct x-coordinates are required so that any placement can later feed
    the x-sorted partition checker.
    """
    pts = []
    xs = set()
    tries = 0
    while len(pts) < n:
        tries += 1
        if tries > max_tries:
            raise SearchError(f"no general-position placement on a {grid}x{grid} grid")
        q = (rng.randrange(grid), rng.randrange(grid))
        if q[0] in xs or _collinear_with_any_pair(pts, q):
            continue
        xs.add(q[0])
        pts.append(q)
    return tuple(Point(x, y) for x, y in pts)
