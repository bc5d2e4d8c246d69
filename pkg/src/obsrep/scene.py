"""Scenes: labeled points plus polygonal obstacles, with validity diagnostics."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import SceneError
from .geom import Point, Polygon, is_general_position, on_open_segment, point_in_polygon


@dataclass(frozen=True)
class Scene:
    """Graph vertices (``points``) together with obstacle polygons."""

    points: tuple[Point, ...]
    obstacles: tuple[Polygon, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "obstacles", tuple(self.obstacles))

    @property
    def n(self) -> int:
        return len(self.points)

    def all_points(self):
        """Vertices followed by obstacle corners in boundary order."""
        out = list(self.points)
        for poly in self.obstacles:
            out.extend(poly.vertices)
        return out


def scene_violations(scene: Scene) -> list:
    """Every way the scene breaks its invariants, one message per violation.

    A usable scene has distinct labeled vertices with no three on a common
    line, no vertex inside or on an obstacle, and no obstacle corner in the
    interior of a segment joining two vertices.  The last rule rules out the
    contacts whose blocking status would depend on whether the obstacle
    boundary counts; collinearities that only involve obstacle corners are
    harmless and allowed.
    """
    out = []
    ok, violations = is_general_position(scene.points)
    if not ok:
        for v in violations:
            names = ", ".join(f"points[{i}]" for i in v)
            kind = "duplicate points" if len(v) == 2 else "collinear triple"
            out.append(f"{kind}: {names}")
    for i, p in enumerate(scene.points):
        for k, poly in enumerate(scene.obstacles):
            where = point_in_polygon(p, poly)
            if where >= 0:
                side = "inside" if where > 0 else "on the boundary of"
                out.append(f"points[{i}] is {side} obstacles[{k}]")
    for i, j in combinations(range(scene.n), 2):
        a, b = scene.points[i], scene.points[j]
        for k, poly in enumerate(scene.obstacles):
            for t, w in enumerate(poly.vertices):
                if on_open_segment(a, b, w):
                    out.append(
                        f"obstacles[{k}] vertex {t} lies between"
                        f" points[{i}] and points[{j}]"
                    )
    return out


def require_valid_scene(scene: Scene) -> None:
    """Raise :class:`SceneError` listing every violation, if any."""
    violations = scene_violations(scene)
    if violations:
        raise SceneError(violations)
