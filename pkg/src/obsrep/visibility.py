"""Visibility graphs of scenes and representation checking."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ObsrepError
from .geom import Segment, segment_intersects_polygon
from .graphs import Graph
from .scene import Scene, require_valid_scene


def _blockers(scene: Scene, i: int, j: int):
    """Indices of obstacles whose closed region meets the open segment i-j."""
    seg = Segment(scene.points[i], scene.points[j], open=True)
    return [k for k, poly in enumerate(scene.obstacles) if segment_intersects_polygon(seg, poly)]


def visibility_details(scene: Scene):
    """The visibility graph plus, for each blocked pair, its blocking obstacles.

    Returns ``(graph, witnesses)`` where witnesses maps every non-edge to the
    non-empty list of obstacle indices that intersect its open segment.
    """
    require_valid_scene(scene)
    edges = []
    witnesses = {}
    for i, j in combinations(range(scene.n), 2):
        blockers = _blockers(scene, i, j)
        if blockers:
            witnesses[(i, j)] = blockers
        else:
            edges.append((i, j))
    return Graph.of(scene.n, edges), witnesses


def visibility_graph(scene: Scene) -> Graph:
    """Pairs of vertices whose open segment avoids every obstacle."""
    return visibility_details(scene)[0]


@dataclass(frozen=True)
class RepresentationReport:
    """Outcome of comparing a scene's visibility graph against a target graph."""

    matches: bool
    blocked_but_required: tuple  # pairs in the graph whose segment is blocked
    visible_but_excluded: tuple  # visible pairs absent from the graph

    def diagnostics(self):
        out = [f"pair {i}-{j} is in the graph but blocked in the scene"
               for i, j in self.blocked_but_required]
        out += [f"pair {i}-{j} is visible in the scene but not in the graph"
                for i, j in self.visible_but_excluded]
        return out


def validate_representation(scene: Scene, g: Graph) -> RepresentationReport:
    """Does the scene represent exactly the labeled graph ``g``?

    Labeled comparison (vertex i is vertex i); isomorphism is deliberately not
    considered.
    """
    if g.n != scene.n:
        raise ObsrepError(f"graph has {g.n} vertices but the scene has {scene.n} points")
    actual = visibility_graph(scene)
    missing = tuple(sorted(g.edges - actual.edges))
    extra = tuple(sorted(actual.edges - g.edges))
    return RepresentationReport(not missing and not extra, missing, extra)
