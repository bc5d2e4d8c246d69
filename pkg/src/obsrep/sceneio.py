"""Reading and writing scene documents.

A scene document is JSON with up to three fields::

    {
      "points":    [[x, y], ...],
      "obstacles": [[[x, y], ...], ...],
      "graph":     {"n": 3, "edges": [[1, 2], [1, 3]]}
    }

Coordinates are integers.  Vertices are numbered 1..n in listing order and
the optional graph's edges use those 1-based labels.  Obstacle corners may
be listed in either direction around the boundary; they are stored
counterclockwise.  A graph may also live in a file of its own (just the
``{"n": ..., "edges": ...}`` object).

Structural problems raise :class:`SceneFormatError` naming every offending
index; a well-formed document whose scene breaks a geometric invariant
raises :class:`SceneError` from validation.
"""

from __future__ import annotations

import json

from .errors import GeometryError, SceneFormatError
from .geom import Point, Polygon, polygon_area2
from .graphs import Graph, GraphError
from .scene import Scene, require_valid_scene


def _int_pair(value, where, problems):
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or any(type(v) is not int for v in value)
    ):
        problems.append(f"{where} must be a pair of integers, got {value!r}")
        return None
    return int(value[0]), int(value[1])


def _parse_points(data, problems):
    raw = data.get("points")
    if not isinstance(raw, list) or not raw:
        problems.append('"points" must be a non-empty list of [x, y] pairs')
        return ()
    out = []
    for i, item in enumerate(raw):
        pair = _int_pair(item, f"points[{i}]", problems)
        if pair is not None:
            out.append(Point(*pair))
    return tuple(out)


def _parse_obstacles(data, problems):
    raw = data.get("obstacles", [])
    if not isinstance(raw, list):
        problems.append('"obstacles" must be a list of polygons')
        return ()
    out = []
    for k, ring in enumerate(raw):
        if not isinstance(ring, list):
            problems.append(f"obstacles[{k}] must be a list of [x, y] pairs")
            continue
        corners = []
        bad = False
        for t, item in enumerate(ring):
            pair = _int_pair(item, f"obstacles[{k}][{t}]", problems)
            if pair is None:
                bad = True
            else:
                corners.append(Point(*pair))
        if bad:
            continue
        if len(corners) >= 3 and polygon_area2(corners) < 0:
            corners.reverse()
        try:
            out.append(Polygon(tuple(corners)))
        except GeometryError as e:
            problems.append(f"obstacles[{k}]: {e}")
    return tuple(out)


def _parse_graph(data, n_points, problems):
    raw = data.get("graph")
    if raw is None:
        return None
    if not isinstance(raw, dict):
        problems.append('"graph" must be an object with "n" and "edges"')
        return None
    n = raw.get("n")
    if type(n) is not int or n < 0:
        problems.append('graph "n" must be a non-negative integer')
        return None
    if n_points is not None and n != n_points:
        problems.append(f'graph "n" is {n} but the document lists {n_points} points')
        return None
    edges_raw = raw.get("edges", [])
    if not isinstance(edges_raw, list):
        problems.append('graph "edges" must be a list of [a, b] label pairs')
        return None
    pairs = []
    for i, item in enumerate(edges_raw):
        pair = _int_pair(item, f"graph edges[{i}]", problems)
        if pair is None:
            continue
        a, b = pair
        if not (1 <= a <= n and 1 <= b <= n):
            problems.append(f"graph edges[{i}] = {list(pair)!r} is outside 1..{n}")
            continue
        if a == b:
            problems.append(f"graph edges[{i}] joins vertex {a} to itself")
            continue
        pairs.append((a - 1, b - 1))
    if problems:
        return None
    try:
        return Graph.of(n, pairs)
    except GraphError as e:  # pragma: no cover - guarded by the checks above
        problems.append(str(e))
        return None


def scene_from_dict(data) -> tuple:
    """Parse a document into ``(Scene, Graph | None)``, validating the scene."""
    if not isinstance(data, dict):
        raise SceneFormatError("a scene document must be a JSON object")
    unknown = sorted(set(data) - {"points", "obstacles", "graph"})
    problems = [f"unknown field {name!r}" for name in unknown]
    before = len(problems)
    points = _parse_points(data, problems)
    points_ok = len(problems) == before
    obstacles = _parse_obstacles(data, problems)
    graph = _parse_graph(data, len(points) if points_ok else None, problems)
    if problems:
        raise SceneFormatError("; ".join(problems))
    scene = Scene(points, obstacles)
    require_valid_scene(scene)
    return scene, graph


def graph_from_dict(data) -> Graph:
    """Parse a bare graph object ``{"n": ..., "edges": [[a, b], ...]}``."""
    if not isinstance(data, dict):
        raise SceneFormatError("a graph document must be a JSON object")
    problems = []
    graph = _parse_graph({"graph": data}, None, problems)
    if problems:
        raise SceneFormatError("; ".join(problems))
    return graph


def scene_to_dict(scene: Scene, graph: Graph | None = None) -> dict:
    """The document form of a scene (1-based edge labels, CCW obstacles)."""
    doc = {
        "points": [[p.x, p.y] for p in scene.points],
        "obstacles": [[[v.x, v.y] for v in poly.vertices] for poly in scene.obstacles],
    }
    if graph is not None:
        doc["graph"] = graph_to_dict(graph)
    return doc


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[i + 1, j + 1] for i, j in g.sorted_edges()]}


def dumps_scene(scene: Scene, graph: Graph | None = None) -> str:
    return json.dumps(scene_to_dict(scene, graph), indent=2) + "\n"


def loads_scene(text: str) -> tuple:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SceneFormatError(f"not valid JSON: {e}") from None
    return scene_from_dict(data)


def load_scene(path) -> tuple:
    """Read a scene document from ``path``; returns ``(Scene, Graph | None)``."""
    with open(path, "r", encoding="utf-8") as fh:
        return loads_scene(fh.read())


def save_scene(path, scene: Scene, graph: Graph | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_scene(scene, graph))


def load_graph(path) -> Graph:
    """Read a graph: either a bare graph document or a scene document's graph."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SceneFormatError(f"not valid JSON: {e}") from None
    if isinstance(data, dict) and "points" in data:
        _, graph = scene_from_dict(data)
        if graph is None:
            raise SceneFormatError('the scene document has no "graph" field')
        return graph
    return graph_from_dict(data)
