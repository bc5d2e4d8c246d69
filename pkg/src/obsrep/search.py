"""Searching for small obstacle counts.

For one placement of a graph's vertices, the fewest obstacles that realize
the graph equals the minimum number of faces of the drawing needed to cover
all non-edges; that is an exact set-cover problem.  Minimizing over many
seeded random placements yields honest upper bounds on the obstacle number,
certified exact only at 0 (complete graphs) and 1 (a found single-obstacle
representation of an incomplete graph).  The same machinery drives the
edge-deletion chains from complete graphs, the x-sorted group partition
check, and the random-graph experiment.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Drawing, build_arrangement, face_nonedge_incidence
from .cover import solve_cover
from .errors import ObsrepError
from .geom import convex_hull, is_general_position, on_closed_segment, orient
from .graphs import Graph, all_graphs, complete_graph, gnp_half
from .sampling import random_placement
from .scene import Scene


@dataclass(frozen=True)
class PlacementCover:
    """Minimum face cover of one placement: size plus the tie-broken face ids."""

    size: int
    faces: tuple


def min_obstacles_for_placement(points, g: Graph) -> PlacementCover:
    """Exact minimum obstacle count achievable on this placement of g's vertices.

    Builds the drawing, intersects every absent edge with the faces, and
    solves the resulting cover exactly.  The face-id tuple is the
    lexicographically smallest among all minimum covers.
    """
    points = tuple(points)
    if len(points) != g.n:
        raise ObsrepError(f"{len(points)} points for a {g.n}-vertex graph")
    drawing = Drawing.of(points, g.edges)
    if not g.non_edges():
        return PlacementCover(0, ())
    fs = build_arrangement(drawing)
    instance = face_nonedge_incidence(fs, g)
    sets = {fid: items for fid, items in enumerate(instance.membership)}
    chosen = solve_cover(len(instance.nonedges), sets)
    return PlacementCover(len(chosen), tuple(chosen))


@dataclass(frozen=True)
class Witness:
    """A placement plus the face ids standing in for obstacles."""

    points: tuple
    faces: tuple


@dataclass(frozen=True)
class ObsResult:
    upper_bound: int
    witness: Witness
    certified_exact: bool


def replay_witness(g: Graph, result: ObsResult) -> bool:
    """Re-derive the witness cover from scratch and compare against the result."""
    cover = min_obstacles_for_placement(result.witness.points, g)
    if cover.size != result.upper_bound:
        return False
    if not g.non_edges():
        return result.witness.faces == ()
    fs = build_arrangement(Drawing.of(result.witness.points, g.edges))
    instance = face_nonedge_incidence(fs, g)
    covered = set()
    for fid in result.witness.faces:
        covered.update(instance.membership[fid])
    return len(result.witness.faces) == result.upper_bound and covered == set(
        range(len(instance.nonedges))
    )


def _floor_bound(g: Graph) -> int:
    return 0 if g.is_complete else 1


def obs_upper_bound(
    g: Graph,
    placements: int,
    grid: int | None = None,
    seed: int = 0,
    exhaustive_grid: int | None = None,
) -> ObsResult:
    """Best (smallest) placement cover over seeded random placements.

    The placement stream depends only on (n, grid, seed), and sampling stops
    as soon as the bound hits the certifiable floor — 0 for complete graphs,
    1 otherwise — which can only lower the reported value.  With
    ``exhaustive_grid`` set and n ≤ 5, every labeled general-position
    placement on that tiny grid is also swept.
    """
    if placements < 1:
        raise ObsrepError("placements must be >= 1")
    if grid is None:
        grid = 100 * g.n * g.n
    if grid < g.n * g.n:
        raise ObsrepError(f"grid {grid} is too small for {g.n} points")
    floor = _floor_bound(g)
    rng = random.Random(seed)
    best: tuple[int, Witness] | None = None
    for _ in range(placements):
        pts = random_placement(rng, g.n, grid)
        cover = min_obstacles_for_placement(pts, g)
        if best is None or cover.size < best[0]:
            best = (cover.size, Witness(points=pts, faces=cover.faces))
        if best[0] <= floor:
            break
    if exhaustive_grid is not None:
        if g.n > 5:
            raise ObsrepError("exhaustive placement sweep is limited to n <= 5")
        for pts in _grid_placements(g.n, exhaustive_grid):
            if best is not None and best[0] <= floor:
                break
            cover = min_obstacles_for_placement(pts, g)
            if best is None or cover.size < best[0]:
                best = (cover.size, Witness(points=pts, faces=cover.faces))
    bound, witness = best
    return ObsResult(
        upper_bound=bound, witness=witness, certified_exact=bound == floor
    )


def _grid_placements(n, grid):
    from itertools import combinations, permutations

    from .geom import Point

    cells = [(x, y) for x in range(grid) for y in range(grid)]
    for combo in combinations(cells, n):
        ok, _ = is_general_position(combo)
        if not ok:
            continue
        for perm in permutations(combo):
            yield tuple(Point(x, y) for x, y in perm)


@dataclass(frozen=True)
class ChainStep:
    deleted: tuple | None
    graph: Graph
    result: ObsResult


@dataclass(frozen=True)
class ChainRecord:
    """Deletion path from the complete graph down to a target graph."""

    steps: tuple
    first_reached: tuple  # (bound value, index of the first step reaching it)

    def bounds(self):
        return [s.result.upper_bound for s in self.steps]


def edge_deletion_chain(
    n: int,
    target: Graph,
    seed: int,
    order: str = "lex",
    placements: int = 40,
    grid: int | None = None,
) -> ChainRecord:
    """Delete the edges missing from ``target`` out of K_n, bounding each stage.

    Every stage reuses the same placement seed, so consecutive stages examine
    identical placements (until an early exit) and the recorded bounds can
    climb by at most one per deletion.  ``order`` is "lex" or "random" (the
    deletion order is then shuffled with the same seed).
    """
    if target.n != n:
        raise ObsrepError(f"target has {target.n} vertices, expected {n}")
    if order not in ("lex", "random"):
        raise ObsrepError(f"unknown deletion order {order!r}")
    missing = sorted(set(complete_graph(n).edges) - target.edges)
    if order == "random":
        random.Random(seed).shuffle(missing)
    steps = []
    current = complete_graph(n)
    steps.append(
        ChainStep(None, current, obs_upper_bound(current, placements, grid, seed))
    )
    for edge in missing:
        current = current.without_edge(*edge)
        steps.append(
            ChainStep(edge, current, obs_upper_bound(current, placements, grid, seed))
        )
    seen = {}
    for i, s in enumerate(steps):
        seen.setdefault(s.result.upper_bound, i)
    return ChainRecord(
        steps=tuple(steps), first_reached=tuple(sorted(seen.items()))
    )


def suggested_group_size(n: int) -> int:
    """floor(5*log2(n)), clamped to >= 1 — a reasonable default group size.

    Computed exactly as the bit length of n**5; nothing here asserts the
    choice is optimal.
    """
    if n < 1:
        raise ObsrepError("n must be >= 1")
    return max(1, (n**5).bit_length() - 1)


@dataclass(frozen=True)
class PartitionReport:
    """X-sorted group partition bookkeeping for one representation.

    A group is flagged when no obstacle fits entirely inside the convex hull
    of its vertices.  Because distinct full groups occupy disjoint x-ranges,
    an obstacle can spoil at most one group, giving the unconditional count
    ``flagged >= full_groups - obstacle_count``; the stronger conclusion
    ``flagged > full_groups - n/(2k)`` is evaluated exactly and only
    meaningful when the obstacle count is below n/(2k).
    """

    k: int
    groups: tuple
    flags: tuple
    flagged: int
    full_groups: int
    obstacle_count: int
    identity_holds: bool
    hypothesis_holds: bool
    conclusion_holds: bool


def _hull_contains_all(group_points, vertices) -> bool:
    """Is every query vertex inside or on the hull of the group's points?"""
    hull = convex_hull(group_points)
    if len(hull) == 1:
        return all(tuple(v) == hull[0] for v in vertices)
    if len(hull) == 2:
        return all(on_closed_segment(hull[0], hull[1], v) for v in vertices)
    k = len(hull)
    return all(
        all(orient(hull[i], hull[(i + 1) % k], v) >= 0 for i in range(k))
        for v in vertices
    )


def _partition_report(points, k, obstacle_vertex_sets) -> PartitionReport:
    if k < 1:
        raise ObsrepError("group size k must be >= 1")
    xs = [p.x for p in points]
    if len(set(xs)) != len(xs):
        raise ObsrepError("two vertices share an x-coordinate; cannot split by vertical lines")
    order = sorted(range(len(points)), key=lambda i: points[i].x)
    n = len(points)
    full = n // k
    groups = tuple(tuple(order[i * k : (i + 1) * k]) for i in range(full))
    flags = []
    for group in groups:
        gp = [(points[i].x, points[i].y) for i in group]
        spoiled = any(
            verts is not None and _hull_contains_all(gp, verts)
            for verts in obstacle_vertex_sets
        )
        flags.append(not spoiled)
    flagged = sum(flags)
    m = len(obstacle_vertex_sets)
    hypothesis = Fraction(m) < Fraction(n, 2 * k)
    conclusion = Fraction(flagged) > full - Fraction(n, 2 * k)
    return PartitionReport(
        k=k,
        groups=groups,
        flags=tuple(flags),
        flagged=flagged,
        full_groups=full,
        obstacle_count=m,
        identity_holds=flagged >= full - m,
        hypothesis_holds=hypothesis,
        conclusion_holds=conclusion,
    )


def partition_lemma_check(scene: Scene, k: int) -> PartitionReport:
    """Partition the scene's vertices by x into groups of k and flag the
    groups whose hulls trap no obstacle."""
    vertex_sets = [tuple((v.x, v.y) for v in poly.vertices) for poly in scene.obstacles]
    return _partition_report(scene.points, k, vertex_sets)


def partition_faces_check(points, g: Graph, faces, k: int) -> PartitionReport:
    """Partition check where the obstacles are faces of the drawing.

    The face ids usually come from an :class:`ObsResult` witness.  A face is
    treated as contained in a hull when all of its boundary nodes are; the
    unbounded face is never containable.
    """
    fs = build_arrangement(Drawing.of(points, g.edges))
    vertex_sets = []
    for fid in faces:
        f = fs.face(fid)
        if not f.bounded:
            vertex_sets.append(None)
        else:
            nodes = {i for cycle in f.cycles for i in cycle}
            vertex_sets.append(tuple(fs.nodes[i] for i in sorted(nodes)))
    return _partition_report(tuple(points), k, vertex_sets)


@dataclass(frozen=True)
class ExperimentReport:
    """Outcome summary of an obstacle-number run over many graphs."""

    n: int
    mode: str
    examined: int
    certified: int
    unresolved: int

    @property
    def fraction_certified(self) -> Fraction:
        return Fraction(self.certified, self.examined)

    @property
    def fraction_unresolved(self) -> Fraction:
        return Fraction(self.unresolved, self.examined)


def random_graph_experiment(
    n: int,
    trials: int,
    seed: int,
    placements: int = 40,
    grid: int | None = None,
    exhaustive: bool = False,
) -> ExperimentReport:
    """Fraction of edge-probability-½ graphs certified to need at most one obstacle.

    Exhaustive mode (n ≤ 5) walks all 2^C(n,2) labeled graphs instead of
    sampling.  Deterministic for a fixed seed: per-graph placement seeds are
    drawn from one master generator in graph order.
    """
    if trials < 1:
        raise ObsrepError("trials must be >= 1")
    master = random.Random(seed)
    if exhaustive:
        graphs = list(all_graphs(n))
        mode = "exhaustive"
    else:
        graphs = [gnp_half(n, master) for _ in range(trials)]
        mode = "sampled"
    certified = 0
    for g in graphs:
        sub_seed = master.getrandbits(64)
        result = obs_upper_bound(g, placements, grid, sub_seed)
        if result.certified_exact and result.upper_bound <= 1:
            certified += 1
    return ExperimentReport(
        n=n,
        mode=mode,
        examined=len(graphs),
        certified=certified,
        unresolved=len(graphs) - certified,
    )
