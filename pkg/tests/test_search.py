import random

import pytest

from obsrep.errors import ObsrepError
from obsrep.graphs import Graph, complete_graph, cycle_graph, empty_graph
from obsrep.sampling import random_placement
from obsrep.scene import Scene
from obsrep.search import (
    ObsResult,
    PlacementCover,
    Witness,
    edge_deletion_chain,
    min_obstacles_for_placement,
    obs_upper_bound,
    partition_faces_check,
    partition_lemma_check,
    random_graph_experiment,
    replay_witness,
    suggested_group_size,
)

from conftest import poly, pts

QUAD = pts((0, 0), (10, 1), (11, 9), (1, 8))  # convex, distinct x


# --- per-placement minimum ---


def test_complete_graph_needs_no_obstacles():
    cover = min_obstacles_for_placement(QUAD, complete_graph(4))
    assert cover == PlacementCover(0, ())


def test_square_cycle_needs_one_face():
    cover = min_obstacles_for_placement(QUAD, cycle_graph(4))
    # the inner quadrilateral face covers both missing diagonals
    assert cover.size == 1
    assert len(cover.faces) == 1


def test_path_is_covered_by_the_unbounded_face():
    cover = min_obstacles_for_placement(pts((0, 0), (5, 1), (10, 0)), Graph.of(3, [(0, 1), (1, 2)]))
    assert cover.size == 1


def test_placement_size_mismatch():
    with pytest.raises(ObsrepError):
        min_obstacles_for_placement(QUAD, complete_graph(3))


# --- upper bounds with witnesses ---


def test_complete_graphs_are_certified_at_zero():
    for n in (2, 4, 6):
        result = obs_upper_bound(complete_graph(n), placements=3, seed=1)
        assert result.upper_bound == 0
        assert result.certified_exact
        assert result.witness.faces == ()
        assert replay_witness(complete_graph(n), result)


def test_simple_incomplete_graphs_are_certified_at_one():
    for g in (empty_graph(4), cycle_graph(4), complete_graph(4).without_edge(0, 1)):
        result = obs_upper_bound(g, placements=30, seed=7)
        assert result.upper_bound == 1
        assert result.certified_exact
        assert replay_witness(g, result)


def test_incomplete_graphs_never_certify_below_one():
    result = obs_upper_bound(empty_graph(3), placements=2, seed=0)
    assert result.upper_bound >= 1


def test_result_is_reproducible():
    g = cycle_graph(5)
    a = obs_upper_bound(g, placements=12, seed=42)
    b = obs_upper_bound(g, placements=12, seed=42)
    c = obs_upper_bound(g, placements=12, seed=43)
    assert a == b
    assert a.witness.points == b.witness.points
    # a different seed explores different placements
    assert a.witness.points != c.witness.points


def test_replay_rejects_tampered_results():
    g = cycle_graph(4)
    result = obs_upper_bound(g, placements=30, seed=7)
    assert replay_witness(g, result)
    # claim a better bound than the witness placement achieves
    cheat = ObsResult(0, result.witness, True)
    assert not replay_witness(g, cheat)
    # swap in a face set that covers nothing
    rigged = ObsResult(
        result.upper_bound,
        Witness(result.witness.points, ()),
        result.certified_exact,
    )
    assert not replay_witness(g, rigged)
    # a complete graph's witness must carry no faces at all
    full = obs_upper_bound(complete_graph(3), placements=1, seed=0)
    assert not replay_witness(
        complete_graph(3), ObsResult(0, Witness(full.witness.points, (0,)), True)
    )


def test_obs_upper_bound_validation():
    with pytest.raises(ObsrepError):
        obs_upper_bound(cycle_graph(4), placements=0, seed=1)
    with pytest.raises(ObsrepError):
        obs_upper_bound(cycle_graph(4), placements=1, grid=15, seed=1)  # < n*n
    with pytest.raises(ObsrepError):
        obs_upper_bound(cycle_graph(6), placements=1, seed=1, exhaustive_grid=2)


def test_exhaustive_grid_sweep_improves_a_bad_run():
    g = cycle_graph(4)
    # this single placement happens to need two faces ...
    sloppy = obs_upper_bound(g, placements=1, grid=50, seed=3)
    assert sloppy.upper_bound == 2
    assert not sloppy.certified_exact
    # ... but sweeping a 3x3 grid finds a one-face placement and certifies it
    swept = obs_upper_bound(g, placements=1, grid=50, seed=3, exhaustive_grid=3)
    assert swept.upper_bound == 1
    assert swept.certified_exact
    assert replay_witness(g, swept)


# --- deletion chains ---


def test_chain_from_complete_to_empty():
    record = edge_deletion_chain(4, empty_graph(4), seed=11)
    assert len(record.steps) == 7  # K4 plus six deletions
    assert record.steps[0].deleted is None
    assert record.steps[0].result.upper_bound == 0
    bounds = record.bounds()
    assert all(b2 - b1 <= 1 for b1, b2 in zip(bounds, bounds[1:]))
    assert bounds[-1] == 1  # the empty graph ends certified at one
    assert record.steps[-1].result.certified_exact
    # first_reached pairs each bound with the first step index attaining it
    assert dict(record.first_reached)[0] == 0


def test_chain_deletion_orders():
    lex = edge_deletion_chain(4, cycle_graph(4), seed=5, order="lex")
    assert [s.deleted for s in lex.steps] == [None, (0, 2), (1, 3)]
    rnd1 = edge_deletion_chain(4, cycle_graph(4), seed=5, order="random")
    rnd2 = edge_deletion_chain(4, cycle_graph(4), seed=5, order="random")
    assert rnd1 == rnd2
    assert {s.deleted for s in rnd1.steps} == {None, (0, 2), (1, 3)}


def test_chain_validation():
    with pytest.raises(ObsrepError):
        edge_deletion_chain(4, empty_graph(5), seed=1)
    with pytest.raises(ObsrepError):
        edge_deletion_chain(4, empty_graph(4), seed=1, order="sorted")


# --- x-sorted group partition ---


def test_suggested_group_size_values():
    assert suggested_group_size(1) == 1
    assert suggested_group_size(2) == 5
    assert suggested_group_size(3) == 7
    assert suggested_group_size(10) == 16
    with pytest.raises(ObsrepError):
        suggested_group_size(0)


def test_suggested_group_size_formula():
    # floor(5 * log2(n)), verified by exact powers
    for n in range(2, 200):
        v = suggested_group_size(n)
        assert 2**v <= n**5 < 2 ** (v + 1)


def test_partition_flags_hexagon_scene(hexagon_scene):
    report = partition_lemma_check(hexagon_scene, 1)
    # single-vertex hulls cannot trap the hexagon, so every group is flagged
    assert report.full_groups == 3
    assert report.flagged == 3
    assert report.flags == (True, True, True)
    assert report.identity_holds
    assert report.hypothesis_holds  # 1 obstacle < 3/2
    assert report.conclusion_holds  # 3 > 3 - 3/2


def test_partition_spots_a_trapped_obstacle():
    scene = Scene(QUAD, (poly((5, 4), (6, 4), (5, 5)),))
    report = partition_lemma_check(scene, 4)
    assert report.full_groups == 1
    assert report.flags == (False,)
    assert report.flagged == 0
    assert report.identity_holds  # 0 >= 1 - 1
    assert not report.hypothesis_holds  # 1 obstacle is not < 4/8
    assert not report.conclusion_holds


def test_partition_ignores_the_partial_group():
    scene = Scene(pts((0, 0), (3, 5), (7, 1), (12, 6), (20, 2)))
    report = partition_lemma_check(scene, 2)
    assert report.full_groups == 2
    assert len(report.groups) == 2
    flat = [i for group in report.groups for i in group]
    assert len(flat) == 4  # the fifth (rightmost) vertex is left out


def test_partition_validation(hexagon_scene):
    with pytest.raises(ObsrepError):
        partition_lemma_check(hexagon_scene, 0)
    shared_x = Scene(pts((0, 0), (0, 5), (3, 1)))
    with pytest.raises(ObsrepError):
        partition_lemma_check(shared_x, 1)


def test_partition_over_witness_faces():
    g = cycle_graph(4)
    # the bounded quadrilateral face is inside the hull of all four vertices
    whole = partition_faces_check(QUAD, g, faces=(0,), k=4)
    assert whole.flags == (False,)
    # split into two x-groups: each hull is a segment trapping nothing
    halves = partition_faces_check(QUAD, g, faces=(0,), k=2)
    assert halves.full_groups == 2
    assert halves.flags == (True, True)


def test_unbounded_witness_face_spoils_nothing():
    g = empty_graph(4)
    result = obs_upper_bound(g, placements=5, seed=2)
    report = partition_faces_check(result.witness.points, g, result.witness.faces, k=2)
    assert report.obstacle_count == 1
    assert report.flagged == report.full_groups


def test_partition_identity_on_search_witnesses():
    rng = random.Random(314)
    for g in (empty_graph(5), cycle_graph(5), complete_graph(5).without_edge(1, 3)):
        result = obs_upper_bound(g, placements=25, seed=rng.randrange(2**32))
        for k in (1, 2, 3):
            report = partition_faces_check(
                result.witness.points, g, result.witness.faces, k
            )
            assert report.identity_holds
            assert report.flagged >= report.full_groups - report.obstacle_count


# --- the random-graph experiment ---


def test_experiment_is_deterministic():
    a = random_graph_experiment(5, trials=6, seed=99, placements=8)
    b = random_graph_experiment(5, trials=6, seed=99, placements=8)
    assert a == b
    assert a.mode == "sampled"
    assert a.examined == 6
    assert a.certified + a.unresolved == 6
    assert a.fraction_certified + a.fraction_unresolved == 1


def test_exhaustive_experiment_covers_all_graphs():
    report = random_graph_experiment(3, trials=1, seed=4, exhaustive=True)
    assert report.mode == "exhaustive"
    assert report.examined == 8  # 2 ** C(3,2)
    assert report.fraction_certified == 1


def test_experiment_validation():
    with pytest.raises(ObsrepError):
        random_graph_experiment(4, trials=0, seed=1)
