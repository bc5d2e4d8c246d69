"""Obstacle representations of graphs: visibility, encodings, and search.

The package computes visibility graphs of points among polygonal obstacles,
encodes single-convex-obstacle scenes as rotating-tangent sequences (and
decodes them back), fingerprints scenes by the orientations of their point
triples, extracts the faces of straight-line drawings, and turns "how few
obstacles realize this graph?" into exact set cover over those faces —
together with the counting thresholds that show some graphs need many
obstacles.
"""

from .arrangement import (
    CoverInstance,
    Drawing,
    Face,
    FacePlacementReport,
    FaceSet,
    build_arrangement,
    face_complexity,
    face_nonedge_incidence,
    obstacle_face_check,
)
from .bounds import BoundsQuery, bounds_threshold
from .cover import solve_cover, solve_cover_first_hit
from .errors import (
    ContradictionError,
    CoverError,
    GeneralPositionError,
    GeometryError,
    ObsrepError,
    SceneError,
    SceneFormatError,
    SearchError,
    UnknownPatternError,
)
from .geom import Point, Polygon, Segment, convex_hull, is_general_position, orient
from .graphs import Graph, GraphError, complete_graph, cycle_graph, empty_graph
from .ordertype import (
    OrderType,
    SceneSignature,
    canonical_unlabeled,
    chirotope,
    perturb_scene,
    same_labeled_order_type,
    scene_signature,
)
from .scene import Scene, require_valid_scene, scene_violations
from .sceneio import load_graph, load_scene, save_scene
from .search import (
    ChainRecord,
    ChainStep,
    ExperimentReport,
    ObsResult,
    PartitionReport,
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
from .tangent import (
    PatternTable,
    TangentSequence,
    builtin_pattern_table,
    decode_visibility,
    derive_pattern_table,
    encode_tangent,
    pair_pattern,
)
from .visibility import (
    RepresentationReport,
    validate_representation,
    visibility_details,
    visibility_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsQuery",
    "ChainRecord",
    "ChainStep",
    "ContradictionError",
    "CoverError",
    "CoverInstance",
    "Drawing",
    "ExperimentReport",
    "Face",
    "FacePlacementReport",
    "FaceSet",
    "GeneralPositionError",
    "GeometryError",
    "Graph",
    "GraphError",
    "ObsResult",
    "ObsrepError",
    "OrderType",
    "PartitionReport",
    "PatternTable",
    "PlacementCover",
    "Point",
    "Polygon",
    "RepresentationReport",
    "Scene",
    "SceneError",
    "SceneFormatError",
    "SceneSignature",
    "SearchError",
    "Segment",
    "TangentSequence",
    "UnknownPatternError",
    "Witness",
    "bounds_threshold",
    "build_arrangement",
    "builtin_pattern_table",
    "canonical_unlabeled",
    "chirotope",
    "complete_graph",
    "convex_hull",
    "cycle_graph",
    "decode_visibility",
    "derive_pattern_table",
    "edge_deletion_chain",
    "empty_graph",
    "encode_tangent",
    "face_complexity",
    "face_nonedge_incidence",
    "is_general_position",
    "load_graph",
    "load_scene",
    "min_obstacles_for_placement",
    "obs_upper_bound",
    "obstacle_face_check",
    "orient",
    "pair_pattern",
    "partition_faces_check",
    "partition_lemma_check",
    "perturb_scene",
    "random_graph_experiment",
    "replay_witness",
    "require_valid_scene",
    "same_labeled_order_type",
    "save_scene",
    "scene_signature",
    "scene_violations",
    "solve_cover",
    "solve_cover_first_hit",
    "suggested_group_size",
    "validate_representation",
    "visibility_details",
    "visibility_graph",
]
