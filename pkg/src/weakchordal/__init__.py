"""Generate weakly chordal graphs from random graphs.

A random G(n, m) graph is made connected, triangulated with the
minimum-degree-vertex heuristic, and then as many fill edges as possible
are deleted again without creating a hole or an anti-hole.
"""

from .graph import (
    ChordlessPath,
    Edge,
    Graph,
    GraphInputError,
    chordless_p3_between,
    chordless_p4_between,
    complement,
    connected_components,
    has_long_chordless_cycle,
    induced_subgraph,
)
from .pipeline import PipelineReport, PipelineRun, generate_weakly_chordal, run_pipeline
from .randgen import connect_components, gnm_random, sample_edge_count
from .recognition import RecognitionVerdict, is_chordal, is_weakly_chordal
from .triangulate import TriangulationResult, mdv_triangulate
from .wcd import (
    AntiholeWitness,
    DeletionOutcome,
    HoleWitness,
    LongAntiholeWitness,
    can_delete,
    chordal_to_weakly_chordal,
    find_antihole_config,
    find_hole_config,
    find_long_antihole,
)

__all__ = [name for name in dir() if not name.startswith("_")]
