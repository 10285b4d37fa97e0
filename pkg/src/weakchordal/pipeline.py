"""End-to-end generation: random graph, repair, early exit, triangulate, delete."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

from .graph import Edge, Graph, GraphInputError
from .randgen import (
    STREAM_GNM,
    STREAM_REPAIR,
    STREAM_TIE_BREAK,
    check_seed,
    connect_components,
    gnm_random,
    max_edges,
    sample_edge_count,
    stream,
)
from .recognition import is_weakly_chordal
from .triangulate import mdv_triangulate
from .wcd import QueryStats, Witness, chordal_to_weakly_chordal


@dataclass(frozen=True)
class PipelineReport:
    n: int
    m_input: int
    repair_edges: int
    input_was_weakly_chordal: bool
    fill_added: int
    fill_deleted: int
    fill_retained: int
    rounds: int
    seed: int

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclass
class PipelineRun:
    """Every stage of one run, kept for stage export and inspection."""

    arbitrary: Graph
    chordal: Graph
    final: Graph
    fill_queue: list[Edge]
    deleted: list[Edge]
    retained: list[Edge]
    repair: list[Edge]
    report: PipelineReport
    witnesses: dict[Edge, Witness] = field(default_factory=dict)


def run_pipeline(
    g: Graph,
    seed: int = 0,
    *,
    m_input: int | None = None,
    random_ties: bool = False,
    long_antiholes: bool = True,
    stats: list[QueryStats] | None = None,
) -> PipelineRun:
    """Turn ``g`` into a weakly chordal graph.

    ``g`` is repaired to be connected, returned as is when already weakly
    chordal, and otherwise triangulated and thinned.  ``m_input`` only
    labels the report (defaults to ``g.m``).  ``long_antiholes=False``
    restricts deletion checks to the hole and six-vertex anti-hole shapes,
    which can let anti-holes on seven or more vertices through.
    """
    seed = check_seed(seed)
    connected, repair = connect_components(g, stream(seed, STREAM_REPAIR))
    m_input = g.m if m_input is None else m_input

    if is_weakly_chordal(connected):
        report = PipelineReport(g.n, m_input, len(repair), True, 0, 0, 0, 0, seed)
        return PipelineRun(connected, connected.copy(), connected.copy(), [], [], [], repair, report)

    rng = stream(seed, STREAM_TIE_BREAK) if random_ties else None
    tri = mdv_triangulate(connected, rng)
    outcome = chordal_to_weakly_chordal(tri.h, tri.fq, stats, long_antiholes)
    report = PipelineReport(
        n=g.n,
        m_input=m_input,
        repair_edges=len(repair),
        input_was_weakly_chordal=False,
        fill_added=len(tri.fq),
        fill_deleted=len(outcome.deleted),
        fill_retained=len(outcome.retained),
        rounds=outcome.rounds,
        seed=seed,
    )
    return PipelineRun(
        connected,
        tri.h,
        outcome.final_graph,
        list(tri.fq),
        outcome.deleted,
        outcome.retained,
        repair,
        report,
        outcome.witnesses,
    )


def generate_run(n: int, m: int | None = None, seed: int = 0, **kwargs) -> PipelineRun:
    if n < 2:
        raise GraphInputError(f"n must be at least 2, got {n}")
    seed = check_seed(seed)
    if m is None:
        m = sample_edge_count(n, seed)
    elif not 0 <= m <= max_edges(n):
        raise GraphInputError(f"m must lie in [0, {max_edges(n)}] for n={n}, got {m}")
    g = gnm_random(n, m, stream(seed, STREAM_GNM))
    return run_pipeline(g, seed, **kwargs)


def generate_weakly_chordal(
    n: int, m: int | None = None, seed: int = 0, **kwargs
) -> tuple[Graph, PipelineReport]:
    """Random weakly chordal graph on ``n`` vertices; ``m`` is sampled when omitted."""
    run = generate_run(n, m, seed, **kwargs)
    return run.final, run.report
