"""Detector-versus-oracle differential testing.

For a weakly chordal graph ``g`` and each edge ``e``, :func:`can_delete`
should say yes exactly when the brute-force oracle finds ``g - e`` weakly
chordal.  Small ``n`` can be covered exhaustively; larger ``n`` is sampled.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Edge, Graph
from .randgen import gnm_random, max_edges, stream
from .recognition import is_weakly_chordal
from .triangulate import mdv_triangulate
from .wcd import Witness, can_delete


@dataclass
class Mismatch:
    graph: Graph
    edge: Edge
    detector_allows: bool
    oracle_allows: bool
    witness: Witness | None = None
    oracle_cycle: tuple[int, ...] | None = None
    oracle_location: str | None = None

    def describe(self) -> str:
        edges = " ".join(f"{u}-{v}" for u, v in self.graph.edges())
        what = (
            f"oracle {self.oracle_location} {self.oracle_cycle}"
            if self.detector_allows
            else f"detector witness {self.witness}"
        )
        return f"n={self.graph.n} edge={tuple(self.edge)} detector={self.detector_allows} oracle={self.oracle_allows} {what} graph=[{edges}]"


@dataclass
class DiffResult:
    n: int
    graphs: int = 0
    probes: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)


def _probe(g: Graph, result: DiffResult, oracle, long_antiholes: bool) -> None:
    result.graphs += 1
    for e in g.edges():
        allowed, witness = can_delete(g, e, long_antiholes=long_antiholes)
        g.remove_edge(*e)
        verdict = oracle(g)
        g.add_edge(*e)
        result.probes += 1
        if allowed != verdict.is_weakly_chordal:
            result.mismatches.append(
                Mismatch(g.copy(), e, allowed, verdict.is_weakly_chordal, witness, verdict.witness, verdict.location)
            )


def exhaustive_difftest(n: int, long_antiholes: bool = True) -> DiffResult:
    """Every labelled weakly chordal graph on ``n`` vertices, every edge."""
    slots = max_edges(n)
    verdicts = [is_weakly_chordal(Graph.from_edge_mask(n, mask)) for mask in range(1 << slots)]
    result = DiffResult(n)
    for mask, verdict in enumerate(verdicts):
        if not verdict.is_weakly_chordal:
            continue
        g = Graph.from_edge_mask(n, mask)
        _probe(g, result, lambda h: verdicts[h.edge_mask()], long_antiholes)
    return result


def random_weakly_chordal(n: int, rng: np.random.Generator) -> Graph:
    """A weakly chordal graph with some spread: a random graph if it qualifies,
    otherwise its triangulation thinned by a random number of oracle-checked deletions."""
    g = gnm_random(n, int(rng.integers(max_edges(n) + 1)), rng)
    if is_weakly_chordal(g):
        return g
    h = mdv_triangulate(g).h
    edges = h.edges()
    budget = int(rng.integers(len(edges) + 1))
    for i in rng.permutation(len(edges)):
        if budget == 0:
            break
        e = edges[i]
        h.remove_edge(*e)
        if is_weakly_chordal(h):
            budget -= 1
        else:
            h.add_edge(*e)
    return h


def random_difftest(n: int, count: int, seed: int, long_antiholes: bool = True) -> DiffResult:
    rng = stream(seed, 0)
    result = DiffResult(n)
    for _ in range(count):
        _probe(random_weakly_chordal(n, rng), result, is_weakly_chordal, long_antiholes)
    return result
