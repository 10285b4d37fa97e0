"""Chordal embedding by the minimum-degree-vertex heuristic."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .graph import Edge, Graph


@dataclass
class TriangulationResult:
    h: Graph
    fq: deque[Edge] = field(default_factory=deque)
    elimination_order: list[int] = field(default_factory=list)


def mdv_triangulate(g: Graph, rng: np.random.Generator | None = None) -> TriangulationResult:
    """Make ``g`` chordal by repeatedly completing the neighbourhood of a minimum-degree vertex.

    ``H`` starts as a copy of ``g`` and keeps every vertex.  Degree-1
    vertices are pruned from the working copy once, up front; the remaining
    vertices are then eliminated one at a time.  Ties between minimum-degree
    vertices go to the highest index unless ``rng`` is given, in which case
    one is drawn uniformly.

    Fill edges are queued in creation order, lexicographically within one
    elimination step.  Pruned degree-1 vertices are not part of
    ``elimination_order``.
    """
    h = g.copy()
    work: dict[int, set[int]] = {v: set(g.neighbors(v)) for v in range(g.n)}
    for v in [v for v, nb in work.items() if len(nb) == 1]:
        for w in work.pop(v):
            if w in work:
                work[w].discard(v)

    fq: deque[Edge] = deque()
    order = []
    while work:
        low = min(len(nb) for nb in work.values())
        tied = [v for v, nb in work.items() if len(nb) == low]
        if rng is None:
            v = max(tied)
        else:
            v = tied[int(rng.integers(len(tied)))]
        nbrs = sorted(work[v])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if b not in work[a]:
                    work[a].add(b)
                    work[b].add(a)
                    h.add_edge(a, b)
                    fq.append(Edge(a, b))
        for w in nbrs:
            work[w].discard(v)
        del work[v]
        order.append(v)
    return TriangulationResult(h, fq, order)
