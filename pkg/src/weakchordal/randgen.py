"""Seeded G(n, m) generation and connectivity repair.

Randomness comes from numpy's PCG64 bit generator.  A user seed is a 64-bit
unsigned integer; each pipeline stage draws from its own child stream
(``SeedSequence(seed, spawn_key=(stage,))``) so changing how much one stage
consumes never shifts another stage's draws.
"""

from __future__ import annotations

import numpy as np

from .graph import Edge, Graph, GraphInputError, connected_components

SEED_MAX = 2**64 - 1

STREAM_EDGE_COUNT = 0
STREAM_GNM = 1
STREAM_REPAIR = 2
STREAM_TIE_BREAK = 3


def check_seed(seed: int) -> int:
    if not isinstance(seed, (int, np.integer)) or not 0 <= seed <= SEED_MAX:
        raise GraphInputError(f"seed must be an integer in [0, 2**64), got {seed!r}")
    return int(seed)


def stream(seed: int, stage: int) -> np.random.Generator:
    """Independent PCG64 generator for one pipeline stage."""
    ss = np.random.SeedSequence(check_seed(seed), spawn_key=(stage,))
    return np.random.Generator(np.random.PCG64(ss))


def _rng(seed: int | np.random.Generator, stage: int) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return stream(seed, stage)


def max_edges(n: int) -> int:
    return n * (n - 1) // 2


def gnm_random(n: int, m: int, seed: int | np.random.Generator) -> Graph:
    """Random graph with exactly ``m`` edges, by selection sampling.

    The ``n(n-1)/2`` slots ``(u, v)``, ``u < v``, are visited in
    lexicographic order and each is kept with probability
    ``(m - kept) / remaining``, drawn as an exact integer comparison.
    """
    if n < 1:
        raise GraphInputError(f"n must be at least 1, got {n}")
    total = max_edges(n)
    if not 0 <= m <= total:
        raise GraphInputError(f"m must lie in [0, {total}] for n={n}, got {m}")
    rng = _rng(seed, STREAM_GNM)
    g = Graph(n)
    kept = 0
    remaining = total
    for u in range(n):
        for v in range(u + 1, n):
            if kept == m:
                return g
            if remaining == m - kept or rng.integers(remaining) < m - kept:
                g.add_edge(u, v)
                kept += 1
            remaining -= 1
    return g


def sample_edge_count(n: int, seed: int | np.random.Generator) -> int:
    """Uniform draw from ``[n - 1, n(n-1)/2]``."""
    if n < 2:
        raise GraphInputError(f"n must be at least 2, got {n}")
    rng = _rng(seed, STREAM_EDGE_COUNT)
    return int(rng.integers(n - 1, max_edges(n), endpoint=True))


def connect_components(g: Graph, seed: int | np.random.Generator) -> tuple[Graph, list[Edge]]:
    """Join consecutive components (in discovery order) with one random edge each."""
    rng = _rng(seed, STREAM_REPAIR)
    comps = [sorted(c) for c in connected_components(g)]
    out = g.copy()
    added = []
    for left, right in zip(comps, comps[1:]):
        a = left[int(rng.integers(len(left)))]
        b = right[int(rng.integers(len(right)))]
        out.add_edge(a, b)
        added.append(Edge.of(a, b))
    return out, added
