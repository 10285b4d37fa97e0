"""Simple undirected graphs and the structural queries built on them.

A :class:`Graph` keeps two views of the same adjacency relation: one
bit-packed row per vertex (the adjacency matrix, giving constant-time edge
tests and cheap set algebra) and one neighbour set per vertex (for
enumeration).  Vertices are the integers ``0 .. n-1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import NamedTuple

ChordlessPath = tuple[int, ...]


class GraphInputError(ValueError):
    """Raised for out-of-range vertices, self-loops and violated preconditions."""


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, u: int, v: int) -> Edge:
        """Canonical edge with the smaller endpoint first."""
        if u == v:
            raise GraphInputError(f"self-loop on vertex {u}")
        return cls(u, v) if u < v else cls(v, u)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Mutable simple undirected graph on vertices ``0 .. n-1``."""

    __slots__ = ("_n", "_m", "_rows", "_nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        self._n = n
        self._m = 0
        self._rows = [0] * n
        self._nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphInputError(f"vertex {v} out of range [0, {self._n})")

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._rows[u] >> v & 1)

    def add_edge(self, u: int, v: int) -> bool:
        """Insert ``{u, v}``; return False if it was already present."""
        self._check(u)
        self._check(v)
        if u == v:
            raise GraphInputError(f"self-loop on vertex {u}")
        if self._rows[u] >> v & 1:
            return False
        self._rows[u] |= 1 << v
        self._rows[v] |= 1 << u
        self._nbrs[u].add(v)
        self._nbrs[v].add(u)
        self._m += 1
        return True

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise GraphInputError(f"edge {{{u}, {v}}} not present")
        self._rows[u] &= ~(1 << v)
        self._rows[v] &= ~(1 << u)
        self._nbrs[u].discard(v)
        self._nbrs[v].discard(u)
        self._m -= 1

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(self._nbrs[v])

    def row(self, v: int) -> int:
        """Adjacency-matrix row of ``v`` packed into an int (bit ``u`` set iff u ~ v)."""
        return self._rows[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._nbrs]

    def edges(self) -> list[Edge]:
        """All edges in canonical form, ascending lexicographic order."""
        return [Edge(u, v) for u in range(self._n) for v in sorted(self._nbrs[u]) if u < v]

    def copy(self) -> Graph:
        g = Graph(self._n)
        g._m = self._m
        g._rows = list(self._rows)
        g._nbrs = [set(s) for s in self._nbrs]
        return g

    def edge_mask(self) -> int:
        """Edge set encoded over the lexicographic slot order of ``(u, v)``, u < v.

        Inverse of :meth:`from_edge_mask`; used to index exhaustive tables.
        """
        mask = 0
        slot = 0
        for u in range(self._n):
            for v in range(u + 1, self._n):
                if self._rows[u] >> v & 1:
                    mask |= 1 << slot
                slot += 1
        return mask

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> Graph:
        g = cls(n)
        slot = 0
        for u in range(n):
            for v in range(u + 1, n):
                if mask >> slot & 1:
                    g.add_edge(u, v)
                slot += 1
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, tuple(self._rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={[tuple(e) for e in self.edges()]})"


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def complement(g: Graph) -> Graph:
    n = g.n
    full = (1 << n) - 1
    return Graph(n, ((u, v) for u in range(n) for v in iter_bits(full & ~g.row(u) & ~((2 << u) - 1))))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``s``, relabelled densely in ascending order.

    Returns the subgraph and the old-to-new vertex map.
    """
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} out of range [0, {g.n})")
    mapping = {old: new for new, old in enumerate(verts)}
    sub = Graph(len(verts))
    for old in verts:
        for w in g.neighbors(old):
            if w in mapping and old < w:
                sub.add_edge(mapping[old], mapping[w])
    return sub, mapping


def connected_components(g: Graph) -> list[set[int]]:
    """Components in discovery order (by smallest vertex)."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.row(v)
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        comps.append(set(iter_bits(comp)))
    return comps


def _require_nonadjacent(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise GraphInputError("endpoints must differ")
    if g.has_edge(u, v):
        raise GraphInputError(f"{{{u}, {v}}} is still an edge; delete it first")


def chordless_p3_between(g: Graph, u: int, v: int) -> list[ChordlessPath]:
    _require_nonadjacent(g, u, v)
    return [(u, x, v) for x in iter_bits(g.row(u) & g.row(v))]


def p4_middle_masks(g: Graph, u: int, v: int) -> dict[int, int]:
    """For each first internal vertex ``x`` of a P4 ``(u, x, y, v)``, the mask of valid ``y``.

    Only vertices with at least one valid ``y`` appear.
    """
    ru, rv = g.row(u), g.row(v)
    xs = ru & ~rv
    ys = rv & ~ru
    out = {}
    for x in iter_bits(xs):
        mask = g.row(x) & ys
        if mask:
            out[x] = mask
    return out


def chordless_p4_between(g: Graph, u: int, v: int) -> list[ChordlessPath]:
    _require_nonadjacent(g, u, v)
    return [(u, x, y, v) for x, ys in p4_middle_masks(g, u, v).items() for y in iter_bits(ys)]


def is_chordless_path(g: Graph, path: ChordlessPath) -> bool:
    k = len(path)
    if len(set(path)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(path[i], path[j]) != (j == i + 1):
                return False
    return True


def is_chordless_cycle(g: Graph, cycle: ChordlessPath) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def has_long_chordless_cycle(g: Graph, min_len: int = 5) -> ChordlessPath | None:
    """Find an induced cycle with at least ``min_len`` vertices, or return None.

    Exhaustive depth-first search over induced paths.  Each start vertex
    ``s`` is tried in ascending order and only vertices above ``s`` are used,
    so the first cycle reported has the smallest possible minimum vertex.
    """
    if min_len < 4:
        raise GraphInputError(f"min_len must be at least 4, got {min_len}")
    n = g.n
    rows = [g.row(v) for v in range(n)]
    for s in range(n):
        above = ((1 << n) - 1) & ~((2 << s) - 1)
        rs = rows[s]
        # Stack frames: (path, blocked) where blocked holds the closed
        # neighbourhoods of every path vertex except s and the last one.
        for p1 in iter_bits(rs & above):
            stack = [((s, p1), 0)]
            while stack:
                path, blocked = stack.pop()
                last = path[-1]
                cand = rows[last] & above & ~blocked
                closing = cand & rs
                if closing and len(path) + 1 >= min_len and len(path) > 2:
                    w = (closing & -closing).bit_length() - 1
                    return path + (w,)
                extend = cand & ~rs
                if not extend:
                    continue
                new_blocked = blocked | rows[last] | (1 << last)
                # Push in reverse so the smallest extension is explored first.
                for w in sorted(iter_bits(extend), reverse=True):
                    stack.append((path + (w,), new_blocked))
    return None
