"""Fill-edge deletion that keeps a graph weakly chordal.

An edge ``{u, v}`` of a weakly chordal graph is tentatively removed and the
result is searched for the two hole shapes (a P3 and a P4, or two P4s,
between ``u`` and ``v`` whose internal vertices are disjoint and mutually
non-adjacent) and for the six-vertex anti-hole (two P3s and a P4 inducing
the complement of C6).  A five-vertex anti-hole is itself a C5, so the hole
search already covers it.

Anti-holes on seven or more vertices can also appear after a single
deletion and neither shape catches them; :func:`find_long_antihole`
searches the complement for those and :func:`can_delete` runs it last
unless asked not to.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field

from .graph import (
    ChordlessPath,
    Edge,
    Graph,
    GraphInputError,
    chordless_p3_between,
    iter_bits,
    p4_middle_masks,
)

P3_P4 = "P3+P4"
P4_P4 = "P4+P4"


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class HoleWitness:
    kind: str
    path_a: ChordlessPath
    path_b: ChordlessPath

    def cycle(self) -> ChordlessPath:
        """The hole as a vertex sequence: ``path_a`` then ``path_b`` walked back."""
        return self.path_a + tuple(reversed(self.path_b[1:-1]))


@dataclass(frozen=True)
class AntiholeWitness:
    p3_a: ChordlessPath
    p3_b: ChordlessPath
    p4: ChordlessPath
    chord_a: Edge
    chord_b: Edge

    def vertices(self) -> tuple[int, ...]:
        u, v = self.p4[0], self.p4[-1]
        return (u, v, self.p3_a[1], self.p3_b[1], self.p4[1], self.p4[2])


@dataclass(frozen=True)
class LongAntiholeWitness:
    """Anti-hole on seven or more vertices: ``cycle`` is a hole in the complement."""

    cycle: ChordlessPath


Witness = HoleWitness | AntiholeWitness | LongAntiholeWitness


@dataclass
class QueryStats:
    """Path counts seen by one deletion query, for complexity checks."""

    edge: Edge
    deg_u: int
    deg_v: int
    p3_count: int
    p4_count: int


def _closed(t: Graph, x: int) -> int:
    return t.row(x) | 1 << x


def _check_deleted(t: Graph, u: int, v: int) -> None:
    if u == v:
        raise GraphInputError("endpoints must differ")
    if t.has_edge(u, v):
        raise GraphInputError(f"{{{u}, {v}}} must be removed before probing")


def find_hole_config(t: Graph, u: int, v: int) -> HoleWitness | None:
    """Search ``t`` (with ``{u, v}`` already removed) for a hole through ``u`` and ``v``.

    P3/P4 pairs are tried before P4/P4 pairs; within each group the first
    pair in lexicographic order wins.
    """
    _check_deleted(t, u, v)
    p4 = p4_middle_masks(t, u, v)
    if not p4:
        return None
    for _, z, _ in chordless_p3_between(t, u, v):
        free = ~_closed(t, z)
        for x, ys in p4.items():
            if free >> x & 1 and ys & free:
                return HoleWitness(P3_P4, (u, z, v), (u, x, _low(ys & free), v))
    for x, ys in p4.items():
        for y in iter_bits(ys):
            free = ~(_closed(t, x) | _closed(t, y))
            for x2, ys2 in p4.items():
                if free >> x2 & 1 and ys2 & free:
                    return HoleWitness(P4_P4, (u, x, y, v), (u, x2, _low(ys2 & free), v))
    return None


def find_antihole_config(t: Graph, u: int, v: int) -> AntiholeWitness | None:
    """Search ``t`` (with ``{u, v}`` already removed) for a six-vertex anti-hole on ``u``, ``v``.

    The configuration is a P4 ``(u, x, y, v)`` and P3s through ``a`` and ``b``
    where ``a`` sees ``x`` but not ``y``, ``b`` sees ``y`` but not ``x``, and
    ``a``, ``b`` are non-adjacent; exactly then the six vertices induce a
    3-regular graph.  P4s are scanned in lexicographic order and, for each,
    the lexicographically smallest ``(p3_a, p3_b)`` pair is reported.
    """
    _check_deleted(t, u, v)
    common = t.row(u) & t.row(v)
    if not common:
        return None
    for x, ys in p4_middle_masks(t, u, v).items():
        rx = t.row(x)
        for y in iter_bits(ys):
            ry = t.row(y)
            side_x = common & rx & ~ry
            side_y = common & ry & ~rx
            if not side_x or not side_y:
                continue
            best = None
            for a in iter_bits(side_x):
                rest = side_y & ~t.row(a)
                if rest:
                    b = _low(rest)
                    pair = (a, b) if a < b else (b, a)
                    if best is None or pair < best:
                        best = pair
            if best is None:
                continue
            a, b = best
            return AntiholeWitness(
                (u, a, v),
                (u, b, v),
                (u, x, y, v),
                Edge.of(a, x if rx >> a & 1 else y),
                Edge.of(b, x if rx >> b & 1 else y),
            )
    return None


def find_long_antihole(t: Graph, u: int, v: int, min_len: int = 7) -> LongAntiholeWitness | None:
    """Search for an anti-hole on at least ``min_len`` vertices created by removing ``{u, v}``.

    Such an anti-hole is a hole through the new edge ``{u, v}`` of the
    complement, i.e. an induced ``u``-``v`` path of the complement of ``t``
    with ``uv`` still counted as an edge of ``t``.  Depth-first over induced
    paths, smallest next vertex first.
    """
    _check_deleted(t, u, v)
    full = (1 << t.n) - 1
    crow = [full & ~t.row(x) & ~(1 << x) for x in range(t.n)]
    # Complement rows with {u, v} treated as a non-edge.
    crow[u] &= ~(1 << v)
    crow[v] &= ~(1 << u)
    stack = [((u,), 0)]
    while stack:
        path, blocked = stack.pop()
        last = path[-1]
        cand = crow[last] & ~blocked & ~(1 << last)
        if cand >> v & 1:
            if len(path) + 1 >= min_len:
                return LongAntiholeWitness(path + (v,))
            # last sees v, so no longer induced path can come through it
            continue
        new_blocked = blocked | crow[last] | 1 << last
        for w in sorted(iter_bits(cand), reverse=True):
            stack.append((path + (w,), new_blocked))
    return None


def can_delete(
    t: Graph,
    e: tuple[int, int],
    stats: list[QueryStats] | None = None,
    long_antiholes: bool = True,
) -> tuple[bool, Witness | None]:
    """Probe whether removing ``e`` from ``t`` keeps it free of holes and anti-holes.

    The hole shapes are tried first, then the six-vertex anti-hole, then
    (when ``long_antiholes`` is set) anti-holes on seven or more vertices.
    ``t`` is left unchanged.  When ``stats`` is given a :class:`QueryStats`
    record for this probe is appended to it.
    """
    u, v = e
    if not t.has_edge(u, v):
        raise GraphInputError(f"edge {{{u}, {v}}} not present")
    t.remove_edge(u, v)
    try:
        if stats is not None:
            p4 = p4_middle_masks(t, u, v)
            stats.append(
                QueryStats(
                    Edge.of(u, v),
                    t.degree(u),
                    t.degree(v),
                    bin(t.row(u) & t.row(v)).count("1"),
                    sum(bin(ys).count("1") for ys in p4.values()),
                )
            )
        witness = find_hole_config(t, u, v) or find_antihole_config(t, u, v)
        if witness is None and long_antiholes:
            witness = find_long_antihole(t, u, v)
    finally:
        t.add_edge(u, v)
    return witness is None, witness


@dataclass
class DeletionOutcome:
    final_graph: Graph
    deleted: list[Edge] = field(default_factory=list)
    retained: list[Edge] = field(default_factory=list)
    rounds: int = 0
    witnesses: dict[Edge, Witness] = field(default_factory=dict)


def chordal_to_weakly_chordal(
    h: Graph,
    fq: Iterable[tuple[int, int]],
    stats: list[QueryStats] | None = None,
    long_antiholes: bool = True,
) -> DeletionOutcome:
    """Delete as many queued fill edges from ``h`` as weak chordality allows.

    Each round pops every edge queued at the start of the round exactly
    once; an edge whose removal would create a hole or an anti-hole goes to
    the back of the queue.  Rounds stop once one deletes nothing or the
    queue is empty.  ``witnesses`` maps each retained edge to the last
    configuration that blocked it.  ``h`` is not modified.
    """
    t = h.copy()
    queue = deque(Edge.of(u, v) for u, v in fq)
    if len(set(queue)) != len(queue):
        raise GraphInputError("fill queue contains duplicate edges")
    for e in queue:
        if not t.has_edge(*e):
            raise GraphInputError(f"fill edge {tuple(e)} not present in the graph")

    out = DeletionOutcome(t)
    prev_size, new_size = 0, len(queue)
    while prev_size != new_size and new_size != 0:
        prev_size = new_size
        for _ in range(prev_size):
            e = queue.popleft()
            ok, witness = can_delete(t, e, stats, long_antiholes)
            if ok:
                t.remove_edge(*e)
                out.deleted.append(e)
                out.witnesses.pop(e, None)
            else:
                queue.append(e)
                out.witnesses[e] = witness
        new_size = len(queue)
        out.rounds += 1
    out.retained = list(queue)
    return out
