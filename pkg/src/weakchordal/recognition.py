"""Brute-force chordality and weak-chordality predicates.

These are the ground truth the edge-deletion detectors are checked against,
so they are written straight from the definitions: a graph is weakly
chordal when neither it nor its complement has an induced cycle on five or
more vertices.  The search is exponential in the worst case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import ChordlessPath, Graph, complement, has_long_chordless_cycle

HOLE_IN_GRAPH = "hole in G"
HOLE_IN_COMPLEMENT = "hole in complement"


@dataclass(frozen=True)
class RecognitionVerdict:
    is_weakly_chordal: bool
    witness: ChordlessPath | None = None
    location: str | None = None

    def __bool__(self) -> bool:
        return self.is_weakly_chordal


def is_weakly_chordal(g: Graph) -> RecognitionVerdict:
    """Holes are searched in ``g`` first, then in its complement."""
    cycle = has_long_chordless_cycle(g, 5)
    if cycle is not None:
        return RecognitionVerdict(False, cycle, HOLE_IN_GRAPH)
    cycle = has_long_chordless_cycle(complement(g), 5)
    if cycle is not None:
        return RecognitionVerdict(False, cycle, HOLE_IN_COMPLEMENT)
    return RecognitionVerdict(True)


def is_chordal(g: Graph) -> bool:
    return has_long_chordless_cycle(g, 4) is None
