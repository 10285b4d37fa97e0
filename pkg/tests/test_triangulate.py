import numpy as np
import pytest

from oracles import minimum_fill, simplicial_elimination_chordal
from weakchordal import Graph, is_chordal, mdv_triangulate
from weakchordal.graph import complete_graph, cycle_graph, path_graph
from weakchordal.randgen import gnm_random, max_edges, stream


def _corpus(count, seed, max_n=12):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        yield gnm_random(n, int(rng.integers(0, max_edges(n) + 1)), int(rng.integers(2**32)))


def check_result(g, res):
    fq = list(res.fq)
    assert len(fq) == len(set(fq))
    assert all(not g.has_edge(*e) and res.h.has_edge(*e) for e in fq)
    assert set(res.h.edges()) == set(g.edges()) | set(fq)
    assert res.h.m - g.m == len(fq)
    assert is_chordal(res.h)


@pytest.mark.parametrize("g", [complete_graph(4), path_graph(7), Graph(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)])])
def test_chordal_inputs_get_no_fill(g):
    res = mdv_triangulate(g)
    assert list(res.fq) == [] and res.h == g


def test_chordal_input_can_still_get_fill():
    # A degree-2 vertex bridging two K6s is chordal but not simplicial, and has minimum degree.
    g = Graph(13, [(a, b) for blk in (range(6), range(6, 12)) for a in blk for b in blk if a < b])
    g.add_edge(12, 0)
    g.add_edge(12, 6)
    assert is_chordal(g)
    assert list(mdv_triangulate(g).fq) == [(0, 6)]


def test_single_fill_example(single_fill_graph):
    g = single_fill_graph
    assert g.degrees() == [3, 2, 4, 4, 3, 2]
    res = mdv_triangulate(g)
    assert list(res.fq) == [(3, 4)]
    assert res.elimination_order[:2] == [5, 1]
    check_result(g, res)


def test_c5_needs_two_fill_edges():
    g = cycle_graph(5)
    assert minimum_fill(g) == 2
    res = mdv_triangulate(g)
    assert len(res.fq) == 2
    check_result(g, res)


def test_fill_order_is_lexicographic_within_a_step():
    # K_{3,4}: the degree-3 side ties, so vertex 6 goes first and completes {0, 1, 2}.
    g = Graph(7, [(a, b) for a in range(3) for b in range(3, 7)])
    res = mdv_triangulate(g)
    assert res.elimination_order[0] == 6
    assert list(res.fq) == [(0, 1), (0, 2), (1, 2)]


def test_random_corpus_invariants():
    for g in _corpus(1000, 42):
        res = mdv_triangulate(g)
        check_result(g, res)
        assert simplicial_elimination_chordal(res.h)
        assert list(mdv_triangulate(res.h).fq) == []


def test_pendants_do_not_change_fill():
    rng = np.random.default_rng(5)
    for g in _corpus(300, 6):
        targets = [v for v in range(g.n) if g.degree(v) != 1]
        if not targets:
            continue
        picks = rng.choice(targets, size=int(rng.integers(1, 4)))
        big = Graph(g.n + len(picks), g.edges())
        for i, v in enumerate(picks):
            big.add_edge(int(v), g.n + i)
        assert list(mdv_triangulate(big).fq) == list(mdv_triangulate(g).fq)


def test_random_tie_break_reproducible():
    for g in _corpus(200, 8):
        a = mdv_triangulate(g, stream(3, 3))
        b = mdv_triangulate(g, stream(3, 3))
        assert list(a.fq) == list(b.fq) and a.elimination_order == b.elimination_order
        check_result(g, a)


def test_elimination_order_skips_only_pruned_vertices():
    for g in _corpus(200, 9):
        res = mdv_triangulate(g)
        pruned = {v for v in range(g.n) if g.degree(v) == 1}
        assert sorted(res.elimination_order) == sorted(set(range(g.n)) - pruned)
