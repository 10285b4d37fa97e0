import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from oracles import brute_weakly_chordal, graphs, has_induced_cycle_subset, naive_complement, simplicial_elimination_chordal
from weakchordal import Graph, complement, is_chordal, is_weakly_chordal
from weakchordal.graph import complete_graph, cycle_graph, is_chordless_cycle, path_graph
from weakchordal.randgen import gnm_random, max_edges
from weakchordal.recognition import HOLE_IN_COMPLEMENT, HOLE_IN_GRAPH


def test_c5_is_not_weakly_chordal():
    verdict = is_weakly_chordal(cycle_graph(5))
    assert not verdict
    assert verdict.location == HOLE_IN_GRAPH
    assert verdict.witness == (0, 1, 2, 3, 4)


@pytest.mark.parametrize("g", [complete_graph(5), path_graph(6), Graph(7, [(0, i) for i in range(1, 7)])])
def test_chordal_graphs_are_weakly_chordal(g):
    verdict = is_weakly_chordal(g)
    assert verdict.is_weakly_chordal and verdict.witness is None


def test_c7_complement_hole_is_in_complement():
    g = complement(cycle_graph(7))
    assert not has_induced_cycle_subset(g, 5)
    assert has_induced_cycle_subset(naive_complement(g), 5)
    verdict = is_weakly_chordal(g)
    assert not verdict and verdict.location == HOLE_IN_COMPLEMENT
    assert is_chordless_cycle(cycle_graph(7), verdict.witness) and len(verdict.witness) == 7


def test_is_chordal_examples(single_fill_graph):
    assert not is_chordal(cycle_graph(4))
    assert is_chordal(complete_graph(4))
    h = single_fill_graph.copy()
    h.add_edge(3, 4)
    assert is_chordal(h)
    assert simplicial_elimination_chordal(h)
    assert not is_chordal(single_fill_graph)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 7))
def test_exhaustive_chordality_and_self_complementarity(n):
    slots = max_edges(n)
    for mask in range(1 << slots):
        g = Graph.from_edge_mask(n, mask)
        assert is_chordal(g) == simplicial_elimination_chordal(g), mask
        ours = is_weakly_chordal(g).is_weakly_chordal
        assert ours == is_weakly_chordal(complement(g)).is_weakly_chordal, mask
        if is_chordal(g):
            assert ours


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_weakly_chordal_matches_subset_oracle(g):
    verdict = is_weakly_chordal(g)
    assert verdict.is_weakly_chordal == brute_weakly_chordal(g)
    if not verdict:
        host = g if verdict.location == HOLE_IN_GRAPH else complement(g)
        assert len(verdict.witness) >= 5 and is_chordless_cycle(host, verdict.witness)


def test_chordality_agrees_with_networkx():
    rng = np.random.default_rng(0)
    for _ in range(500):
        n = int(rng.integers(1, 13))
        g = gnm_random(n, int(rng.integers(0, max_edges(n) + 1)), int(rng.integers(2**32)))
        ng = nx.Graph()
        ng.add_nodes_from(range(n))
        ng.add_edges_from(g.edges())
        assert is_chordal(g) == nx.is_chordal(ng)
