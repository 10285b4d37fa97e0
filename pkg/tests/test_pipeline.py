import numpy as np
import pytest

from weakchordal import Graph, GraphInputError, generate_weakly_chordal, is_weakly_chordal, run_pipeline
from weakchordal.graph import complete_graph, connected_components
from weakchordal.pipeline import generate_run


def check_report(run):
    r = run.report
    assert r.fill_added == r.fill_deleted + r.fill_retained
    assert run.final.m == r.m_input + r.repair_edges + r.fill_retained
    assert r.fill_added == len(run.fill_queue)
    assert set(run.deleted) | set(run.retained) == set(run.fill_queue)


def test_complete_graph_exits_early():
    g, report = generate_weakly_chordal(4, 6, seed=1)
    assert g == complete_graph(4)
    assert report.input_was_weakly_chordal and report.fill_added == 0 and report.rounds == 0


def test_injected_hole_example(hole_example):
    run = run_pipeline(hole_example, seed=0)
    r = run.report
    assert (r.n, r.m_input, r.repair_edges) == (6, 8, 0)
    assert not r.input_was_weakly_chordal
    assert (r.fill_added, r.fill_deleted, r.fill_retained) == (2, 1, 1)
    check_report(run)


def test_disconnected_input_is_repaired():
    g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    run = run_pipeline(g, seed=4)
    assert run.report.repair_edges == 2
    assert len(connected_components(run.arbitrary)) == 1
    assert is_weakly_chordal(run.final)
    check_report(run)


def test_reports_and_outputs_over_corpus():
    rng = np.random.default_rng(2)
    for _ in range(300):
        n = int(rng.integers(2, 13))
        run = generate_run(n, None, int(rng.integers(2**64, dtype=np.uint64)))
        check_report(run)
        assert is_weakly_chordal(run.final)
        assert len(connected_components(run.final)) == 1


def test_repeatable():
    for seed in range(20):
        a = generate_run(9, None, seed)
        b = generate_run(9, None, seed)
        assert a.final == b.final and a.report == b.report and a.fill_queue == b.fill_queue


def test_random_ties_flag():
    for seed in range(30):
        run = generate_run(10, None, seed, random_ties=True)
        check_report(run)
        assert is_weakly_chordal(run.final)


def test_parameter_errors():
    with pytest.raises(GraphInputError):
        generate_weakly_chordal(1)
    with pytest.raises(GraphInputError):
        generate_weakly_chordal(4, 7)
    with pytest.raises(GraphInputError):
        generate_weakly_chordal(4, 3, seed=-1)
