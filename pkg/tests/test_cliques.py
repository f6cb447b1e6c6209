from __future__ import annotations

import pytest

from cliquedyn.cliques import (
    BudgetError,
    clique_graph,
    iterate_k,
    max_cliques,
)
from cliquedyn.graph import Graph
from cliquedyn.hexgrid import gen_hex_patch
from cliquedyn.isomorphism import is_isomorphic
from helpers import complete_graph, cycle_graph


def test_k4_single_clique():
    assert max_cliques(complete_graph(4)) == [frozenset(range(4))]


def test_octahedron_cliques_are_faces(octa):
    cliques = max_cliques(octa)
    assert len(cliques) == 8 and all(len(c) == 3 for c in cliques)


def test_cycle_cliques_are_edges():
    cliques = max_cliques(cycle_graph(6))
    assert len(cliques) == 6 and all(len(c) == 2 for c in cliques)


def test_every_clique_is_maximal_on_corpus(octa, icosa, t44):
    corpus = [octa, icosa, t44, gen_hex_patch(3).graph, cycle_graph(9)]
    for g in corpus:
        for clique in max_cliques(g):
            members = sorted(clique)
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    assert g.has_edge(a, b)
            for outside in set(g.vertices) - clique:
                assert not clique <= g.neighbors(outside)


def test_clique_graph_of_k4_is_point():
    kg = clique_graph(complete_graph(4))
    assert kg.n == 1 and kg.edge_count == 0


def test_clique_graph_of_octahedron(octa):
    kg = clique_graph(octa)
    assert kg.n == 8 and kg.edge_count == 24
    # antipodal faces are the only non-adjacent pairs: K8 minus a matching
    matching = [(0, 1), (2, 3), (4, 5), (6, 7)]
    k8_minus = Graph(
        range(8),
        [
            (a, b)
            for a in range(8)
            for b in range(a + 1, 8)
            if (a, b) not in matching
        ],
    )
    assert is_isomorphic(kg, k8_minus)


def test_clique_graph_edges_match_pairwise_intersections(octa, t44):
    for g in (octa, t44):
        kg = clique_graph(g)
        members = {i: frozenset(kg.labels[i]) for i in kg.vertices}
        for i in kg.vertices:
            for j in kg.vertices:
                if i < j:
                    assert kg.has_edge(i, j) == bool(members[i] & members[j])


def test_clique_graph_labels_trace_members(t44):
    kg = clique_graph(t44)
    assert kg.n == 32
    for i in kg.vertices:
        assert len(kg.labels[i]) == 3


def test_iterate_complete_graphs_converge_to_a_point():
    for n in range(1, 6):
        trace = iterate_k(complete_graph(n), 4)
        assert trace.verdict == "converged"
        assert trace.period == 1
        assert trace.steps[-1].vertices == 1
        if n >= 2:
            assert trace.converged_at == 1


def test_iterate_torus_growth(t44):
    trace = iterate_k(t44, 3)
    counts = [s.vertices for s in trace.steps]
    assert counts[0] == 16 and counts[1] == 32
    assert all(a < b for a, b in zip(counts, counts[1:]))
    assert trace.verdict == "diverging_evidence"


def test_iterate_octahedron_growth(octa):
    trace = iterate_k(octa, 3)
    counts = [s.vertices for s in trace.steps]
    assert counts == [6, 8, 16, 256]
    assert trace.verdict == "diverging_evidence"


def test_iterate_octahedron_hits_clique_cap(octa):
    trace = iterate_k(octa, 4, vertex_budget=1000)
    assert trace.verdict == "budget_exceeded"
    assert "maximal cliques" in trace.detail


def test_converged_verdict_is_budget_stable():
    g = complete_graph(4)
    small = iterate_k(g, 5, vertex_budget=50, node_budget=10_000)
    large = iterate_k(g, 5)
    assert (small.verdict, small.converged_at, small.period) == (
        large.verdict,
        large.converged_at,
        large.period,
    )


def test_iterate_respects_vertex_budget(octa):
    trace = iterate_k(octa, 6, vertex_budget=10)
    assert trace.verdict == "budget_exceeded"
    assert trace.detail
    assert all(s.vertices <= 10 for s in trace.steps)


def test_max_cliques_node_budget(t44):
    with pytest.raises(BudgetError):
        max_cliques(t44, node_budget=3)


def test_iterate_path_collapses_to_a_point():
    p4 = Graph(range(4), [(0, 1), (1, 2), (2, 3)])
    trace = iterate_k(p4, 6)
    assert trace.verdict == "converged"
    repeat = trace.graphs[trace.converged_at + trace.period]
    assert is_isomorphic(trace.graphs[trace.converged_at], repeat)
