from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from cliquedyn.generators import hex_torus, octahedron
from cliquedyn.graph import Graph
from cliquedyn.hexgrid import delta_graph, gen_delta
from cliquedyn.isomorphism import (
    BudgetExceededError,
    canonical_hash,
    find_isomorphism,
    induced_embeddings,
    induced_images,
    is_isomorphic,
)
from helpers import brute_force_isomorphic, complete_graph, cycle_graph


def relabel(g: Graph, perm: dict[int, int]) -> Graph:
    return Graph(perm.values(), [(perm[a], perm[b]) for a, b in g.edges()])


def test_k3_matches_lattice_triangle():
    assert is_isomorphic(complete_graph(3), gen_delta(1).graph)


def test_cycles_of_different_order():
    assert not is_isomorphic(cycle_graph(6), cycle_graph(7))


def test_same_order_different_structure():
    p3 = Graph(range(3), [(0, 1), (1, 2)])
    assert not is_isomorphic(complete_graph(3), p3)
    assert canonical_hash(complete_graph(3)) != canonical_hash(p3)


def test_octahedron_is_complete_tripartite(octa):
    parts = [(0, 3), (1, 4), (2, 5)]
    edges = [
        (u, v)
        for u in range(6)
        for v in range(u + 1, 6)
        if not any({u, v} == set(p) for p in parts)
    ]
    k222 = Graph(range(6), edges)
    assert brute_force_isomorphic(octa, k222)
    mapping = find_isomorphism(octa, k222)
    assert mapping is not None
    for a, b in octa.edges():
        assert k222.has_edge(mapping[a], mapping[b])


def test_torus_coordinate_shift_has_equal_hash(t44):
    shift = {a * 4 + b: ((a + 1) % 4) * 4 + (b + 2) % 4 for a in range(4) for b in range(4)}
    assert canonical_hash(t44) == canonical_hash(relabel(t44, shift))
    assert find_isomorphism(t44, relabel(t44, shift)) is not None


def test_equivalence_relation_spot_checks(octa, t44):
    samples = [octa, t44, gen_delta(3).graph, cycle_graph(9)]
    for g in samples:
        assert is_isomorphic(g, g)
    for g in samples:
        for h in samples:
            assert is_isomorphic(g, h) == is_isomorphic(h, g)
    # transitivity through a relabelled middle graph
    mid = relabel(octa, {v: v + 50 for v in octa.vertices})
    assert is_isomorphic(octa, mid) and is_isomorphic(mid, octa)


def test_budget_signal_is_distinct():
    with pytest.raises(BudgetExceededError):
        canonical_hash(cycle_graph(40), budget=10)


@st.composite
def graph_and_permutation(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(range(n), [p for p, keep in zip(pairs, mask) if keep])
    perm = draw(st.permutations(range(n)))
    return g, {v: perm[v] + 100 for v in range(n)}


@settings(max_examples=60, deadline=None)
@given(graph_and_permutation())
def test_relabelling_preserves_hash_and_witness(gp):
    g, perm = gp
    h = relabel(g, perm)
    assert canonical_hash(g) == canonical_hash(h)
    mapping = find_isomorphism(g, h)
    assert mapping is not None
    for a, b in g.edges():
        assert h.has_edge(mapping[a], mapping[b])
    assert sorted(mapping.values()) == sorted(h.vertices)


@settings(max_examples=40, deadline=None)
@given(graph_and_permutation())
def test_exactness_against_brute_force(gp):
    g, perm = gp
    # flip one pair to usually break isomorphism, then compare verdicts
    h = relabel(g, perm)
    vs = list(h.vertices)
    if len(vs) >= 2:
        a, b = vs[0], vs[1]
        edges = set(h.edges())
        key = (min(a, b), max(a, b))
        edges = edges - {key} if key in edges else edges | {key}
        h = Graph(vs, edges)
    assert is_isomorphic(g, h) == brute_force_isomorphic(g, h)


def test_induced_embeddings_count_triangles(octa):
    images = induced_images(delta_graph(1), octa)
    assert len(images) == 8
    embeddings = list(induced_embeddings(delta_graph(1), octa))
    assert len(embeddings) == 48  # six charts per facet


def test_induced_embeddings_require_induced():
    # the 4-cycle contains paths of length 2 but no induced triangle
    assert induced_images(delta_graph(1), cycle_graph(4)) == []


def test_empty_pattern_embeds_once(octa):
    assert list(induced_embeddings(Graph([]), octa)) == [{}]
