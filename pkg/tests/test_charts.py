from __future__ import annotations

import pytest

from cliquedyn.charts import (
    ChartError,
    MarginError,
    chart_of_support,
    charts_by_image,
    extend_chart,
    find_standard_charts,
    min_boundary_distance,
    neighbour_triangles,
)
from cliquedyn.hexgrid import (
    COORD_PERMUTATIONS,
    UNIT_STEPS,
    apply_permutation,
    are_adjacent,
    gen_delta,
    gen_hex_patch,
)


def interior_support(g, m, depth):
    groups = charts_by_image(find_standard_charts(g, m))
    deep = [img for img in groups if min_boundary_distance(g, img) >= depth]
    assert deep, f"no side-{m} triangle at depth {depth}"
    return sorted(deep, key=sorted)[0]


def test_six_charts_per_image(patch6):
    groups = charts_by_image(find_standard_charts(patch6.graph, 2))
    assert groups and all(len(cs) == 6 for cs in groups.values())


def test_no_triangles_of_side_two_in_octahedron(octa):
    assert find_standard_charts(octa, 2) == []


def test_torus_facet_charts(t44):
    charts = find_standard_charts(t44, 1)
    groups = charts_by_image(charts)
    assert len(groups) == 32
    assert len(charts) == 192


def test_charts_are_induced_isomorphisms(patch6):
    for chart in find_standard_charts(patch6.graph, 3)[:12]:
        coords = sorted(chart.mapping)
        for i, a in enumerate(coords):
            for b in coords[i + 1 :]:
                assert are_adjacent(a, b) == patch6.graph.has_edge(chart[a], chart[b])


def test_chart_symmetry_equivariance(patch6):
    charts = find_standard_charts(patch6.graph, 2)
    keys = {chart.key() for chart in charts}
    sample = charts[0]
    # recomposing with a coordinate permutation is again a found chart
    for perm in COORD_PERMUTATIONS:
        twisted = tuple(
            sorted((apply_permutation(perm, c), v) for c, v in sample.mapping.items())
        )
        assert twisted in keys


def test_m0_charts_are_vertices(octa):
    charts = find_standard_charts(octa, 0)
    assert sorted(ch[(0, 0, 0)] for ch in charts) == list(octa.vertices)


def test_extension_realises_all_directions(patch8):
    g = patch8.graph
    support = interior_support(g, 4, 3)
    ext = extend_chart(g, chart_of_support(g, support))
    for d in UNIT_STEPS:
        assert ext.translate_image(d) is not None
    assert ext.twisted_image() is None  # only defined for side 3


def test_extension_restriction_matches_base(patch8):
    g = patch8.graph
    support = interior_support(g, 3, 3)
    chart = chart_of_support(g, support)
    ext = extend_chart(g, chart)
    for c, v in chart.mapping.items():
        assert ext[c] == v
    assert ext.twisted_image() is not None


def test_extension_needs_side_three():
    g = gen_hex_patch(6).graph
    support = interior_support(g, 2, 3)
    with pytest.raises(ChartError):
        extend_chart(g, chart_of_support(g, support))


def test_extension_margin_error():
    patch = gen_hex_patch(6)
    g = patch.graph
    shallow = [
        img
        for img in charts_by_image(find_standard_charts(g, 5))
        if min_boundary_distance(g, img) < 2
    ]
    with pytest.raises(MarginError):
        extend_chart(g, chart_of_support(g, sorted(shallow, key=sorted)[0]))


@pytest.mark.parametrize("m,expected", [(1, 12), (2, 9), (3, 7), (4, 6), (5, 6)])
def test_neighbour_triangle_counts(m, expected):
    patch = gen_hex_patch(m + 4)
    support = interior_support(patch.graph, m, 3)
    assert len(neighbour_triangles(patch.graph, support)) == expected


def test_neighbour_triangles_live_in_neighbourhood(patch6):
    from cliquedyn.graph import closed_neighbourhood

    g = patch6.graph
    support = interior_support(g, 2, 3)
    hood = closed_neighbourhood(g, support)
    for t in neighbour_triangles(g, support):
        assert t <= hood and t != support


def test_single_direction_developments_agree(patch8):
    """Developing each neighbour separately matches the joint extension on
    every shared offset."""
    from cliquedyn.hexgrid import add, delta_coords

    g = patch8.graph
    support = interior_support(g, 4, 3)
    chart = chart_of_support(g, support)
    ext = extend_chart(g, chart)
    for d in UNIT_STEPS:
        image = ext.translate_image(d)
        assert image is not None
        lone = chart_of_support(g, image)
        # align the lone chart with the extension through shared vertices
        for c in delta_coords(4):
            offset = add(c, d)
            assert ext[offset] in image
            assert lone.inverse[ext[offset]] is not None


def test_chart_serialization(patch6):
    chart = find_standard_charts(patch6.graph, 1)[0]
    obj = chart.to_dict()
    assert obj["m"] == 1 and len(obj["map"]) == 3


def test_chart_finder_matches_embedding_oracle(octa, icosa, t44, genus2):
    """The facet-anchored development and the generic backtracking search
    enumerate the same triangle images on every host family."""
    from cliquedyn.hexgrid import delta_graph
    from cliquedyn.isomorphism import induced_images

    hosts = [octa, icosa, t44, genus2, gen_hex_patch(4).graph, gen_delta(5).graph]
    for host in hosts:
        for m in (1, 2, 3):
            fast = set(charts_by_image(find_standard_charts(host, m)))
            slow = set(induced_images(delta_graph(m), host))
            assert fast == slow
