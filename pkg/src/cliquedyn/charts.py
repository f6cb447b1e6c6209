"""Hexagonal charts: finding triangular patches inside a graph and
extending them across their neighbourhoods.

A chart maps lattice coordinates injectively onto an induced subgraph.
Charts are found by anchoring an ordered facet at a triangle corner and
developing the rest of the domain facet by facet: on a host whose
neighbourhoods are cycles or paths, an edge has at most two common
neighbours, so each new vertex is forced once the facet on the far side
of its base edge is known.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, closed_neighbourhood, induced_subgraph
from .hexgrid import (
    BASIS,
    UNIT_STEPS,
    Coord,
    add,
    are_adjacent,
    delta_coords,
    delta_graph,
    flipped_delta_coords,
    gen_delta,
    sub,
)
from .isomorphism import induced_embeddings, induced_images
from .surface import SurfaceReport, boundary_distance, validate_surface


class ChartError(ValueError):
    pass


class MarginError(ChartError):
    """An operation needs more room between the image and the host boundary."""


class ChartConflictError(ChartError):
    """Facet-path developments collided; the host is not locally grid-like."""


class Chart:
    """Injective coordinate map onto an induced triangular subgraph."""

    __slots__ = ("m", "mapping", "target", "_image", "_inverse")

    def __init__(self, m: int, mapping: dict[Coord, int], target: Graph):
        self.m = m
        self.mapping = mapping
        self.target = target
        self._image: frozenset[int] | None = None
        self._inverse: dict[int, Coord] | None = None

    def __getitem__(self, c: Coord) -> int:
        return self.mapping[c]

    def __contains__(self, c: Coord) -> bool:
        return c in self.mapping

    @property
    def image(self) -> frozenset[int]:
        if self._image is None:
            self._image = frozenset(self.mapping.values())
        return self._image

    @property
    def inverse(self) -> dict[int, Coord]:
        if self._inverse is None:
            self._inverse = {v: c for c, v in self.mapping.items()}
        return self._inverse

    def sub_support(self, offset: Coord, size: int) -> frozenset[int]:
        """Image of the translated side-``size`` triangle inside the domain."""
        return frozenset(self.mapping[add(c, offset)] for c in delta_coords(size))

    def key(self) -> tuple:
        return tuple(sorted(self.mapping.items()))

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "map": {",".join(map(str, c)): v for c, v in sorted(self.mapping.items())},
        }

    def __repr__(self) -> str:
        return f"<Chart m={self.m} image={sorted(self.image)[:4]}...>"


@lru_cache(maxsize=32)
def _host_surface(g: Graph) -> SurfaceReport:
    return validate_surface(g)


@lru_cache(maxsize=32)
def _host_boundary_distance(g: Graph) -> dict[int, float]:
    return boundary_distance(g, _host_surface(g))


def _require_patch_surface(g: Graph) -> SurfaceReport:
    report = _host_surface(g)
    if report.invalid_vertices:
        raise ChartError(
            f"host is not locally cyclic with boundary (vertex {report.invalid_vertices[0]})"
        )
    return report


def min_boundary_distance(g: Graph, support) -> float:
    dist = _host_boundary_distance(g)
    return min(dist[v] for v in support)


@lru_cache(maxsize=64)
def _fill_plan(m: int) -> tuple[tuple[Coord, Coord, Coord, Coord], ...]:
    """Development order after the corner anchors: each entry is
    (new, base1, base2, far) where {new, base1, base2} is a facet and far
    is the other lattice facet over the edge (base1, base2)."""
    plan: list[tuple[Coord, Coord, Coord, Coord]] = []
    for r in range(m - 2, -1, -1):
        width = m - r
        for s in range(1, width):
            t = width - s
            plan.append(
                ((r, s, t), (r + 1, s - 1, t), (r + 1, s, t - 1), (r + 2, s - 1, t - 1))
            )
        plan.append(
            ((r, 0, width), (r + 1, 0, width - 1), (r, 1, width - 1), (r + 1, 1, width - 2))
        )
        plan.append(
            ((r, width, 0), (r + 1, width - 1, 0), (r, width - 1, 1), (r + 1, width - 2, 1))
        )
    return tuple(plan)


def _develop(g: Graph, assign: dict[Coord, int], m: int) -> dict[Coord, int] | None:
    mapping = dict(assign)
    used = set(mapping.values())
    if len(used) != len(mapping):
        return None
    for new, b1, b2, far in _fill_plan(m):
        cand = (g.neighbors(mapping[b1]) & g.neighbors(mapping[b2])) - {mapping[far]}
        if len(cand) != 1:
            return None
        (x,) = cand
        if x in used:
            return None
        mapping[new] = x
        used.add(x)
    return mapping


def _is_induced_triangle(g: Graph, mapping: dict[Coord, int]) -> bool:
    coords = sorted(mapping)
    for i, a in enumerate(coords):
        for b in coords[i + 1 :]:
            if are_adjacent(a, b) != g.has_edge(mapping[a], mapping[b]):
                return False
    return True


def find_standard_charts(g: Graph, m: int) -> list[Chart]:
    """Every chart of the side-m triangle onto an induced subgraph of g.

    For m >= 1, each image admits exactly six charts on a locally
    grid-like host (one per ordered corner facet)."""
    if m == 0:
        return [Chart(0, {(0, 0, 0): v}, g) for v in g.vertices]
    _require_patch_surface(g)
    from .surface import facets as _facets

    charts = []
    corner, c1, c2 = (m, 0, 0), (m - 1, 1, 0), (m - 1, 0, 1)
    for f in _facets(g):
        a, b, c = f
        for u, v, w in (
            (a, b, c),
            (a, c, b),
            (b, a, c),
            (b, c, a),
            (c, a, b),
            (c, b, a),
        ):
            anchor = {corner: u, c1: v, c2: w}
            mapping = _develop(g, anchor, m) if m >= 2 else anchor
            if mapping is None:
                continue
            if len(set(mapping.values())) != len(mapping):
                continue
            if _is_induced_triangle(g, mapping):
                charts.append(Chart(m, mapping, g))
    charts.sort(key=Chart.key)
    return charts


def charts_by_image(charts: list[Chart]) -> dict[frozenset[int], list[Chart]]:
    groups: dict[frozenset[int], list[Chart]] = {}
    for ch in charts:
        groups.setdefault(ch.image, []).append(ch)
    return groups


def chart_of_support(g: Graph, support) -> Chart:
    """Some chart whose image is exactly ``support`` (raises if none)."""
    support = frozenset(support)
    m = _side_from_size(len(support))
    region = gen_delta(m)
    sub = induced_subgraph(g, support)
    for emb in induced_embeddings(region.graph, sub, limit=1):
        mapping = {region.coord_of[i]: emb[i] for i in emb}
        return Chart(m, mapping, g)
    raise ChartError(f"support of size {len(support)} is not a side-{m} triangle")


def _side_from_size(size: int) -> int:
    m = 0
    while (m + 1) * (m + 2) // 2 < size:
        m += 1
    if (m + 1) * (m + 2) // 2 != size:
        raise ChartError(f"{size} vertices cannot form a triangular patch")
    return m


class ExtendedChart:
    """A chart on the side-m triangle extended across its neighbourhood."""

    __slots__ = ("base", "mapping", "dead")

    def __init__(self, base: Chart, mapping: dict[Coord, int], dead: frozenset[Coord]):
        self.base = base
        self.mapping = mapping
        self.dead = dead

    def __getitem__(self, c: Coord) -> int:
        return self.mapping[c]

    def __contains__(self, c: Coord) -> bool:
        return c in self.mapping

    def translate_image(self, d: Coord) -> frozenset[int] | None:
        coords = [add(c, d) for c in delta_coords(self.base.m)]
        if any(c not in self.mapping for c in coords):
            return None
        return frozenset(self.mapping[c] for c in coords)

    def twisted_image(self) -> frozenset[int] | None:
        if self.base.m != 3:
            return None
        coords = flipped_delta_coords(3, (2, 2, 2))
        if any(c not in self.mapping for c in coords):
            return None
        return frozenset(self.mapping[c] for c in coords)


def _extension_domain(m: int) -> list[Coord]:
    coords = set(delta_coords(m))
    for d in UNIT_STEPS:
        coords.update(add(c, d) for c in delta_coords(m))
    if m == 3:
        coords.update(flipped_delta_coords(3, (2, 2, 2)))
    return sorted(coords)


def _lattice_facet_thirds(a: Coord, b: Coord) -> tuple[Coord, Coord]:
    """The two lattice coordinates completing edge (a, b) to a facet."""
    thirds = []
    for d in UNIT_STEPS:
        c = add(a, d)
        if are_adjacent(c, b):
            thirds.append(c)
    assert len(thirds) == 2
    return thirds[0], thirds[1]


def extend_chart(g: Graph, chart: Chart) -> ExtendedChart:
    """Extend a standard chart across the neighbourhood of its image.

    Every same-size triangle inside the closed neighbourhood of the image
    becomes the image of a unit translate of the domain (plus the twisted
    copy when m = 3).  On hosts with a boundary, the image must keep
    distance at least 2 from it."""
    m = chart.m
    if m < 3:
        raise ChartError("chart extension needs side length at least 3")
    report = _require_patch_surface(g)
    if report.boundary.n and min_boundary_distance(g, chart.image) < 2:
        raise MarginError("chart image is within distance 2 of the host boundary")

    mapping = dict(chart.mapping)
    used = set(mapping.values())
    base_coords = set(chart.mapping)
    pending = set(_extension_domain(m)) - base_coords
    dead: set[Coord] = set()

    progress = True
    while progress:
        progress = False
        for c in sorted(pending):
            candidates: set[int] = set()
            determined = False
            for d in UNIT_STEPS:
                b1 = add(c, d)
                if b1 not in mapping:
                    continue
                for b2 in _lattice_facet_thirds(c, b1):
                    if b2 <= b1 or b2 not in mapping:
                        continue
                    far1, far2 = _lattice_facet_thirds(b1, b2)
                    far = far1 if far2 == c else far2
                    if far not in mapping:
                        continue
                    determined = True
                    cand = (
                        g.neighbors(mapping[b1]) & g.neighbors(mapping[b2])
                    ) - {mapping[far]}
                    candidates |= cand
            if not determined:
                continue
            if len(candidates) > 1:
                raise ChartConflictError(
                    f"facet-path developments disagree at offset {c}"
                )
            if not candidates:
                pending.discard(c)
                dead.add(c)
                progress = True
                continue
            (x,) = candidates
            if x in used:
                raise ChartConflictError(
                    f"extension is not injective at offset {c} (vertex {x})"
                )
            mapping[c] = x
            used.add(x)
            pending.discard(c)
            progress = True
    return ExtendedChart(chart, mapping, frozenset(dead | pending))


def neighbour_triangles(g: Graph, support) -> list[frozenset[int]]:
    """All same-size triangles inside the closed neighbourhood of the given
    triangular support, excluding the support itself.

    Sizes 1 and 2 fall back to exhaustive search inside the closed
    neighbourhood (at most 21 vertices); larger sizes go through chart
    extension."""
    support = frozenset(support)
    m = _side_from_size(len(support))
    if m < 1:
        raise ChartError("neighbour enumeration needs side length at least 1")
    report = _require_patch_surface(g)
    if m <= 2:
        if report.boundary.n and min_boundary_distance(g, support) < 1:
            raise MarginError("support is within distance 1 of the host boundary")
        hood = closed_neighbourhood(g, support)
        sub = induced_subgraph(g, hood)
        images = induced_images(delta_graph(m), sub)
        return sorted(
            (img for img in images if img != support), key=sorted
        )
    chart = chart_of_support(g, support)
    ext = extend_chart(g, chart)
    out = []
    for d in UNIT_STEPS:
        img = ext.translate_image(d)
        if img is not None and img != support and _image_is_triangle(g, img, m):
            out.append(img)
    twisted = ext.twisted_image()
    if twisted is not None and twisted != support and _image_is_triangle(g, twisted, m):
        out.append(twisted)
    return sorted(set(out), key=sorted)


def _image_is_triangle(g: Graph, image: frozenset[int], m: int) -> bool:
    sub = induced_subgraph(g, image)
    for _ in induced_embeddings(delta_graph(m), sub, limit=1):
        return True
    return False
