"""The level graph of triangular subgraphs and its clique structure.

Vertices are the induced triangular subgraphs of the host whose side
length has the parity of ``n`` and is at most ``n``.  Edges follow four
containment rules: same-size triangles are adjacent when one lies in the
closed neighbourhood of the other; a triangle two sizes smaller must be
contained; four sizes smaller must additionally avoid the boundary of the
larger; six sizes smaller must avoid even the closed neighbourhood of
that boundary.

Cliques of this graph arrive in exactly two shapes, one anchored at a
triangle one size up, one anchored at a host vertex; the resulting
correspondence with the next level graph is what the verification entry
point certifies on deep interiors of patches.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .charts import Chart, chart_of_support, find_standard_charts
from .cliques import max_cliques
from .graph import Graph, GraphError, closed_neighbourhood
from .hexgrid import BASIS, Coord, add, delta_coords
from .surface import SurfaceReport, boundary_distance, validate_surface


class GeoError(GraphError):
    pass


class GeoMarginError(GeoError):
    pass


def _side_length(size: int) -> int:
    m = 0
    while (m + 1) * (m + 2) // 2 < size:
        m += 1
    return m


@dataclass(frozen=True)
class GeoVertex:
    level: int
    support: frozenset[int]

    def key(self) -> tuple:
        return (self.level, tuple(sorted(self.support)))


class GeoGraph:
    """Immutable level graph over a fixed host."""

    def __init__(self, host, n, margin, verts, charts, adj, bdist):
        self.host: Graph = host
        self.n: int = n
        self.margin: int = margin
        self.verts: list[GeoVertex] = verts
        self.charts: list[Chart | None] = charts
        self.adj: list[frozenset[int]] = [frozenset(a) for a in adj]
        self.bdist: dict[int, float] = bdist
        self.support_index: dict[frozenset[int], int] = {
            v.support: i for i, v in enumerate(verts)
        }
        self.by_level: dict[int, list[int]] = {}
        self.membership: dict[int, list[int]] = {}
        for i, v in enumerate(verts):
            self.by_level.setdefault(v.level, []).append(i)
            for host_v in v.support:
                self.membership.setdefault(host_v, []).append(i)

    def __len__(self) -> int:
        return len(self.verts)

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def gid(self, support) -> int:
        try:
            return self.support_index[frozenset(support)]
        except KeyError:
            raise GeoError(f"no vertex with support {sorted(support)}") from None

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def as_graph(self) -> Graph:
        edges = [(i, j) for i in range(len(self.verts)) for j in self.adj[i] if i < j]
        return Graph(
            range(len(self.verts)),
            edges,
            name=f"levels<=({self.n})",
            labels={i: (v.level, tuple(sorted(v.support))) for i, v in enumerate(self.verts)},
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "margin": self.margin,
            "vertices": [
                {"level": v.level, "support": sorted(v.support)} for v in self.verts
            ],
            "edges": [[i, j] for i in range(len(self.verts)) for j in self.adj[i] if i < j],
        }


class GeoBuilder:
    """Caches per-host chart enumeration so several level graphs over the
    same host share the expensive work."""

    def __init__(self, host: Graph):
        self.host = host
        self.report: SurfaceReport = validate_surface(host)
        if self.report.invalid_vertices:
            raise GeoError(
                f"host vertex {self.report.invalid_vertices[0]} has no cyclic or path neighbourhood"
            )
        self.bdist = boundary_distance(host, self.report)
        self._charts: dict[int, list[Chart]] = {}
        self._images: dict[int, dict[frozenset[int], Chart]] = {}

    def charts(self, m: int) -> list[Chart]:
        if m not in self._charts:
            self._charts[m] = find_standard_charts(self.host, m)
        return self._charts[m]

    def images(self, m: int) -> dict[frozenset[int], Chart]:
        if m not in self._images:
            groups: dict[frozenset[int], Chart] = {}
            for ch in self.charts(m):
                groups.setdefault(ch.image, ch)
            self._images[m] = groups
        return self._images[m]

    def support_margin(self, support) -> float:
        return min(self.bdist[v] for v in support)

    def build(self, n: int, margin: int = 0) -> GeoGraph:
        if n < 0 or margin < 0:
            raise GeoError("n and margin must be non-negative")
        levels = list(range(n % 2, n + 1, 2))
        verts: list[GeoVertex] = []
        charts: list[Chart | None] = []
        for m in levels:
            if m == 0:
                for v in self.host.vertices:
                    if self.bdist[v] >= margin:
                        verts.append(GeoVertex(0, frozenset((v,))))
                        charts.append(None)
            else:
                for image, chart in sorted(self.images(m).items(), key=lambda kv: sorted(kv[0])):
                    if self.support_margin(image) >= margin:
                        verts.append(GeoVertex(m, image))
                        charts.append(chart)
        order = sorted(range(len(verts)), key=lambda i: verts[i].key())
        verts = [verts[i] for i in order]
        charts = [charts[i] for i in order]

        membership: dict[int, list[int]] = {}
        for i, gv in enumerate(verts):
            for v in gv.support:
                membership.setdefault(v, []).append(i)

        adj: list[set[int]] = [set() for _ in verts]

        def connect(i: int, j: int) -> None:
            adj[i].add(j)
            adj[j].add(i)

        boundary_cache: dict[int, frozenset[int]] = {}
        hood_boundary_cache: dict[int, frozenset[int]] = {}

        def support_boundary(i: int) -> frozenset[int]:
            if i not in boundary_cache:
                ch = charts[i]
                boundary_cache[i] = frozenset(
                    ch[c] for c in ch.mapping if min(c) == 0
                )
            return boundary_cache[i]

        def support_boundary_hood(i: int) -> frozenset[int]:
            if i not in hood_boundary_cache:
                hood_boundary_cache[i] = closed_neighbourhood(
                    self.host, support_boundary(i)
                )
            return hood_boundary_cache[i]

        for i, gv in enumerate(verts):
            hood = closed_neighbourhood(self.host, gv.support)
            candidates: set[int] = set()
            for v in hood:
                candidates.update(membership.get(v, ()))
            candidates.discard(i)
            for j in sorted(candidates):
                if j in adj[i]:
                    continue
                other = verts[j]
                if other.level == gv.level:
                    # same size: containment of one in the other's neighbourhood
                    if other.support <= hood:
                        connect(i, j)
                elif other.level < gv.level and other.support <= gv.support:
                    gap = gv.level - other.level
                    if gap == 2:
                        connect(i, j)
                    elif gap == 4:
                        if not (other.support & support_boundary(i)):
                            connect(i, j)
                    elif gap == 6:
                        if not (other.support & support_boundary_hood(i)):
                            connect(i, j)
        return GeoGraph(self.host, n, margin, verts, charts, adj, self.bdist)


def build_geo(host: Graph, n: int, interior_margin: int = 0) -> GeoGraph:
    return GeoBuilder(host).build(n, interior_margin)


# -- clique constructions ----------------------------------------------------


@dataclass(frozen=True)
class GeoClique:
    members: frozenset[int]
    kind: str  # "triangle" | "vertex"
    anchor: tuple = ()


def common_geo_neighbourhood(gg: GeoGraph, gids) -> frozenset[int]:
    gids = list(gids)
    if not gids:
        raise GeoError("common neighbourhood of nothing")
    acc = set(gg.adj[gids[0]])
    for i in gids[1:]:
        acc &= gg.adj[i]
    return frozenset(acc | set(gids))


def _check_clique(gg: GeoGraph, members: frozenset[int], context: str) -> None:
    ms = sorted(members)
    for a in range(len(ms)):
        for b in range(a + 1, len(ms)):
            if ms[b] not in gg.adj[ms[a]]:
                raise GeoError(
                    f"{context}: members {gg.verts[ms[a]]} and {gg.verts[ms[b]]} are not adjacent"
                )
    extenders = set(gg.adj[ms[0]])
    for i in ms[1:]:
        extenders &= gg.adj[i]
    extenders -= members
    if extenders:
        raise GeoError(f"{context}: not maximal, extender {gg.verts[min(extenders)]}")


def clique_from_triangle(gg: GeoGraph, chart: Chart) -> GeoClique:
    """The clique anchored at a triangle one size above its corner children:
    the common neighbourhood of the three corner children of the chart."""
    m = chart.m - 1
    if m > gg.n or (m - gg.n) % 2 != 0:
        raise GeoError(f"children of level {m} do not exist at n={gg.n}")
    children = []
    for e in BASIS:
        support = chart.sub_support(e, m)
        children.append(gg.gid(support))
    members = common_geo_neighbourhood(gg, children)
    _check_clique(gg, members, "triangle clique")
    return GeoClique(members, "triangle", tuple(sorted(chart.image)))


def clique_from_vertex(gg: GeoGraph, v: int) -> GeoClique:
    """For odd n: the common neighbourhood of all facets through a vertex."""
    if gg.n % 2 != 1:
        raise GeoError("vertex cliques need an odd n")
    cls = validate_surface_class(gg, v)
    if not cls.is_inner:
        raise GeoError(f"vertex {v} is not an inner vertex")
    fan = [i for i in membership_of(gg, v) if gg.verts[i].level == 1]
    if len(fan) != gg.host.degree(v):
        raise GeoMarginError(
            f"umbrella of vertex {v} is not fully inside the margin"
        )
    members = common_geo_neighbourhood(gg, fan)
    _check_clique(gg, members, "vertex clique")
    return GeoClique(members, "vertex", (v,))


def membership_of(gg: GeoGraph, v: int) -> list[int]:
    return gg.membership.get(v, [])


def validate_surface_class(gg: GeoGraph, v: int):
    from .surface import classify_vertex

    return classify_vertex(gg.host, v)


def clique_summary(gg: GeoGraph, source, check: bool = True) -> frozenset[int]:
    """Closed-form member list of the clique attached to a next-level vertex.

    ``source`` is a host vertex id for level 0, otherwise a chart of the
    next-level triangle.  With ``check`` the result is compared against
    the constructive common-neighbourhood computation.
    """
    if isinstance(source, Chart):
        members = _summary_from_chart(gg, source)
        if check:
            built = clique_from_triangle(gg, source).members
            if built != members:
                raise GeoError("summary and construction disagree")
        return members
    v = int(source)
    members = set()
    for i in membership_of(gg, v):
        gv = gg.verts[i]
        if gv.level == 1:
            members.add(i)
        elif gv.level == 3:
            ch = gg.charts[i]
            if ch[(1, 1, 1)] == v:
                members.add(i)
    members = frozenset(members)
    if check:
        built = clique_from_vertex(gg, v).members
        if built != members:
            raise GeoError("summary and construction disagree")
    return members


def _summary_from_chart(gg: GeoGraph, chart: Chart) -> frozenset[int]:
    level = chart.m  # level of the next-graph vertex the clique belongs to
    support = chart.image
    members: set[int] = set()
    for e in BASIS:
        members.add(gg.gid(chart.sub_support(e, level - 1)))

    down_parent = None
    for i in _supersets(gg, support, level + 1):
        shape = _preimage_shape(gg, i, support)
        if shape == "up":
            members.add(i)
        elif shape == "down":
            down_parent = i
    for i in _supersets(gg, support, level + 3):
        ch = gg.charts[i]
        interior = frozenset(ch[c] for c in ch.mapping if min(c) >= 1)
        if interior == support:
            members.add(i)

    if level == 1 and down_parent is not None:
        members.add(down_parent)
    elif level == 2:
        inner = frozenset(chart[c] for c in ((1, 1, 0), (0, 1, 1), (1, 0, 1)))
        members.add(gg.gid(inner))
    elif level >= 3:
        inner = frozenset(chart[c] for c in chart.mapping if min(c) >= 1)
        members.add(gg.gid(inner))
    return frozenset(members)


def _supersets(gg: GeoGraph, support: frozenset[int], level: int) -> list[int]:
    if level not in gg.by_level:
        return []
    v0 = min(support)
    out = []
    for i in membership_of(gg, v0):
        if gg.verts[i].level == level and support <= gg.verts[i].support:
            out.append(i)
    return out


def _preimage_shape(gg: GeoGraph, i: int, support: frozenset[int]) -> str | None:
    from .hexgrid import classify_triangle_coords

    inv = gg.charts[i].inverse
    coords = frozenset(inv[v] for v in support)
    shape = classify_triangle_coords(coords)
    return shape[0] if shape else None


# -- correspondence with the next level graph --------------------------------


@dataclass
class CMapResult:
    mapping: dict[int, frozenset[int]]
    collisions: list[tuple[int, int]]
    missing_cliques: list[frozenset[int]]
    deep_clique_count: int

    @property
    def injective(self) -> bool:
        return not self.collisions

    @property
    def surjective_on_deep(self) -> bool:
        return not self.missing_cliques


def c_map(gg_n: GeoGraph, gg_next: GeoGraph) -> CMapResult:
    """The clique attached to every next-level vertex, with injectivity and
    deep-interior surjectivity certificates.

    Surjectivity is checked against brute-force maximal clique enumeration
    of gg_n, restricted to cliques all of whose members sit at least
    ``gg_next.margin`` away from the host boundary."""
    if gg_next.host is not gg_n.host and gg_next.host != gg_n.host:
        raise GeoError("level graphs must share a host")
    if gg_next.n != gg_n.n + 1:
        raise GeoError("second argument must be one level above the first")
    mapping: dict[int, frozenset[int]] = {}
    seen: dict[frozenset[int], int] = {}
    collisions: list[tuple[int, int]] = []
    for i, gv in enumerate(gg_next.verts):
        if gv.level == 0:
            clique = clique_summary(gg_n, next(iter(gv.support)))
        else:
            clique = clique_summary(gg_n, gg_next.charts[i])
        mapping[i] = clique
        if clique in seen:
            collisions.append((seen[clique], i))
        else:
            seen[clique] = i

    bdist = gg_n.bdist
    margin = gg_next.margin
    deep = 0
    missing = []
    for clique in max_cliques(gg_n.as_graph()):
        if all(
            min(bdist[v] for v in gg_n.verts[i].support) >= margin for i in clique
        ):
            deep += 1
            if clique not in seen:
                missing.append(clique)
    return CMapResult(mapping, collisions, missing, deep)


@dataclass
class EquivalenceReport:
    ok: bool
    n: int
    margin: int
    next_vertices: int
    deep_cliques: int
    failures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "n": self.n,
            "margin": self.margin,
            "next_vertices": self.next_vertices,
            "deep_cliques": self.deep_cliques,
            "failures": self.failures[:10],
        }


def verify_geometric_equivalence(
    host: Graph, n: int, margin: int | None = None, builder: GeoBuilder | None = None
) -> EquivalenceReport:
    """Certify on the deep interior that the clique correspondence is a
    graph isomorphism between the level-(n+1) graph and the clique graph
    of the level-n graph."""
    builder = builder or GeoBuilder(host)
    if margin is None:
        margin = n + 3
    if margin < n + 3:
        raise GeoMarginError(f"margin {margin} is below the safe bound {n + 3}")
    report = builder.report
    if report.boundary.n == 0:
        raise GeoError("host must be a bounded patch")
    from .surface import facets as _facets

    euler = host.n - host.edge_count + len(_facets(host))
    if euler != 1:
        raise GeoError(f"host patch is not a disc (euler characteristic {euler})")
    for v in host.vertices:
        if report.classes[v].is_inner and host.degree(v) < 6:
            raise GeoError(f"interior vertex {v} has degree below 6")

    gg_n = builder.build(n, margin=0)
    gg_next = builder.build(n + 1, margin=margin)
    failures: list[str] = []
    if not len(gg_next):
        failures.append("no next-level vertices inside the margin")

    cmr = c_map(gg_n, gg_next)
    if cmr.collisions:
        failures.append(f"clique map not injective: {cmr.collisions[:3]}")
    if cmr.missing_cliques:
        failures.append(
            f"{len(cmr.missing_cliques)} deep cliques not hit, first: "
            f"{[gg_n.verts[i] for i in sorted(cmr.missing_cliques[0])][:4]}"
        )

    # adjacency in the next level graph must match clique intersection
    member_to: dict[int, list[int]] = {}
    for i, clique in cmr.mapping.items():
        for member in clique:
            member_to.setdefault(member, []).append(i)
    intersecting: set[frozenset[int]] = set()
    for ids in member_to.values():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                intersecting.add(frozenset((ids[a], ids[b])))
    edges_next = {
        frozenset((i, j))
        for i in range(len(gg_next.verts))
        for j in gg_next.adj[i]
        if i < j
    }
    extra = intersecting - edges_next
    lost = edges_next - intersecting
    if extra:
        pair = sorted(next(iter(extra)))
        failures.append(f"cliques intersect for non-adjacent pair {pair}")
    if lost:
        pair = sorted(next(iter(lost)))
        failures.append(f"adjacent pair {pair} has disjoint cliques")

    return EquivalenceReport(
        ok=not failures,
        n=n,
        margin=margin,
        next_vertices=len(gg_next),
        deep_cliques=cmr.deep_clique_count,
        failures=failures,
    )
