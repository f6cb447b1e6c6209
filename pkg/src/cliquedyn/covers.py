"""Truncated universal covers by facet unfolding, covering-map validation,
and the convergence decision procedure for finite inputs.

The cover ball is developed facet by facet from a seed facet at the base
vertex.  Around every lifted vertex the fan of lifted facets fills the
slots of the base neighbourhood cycle; two lifts are identified only when
a fan closes onto an existing slot, never because they happen to project
to the same base vertex.  That realises the simply connected development.
The ball returned is the lifted subgraph within the requested graph
distance of the base lift.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError
from .surface import SurfaceReport, classify_vertex, facets, validate_surface


class CoverError(GraphError):
    pass


@dataclass
class CoverBall:
    graph: Graph
    projection: dict[int, int]
    base_lift: int
    base_vertex: int
    radius: int

    def interior_ids(self) -> frozenset[int]:
        return frozenset(
            v for v in self.graph.vertices if classify_vertex(self.graph, v).is_inner
        )

    def interior_graph(self) -> Graph:
        from .graph import induced_subgraph

        return induced_subgraph(self.graph, self.interior_ids())

    def to_dict(self) -> dict:
        from .io import graph_to_dict

        return {
            "graph": graph_to_dict(self.graph),
            "projection": {str(k): v for k, v in sorted(self.projection.items())},
            "base_lift": self.base_lift,
            "base_vertex": self.base_vertex,
            "radius": self.radius,
        }


class _Unfolding:
    def __init__(self, g: Graph, report: SurfaceReport):
        self.g = g
        self.cycle = {v: report.classes[v].order for v in g.vertices}
        self.pos = {
            v: {w: i for i, w in enumerate(order)} for v, order in self.cycle.items()
        }
        self.base: list[int] = []  # lift -> base vertex
        self.arc: list[dict[int, int]] = []  # lift -> cycle slot -> lift
        self.adj: list[set[int]] = []
        self.edge_facets: dict[frozenset[int], list[frozenset[int]]] = {}
        self.facet_set: set[frozenset[int]] = set()

    def new_lift(self, base_v: int) -> int:
        self.base.append(base_v)
        self.arc.append({})
        self.adj.append(set())
        return len(self.base) - 1

    def set_slot(self, lift: int, nbr_base: int, nbr_lift: int) -> None:
        slot = self.pos[self.base[lift]][nbr_base]
        cur = self.arc[lift].get(slot)
        if cur is None:
            self.arc[lift][slot] = nbr_lift
            self.adj[lift].add(nbr_lift)
            self.adj[nbr_lift].add(lift)
        elif cur != nbr_lift:
            raise CoverError("fan closure conflict; input is not a valid surface")

    def slot_of(self, lift: int, nbr_base: int) -> int | None:
        return self.arc[lift].get(self.pos[self.base[lift]][nbr_base])

    def add_facet(self, a: int, b: int, c: int) -> None:
        f = frozenset((a, b, c))
        if f in self.facet_set:
            return
        self.facet_set.add(f)
        for e in (frozenset((a, b)), frozenset((a, c)), frozenset((b, c))):
            self.edge_facets.setdefault(e, []).append(f)

    def boundary_edges(self):
        return [e for e, fs in self.edge_facets.items() if len(fs) == 1]

    def distances(self, start: int) -> list[float]:
        dist = [float("inf")] * len(self.base)
        dist[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] == float("inf"):
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def glue(self, edge: frozenset[int]) -> None:
        """Attach the missing facet across a lifted edge."""
        fs = self.edge_facets[edge]
        if len(fs) >= 2:
            return
        la, lb = sorted(edge)
        a, b = self.base[la], self.base[lb]
        thirds = sorted(self.g.neighbors(a) & self.g.neighbors(b))
        if len(thirds) != 2:
            raise CoverError(f"base edge ({a},{b}) does not lie in two facets")
        (existing,) = fs
        (seen_lift,) = [x for x in existing if x not in edge]
        seen_base = self.base[seen_lift]
        c = thirds[0] if thirds[1] == seen_base else thirds[1]
        lc_a = self.slot_of(la, c)
        lc_b = self.slot_of(lb, c)
        if lc_a is not None and lc_b is not None and lc_a != lc_b:
            raise CoverError("incompatible fan closures; input is not a surface")
        lc = lc_a if lc_a is not None else lc_b
        if lc is None:
            lc = self.new_lift(c)
        self.set_slot(la, c, lc)
        self.set_slot(lb, c, lc)
        self.set_slot(lc, a, la)
        self.set_slot(lc, b, lb)
        self.add_facet(la, lb, lc)


def universal_cover_ball(g: Graph, base: int, r: int) -> CoverBall:
    """Unfold the universal cover around ``base`` out to graph distance ``r``."""
    if base not in g:
        raise CoverError(f"unknown base vertex {base}")
    if r < 0:
        raise CoverError("radius must be non-negative")
    report = validate_surface(g)
    if not report.is_locally_cyclic:
        raise CoverError("input is not locally cyclic")

    seed = None
    for f in facets(g):
        if base in f:
            seed = f
            break
    if seed is None:
        raise CoverError(f"base vertex {base} lies in no facet")

    unf = _Unfolding(g, report)
    lifts = {v: unf.new_lift(v) for v in seed}
    for i, v in enumerate(seed):
        for w in seed[i + 1 :]:
            unf.set_slot(lifts[v], w, lifts[w])
            unf.set_slot(lifts[w], v, lifts[v])
    unf.add_facet(*(lifts[v] for v in seed))
    base_lift = lifts[base]

    while True:
        dist = unf.distances(base_lift)
        todo = sorted(
            (
                e
                for e in unf.boundary_edges()
                if min(dist[x] for x in e) <= r
            ),
            key=lambda e: (min(dist[x] for x in e), sorted(e)),
        )
        if not todo:
            break
        for e in todo:
            unf.glue(e)

    dist = unf.distances(base_lift)
    keep = sorted(i for i in range(len(unf.base)) if dist[i] <= r)
    relabel = {old: new for new, old in enumerate(keep)}
    edges = [
        (relabel[i], relabel[j])
        for i in keep
        for j in unf.adj[i]
        if j in relabel and i < j
    ]
    ball = Graph(
        range(len(keep)),
        edges,
        name=f"cover_ball_{g.name or 'g'}_r{r}",
        labels={relabel[i]: unf.base[i] for i in keep},
    )
    projection = {relabel[i]: unf.base[i] for i in keep}
    return CoverBall(
        graph=ball,
        projection=projection,
        base_lift=relabel[base_lift],
        base_vertex=base,
        radius=r,
    )


@dataclass
class CoveringMapReport:
    is_homomorphism: bool
    checked_vertices: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_homomorphism and not self.violations

    def to_dict(self) -> dict:
        return {
            "is_homomorphism": self.is_homomorphism,
            "checked_vertices": self.checked_vertices,
            "ok": self.ok,
            "violations": self.violations[:10],
        }


def validate_covering_map(
    p: dict[int, int], source: Graph, target: Graph
) -> CoveringMapReport:
    """Check the triangle covering conditions on the interior of the source.

    The map must be a graph homomorphism; at every interior source vertex
    it must restrict to an isomorphism between the vertex's closed
    neighbourhood and its image's, which gives unique edge and triangle
    lifting there."""
    for v in source.vertices:
        if v not in p or p[v] not in target:
            raise CoverError(f"map does not cover vertex {v}")
    for u, v in source.edges():
        if p[u] == p[v] or not target.has_edge(p[u], p[v]):
            raise CoverError(f"not a homomorphism on edge ({u},{v})")

    violations = []
    checked = 0
    for v in source.vertices:
        if not classify_vertex(source, v).is_inner:
            continue
        checked += 1
        nbrs = source.neighbors(v)
        images = {p[w] for w in nbrs}
        if len(images) != len(nbrs):
            violations.append(f"edge lifting fails at {v}: neighbour images collide")
            continue
        if images != set(target.neighbors(p[v])):
            violations.append(f"degree mismatch at {v}")
            continue
        for a in nbrs:
            for b in nbrs:
                if a < b and source.has_edge(a, b) != target.has_edge(p[a], p[b]):
                    violations.append(f"triangle lifting fails at {v} on ({a},{b})")
    return CoveringMapReport(True, checked, violations)


# -- decision procedure ------------------------------------------------------


@dataclass
class Verdict:
    kind: str  # "divergent" | "convergent" | "unsupported"
    reason: str
    gates: dict

    def to_dict(self) -> dict:
        return {"verdict": self.kind, "reason": self.reason, "gates": self.gates}


def decide_finite(g: Graph) -> Verdict:
    """Convergence verdict for a finite graph, gated on the hypotheses the
    characterisation needs.

    Divergent iff locally cyclic and 6-regular; convergent for locally
    cyclic minimum degree exactly 6 but not regular, and for minimum
    degree 7 or more; anything else is unsupported rather than guessed
    (the octahedron diverges, but its degrees sit below the gate)."""
    gates: dict = {"connected": g.is_connected()}
    if not gates["connected"]:
        return Verdict("unsupported", "input is disconnected", gates)
    try:
        report = validate_surface(g)
    except GraphError as exc:
        return Verdict("unsupported", str(exc), gates)
    gates["locally_cyclic"] = report.is_locally_cyclic
    gates["min_degree"] = report.min_degree
    gates["max_degree"] = report.max_degree
    if not report.is_locally_cyclic:
        if report.invalid_vertices:
            reason = f"not locally cyclic: vertex {report.invalid_vertices[0]} has no cyclic neighbourhood"
        else:
            reason = f"not locally cyclic: boundary vertex {report.boundary.vertices[0]}"
        return Verdict("unsupported", reason, gates)
    if report.min_degree < 6:
        return Verdict(
            "unsupported", f"minimum degree {report.min_degree} < 6", gates
        )
    gates["regular"] = report.min_degree == report.max_degree
    if report.min_degree == 6 and gates["regular"]:
        return Verdict("divergent", "locally cyclic and 6-regular", gates)
    if report.min_degree == 6:
        return Verdict(
            "convergent", "locally cyclic, minimum degree 6, not 6-regular", gates
        )
    return Verdict(
        "convergent", f"minimum degree {report.min_degree} >= 7", gates
    )


def delta_embedding_bound(cb: CoverBall, m_max: int) -> int:
    """Largest side length whose triangle embeds in the cover ball interior.

    Returns m_max + 1 when even the side-(m_max) triangle embeds, meaning
    no bound was observed at this radius.  This is an observation at a
    finite radius, never a convergence certificate by itself."""
    from .charts import find_standard_charts

    if cb.radius < m_max + 1:
        raise CoverError(f"radius {cb.radius} too small for m_max {m_max}")
    interior = cb.interior_graph()
    best = 0
    for m in range(m_max, -1, -1):
        if m == 0:
            best = 0
            break
        if find_standard_charts(interior, m):
            best = m
            break
    return m_max + 1 if best == m_max else best
