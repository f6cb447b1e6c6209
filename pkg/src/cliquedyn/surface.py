"""Surface structure of a graph: neighbourhood classification, facets,
path degrees, straight walks, umbrellas, and the disc discharging identity.

A vertex is *inner* when its open neighbourhood induces a cycle of length
at least 4, *boundary* when it induces a path, and *invalid* otherwise.
Walks are stored with an orientation; enumeration outputs are deduplicated
up to reversal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError, UnknownVertexError, induced_subgraph

INNER = "inner"
BOUNDARY = "boundary"
INVALID = "invalid"


class SurfaceError(GraphError):
    pass


class DiscError(SurfaceError):
    """The supplied walk does not bound a combinatorial disc."""


@dataclass(frozen=True)
class VertexClass:
    kind: str
    order: tuple[int, ...] = ()

    @property
    def is_inner(self) -> bool:
        return self.kind == INNER


def classify_vertex(g: Graph, v: int) -> VertexClass:
    """Classify ``v`` by the induced shape of its open neighbourhood.

    ``order`` lists the neighbours along the cycle or path, canonically
    oriented (cycles start at the smallest id and turn toward its smaller
    cycle-neighbour; paths run from their smaller endpoint).
    """
    nbrs = g.neighbors(v)
    if not nbrs:
        return VertexClass(INVALID)
    h = induced_subgraph(g, nbrs)
    degs = {w: h.degree(w) for w in nbrs}
    if not h.is_connected():
        return VertexClass(INVALID)
    if all(d == 2 for d in degs.values()):
        if len(nbrs) < 4:
            return VertexClass(INVALID)
        return VertexClass(INNER, _cycle_order(h))
    ends = [w for w, d in degs.items() if d <= 1]
    if len(nbrs) == 1:
        return VertexClass(BOUNDARY, (next(iter(nbrs)),))
    if len(ends) == 2 and all(d in (1, 2) for d in degs.values()):
        return VertexClass(BOUNDARY, _path_order(h, min(ends)))
    return VertexClass(INVALID)


def _cycle_order(h: Graph) -> tuple[int, ...]:
    start = min(h.vertices)
    nxt = min(h.neighbors(start))
    order = [start, nxt]
    while True:
        prev, cur = order[-2], order[-1]
        (step,) = [w for w in h.neighbors(cur) if w != prev]
        if step == start:
            return tuple(order)
        order.append(step)


def _path_order(h: Graph, start: int) -> tuple[int, ...]:
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in h.neighbors(cur) if w != prev]
        if not nxt:
            return tuple(order)
        prev, cur = cur, nxt[0]
        order.append(cur)


def facets(g: Graph) -> list[tuple[int, int, int]]:
    """All vertex triples inducing a 3-circle, each once, sorted."""
    out = []
    for u, v in g.edges():
        for w in g.neighbors(u) & g.neighbors(v):
            if w > v:
                out.append((u, v, w))
    out.sort()
    return out


@dataclass
class SurfaceReport:
    is_locally_cyclic: bool
    boundary: Graph
    min_degree: int
    max_degree: int
    invalid_vertices: tuple[int, ...]
    classes: dict[int, VertexClass] = field(repr=False, default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "is_locally_cyclic": self.is_locally_cyclic,
            "boundary_vertices": list(self.boundary.vertices),
            "boundary_edges": [list(e) for e in self.boundary.edges()],
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "invalid_vertices": list(self.invalid_vertices),
        }


def validate_surface(g: Graph) -> SurfaceReport:
    """Classify every vertex and assemble the boundary graph.

    The boundary graph consists of the boundary vertices plus the edges
    whose endpoints have fewer than two common neighbours.  The graph is
    locally cyclic iff the boundary is empty and no vertex is invalid.
    """
    if not g.is_connected():
        raise SurfaceError("disconnected input")
    classes = {v: classify_vertex(g, v) for v in g.vertices}
    boundary_vertices = {v for v, c in classes.items() if c.kind == BOUNDARY}
    invalid = tuple(v for v, c in classes.items() if c.kind == INVALID)
    boundary_edges = [
        (u, v) for u, v in g.edges() if len(g.neighbors(u) & g.neighbors(v)) < 2
    ]
    # on a valid surface every boundary edge joins boundary vertices; keep
    # stray endpoints of malformed inputs so the report stays constructible
    for u, v in boundary_edges:
        boundary_vertices.update((u, v))
    boundary = Graph(boundary_vertices, boundary_edges)
    locally_cyclic = not invalid and boundary.n == 0 and not boundary_edges
    return SurfaceReport(
        is_locally_cyclic=locally_cyclic,
        boundary=boundary,
        min_degree=g.min_degree(),
        max_degree=g.max_degree(),
        invalid_vertices=invalid,
        classes=classes,
    )


def boundary_distance(g: Graph, report: SurfaceReport | None = None) -> dict[int, float]:
    """Graph distance to the nearest boundary vertex (inf when boundary empty)."""
    report = report or validate_surface(g)
    dist: dict[int, float] = {v: float("inf") for v in g.vertices}
    queue: deque[int] = deque()
    for v in report.boundary.vertices:
        dist[v] = 0
        queue.append(v)
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] == float("inf"):
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# -- walks and path degrees --------------------------------------------------


def check_walk(g: Graph, walk: tuple[int, ...]) -> None:
    if len(walk) < 1:
        raise SurfaceError("empty walk")
    for v in walk:
        if v not in g:
            raise UnknownVertexError(f"unknown vertex {v}")
    for a, b in zip(walk, walk[1:]):
        if not g.has_edge(a, b):
            raise SurfaceError(f"walk step ({a},{b}) is not an edge")


def path_degree(
    g: Graph, walk: tuple[int, ...], i: int, classes: dict[int, VertexClass] | None = None
) -> frozenset[int]:
    """Arc lengths cut by the walk in the neighbourhood of its i-th vertex.

    Inner vertex: the two arc lengths of the neighbourhood cycle between
    the walk's predecessor and successor.  Boundary vertex: the length of
    the unique path between them inside the neighbourhood path.
    """
    check_walk(g, walk)
    if not (0 < i < len(walk) - 1):
        raise SurfaceError(f"index {i} is an endpoint of the walk")
    prev, cur, nxt = walk[i - 1], walk[i], walk[i + 1]
    if prev == nxt:
        raise SurfaceError("walk backtracks immediately; path degree undefined")
    cls = classes[cur] if classes else classify_vertex(g, cur)
    if cls.kind == INNER:
        cycle = cls.order
        length = len(cycle)
        a, b = cycle.index(prev), cycle.index(nxt)
        l1 = (b - a) % length
        return frozenset({l1, length - l1})
    if cls.kind == BOUNDARY:
        path = cls.order
        try:
            a, b = path.index(prev), path.index(nxt)
        except ValueError as exc:
            raise SurfaceError("walk neighbours missing from neighbourhood path") from exc
        return frozenset({abs(b - a)})
    raise SurfaceError(f"vertex {cur} has no cyclic or path neighbourhood")


def is_straight(g: Graph, walk: tuple[int, ...], classes=None) -> bool:
    """True iff every interior path degree along the walk contains 3."""
    check_walk(g, walk)
    if len(walk) < 3:
        raise SurfaceError("straightness needs a walk of length at least 2")
    return all(
        3 in path_degree(g, walk, i, classes) for i in range(1, len(walk) - 1)
    )


def _straight_steps(
    g: Graph, classes: dict[int, VertexClass]
) -> dict[tuple[int, int], tuple[int, ...]]:
    """successors[(u, v)] = vertices w such that u,v,w is a straight bend."""
    succ: dict[tuple[int, int], tuple[int, ...]] = {}
    for v in g.vertices:
        cls = classes[v]
        if cls.kind == INVALID:
            for u in g.neighbors(v):
                succ[(u, v)] = ()
            continue
        order = cls.order
        n = len(order)
        pos = {w: i for i, w in enumerate(order)}
        for u in g.neighbors(v):
            outs = []
            i = pos[u]
            if cls.kind == INNER:
                for j, w in enumerate(order):
                    d = (j - i) % n
                    if w != u and 3 in (d, n - d):
                        outs.append(w)
            else:
                for j, w in enumerate(order):
                    if w != u and abs(j - i) == 3:
                        outs.append(w)
            succ[(u, v)] = tuple(sorted(outs))
    return succ


def maximal_straight_paths(g: Graph, min_len: int) -> list[tuple[int, ...]]:
    """All maximal straight walks of length >= min_len, deduplicated up to
    reversal.  Closed straight lines are returned with the start vertex
    repeated at the end."""
    classes = {v: classify_vertex(g, v) for v in g.vertices}
    succ = _straight_steps(g, classes)
    has_pred = set()
    for (u, v), outs in succ.items():
        for w in outs:
            has_pred.add((v, w))

    results: dict[tuple[int, ...], tuple[int, ...]] = {}

    def emit(walk: list[int]) -> None:
        if len(walk) - 1 < max(min_len, 1):
            return
        key = _walk_key(tuple(walk))
        results.setdefault(key, tuple(walk))

    def extend(walk: list[int], seen_pairs: set[tuple[int, int]]) -> None:
        outs = succ.get((walk[-2], walk[-1]), ())
        live = [w for w in outs if (walk[-1], w) not in seen_pairs]
        if not live:
            emit(walk)
            return
        for w in live:
            seen_pairs.add((walk[-1], w))
            walk.append(w)
            extend(walk, seen_pairs)
            walk.pop()
            seen_pairs.discard((walk[-1], w))

    covered: set[tuple[int, int]] = set()
    for pair in sorted(succ):
        if pair in has_pred or not succ[pair]:
            continue
        extend([pair[0], pair[1]], {pair})
        covered.add(pair)

    # Pairs never reached from a free end lie on closed straight lines.
    for walk in results.values():
        covered.update(zip(walk, walk[1:]))
        covered.update(zip(walk[::-1], walk[::-1][1:]))
    for pair in sorted(succ):
        if pair in covered or not succ[pair]:
            continue
        cycle = [pair[0], pair[1]]
        while True:
            outs = succ[(cycle[-2], cycle[-1])]
            if not outs:
                break
            cycle.append(outs[0])
            if (cycle[-2], cycle[-1]) == pair:
                closed = cycle[:-1]
                emit(closed)
                covered.update(zip(closed, closed[1:]))
                covered.update(zip(closed[::-1], closed[::-1][1:]))
                break
            if len(cycle) > 4 * g.n:
                break
    return sorted(results.values())


def _walk_key(walk: tuple[int, ...]) -> tuple[int, ...]:
    if walk[0] == walk[-1] and len(walk) > 2:
        # closed walk: canonical over rotations of both directions
        body = walk[:-1]
        best = None
        for seq in (body, body[::-1]):
            for i in range(len(seq)):
                rot = seq[i:] + seq[:i]
                if best is None or rot < best:
                    best = rot
        return best + (best[0],)
    return min(walk, walk[::-1])


def umbrella(g: Graph, v: int) -> tuple[tuple[int, int, int], ...]:
    """The facets around an inner vertex, in cyclic order."""
    cls = classify_vertex(g, v)
    if cls.kind != INNER:
        raise SurfaceError(f"vertex {v} is not an inner vertex")
    cycle = cls.order
    n = len(cycle)
    fans = [tuple(sorted((v, cycle[i], cycle[(i + 1) % n]))) for i in range(n)]
    k = fans.index(min(fans))
    rotated = fans[k:] + fans[:k]
    if rotated[1:] and rotated[-1] < rotated[1]:
        rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
    return tuple(rotated)


# -- disc discharging --------------------------------------------------------


def disc_discharge_check(g: Graph, walk: tuple[int, ...]) -> int:
    """Residual of the discharging identity over the disc bounded by ``walk``.

    The walk must be a simple closed walk inside a planar patch.  The
    enclosed facet region is recovered combinatorially: cut the facet
    adjacency along the walk edges and keep the components that cannot
    reach the patch rim.  Returns
    ``6 - sum_inner(6 - deg) - sum_j(3 - beta_j)``; 0 means the identity holds.
    """
    check_walk(g, walk)
    if walk[0] != walk[-1] or len(walk) < 4:
        raise DiscError("walk must be closed with at least 3 edges")
    body = walk[:-1]
    if len(set(body)) != len(body):
        raise DiscError("walk must be simple")
    walk_edges = {frozenset(e) for e in zip(walk, walk[1:])}

    all_facets = facets(g)
    edge_to_facets: dict[frozenset[int], list[int]] = {}
    for fi, f in enumerate(all_facets):
        for e in ((f[0], f[1]), (f[0], f[2]), (f[1], f[2])):
            edge_to_facets.setdefault(frozenset(e), []).append(fi)
    for e in walk_edges:
        if e not in edge_to_facets:
            raise DiscError("walk uses an edge without facets")

    # facet components after cutting along the walk
    comp = [-1] * len(all_facets)
    c = 0
    for start in range(len(all_facets)):
        if comp[start] != -1:
            continue
        comp[start] = c
        stack = [start]
        while stack:
            fi = stack.pop()
            f = all_facets[fi]
            for e in ((f[0], f[1]), (f[0], f[2]), (f[1], f[2])):
                fe = frozenset(e)
                if fe in walk_edges:
                    continue
                for fj in edge_to_facets[fe]:
                    if comp[fj] == -1:
                        comp[fj] = c
                        stack.append(fj)
        c += 1

    # components touching the patch rim (an uncut edge with a single facet)
    outside = set()
    for e, fs in edge_to_facets.items():
        if len(fs) == 1 and e not in walk_edges:
            outside.add(comp[fs[0]])
    inside = [fi for fi in range(len(all_facets)) if comp[fi] not in outside]
    if not inside:
        raise DiscError("walk does not enclose any facet")
    if len({comp[fi] for fi in inside}) != 1:
        raise DiscError("enclosed region is not a single disc")

    in_vertices: set[int] = set()
    in_edges: set[frozenset[int]] = set()
    for fi in inside:
        f = all_facets[fi]
        in_vertices.update(f)
        for e in ((f[0], f[1]), (f[0], f[2]), (f[1], f[2])):
            in_edges.add(frozenset(e))
    if len(in_vertices) - len(in_edges) + len(inside) != 1:
        raise DiscError("enclosed region is not a disc (Euler characteristic)")
    rim = {
        e
        for e in in_edges
        if sum(1 for fj in edge_to_facets[e] if comp[fj] not in outside) == 1
    }
    if rim != walk_edges:
        raise DiscError("walk does not match the rim of the enclosed region")

    walk_set = set(body)
    inner = in_vertices - walk_set
    classes = {v: classify_vertex(g, v) for v in inner}
    if any(cls.kind != INNER for cls in classes.values()):
        raise DiscError("disc interior touches the patch boundary")
    inner_sum = sum(6 - g.degree(v) for v in inner)

    beta_sum = 0
    facet_sets = [frozenset(all_facets[fi]) for fi in inside]
    for v in body:
        beta = sum(1 for f in facet_sets if v in f)
        beta_sum += 3 - beta
    return 6 - inner_sum - beta_sum
