"""Immutable simple-graph data model.

Graphs are frozen after construction and all operations here are pure
functions, so values can be shared freely between parallel workers.
Vertex ids are opaque integers; generator metadata (for example lattice
coordinates) travels in the optional ``labels`` mapping, which every
structural operation ignores.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class GraphError(ValueError):
    """Malformed graph or invalid graph operation."""


class UnknownVertexError(GraphError):
    """A vertex id that does not belong to the graph."""


class Graph:
    """A finite undirected simple graph."""

    __slots__ = ("name", "labels", "_adj", "_vertices", "_edge_count", "_hash")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int]] = (),
        name: str = "",
        labels: Mapping[int, object] | None = None,
    ):
        vs = sorted(set(int(v) for v in vertices))
        adj: dict[int, set[int]] = {v: set() for v in vs}
        m = 0
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise UnknownVertexError(f"edge ({u},{v}) uses an unknown vertex")
            if v not in adj[u]:
                adj[u].add(v)
                adj[v].add(u)
                m += 1
        self._adj: dict[int, frozenset[int]] = {v: frozenset(ns) for v, ns in adj.items()}
        self._vertices: tuple[int, ...] = tuple(vs)
        self._edge_count = m
        self.name = name
        self.labels = dict(labels) if labels else None
        self._hash: int | None = None

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._vertices)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        if u not in self._adj:
            raise UnknownVertexError(f"unknown vertex {u}")
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v, in sorted order."""
        for u in self._vertices:
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def min_degree(self) -> int:
        return min((len(ns) for ns in self._adj.values()), default=0)

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def is_connected(self) -> bool:
        if not self._vertices:
            return True
        seen = {self._vertices[0]}
        stack = [self._vertices[0]]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self._vertices)

    # -- structural equality (name and labels excluded) -------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, tuple(sorted(self.edges()))))
        return self._hash

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.edge_count}>"


# -- operations ------------------------------------------------------------


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """The subgraph induced on vertex set ``s``."""
    ss = frozenset(s)
    for v in ss:
        if v not in g:
            raise UnknownVertexError(f"unknown vertex {v}")
    edges = [(u, v) for u in ss for v in g.neighbors(u) if u < v and v in ss]
    labels = None
    if g.labels:
        labels = {v: g.labels[v] for v in ss if v in g.labels}
    return Graph(ss, edges, name=g.name, labels=labels)


def closed_neighbourhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """``s`` together with every vertex adjacent to some member of ``s``."""
    ss = frozenset(s)
    out = set(ss)
    for v in ss:
        out |= g.neighbors(v)
    return frozenset(out)


def common_neighbourhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """``s`` together with the vertices adjacent to every member of ``s``.

    The members of ``s`` belong to the result even when they are not
    adjacent to each other.
    """
    ss = frozenset(s)
    if not ss:
        raise GraphError("common neighbourhood of an empty set is undefined")
    it = iter(ss)
    acc = set(g.neighbors(next(it)))
    for v in it:
        acc &= g.neighbors(v)
    return frozenset(acc | ss)


def graph_minus(g: Graph, h: Graph) -> Graph:
    """Remove ``h`` from ``g``: drop h's vertices, h's edges, and every
    g-edge touching a vertex of h."""
    hv = h.vertex_set
    h_edges = set(h.edges())
    verts = [v for v in g.vertices if v not in hv]
    edges = [
        (u, v)
        for (u, v) in g.edges()
        if (u, v) not in h_edges and u not in hv and v not in hv
    ]
    labels = None
    if g.labels:
        labels = {v: g.labels[v] for v in verts if v in g.labels}
    return Graph(verts, edges, name=g.name, labels=labels)
