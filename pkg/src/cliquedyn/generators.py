"""Named test surfaces: platonic solids and 6-regular torus quotients."""

from __future__ import annotations

from .graph import Graph, GraphError
from .hexgrid import UNIT_STEPS
from .surface import validate_surface


def octahedron() -> Graph:
    """Six vertices, complete except for three disjoint antipodal pairs."""
    non_edges = {frozenset((0, 1)), frozenset((2, 3)), frozenset((4, 5))}
    edges = [
        (u, v)
        for u in range(6)
        for v in range(u + 1, 6)
        if frozenset((u, v)) not in non_edges
    ]
    return Graph(range(6), edges, name="octahedron")


def icosahedron() -> Graph:
    """The 12-vertex 5-regular triangulation of the sphere."""
    edges = []
    top, bottom = 0, 11
    upper = [1, 2, 3, 4, 5]
    lower = [6, 7, 8, 9, 10]
    for i in range(5):
        edges.append((top, upper[i]))
        edges.append((bottom, lower[i]))
        edges.append((upper[i], upper[(i + 1) % 5]))
        edges.append((lower[i], lower[(i + 1) % 5]))
        edges.append((upper[i], lower[i]))
        edges.append((upper[i], lower[(i - 1) % 5]))
    return Graph(range(12), edges, name="icosahedron")


def hex_torus(p: int, q: int) -> Graph:
    """Quotient of the hexagonal grid by the lattice spanned by
    (p, 0, -p) and (0, q, -q).

    The result is validated: parameters that produce chords or broken
    neighbourhood cycles are rejected with the offending vertex."""
    if p < 1 or q < 1:
        raise GraphError("torus sides must be positive")

    def vid(a: int, b: int) -> int:
        return (a % p) * q + (b % q)

    edges = set()
    for a in range(p):
        for b in range(q):
            for d in UNIT_STEPS:
                w = vid(a + d[0], b + d[1])
                v = vid(a, b)
                if v == w:
                    raise GraphError(
                        f"torus {p}x{q} collapses a unit step at vertex ({a},{b})"
                    )
                edges.add((min(v, w), max(v, w)))
    g = Graph(
        range(p * q),
        edges,
        name=f"torus_{p}x{q}",
        labels={a * q + b: (a, b) for a in range(p) for b in range(q)},
    )
    report = validate_surface(g)
    if not report.is_locally_cyclic or report.min_degree != 6 or report.max_degree != 6:
        bad = report.invalid_vertices[0] if report.invalid_vertices else "?"
        raise GraphError(
            f"torus {p}x{q} is not a 6-regular locally cyclic quotient"
            f" (witness vertex {bad})"
        )
    return g
