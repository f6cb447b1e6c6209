"""Maximal clique enumeration, the clique graph, and iterated application.

Enumeration is Bron-Kerbosch with pivoting, with a hard cap on explored
search nodes; the iteration loop additionally caps the vertex count of
each iterate.  Divergent inputs grow without bound, so hitting a budget
is a first-class verdict rather than an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .isomorphism import canonical_hash, find_isomorphism

DEFAULT_VERTEX_BUDGET = 500_000
DEFAULT_NODE_BUDGET = 10_000_000


class BudgetError(RuntimeError):
    """A clique enumeration or iteration budget was exhausted."""


def max_cliques(
    g: Graph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    clique_cap: int | None = None,
) -> list[frozenset[int]]:
    """All maximal cliques, duplicate-free, sorted by their member lists.

    ``clique_cap`` bounds the number of cliques collected, so enumerations
    whose output alone would exhaust memory fail fast with a budget signal.
    """
    adj = {v: g.neighbors(v) for v in g.vertices}
    out: list[frozenset[int]] = []
    spent = 0

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        nonlocal spent
        spent += 1
        if spent > node_budget:
            raise BudgetError(f"clique search exceeded {node_budget} nodes")
        if not p and not x:
            out.append(frozenset(r))
            if clique_cap is not None and len(out) > clique_cap:
                raise BudgetError(f"more than {clique_cap} maximal cliques")
            return
        pivot = max(p | x, key=lambda u: (len(p & adj[u]), -u))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand([], set(g.vertices), set())
    out.sort(key=sorted)
    return out


def clique_graph(
    g: Graph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    clique_cap: int | None = None,
) -> Graph:
    """Graph on the maximal cliques of ``g``, adjacent when they intersect.

    The member list of each clique is recorded in the result's labels so
    clique vertices stay traceable to their supports.
    """
    cliques = max_cliques(g, node_budget, clique_cap)
    member_index: dict[int, list[int]] = {}
    for i, c in enumerate(cliques):
        for v in c:
            member_index.setdefault(v, []).append(i)
    edges = set()
    for ids in member_index.values():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                edges.add((ids[a], ids[b]))
    return Graph(
        range(len(cliques)),
        edges,
        name=f"k({g.name})" if g.name else "",
        labels={i: tuple(sorted(c)) for i, c in enumerate(cliques)},
    )


@dataclass(frozen=True)
class TraceStep:
    n: int
    vertices: int
    edges: int
    digest: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": self.vertices,
            "edges": self.edges,
            "digest": self.digest,
        }


@dataclass
class IterationTrace:
    steps: list[TraceStep]
    verdict: str  # "converged" | "budget_exceeded" | "diverging_evidence"
    converged_at: int | None = None
    period: int | None = None
    detail: str = ""
    graphs: list[Graph] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        out = {
            "steps": [s.to_dict() for s in self.steps],
            "verdict": self.verdict,
        }
        if self.verdict == "converged":
            out["n"] = self.converged_at
            out["period"] = self.period
        if self.detail:
            out["detail"] = self.detail
        return out


def iterate_k(
    g: Graph,
    max_steps: int,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> IterationTrace:
    """Apply the clique graph operator repeatedly.

    Convergence is declared only after an isomorphic repeat is confirmed
    exactly; digests over all previous iterates catch periodic behaviour,
    not just fixed points.
    """
    from .isomorphism import BudgetExceededError

    steps: list[TraceStep] = []
    graphs: list[Graph] = [g]
    seen: dict[str, list[int]] = {}
    current = g
    for n in range(max_steps + 1):
        try:
            digest = canonical_hash(current)
            repeats = [
                earlier
                for earlier in seen.get(digest, ())
                if find_isomorphism(graphs[earlier], current) is not None
            ]
        except BudgetExceededError as exc:
            return IterationTrace(steps, "budget_exceeded", detail=str(exc), graphs=graphs)
        steps.append(TraceStep(n, current.n, current.edge_count, digest))
        if repeats:
            return IterationTrace(
                steps,
                "converged",
                converged_at=repeats[0],
                period=n - repeats[0],
                graphs=graphs,
            )
        seen.setdefault(digest, []).append(n)
        if n == max_steps:
            break
        try:
            nxt = clique_graph(current, node_budget, clique_cap=vertex_budget)
        except BudgetError as exc:
            return IterationTrace(steps, "budget_exceeded", detail=str(exc), graphs=graphs)
        if nxt.n > vertex_budget:
            return IterationTrace(
                steps,
                "budget_exceeded",
                detail=f"iterate {n + 1} has {nxt.n} vertices (budget {vertex_budget})",
                graphs=graphs,
            )
        graphs.append(nxt)
        current = nxt
    return IterationTrace(steps, "diverging_evidence", graphs=graphs)
