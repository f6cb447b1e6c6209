"""Command-line front end.

Exit codes: 0 success or verdict, 1 verification failure, 2 input error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io as gio
from . import lemmas
from .cliques import DEFAULT_VERTEX_BUDGET, BudgetError, clique_graph, iterate_k
from .covers import CoverError, decide_finite, universal_cover_ball, validate_covering_map
from .generators import hex_torus, icosahedron, octahedron
from .geometric import GeoBuilder, GeoError, verify_geometric_equivalence
from .graph import Graph, GraphError
from .hexgrid import BASIS, gen_delta, gen_hex_patch, gen_nabla
from .surface import validate_surface

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _emit_graph(g: Graph, args) -> None:
    fmt = args.format
    if args.out:
        gio.save_graph(g, args.out, fmt)
    elif fmt == "json":
        sys.stdout.write(gio.graph_to_json(g))
    elif fmt == "dot":
        sys.stdout.write(gio.to_dot(g))
    else:
        sys.stdout.write(gio.edge_list_text(g))


def _parse_basis(text: str):
    table = {"100": (1, 0, 0), "010": (0, 1, 0), "001": (0, 0, 1)}
    if text not in table:
        raise GraphError("--e must be one of 100, 010, 001")
    return table[text]


def cmd_generate(args) -> int:
    kind = args.kind
    if kind == "hex-patch":
        g = gen_hex_patch(int(args.params[0])).graph
    elif kind == "delta":
        g = gen_delta(int(args.params[0])).graph
    elif kind == "nabla":
        e = _parse_basis(args.e) if args.e else None
        g = gen_nabla(args.params[0], e).graph
    elif kind == "torus":
        p, q = int(args.params[0]), int(args.params[1])
        if p < 4 or q < 4:
            raise GraphError("torus sides must be at least 4")
        g = hex_torus(p, q)
    elif kind == "octahedron":
        g = octahedron()
    elif kind == "icosahedron":
        g = icosahedron()
    else:  # pragma: no cover - argparse restricts choices
        raise GraphError(f"unknown generator {kind}")
    _emit_graph(g, args)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = gio.load_graph(args.file)
    report = validate_surface(g)
    if args.format == "text":
        print(f"locally cyclic: {report.is_locally_cyclic}")
        print(f"boundary vertices: {report.boundary.n}")
        print(f"degree range: [{report.min_degree}, {report.max_degree}]")
    else:
        print(json.dumps(report.to_dict(), sort_keys=True))
    return EXIT_OK


def cmd_cliquegraph(args) -> int:
    g = gio.load_graph(args.file)
    kg = clique_graph(g)
    _emit_graph(kg, args)
    return EXIT_OK


def _vertex_budget(args) -> int:
    env = os.environ.get("CLIQUE_BUDGET_VERTICES")
    if args.budget_vertices is not None:
        return args.budget_vertices
    if env:
        return int(env)
    return DEFAULT_VERTEX_BUDGET


def cmd_iterate(args) -> int:
    g = gio.load_graph(args.file)
    trace = iterate_k(g, args.steps, vertex_budget=_vertex_budget(args))
    for step in trace.steps:
        print(json.dumps(step.to_dict(), sort_keys=True))
    summary = {k: v for k, v in trace.to_dict().items() if k != "steps"}
    print(json.dumps(summary, sort_keys=True))
    return EXIT_BUDGET if trace.verdict == "budget_exceeded" else EXIT_OK


def cmd_geometric(args) -> int:
    g = gio.load_graph(args.file)
    if args.action == "build":
        gg = GeoBuilder(g).build(args.n, margin=args.margin)
        payload = json.dumps(gg.to_dict(), sort_keys=True)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(payload + "\n")
        else:
            print(payload)
        return EXIT_OK
    report = verify_geometric_equivalence(g, args.n, margin=args.margin or None)
    print(json.dumps(report.to_dict(), sort_keys=True))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_cover(args) -> int:
    if args.action == "build":
        g = gio.load_graph(args.file)
        ball = universal_cover_ball(g, base=args.base, r=args.radius)
        payload = json.dumps(ball.to_dict(), sort_keys=True)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(payload + "\n")
        else:
            print(payload)
        return EXIT_OK
    with open(args.file) as fh:
        ball_obj = json.load(fh)
    source = gio.graph_from_dict(ball_obj["graph"])
    projection = {int(k): v for k, v in ball_obj["projection"].items()}
    target = gio.load_graph(args.target)
    report = validate_covering_map(projection, source, target)
    print(json.dumps(report.to_dict(), sort_keys=True))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_decide(args) -> int:
    g = gio.load_graph(args.file)
    verdict = decide_finite(g)
    if verdict.kind == "unsupported":
        print(f"Unsupported: {verdict.reason}")
    else:
        print(verdict.kind.capitalize())
    print(json.dumps(verdict.to_dict(), sort_keys=True))
    return EXIT_OK


def cmd_verify_lemmas(args) -> int:
    results = lemmas.run_suites(
        args.suites,
        jobs=args.jobs,
        seed=args.seed,
        radius=args.radius,
        count=args.count,
        n_max=args.n_max,
        m=args.m,
    )
    ok = True
    for res in results:
        print(json.dumps(res.to_dict(), sort_keys=True))
        ok = ok and res.ok
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquedyn",
        description="Clique graph dynamics on locally cyclic graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--out", help="write to a file instead of stdout")
        p.add_argument(
            "--format", choices=("json", "dot", "text"), default="json"
        )

    p = sub.add_parser("generate", help="emit a named graph")
    p.add_argument(
        "kind",
        choices=("hex-patch", "delta", "nabla", "torus", "octahedron", "icosahedron"),
    )
    p.add_argument("params", nargs="*", help="generator parameters")
    p.add_argument("--e", help="basis direction for nabla 1e (100|010|001)")
    add_output(p)
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("analyze", help="surface classification report")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("cliquegraph", help="graph of maximal cliques")
    p.add_argument("file")
    add_output(p)
    p.set_defaults(fn=cmd_cliquegraph)

    p = sub.add_parser("iterate", help="iterate the clique operator")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=3)
    p.add_argument("--budget-vertices", type=int, default=None)
    p.set_defaults(fn=cmd_iterate)

    p = sub.add_parser("geometric", help="level graph build / verification")
    p.add_argument("action", choices=("build", "verify"))
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--margin", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_geometric)

    p = sub.add_parser("cover", help="universal cover ball build / validation")
    p.add_argument("action", choices=("build", "validate"))
    p.add_argument("file", help="graph file (build) or ball file (validate)")
    p.add_argument("--radius", type=int, default=4)
    p.add_argument("--base", type=int, default=0)
    p.add_argument("--target", help="base graph file for validation")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_cover)

    p = sub.add_parser("decide", help="convergence verdict for a finite graph")
    p.add_argument("file")
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("verify-lemmas", help="run verification suites")
    p.add_argument("suites", nargs="+", help="suite names or 'all'")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--m", type=int, default=None, help="single side length for inclusion")
    p.add_argument(
        "--n", "--n-max", type=int, default=None, dest="n_max", help="top level for equivalence"
    )
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify_lemmas)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, GeoError, CoverError, KeyError, OSError, IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
