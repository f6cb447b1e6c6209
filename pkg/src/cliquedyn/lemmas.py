"""Aggregated verification suites with machine-readable reports.

Each suite replays one of the structural facts the library relies on,
through an independent route (brute-force enumeration, random sampling,
or a second implementation), and reports pass/fail with witnesses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import charts as charts_mod
from . import hexgrid
from .covers import universal_cover_ball, validate_covering_map
from .generators import hex_torus
from .geometric import GeoBuilder, verify_geometric_equivalence
from .graph import Graph
from .isomorphism import find_isomorphism
from .surface import disc_discharge_check, facets, maximal_straight_paths


@dataclass
class SuiteResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"suite": self.name, "ok": self.ok, **self.detail}


def expected_straight_walks(m: int) -> set[tuple]:
    """The nine coordinate walks of the three straight families inside the
    side-m patch: the boundary side, the line one step above it, and the
    line two steps above, each under all coordinate permutations."""
    families = [
        tuple((m - t, t, 0) for t in range(m + 1)),
        tuple((m - 1 - t, t, 1) for t in range(m)),
        tuple((m - 2 - t, t, 2) for t in range(m - 1)),
    ]
    out = set()
    for fam in families:
        for perm in hexgrid.COORD_PERMUTATIONS:
            walk = tuple(hexgrid.apply_permutation(perm, c) for c in fam)
            out.add(min(walk, walk[::-1]))
    return out


def straight_paths_suite(m_lo: int = 4, m_hi: int = 8) -> SuiteResult:
    counts = {}
    ok = True
    for m in range(m_lo, m_hi + 1):
        region = hexgrid.gen_delta(m)
        found = maximal_straight_paths(region.graph, m - 2)
        found_coords = {
            min(w, w[::-1])
            for w in (
                tuple(region.coord_of[v] for v in walk) for walk in found
            )
        }
        expected = expected_straight_walks(m)
        counts[m] = len(found)
        if found_coords != expected or len(found) != 9:
            ok = False
    return SuiteResult("straight-paths", ok, {"counts": counts})


def inclusion_suite(m_lo: int = 1, m_hi: int = 8) -> SuiteResult:
    """Brute-force triangle inclusion classification against the expected
    exceptional counts."""
    detail = {}
    ok = True
    for m in range(m_lo, m_hi + 1):
        for k in (1, 2):
            if m < k or m - k < 0:
                continue
            labels = hexgrid.classify_delta_inclusions(m, k)
            translates = sum(1 for _, lab in labels if lab[0] == "translate")
            inverted = [lab for _, lab in labels if lab[0] != "translate"]
            expected_translates = 3 if k == 1 else 6
            expected_inverted = 0
            if k == 1 and m == 2:
                expected_inverted = 1
            if k == 2 and m == 3:
                expected_inverted = 3
            if k == 2 and m == 4:
                expected_inverted = 1
            good = translates == expected_translates and len(inverted) == expected_inverted
            detail[f"m{m}k{k}"] = {
                "translates": translates,
                "inverted": len(inverted),
            }
            ok = ok and good
    return SuiteResult("inclusion", ok, {"cases": detail})


def lhg_suite() -> SuiteResult:
    lhg = hexgrid.build_lhg()
    try:
        found = hexgrid.lhg_cliques_through_origin(lhg)
    except AssertionError as exc:
        return SuiteResult("lhg", False, {"error": str(exc)})
    sizes = sorted((len(c) for c in found), reverse=True)
    ok = lhg.graph.n == 17 and len(found) == 7 and sizes == [8, 7, 7, 7, 4, 4, 4]
    return SuiteResult("lhg", ok, {"cliques": len(found), "sizes": sizes})


def chart_extension_suite(radius: int = 8, seed: int = 7, trials: int = 12) -> SuiteResult:
    """Neighbour counts for interior triangles plus pairwise compatibility
    of the per-direction developments."""
    rng = random.Random(seed)
    patch = hexgrid.gen_hex_patch(radius)
    g = patch.graph
    failures = []
    counts = {}
    for m in (3, 4, 5):
        supports = [
            img
            for img in charts_mod.charts_by_image(charts_mod.find_standard_charts(g, m))
            if charts_mod.min_boundary_distance(g, img) >= 3
        ]
        if not supports:
            failures.append(f"no interior triangles of side {m}")
            continue
        sample = rng.sample(sorted(supports, key=sorted), min(trials, len(supports)))
        expect = 7 if m == 3 else 6
        for sup in sample:
            nbrs = charts_mod.neighbour_triangles(g, sup)
            counts.setdefault(m, set()).add(len(nbrs))
            if len(nbrs) != expect:
                failures.append(f"side {m} triangle has {len(nbrs)} neighbours")
        # compatibility: one full extension equals each single-direction view
        chart = charts_mod.chart_of_support(g, sample[0])
        ext = charts_mod.extend_chart(g, chart)
        for d in hexgrid.UNIT_STEPS:
            img = ext.translate_image(d)
            if img is None:
                failures.append(f"direction {d} unrealised on an interior triangle")
    counts = {m: sorted(v) for m, v in counts.items()}
    return SuiteResult(
        "chart-extension",
        not failures,
        {"seed": seed, "counts": counts, "failures": failures[:5]},
    )


def equivalence_suite(radius: int = 12, n_max: int = 3) -> SuiteResult:
    patch = hexgrid.gen_hex_patch(radius)
    builder = GeoBuilder(patch.graph)
    results = {}
    ok = True
    for n in range(n_max + 1):
        rep = verify_geometric_equivalence(patch.graph, n, builder=builder)
        results[n] = rep.to_dict()
        ok = ok and rep.ok
    return SuiteResult("equivalence", ok, {"levels": results})


def cover_suite(radius: int = 4) -> SuiteResult:
    torus = hex_torus(4, 4)
    ball = universal_cover_ball(torus, base=0, r=radius)
    patch = hexgrid.gen_hex_patch(radius)
    same = find_isomorphism(ball.graph, patch.graph) is not None
    proj = validate_covering_map(ball.projection, ball.graph, torus)
    return SuiteResult(
        "cover",
        same and proj.ok,
        {"ball_matches_patch": same, "projection_ok": proj.ok},
    )


def random_disc_walk(
    patch: hexgrid.HexRegion, rng: random.Random, max_facets: int = 24
) -> tuple[int, ...]:
    """A simple closed walk bounding a random facet-connected disc kept away
    from the patch rim."""
    g = patch.graph
    interior = patch.interior_ids()
    deep = [
        v
        for v in interior
        if all(w in interior for w in g.neighbors(v))
    ]
    all_facets = [f for f in facets(g) if all(v in deep for v in f)]
    edge_facets: dict[frozenset[int], list[int]] = {}
    for i, f in enumerate(all_facets):
        for e in (
            frozenset((f[0], f[1])),
            frozenset((f[0], f[2])),
            frozenset((f[1], f[2])),
        ):
            edge_facets.setdefault(e, []).append(i)

    while True:
        region = {rng.randrange(len(all_facets))}
        target = rng.randrange(1, max_facets)
        for _ in range(target):
            frontier = set()
            for fi in region:
                f = all_facets[fi]
                for e in (
                    frozenset((f[0], f[1])),
                    frozenset((f[0], f[2])),
                    frozenset((f[1], f[2])),
                ):
                    frontier.update(edge_facets.get(e, ()))
            frontier -= region
            if not frontier:
                break
            region.add(rng.choice(sorted(frontier)))
        walk = _rim_walk(all_facets, region)
        if walk is not None:
            return walk


def _rim_walk(all_facets, region) -> tuple[int, ...] | None:
    edge_count: dict[frozenset[int], int] = {}
    for fi in region:
        f = all_facets[fi]
        for e in (
            frozenset((f[0], f[1])),
            frozenset((f[0], f[2])),
            frozenset((f[1], f[2])),
        ):
            edge_count[e] = edge_count.get(e, 0) + 1
    rim = [tuple(sorted(e)) for e, c in edge_count.items() if c == 1]
    nbr: dict[int, list[int]] = {}
    for u, v in rim:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    if any(len(ws) != 2 for ws in nbr.values()):
        return None
    start = min(nbr)
    walk = [start, min(nbr[start])]
    while walk[-1] != start:
        a, b = nbr[walk[-1]]
        walk.append(b if a == walk[-2] else a)
        if len(walk) > 3 * len(rim):
            return None
    if len(walk) - 1 != len(rim):
        return None  # rim split into several cycles
    return tuple(walk)


def discharge_suite(radius: int = 8, count: int = 100, seed: int = 2024) -> SuiteResult:
    rng = random.Random(seed)
    patch = hexgrid.gen_hex_patch(radius)
    residuals = set()
    for _ in range(count):
        walk = random_disc_walk(patch, rng)
        residuals.add(disc_discharge_check(patch.graph, walk))
    return SuiteResult(
        "discharge",
        residuals == {0},
        {"count": count, "seed": seed, "residuals": sorted(residuals)},
    )


SUITES = {
    "straight-paths": straight_paths_suite,
    "inclusion": inclusion_suite,
    "lhg": lhg_suite,
    "chart-extension": chart_extension_suite,
    "equivalence": equivalence_suite,
    "cover": cover_suite,
    "discharge": discharge_suite,
}


def run_suites(names, jobs: int = 1, **overrides) -> list[SuiteResult]:
    chosen = list(SUITES) if names == ["all"] else names
    for name in chosen:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
    runners = {name: SUITES[name] for name in chosen}
    if overrides.get("m") is not None:
        overrides.setdefault("m_lo", overrides["m"])
        overrides.setdefault("m_hi", overrides["m"])
    overrides.pop("m", None)

    def call(name):
        fn = runners[name]
        kwargs = {
            k: v
            for k, v in overrides.items()
            if v is not None and k in fn.__code__.co_varnames[: fn.__code__.co_argcount]
        }
        return fn(**kwargs)

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(call, chosen))
    return [call(name) for name in chosen]
