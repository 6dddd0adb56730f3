"""Bundled reference data: small graphs with known domination families,
known labellings, and the known lists of minimally unlabellable graphs, plus
a runner the CLI uses to verify the library against them."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .clutters import blocker, random_clutter, validate_clutter
from .gammagraph import build_gamma_graph, tag_name
from .graphs import Graph, make_family
from .labelling import Labelling, is_valid_labelling, star_labelling, wheel_labelling
from .realizer import construction_size, prior_construction_size, realize, verify_realization


def _sets(*specs: str) -> tuple[frozenset[int], ...]:
    """Parse "123"-style digit strings into integer sets."""
    return tuple(frozenset(int(ch) for ch in spec) for spec in specs)


def _edges0(pairs) -> list[tuple[int, int]]:
    return [(a - 1, b - 1) for a, b in pairs]


# --- the seven-vertex domination demo graph -------------------------------

def domination_demo_graph() -> Graph:
    """Hexagon 1-2-3-4-5-6 with chords 2-6 and 3-5, plus vertex 7 joined to
    5 and 6.  gamma_1 = 2 and gamma_2 = 1 with known minimum-set families."""
    return Graph.from_edges(
        7,
        _edges0([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (6, 7), (5, 7), (2, 6), (3, 5)]),
    )


DEMO_GAMMA1_SETS = _sets("15", "25", "56", "36", "46")
DEMO_GAMMA1_EDGES = (
    ("15", "25"), ("15", "56"), ("25", "56"), ("36", "46"), ("36", "56"), ("46", "56"),
)
DEMO_GAMMA2_SETS = _sets("2", "3", "5", "6", "7")


# --- the known minimally unlabellable graphs -------------------------------

def _y_graph() -> Graph:
    # K4 minus the 1-2 edge, plus vertex 5 joined to 1 and 2
    return Graph.from_edges(
        5, _edges0([(2, 4), (4, 1), (1, 5), (5, 2), (2, 3), (3, 1), (3, 4)])
    )


def _k5_minus_edge() -> Graph:
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (0, 1)]
    return Graph.from_edges(5, edges)


def minimal_unlabellable_five() -> tuple[Graph, ...]:
    """The four minimally unlabellable graphs on at most five vertices."""
    return (
        make_family("complete_bipartite", 2, 3),
        make_family("fan", 3, 2),
        _y_graph(),
        _k5_minus_edge(),
    )


def minimal_unlabellable_six() -> tuple[Graph, ...]:
    """The four minimally unlabellable graphs on six vertices (the last is
    the wheel on six vertices)."""
    a = Graph.from_edges(6, [(5, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 1), (5, 4)])
    b = Graph.from_edges(6, [(3, 1), (1, 0), (0, 2), (2, 3), (3, 5), (5, 4), (4, 0), (1, 2)])
    c = Graph.from_edges(6, [(0, 1), (1, 4), (4, 3), (3, 0), (0, 2), (2, 5), (4, 5), (5, 3)])
    return (a, b, c, make_family("wheel", 6))


# --- seven-vertex labelled fixtures ----------------------------------------

_SEVEN_BASE = [(1, 2), (2, 4), (4, 6), (6, 5), (5, 3), (3, 1), (3, 7), (7, 4)]


def seven_vertex_a() -> tuple[Graph, Labelling]:
    """Six-cycle with a two-edge chord path; easily mistaken for unlabellable,
    so we bundle a labelling that certifies otherwise."""
    g = Graph.from_edges(7, _edges0(_SEVEN_BASE))
    return g, Labelling(3, _sets("234", "245", "123", "145", "126", "146", "135"))


def seven_vertex_b() -> tuple[Graph, Labelling]:
    g = Graph.from_edges(7, _edges0(_SEVEN_BASE + [(7, 6)]))
    return g, Labelling(3, _sets("245", "235", "246", "356", "126", "136", "346"))


def seven_vertex_minimal() -> Graph:
    """The seven-vertex graph that is minimally unlabellable."""
    return Graph.from_edges(7, _edges0(_SEVEN_BASE + [(2, 6)]))


def seven_vertex_closing() -> tuple[Graph, Labelling]:
    """Six-cycle plus a degree-2 vertex: the labelled witness that the
    pattern continuing the five- and six-vertex near-cycles is labellable."""
    g = Graph.from_edges(
        7, _edges0([(2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 2), (2, 1), (1, 6)])
    )
    return g, Labelling(3, _sets("234", "123", "135", "145", "456", "246", "126"))


# --- wheel and star reference labels ---------------------------------------

WHEEL9_LABELS = (
    frozenset({2, 3, 4, 5}),
    frozenset({2, 3, 4, 6}),
    frozenset({1, 3, 4, 6}),
    frozenset({1, 3, 4, 7}),
    frozenset({1, 2, 4, 7}),
    frozenset({1, 2, 4, 8}),
    frozenset({1, 2, 3, 8}),
    frozenset({1, 2, 3, 5}),
    frozenset({1, 2, 3, 4}),
)

STAR_LABELS = {
    1: _sets("1", "2"),
    3: _sets("123", "234", "135", "126"),
    4: (
        frozenset({1, 2, 3, 4}),
        frozenset({2, 3, 4, 5}),
        frozenset({1, 3, 4, 6}),
        frozenset({1, 2, 4, 7}),
        frozenset({1, 2, 3, 8}),
    ),
}


# --- construction-size reference table --------------------------------------

SIZE_TABLE_FAMILY = validate_clutter(4, _sets("123", "124"))
SIZE_TABLE_FAMILY_BLOCKER = _sets("1", "2", "34")
SIZE_TABLE_BIG_FAMILY = validate_clutter(8, _sets("1234", "1235", "1246", "2357", "3578"))
SIZE_TABLE_BIG_BLOCKER = _sets("13", "15", "17", "23", "25", "27", "28", "34", "36", "45")


# --- runner ------------------------------------------------------------------

@dataclass(frozen=True)
class FixtureResult:
    name: str
    ok: bool
    detail: str


def _check(name: str, ok: bool, detail: str = "") -> FixtureResult:
    return FixtureResult(name, ok, detail if not ok else "ok")


def run_fixture_checks(seed: int = 2024) -> list[FixtureResult]:
    results: list[FixtureResult] = []

    # domination demo: both gamma families and both gamma-graphs
    g = domination_demo_graph()
    gg1 = build_gamma_graph(g, 1)
    sets1 = {frozenset(v + 1 for v in t) for t in gg1.tags}
    edges1 = {
        tuple(sorted((tag_name(g, gg1.tags[i]), tag_name(g, gg1.tags[j]))))
        for i, j in gg1.base.edges()
    }
    ok1 = (
        gg1.gamma == 2
        and sets1 == set(DEMO_GAMMA1_SETS)
        and edges1 == {tuple(sorted(e)) for e in DEMO_GAMMA1_EDGES}
    )
    results.append(_check("domination-demo-d1", ok1, f"gamma={gg1.gamma} sets={sorted(map(sorted, sets1))}"))
    gg2 = build_gamma_graph(g, 2)
    sets2 = {frozenset(v + 1 for v in t) for t in gg2.tags}
    complete2 = gg2.base.edge_count == 10 and gg2.base.n == 5
    ok2 = gg2.gamma == 1 and sets2 == set(DEMO_GAMMA2_SETS) and complete2
    results.append(_check("domination-demo-d2", ok2, f"gamma={gg2.gamma} edges={gg2.base.edge_count}"))

    # blocker reference values
    ok = blocker(SIZE_TABLE_FAMILY).members == tuple(
        sorted(SIZE_TABLE_FAMILY_BLOCKER, key=lambda s: (len(s), sorted(s)))
    )
    results.append(_check("blocker-small", ok))
    ok = set(blocker(SIZE_TABLE_BIG_FAMILY).members) == set(SIZE_TABLE_BIG_BLOCKER)
    results.append(_check("blocker-large", ok))

    # construction size table
    table = [
        (construction_size(SIZE_TABLE_FAMILY, 3), (22, 26)),
        (construction_size(SIZE_TABLE_FAMILY, 1), (10, 14)),
        (construction_size(SIZE_TABLE_BIG_FAMILY, 1), (28, 68)),
        (prior_construction_size(SIZE_TABLE_FAMILY), (36, 62)),
        (prior_construction_size(SIZE_TABLE_BIG_FAMILY), (613, 2728)),
    ]
    ok = all(got == want for got, want in table)
    results.append(_check("size-table", ok, f"{table}"))

    # realized sizes match the formulas on the worked example
    r = realize(SIZE_TABLE_FAMILY, 3)
    ok = (r.graph.n, r.graph.edge_count) == (22, 26) and verify_realization(r, SIZE_TABLE_FAMILY).ok
    results.append(_check("realization-worked-example", ok))

    # labelled seven-vertex fixtures
    for name, (graph, lab) in (
        ("labelled-seven-a", seven_vertex_a()),
        ("labelled-seven-b", seven_vertex_b()),
        ("labelled-seven-closing", seven_vertex_closing()),
    ):
        check = is_valid_labelling(graph, lab)
        results.append(_check(name, bool(check), check.reason or ""))

    # wheel and star closed forms
    w9 = wheel_labelling(9)
    ok = w9.labels == WHEEL9_LABELS and bool(is_valid_labelling(make_family("wheel", 9), w9))
    results.append(_check("wheel-nine", ok))
    ok = all(
        star_labelling(m).labels == labels
        and bool(is_valid_labelling(make_family("fan", m, 1), star_labelling(m)))
        for m, labels in STAR_LABELS.items()
    )
    results.append(_check("star-labels", ok))

    # seeded mini property suites
    rng = random.Random(seed)
    ok = True
    for _ in range(50):
        c = random_clutter(rng, rng.randint(1, 8))
        if blocker(blocker(c)).members != c.members:
            ok = False
            break
    results.append(_check("blocker-involution-sample", ok))

    ok = True
    for _ in range(20):
        n = rng.randint(1, 5)
        k = rng.randint(1, min(2, n))
        pool = list(itertools.combinations(range(1, n + 1), k))
        members = [frozenset(m) for m in rng.sample(pool, rng.randint(1, len(pool)))]
        fam = validate_clutter(n, members)
        d = rng.randint(1, 3)
        if not verify_realization(realize(fam, d), fam).ok:
            ok = False
            break
    results.append(_check("realization-roundtrip-sample", ok))

    return results
