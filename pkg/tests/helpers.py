"""Independent oracles and generators shared by the test suites.

Everything here is deliberately naive: powerset scans and unpruned
assignment enumeration, kept separate from the library's own algorithms so
the two sides of every comparison stay independent.
"""

from __future__ import annotations

import itertools
import random

from gammagraphs import Graph, all_pairs_distances
from gammagraphs.labelling import Labelling, middle_label_candidates


def powerset_min_dominating(g: Graph, d: int) -> tuple[int, set[frozenset[int]]]:
    """Scan every subset of V(g); return gamma and all minimum covers."""
    dm = all_pairs_distances(g)

    def dominates(subset) -> bool:
        for v in range(g.n):
            if not any(dm.dist(u, v) is not None and dm.dist(u, v) <= d for u in subset):
                return False
        return True

    best = None
    sets: set[frozenset[int]] = set()
    for size in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            if dominates(subset):
                if best is None:
                    best = size
                if size == best:
                    sets.add(frozenset(subset))
        if best is not None:
            break
    assert best is not None and best >= 1
    return best, sets


def oracle_labelling_exists(g: Graph, k: int) -> bool:
    """Brute-force: try every assignment of k-subsets of a (k+n-1)-symbol
    universe, filtering partial assignments pairwise."""
    labels = [frozenset(c) for c in itertools.combinations(range(1, k + g.n), k)]
    assign: list[frozenset[int] | None] = [None] * g.n

    def consistent(i: int, cand: frozenset[int]) -> bool:
        for j in range(i):
            other = assign[j]
            if cand == other:
                return False
            inter = len(cand & other)
            if g.has_edge(i, j):
                if inter != k - 1:
                    return False
            elif inter == k - 1:
                return False
        return True

    def rec(i: int) -> bool:
        if i == g.n:
            return True
        for cand in labels:
            if consistent(i, cand):
                assign[i] = cand
                if rec(i + 1):
                    return True
                assign[i] = None
        return False

    return rec(0)


def oracle_minimum_k(g: Graph, k_limit: int) -> int | None:
    for k in range(1, k_limit + 1):
        if oracle_labelling_exists(g, k):
            return k
    return None


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def all_graphs_on(n: int):
    """Every labelled simple graph on n vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def triangle_type(a: frozenset, b: frozenset, c: frozenset, k: int) -> str | None:
    """Classify a labelled triangle: 'alpha' (pairwise swaps around a common
    (k-2)-core) or 'beta' (a common (k-1)-core with three distinct extras)."""
    core = a & b & c
    union = a | b | c
    if len(core) == k - 2 and len(union) == k + 1:
        return "alpha"
    if len(core) == k - 1 and len(union) == k + 2:
        return "beta"
    return None


def check_induced_path_middles(g: Graph, lab: Labelling) -> None:
    """Every induced-path midpoint's label must be one of the four candidate
    labels computed from the two end labels."""
    for mid in range(g.n):
        for a, b in itertools.combinations(g.neighbors(mid), 2):
            if g.has_edge(a, b):
                continue
            candidates = middle_label_candidates(lab.labels[a], lab.labels[b])
            assert lab.labels[mid] in set(candidates), (
                f"midpoint {g.names[mid]} of {g.names[a]}-{g.names[b]} outside candidates"
            )


def check_triangle_forms(g: Graph, lab: Labelling) -> None:
    """Every induced triangle matches exactly one of the two forms, and the
    two triangles of every induced diamond (K4 minus an edge) have distinct
    forms."""
    for tri in itertools.combinations(range(g.n), 3):
        a, b, c = tri
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            t = triangle_type(lab.labels[a], lab.labels[b], lab.labels[c], lab.k)
            assert t is not None, f"triangle {tri} fits neither form"
    for quad in itertools.combinations(range(g.n), 4):
        present = [(u, v) for u, v in itertools.combinations(quad, 2) if g.has_edge(u, v)]
        if len(present) != 5:
            continue
        missing = [
            (u, v) for u, v in itertools.combinations(quad, 2) if not g.has_edge(u, v)
        ][0]
        shared = [v for v in quad if v not in missing]
        t1 = triangle_type(
            lab.labels[missing[0]], lab.labels[shared[0]], lab.labels[shared[1]], lab.k
        )
        t2 = triangle_type(
            lab.labels[missing[1]], lab.labels[shared[0]], lab.labels[shared[1]], lab.k
        )
        assert {t1, t2} == {"alpha", "beta"}, f"diamond {quad} lacks one alpha and one beta"
