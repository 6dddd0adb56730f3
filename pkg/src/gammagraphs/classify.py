"""Classify small connected graphs as labellable, minimally unlabellable, or
unlabellable with a smaller witness.

A graph is minimally unlabellable when it has no labelling but every
one-vertex-deleted induced subgraph does (checking only those suffices:
labellability is hereditary on induced subgraphs).  Searches are bounded, so
every non-labellable verdict is relative to the budget's k_max, and budget
exhaustion surfaces as an explicit "undecided" status rather than a verdict.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import UnsupportedSizeError
from .graphs import (
    Graph,
    canonical_form,
    connected_components,
    induced_subgraph,
    parse_graph6,
    write_graph6,
)
from .labelling import (
    Labelling,
    SearchBudget,
    _pendant_elimination,
    find_labelling,
    is_valid_labelling,
    reattach_pendants,
    with_common_symbol,
)

LABELLABLE = "labellable"
MINIMALLY_UNLABELLABLE = "minimally_unlabellable"
UNLABELLABLE_NONMINIMAL = "unlabellable_nonminimal"
UNLABELLABLE = "unlabellable"  # absent up to k_bound, minimality not yet resolved
UNDECIDED = "undecided"

ENUMERATION_MAX_VERTICES = 7


@dataclass(frozen=True)
class Verdict:
    """Per-graph outcome; k_bound is the k_max the verdict is relative to."""

    status: str
    k_bound: int
    labelling: Labelling | None = None
    witness: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.status == LABELLABLE and self.labelling is None:
            raise ValueError("labellable verdicts must carry a labelling")
        if self.status == UNLABELLABLE_NONMINIMAL and self.witness is None:
            raise ValueError("nonminimal verdicts must carry a witness")


@dataclass(frozen=True)
class ClassificationReport:
    params: dict
    verdicts: dict[str, Verdict]  # keyed by graph6, iteration order sorted
    counts: dict[str, int]

    def count(self, status: str) -> int:
        return self.counts.get(status, 0)


# ---------------------------------------------------------------------------
# Connected-graph enumeration (one representative per isomorphism class)
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _connected_words(n: int) -> tuple[str, ...]:
    if n == 1:
        return (canonical_form(Graph.from_edges(1, [])).decode("ascii"),)
    words: set[str] = set()
    for word in _connected_words(n - 1):
        g = parse_graph6(word)
        for nbrs in range(1, 1 << (n - 1)):
            adj = list(g.adj) + [nbrs]
            for u in range(n - 1):
                if (nbrs >> u) & 1:
                    adj[u] |= 1 << (n - 1)
            extended = Graph(n, tuple(adj), tuple(str(i + 1) for i in range(n)))
            words.add(canonical_form(extended).decode("ascii"))
    return tuple(sorted(words))


def enumerate_connected_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of connected graphs
    on n vertices, in canonical-form order.  Built in for n <= 7; larger
    corpora must be ingested from graph6 files.

    Every connected graph on n vertices extends a connected graph on n-1
    vertices by one vertex with a nonempty neighbourhood (delete a non-cut
    vertex to see this), so vertex-by-vertex extension with canonical-form
    deduplication is exhaustive.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ENUMERATION_MAX_VERTICES:
        raise UnsupportedSizeError(
            f"built-in enumeration stops at n = {ENUMERATION_MAX_VERTICES}; "
            "ingest larger corpora from graph6 files instead"
        )
    return [parse_graph6(w) for w in _connected_words(n)]


# ---------------------------------------------------------------------------
# Labellability decisions
# ---------------------------------------------------------------------------

def _combine_component_labellings(
    g: Graph, parts: list[tuple[tuple[int, ...], dict[int, frozenset[int]], int]]
) -> Labelling:
    """Merge per-component labellings: equalize k (adjoining fresh common
    symbols), then shift each component onto a disjoint symbol universe."""
    target_k = max(k for _, _, k in parts)
    if len(parts) > 1:
        target_k = max(target_k, 2)
    labels: list[frozenset[int]] = [frozenset()] * g.n
    offset = 0
    for comp, part_labels, k in parts:
        lab = Labelling(k, tuple(part_labels[v] for v in comp))
        while lab.k < target_k:
            lab = with_common_symbol(lab)
        width = lab.max_symbol()
        for idx, v in enumerate(comp):
            labels[v] = frozenset(sym + offset for sym in lab.labels[idx])
        offset += width
    return Labelling(target_k, tuple(labels))


def decide_labellable(g: Graph, budget: SearchBudget | None = None) -> Verdict:
    """Split into components, strip pendant/isolated vertices, search each
    core, and reassemble a full labelling when every component succeeds.

    Status is "labellable" (with a valid labelling), "unlabellable" (no
    labelling with label size up to the budget's k_max), or "undecided" when
    the node budget ran out first.
    """
    budget = budget or SearchBudget()
    if g.n == 0:
        return Verdict(LABELLABLE, budget.resolve(g)[0], Labelling(1, ()))
    k_bound = budget.resolve(g)[0]
    parts = []
    for comp in connected_components(g):
        sub = induced_subgraph(g, comp)
        survivors, deletions = _pendant_elimination(sub)
        base: dict[int, frozenset[int]] = {}
        base_k = 1
        if survivors:
            core = induced_subgraph(sub, survivors)
            outcome = find_labelling(core, budget)
            if outcome.status == "budget_exhausted":
                return Verdict(UNDECIDED, k_bound)
            if outcome.status == "absent_up_to_k":
                return Verdict(UNLABELLABLE, k_bound)
            assert outcome.labelling is not None
            base = {survivors[i]: outcome.labelling.labels[i] for i in range(len(survivors))}
            base_k = outcome.labelling.k
        full_labels, full_k = reattach_pendants(deletions, base, base_k)
        parts.append((comp, {comp[j]: full_labels[j] for j in range(len(comp))}, full_k))
    combined = _combine_component_labellings(g, parts)
    check = is_valid_labelling(g, combined)
    assert check, f"reconstructed labelling invalid: {check.reason}"
    return Verdict(LABELLABLE, k_bound, combined)


class _DecisionCache:
    """Memoizes labellable/unlabellable decisions by canonical form."""

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.by_form: dict[bytes, str] = {}

    def status(self, g: Graph) -> str:
        form = canonical_form(g)
        hit = self.by_form.get(form)
        if hit is None:
            hit = decide_labellable(g, self.budget).status
            self.by_form[form] = hit
        return hit


def _smallest_unlabellable_subset(
    g: Graph, cache: _DecisionCache
) -> tuple[int, ...] | None:
    """Smallest proper induced subgraph decided unlabellable; among the
    smallest, ties break by canonical form, then by vertex tuple."""
    for size in range(1, g.n):
        hits: list[tuple[bytes, tuple[int, ...]]] = []
        for subset in itertools.combinations(range(g.n), size):
            sub = induced_subgraph(g, subset)
            if cache.status(sub) == UNLABELLABLE:
                hits.append((canonical_form(sub), subset))
        if hits:
            return min(hits)[1]
    return None


def is_minimally_unlabellable(
    g: Graph, budget: SearchBudget | None = None, _cache: _DecisionCache | None = None
) -> Verdict:
    """Refine an unlabellable graph into minimal vs nonminimal by deciding
    all one-vertex-deleted subgraphs; labellable inputs pass straight
    through and budget exhaustion anywhere yields "undecided"."""
    budget = budget or SearchBudget()
    own = decide_labellable(g, budget)
    if own.status in (LABELLABLE, UNDECIDED):
        return own
    cache = _cache if _cache is not None else _DecisionCache(budget)
    deletion_statuses = []
    for v in range(g.n):
        sub = induced_subgraph(g, [u for u in range(g.n) if u != v])
        deletion_statuses.append(cache.status(sub))
    if any(s == UNLABELLABLE for s in deletion_statuses):
        witness = _smallest_unlabellable_subset(g, cache)
        assert witness is not None
        return Verdict(UNLABELLABLE_NONMINIMAL, own.k_bound, witness=witness)
    if any(s == UNDECIDED for s in deletion_statuses):
        return Verdict(UNDECIDED, own.k_bound)
    return Verdict(MINIMALLY_UNLABELLABLE, own.k_bound)


def _classify_one(args: tuple[str, SearchBudget]) -> tuple[str, Verdict]:
    word, budget = args
    g = parse_graph6(word)
    return word, is_minimally_unlabellable(g, budget)


def classify(
    graphs, budget: SearchBudget | None = None, jobs: int = 1
) -> ClassificationReport:
    """Give every graph a final verdict.  Budget exhaustion is recorded per
    graph as "undecided"; the batch never aborts.  Results are keyed and
    ordered by graph6 word, independent of scheduling."""
    budget = budget or SearchBudget()
    items = sorted({write_graph6(g): g for g in graphs}.items())
    verdicts: dict[str, Verdict] = {}
    if jobs > 1 and len(items) > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for word, verdict in pool.map(
                _classify_one, [(w, budget) for w, _ in items], chunksize=8
            ):
                verdicts[word] = verdict
        verdicts = {w: verdicts[w] for w, _ in items}
    else:
        cache = _DecisionCache(budget)
        for word, g in items:
            verdicts[word] = is_minimally_unlabellable(g, budget, _cache=cache)
    counts = {LABELLABLE: 0, MINIMALLY_UNLABELLABLE: 0, UNLABELLABLE_NONMINIMAL: 0, UNDECIDED: 0}
    for v in verdicts.values():
        counts[v.status] += 1
    n_values = sorted({g.n for _, g in items})
    params = {
        "k_max": budget.k_max,
        "node_limit": budget.node_limit,
        "n_values": n_values,
        "exploratory_n": [n for n in n_values if n >= 7],
    }
    return ClassificationReport(params, verdicts, counts)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def verdict_to_json(g: Graph, verdict: Verdict) -> dict:
    from .labelling import labelling_to_json

    doc: dict = {"status": verdict.status, "k_bound": verdict.k_bound}
    if verdict.labelling is not None:
        doc["labelling"] = labelling_to_json(g, verdict.labelling)
    if verdict.witness is not None:
        doc["witness_graph6"] = canonical_form(induced_subgraph(g, verdict.witness)).decode(
            "ascii"
        )
    return doc


def report_to_json(report: ClassificationReport) -> dict:
    return {
        "params": report.params,
        "verdicts": {
            word: verdict_to_json(parse_graph6(word), verdict)
            for word, verdict in sorted(report.verdicts.items())
        },
        "counts": report.counts,
    }


def report_summary(report: ClassificationReport) -> str:
    """Status counts per vertex count, as a small fixed-width table."""
    by_n: dict[int, dict[str, int]] = {}
    for word, verdict in report.verdicts.items():
        n = parse_graph6(word).n
        by_n.setdefault(n, {}).setdefault(verdict.status, 0)
        by_n[n][verdict.status] += 1
    lines = [f"{'n':>3} {'graphs':>7} {'labellable':>11} {'minimal':>8} {'nonminimal':>11} {'undecided':>10}"]
    for n in sorted(by_n):
        row = by_n[n]
        total = sum(row.values())
        note = "  (exploratory)" if n >= 7 else ""
        lines.append(
            f"{n:>3} {total:>7} {row.get(LABELLABLE, 0):>11} "
            f"{row.get(MINIMALLY_UNLABELLABLE, 0):>8} {row.get(UNLABELLABLE_NONMINIMAL, 0):>11} "
            f"{row.get(UNDECIDED, 0):>10}{note}"
        )
    return "\n".join(lines)
