"""Label graphs by distinct k-sets so that adjacency holds exactly when two
labels intersect in k-1 elements; equivalently, embed the graph as an
induced subgraph of a Johnson graph.

The complete bounded search normalizes away symbol permutations: vertices are
placed in a connected order, the first label is {1..k}, every later label is
one element-swap away from an already-placed neighbour, and a swapped-in
symbol that is new must be the smallest unused integer.  This confines the
universe to k+n-1 symbols and makes the per-k search finite, so "absent"
verdicts are complete for each k up to the budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, cartesian_product, induced_subgraph, is_connected


@dataclass(frozen=True)
class Labelling:
    """A size-k label per vertex, aligned with the graph's vertex indices.

    Symbols are positive integers.  Structural validity (distinctness and the
    adjacency biconditional) is checked by is_valid_labelling, not here.
    """

    k: int
    labels: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("label size k must be >= 1")
        object.__setattr__(self, "labels", tuple(frozenset(s) for s in self.labels))
        for s in self.labels:
            for sym in s:
                if not isinstance(sym, int) or sym < 1:
                    raise ValueError(f"symbols must be positive integers, got {sym!r}")

    def max_symbol(self) -> int:
        return max((max(s) for s in self.labels if s), default=0)


@dataclass(frozen=True)
class SearchBudget:
    """Bounds for the labelling search.

    k_max=None resolves to max(2, vertex count); node_limit counts candidate
    labels tested across the whole search.
    """

    k_max: int | None = None
    node_limit: int = 10**8

    def __post_init__(self):
        if self.k_max is not None and self.k_max < 1:
            raise ValueError("k_max must be >= 1")
        if self.node_limit < 1:
            raise ValueError("node_limit must be >= 1")

    def resolve(self, g: Graph) -> tuple[int, int]:
        return (self.k_max if self.k_max is not None else max(2, g.n), self.node_limit)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reason: str | None = None
    pair: tuple[str, str] | None = None
    intersection: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_valid_labelling(g: Graph, lab: Labelling) -> ValidationResult:
    """Check the biconditional: adjacency iff labels meet in exactly k-1
    elements.  Reports the first offending pair (and intersection size)."""
    if len(lab.labels) != g.n:
        raise ValueError(f"labelling assigns {len(lab.labels)} vertices, graph has {g.n}")
    for v, s in enumerate(lab.labels):
        if len(s) != lab.k:
            return ValidationResult(
                False, f"label of vertex {g.names[v]} has size {len(s)}, expected {lab.k}"
            )
    for i in range(g.n):
        for j in range(i + 1, g.n):
            inter = len(lab.labels[i] & lab.labels[j])
            pair = (g.names[i], g.names[j])
            if lab.labels[i] == lab.labels[j]:
                return ValidationResult(False, "duplicate label", pair, inter)
            if g.has_edge(i, j):
                if inter != lab.k - 1:
                    return ValidationResult(False, "adjacent pair misses k-1 overlap", pair, inter)
            elif inter == lab.k - 1:
                return ValidationResult(False, "non-adjacent pair overlaps in k-1", pair, inter)
    return ValidationResult(True)


def middle_label_candidates(end1, end2) -> list[frozenset[int]]:
    """The four labels an induced-path midpoint can take, given the two end
    labels (which must be equal-size sets meeting in k-2 elements)."""
    a, b = frozenset(end1), frozenset(end2)
    k = len(a)
    if len(b) != k:
        raise ValueError("end labels must have equal size")
    t = a & b
    if len(t) != k - 2:
        raise ValueError(
            f"end labels must intersect in k-2 = {k - 2} elements, got {len(t)}"
        )
    out = [t | {x, y} for x in sorted(a - t) for y in sorted(b - t)]
    return sorted((frozenset(s) for s in out), key=lambda s: tuple(sorted(s)))


@dataclass(frozen=True)
class SearchOutcome:
    """status: "found" | "absent_up_to_k" | "budget_exhausted".

    k is the found label size, the exhausted bound, or the frontier k when
    the node budget ran out; nodes counts candidate labels tested.
    """

    status: str
    labelling: Labelling | None
    k: int
    nodes: int

    def __bool__(self) -> bool:
        return self.status == "found"


class _NodeBudgetExceeded(Exception):
    pass


def _mask_key(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(_mask_key(mask))


def _search_order(g: Graph):
    """Connected placement order plus per-position metadata.

    Starts at a maximum-degree vertex; each next vertex maximizes placed
    neighbours (then degree), ties to the smallest index.  Returns the order,
    each position's designated parent position, an adjacency bitmask over
    earlier positions, and one non-adjacent pair of placed neighbours per
    position when such a pair exists (the induced-path pruning hook).
    """
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    start = max(range(n), key=lambda v: (degs[v], -v))
    order = [start]
    placed = {start: 0}
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if v in placed:
                continue
            pn = sum(1 for u in g.neighbors(v) if u in placed)
            if pn == 0:
                continue
            key = (pn, degs[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                best = v
        if best is None:
            raise ValueError("labelling search requires a connected graph")
        placed[best] = len(order)
        order.append(best)

    parent_pos = [0] * n
    adj_pos = [0] * n
    p3_pair: list[tuple[int, int] | None] = [None] * n
    for i in range(1, n):
        v = order[i]
        nbr_positions = sorted(placed[u] for u in g.neighbors(v) if placed[u] < i)
        parent_pos[i] = nbr_positions[0]
        for j in nbr_positions:
            adj_pos[i] |= 1 << j
        for a in range(len(nbr_positions)):
            if p3_pair[i]:
                break
            for b in range(a + 1, len(nbr_positions)):
                p, q = nbr_positions[a], nbr_positions[b]
                if not g.has_edge(order[p], order[q]):
                    p3_pair[i] = (p, q)
                    break
    return order, parent_pos, adj_pos, p3_pair


def _search_fixed_k(
    g: Graph,
    k: int,
    order,
    parent_pos,
    adj_pos,
    p3_pair,
    counter: list[int],
    node_limit: int,
    use_rule: bool,
) -> list[int] | None:
    """Complete DFS over normalized labellings with exactly k symbols per
    label.  Returns position-aligned label bitmasks, or None if none exist."""
    n = g.n
    labels = [0] * n
    labels[0] = (1 << k) - 1

    def candidates(pos: int, used: int) -> list[int]:
        pair = p3_pair[pos]
        if use_rule and pair is not None and k >= 2:
            la, lb = labels[pair[0]], labels[pair[1]]
            t = la & lb
            if t.bit_count() != k - 2:
                return []
            out = []
            ra = la & ~t
            while ra:
                xa = ra & -ra
                ra ^= xa
                rb = lb & ~t
                while rb:
                    xb = rb & -rb
                    rb ^= xb
                    out.append(t | xa | xb)
            return out
        parent = labels[parent_pos[pos]]
        swap_in = ((1 << used) - 1) & ~parent | (1 << used)
        out = []
        pa = parent
        while pa:
            abit = pa & -pa
            pa ^= abit
            base = parent ^ abit
            rb = swap_in
            while rb:
                bbit = rb & -rb
                rb ^= bbit
                out.append(base | bbit)
        return out

    def rec(pos: int, used: int) -> bool:
        if pos == n:
            return True
        amask = adj_pos[pos]
        for cand in sorted(candidates(pos, used), key=_mask_key):
            counter[0] += 1
            if counter[0] > node_limit:
                raise _NodeBudgetExceeded
            ok = True
            for j in range(pos):
                inter = (cand & labels[j]).bit_count()
                if (amask >> j) & 1:
                    if inter != k - 1:
                        ok = False
                        break
                elif inter >= k - 1:
                    ok = False
                    break
            if not ok:
                continue
            labels[pos] = cand
            if rec(pos + 1, used + (1 if cand >> used else 0)):
                return True
        return False

    if rec(1, k):
        return labels
    return None


def find_labelling(
    g: Graph, budget: SearchBudget | None = None, *, use_induced_path_rule: bool = True
) -> SearchOutcome:
    """Search label sizes k = 1..k_max in turn; the first success is returned
    (so the found k is minimal).  A connected input is required."""
    if g.n == 0:
        raise ValueError("cannot search the empty graph")
    if not is_connected(g):
        raise ValueError("labelling search requires a connected graph")
    k_max, node_limit = (budget or SearchBudget()).resolve(g)
    order, parent_pos, adj_pos, p3_pair = _search_order(g)
    counter = [0]
    for k in range(1, k_max + 1):
        try:
            masks = _search_fixed_k(
                g, k, order, parent_pos, adj_pos, p3_pair, counter, node_limit, use_induced_path_rule
            )
        except _NodeBudgetExceeded:
            return SearchOutcome("budget_exhausted", None, k, counter[0])
        if masks is not None:
            by_vertex = [frozenset()] * g.n
            for pos, v in enumerate(order):
                by_vertex[v] = _mask_to_set(masks[pos])
            return SearchOutcome("found", Labelling(k, tuple(by_vertex)), k, counter[0])
    return SearchOutcome("absent_up_to_k", None, k_max, counter[0])


def with_common_symbol(lab: Labelling, symbol: int | None = None) -> Labelling:
    """Adjoin one symbol (default: the next unused) to every label: k grows
    by one and validity is preserved."""
    sym = symbol if symbol is not None else lab.max_symbol() + 1
    if any(sym in s for s in lab.labels):
        raise ValueError(f"symbol {sym} already appears in a label")
    return Labelling(lab.k + 1, tuple(s | {sym} for s in lab.labels))


def product_labelling(g1: Graph, lab1: Labelling, g2: Graph, lab2: Labelling) -> Labelling:
    """Label the Cartesian product of two labelled graphs: vertex (u,v) gets
    the union of u's and v's labels over disjoint symbol universes, aligned
    with cartesian_product(g1, g2)'s vertex order."""
    v1 = is_valid_labelling(g1, lab1)
    if not v1:
        raise ValueError(f"first labelling invalid: {v1.reason}")
    v2 = is_valid_labelling(g2, lab2)
    if not v2:
        raise ValueError(f"second labelling invalid: {v2.reason}")
    offset = lab1.max_symbol()
    shifted = [frozenset(sym + offset for sym in s) for s in lab2.labels]
    labels = tuple(
        lab1.labels[u] | shifted[v] for u in range(g1.n) for v in range(g2.n)
    )
    result = Labelling(lab1.k + lab2.k, labels)
    check = is_valid_labelling(cartesian_product(g1, g2), result)
    assert check, check.reason
    return result


def _pendant_elimination(g: Graph):
    """Repeatedly delete the lowest-index vertex of degree <= 1.

    Returns (surviving vertex indices ascending, deletion log), where each
    log entry is (vertex, its single remaining neighbour or None).
    """
    alive = set(range(g.n))
    deletions: list[tuple[int, int | None]] = []
    while True:
        victim = None
        for v in sorted(alive):
            nbrs = [u for u in g.neighbors(v) if u in alive]
            if len(nbrs) <= 1:
                victim = (v, nbrs[0] if nbrs else None)
                break
        if victim is None:
            break
        alive.remove(victim[0])
        deletions.append(victim)
    return tuple(sorted(alive)), tuple(deletions)


def reduce_pendants(g: Graph) -> Graph:
    """Fixed point of deleting isolated and pendant vertices.  An empty
    result certifies that g is labellable."""
    survivors, _ = _pendant_elimination(g)
    return induced_subgraph(g, survivors)


def reattach_pendants(
    deletions, base_labels: dict[int, frozenset[int]], k: int
) -> tuple[dict[int, frozenset[int]], int]:
    """Reverse a pendant-elimination log on top of a labelling of the core.

    Re-adding a pendant v attached at u: adjoin a fresh common symbol to all
    current labels, then label v with u's previous label plus a second fresh
    symbol.  Re-adding an isolated vertex: give it k fresh symbols (after
    lifting k to at least 2 so disjointness reads as non-adjacency).
    """
    labels = {v: set(s) for v, s in base_labels.items()}
    next_sym = max((max(s) for s in labels.values() if s), default=0)
    for v, attach in reversed(deletions):
        if attach is None:
            if not labels:
                labels[v] = {1}
                k = 1
                next_sym = 1
                continue
            if k == 1:
                next_sym += 1
                for s in labels.values():
                    s.add(next_sym)
                k = 2
            labels[v] = set(range(next_sym + 1, next_sym + 1 + k))
            next_sym += k
        else:
            old_attach = set(labels[attach])
            next_sym += 1
            for s in labels.values():
                s.add(next_sym)
            next_sym += 1
            labels[v] = old_attach | {next_sym}
            k += 1
    return {v: frozenset(s) for v, s in labels.items()}, k


# ---------------------------------------------------------------------------
# Closed-form labellings for wheels and stars
# ---------------------------------------------------------------------------

def wheel_labelling(n: int) -> Labelling:
    """Valid labelling of the wheel on n vertices (rim 1..n-1, hub last).

    Supported for n = 4 and odd n >= 5.  For odd n = 2m+1 the hub gets
    {1..m}; rim vertex 2i-1 swaps i for m+i, rim vertex 2i swaps i for
    m+1+(i mod m).  Wheels on even n >= 6 admit no labelling at all and are
    rejected.
    """
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    if n == 4:
        return Labelling(
            2, (frozenset({1, 2}), frozenset({1, 3}), frozenset({1, 4}), frozenset({1, 5}))
        )
    if n % 2 == 0:
        raise ValueError(
            f"the wheel on {n} vertices is minimally unlabellable (even n >= 6); "
            "only n = 4 and odd n >= 5 admit labellings"
        )
    m = (n - 1) // 2
    hub = frozenset(range(1, m + 1))
    rim: list[frozenset[int]] = []
    for i in range(1, m + 1):
        rim.append((hub - {i}) | {m + i})
        rim.append((hub - {i}) | {m + 1 + (i % m)})
    return Labelling(m, tuple(rim) + (hub,))


def star_labelling(m: int) -> Labelling:
    """Valid labelling of the star with m leaves (centre first, matching the
    fan constructor's vertex order): centre {1..m}, leaf i swaps i for m+i."""
    if m < 1:
        raise ValueError("star needs m >= 1")
    centre = frozenset(range(1, m + 1))
    leaves = tuple((centre - {i}) | {m + i} for i in range(1, m + 1))
    return Labelling(m, (centre,) + leaves)


# ---------------------------------------------------------------------------
# JSON rendering
# ---------------------------------------------------------------------------

def labelling_to_json(g: Graph, lab: Labelling) -> dict:
    if len(lab.labels) != g.n:
        raise ValueError("labelling does not match the graph")
    return {"k": lab.k, "labels": {g.names[v]: sorted(lab.labels[v]) for v in range(g.n)}}


def outcome_to_json(g: Graph, outcome: SearchOutcome) -> dict:
    doc: dict = {"status": outcome.status, "nodes": outcome.nodes}
    if outcome.status == "found":
        assert outcome.labelling is not None
        doc["k"] = outcome.k
        doc["labelling"] = labelling_to_json(g, outcome.labelling)
    elif outcome.status == "absent_up_to_k":
        doc["k_max"] = outcome.k
    else:
        doc["frontier_k"] = outcome.k
    return doc
