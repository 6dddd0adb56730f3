"""Immutable simple graphs, the graph6 codec, metrics, and named families.

Vertices are indices 0..n-1 internally; every graph also carries a tuple of
display names (default "1".."n") so that derived graphs can keep meaningful
vertex identities.  Adjacency is stored as one neighbour bitmask per vertex,
which keeps set operations cheap throughout the package.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import GraphFormatError, UnsupportedSizeError

CANONICAL_FORM_MAX_VERTICES = 16
GRAPH6_MAX_VERTICES = 62


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph (no loops, no multi-edges)."""

    n: int
    adj: tuple[int, ...]
    names: tuple[str, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n or len(self.names) != self.n:
            raise ValueError("adjacency and name tuples must have length n")
        if len(set(self.names)) != self.n:
            raise ValueError("vertex names must be pairwise distinct")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"adjacency mask of vertex {v} leaves the vertex range")
            if (mask >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            rest = mask
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v},{u})")

    @staticmethod
    def from_edges(n: int, edges, names: tuple[str, ...] | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj), tuple(names) if names else _default_names(n))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            rest = self.adj[v] >> (v + 1)
            while rest:
                low = rest & -rest
                out.append((v, v + 1 + low.bit_length() - 1))
                rest ^= low
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = []
        rest = self.adj[v]
        while rest:
            low = rest & -rest
            out.append(low.bit_length() - 1)
            rest ^= low
        return tuple(out)

    def name_of(self, v: int) -> str:
        return self.names[v]

    def index_of(self, name: str) -> int:
        return self.names.index(name)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path lengths; ``None`` marks unreachable pairs."""

    entries: tuple[tuple[int | None, ...], ...]

    def dist(self, u: int, v: int) -> int | None:
        return self.entries[u][v]

    def eccentricity(self, v: int) -> int | None:
        """Largest distance from v, or None if some vertex is unreachable."""
        row = self.entries[v]
        if any(x is None for x in row):
            return None
        return max(row) if row else 0


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex over the neighbour bitmasks."""
    rows = []
    for s in range(g.n):
        row: list[int | None] = [None] * g.n
        seen = 1 << s
        frontier = seen
        layer = 0
        while frontier:
            rest = frontier
            while rest:
                low = rest & -rest
                row[low.bit_length() - 1] = layer
                rest ^= low
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= g.adj[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & ~seen
            seen |= frontier
            layer += 1
        rows.append(tuple(row))
    return DistanceMatrix(tuple(rows))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph on the given vertex indices (ascending), names preserved."""
    verts = sorted(set(vertices))
    for v in verts:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex index {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        rest = g.adj[v]
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            if u in pos:
                adj[pos[v]] |= 1 << pos[u]
    return Graph(len(verts), tuple(adj), tuple(g.names[v] for v in verts))


def permute_graph(g: Graph, perm) -> Graph:
    """Relabelled copy: new vertex i is old vertex perm[i].  Fresh default names."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    inv = [0] * g.n
    for i, p in enumerate(perm):
        inv[p] = i
    adj = [0] * g.n
    for i, p in enumerate(perm):
        rest = g.adj[p]
        while rest:
            low = rest & -rest
            adj[i] |= 1 << inv[low.bit_length() - 1]
            rest ^= low
    return Graph(g.n, tuple(adj), _default_names(g.n))


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex index tuples of the components, each ascending, ordered by minimum."""
    seen = 0
    comps = []
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= g.adj[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        members = []
        rest = comp
        while rest:
            low = rest & -rest
            members.append(low.bit_length() - 1)
            rest ^= low
        comps.append(tuple(members))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def cartesian_product(a: Graph, b: Graph) -> Graph:
    """Cartesian product; vertex (u,v) sits at index u*b.n + v."""
    n = a.n * b.n
    edges = []
    for u in range(a.n):
        for v in range(b.n):
            i = u * b.n + v
            for w in b.neighbors(v):
                if w > v:
                    edges.append((i, u * b.n + w))
            for w in a.neighbors(u):
                if w > u:
                    edges.append((i, w * b.n + v))
    names = tuple(f"({a.names[u]},{b.names[v]})" for u in range(a.n) for v in range(b.n))
    return Graph.from_edges(n, edges, names)


# ---------------------------------------------------------------------------
# graph6 codec (short form only, n <= 62)
#
# Layout: first byte is 63+n; the upper-triangle adjacency bits follow in
# column order (0,1),(0,2),(1,2),(0,3),... packed big-endian six bits per
# byte, each byte offset by 63, zero-padded to a multiple of six bits.
# ---------------------------------------------------------------------------

def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_VERTICES:
        raise UnsupportedSizeError(
            f"graph6 short form supports at most {GRAPH6_MAX_VERTICES} vertices, got {g.n}"
        )
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 word; a single trailing line feed is tolerated."""
    word = text
    if word.endswith("\r\n"):
        word = word[:-2]
    elif word.endswith("\n"):
        word = word[:-1]
    if not word:
        raise GraphFormatError("empty graph6 word", 0)
    for off, ch in enumerate(word):
        if not (63 <= ord(ch) <= 126):
            raise GraphFormatError(f"character {ch!r} outside graph6 range", off)
    if word[0] == "~":
        raise GraphFormatError("long-form graph6 (n > 62) is not supported", 0)
    n = ord(word[0]) - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(word) < 1 + nbytes:
        raise GraphFormatError(
            f"graph6 word for n={n} needs {nbytes} data bytes, got {len(word) - 1}",
            len(word),
        )
    if len(word) > 1 + nbytes:
        raise GraphFormatError("trailing garbage after graph6 data", 1 + nbytes)
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(word[1 + pos // 6]) - 63
            bit = (byte >> (5 - pos % 6)) & 1
            pos += 1
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    # padding bits must be zero
    while pos < 6 * nbytes:
        byte = ord(word[1 + pos // 6]) - 63
        if (byte >> (5 - pos % 6)) & 1:
            raise GraphFormatError("nonzero padding bits", 1 + pos // 6)
        pos += 1
    return Graph(n, tuple(adj), _default_names(n))


def read_graph6_lines(text: str) -> list[Graph]:
    """Parse a graph6 file body: one word per line, blank lines ignored."""
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            graphs.append(parse_graph6(line))
    return graphs


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------

def _equitable_colors(adj: tuple[int, ...]) -> tuple[int, ...]:
    """Colour refinement to a fixed point, starting from degrees.

    The resulting integer colours are isomorphism-invariant because each
    round relabels signatures by their sorted order.
    """
    n = len(adj)
    colors = tuple(adj[v].bit_count() for v in range(n))
    while True:
        sigs = []
        for v in range(n):
            counts: dict[int, int] = {}
            rest = adj[v]
            while rest:
                low = rest & -rest
                c = colors[low.bit_length() - 1]
                counts[c] = counts.get(c, 0) + 1
                rest ^= low
            sigs.append((colors[v], tuple(sorted(counts.items()))))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(rank[s] for s in sigs)
        if new == colors:
            return new
        colors = new


@functools.lru_cache(maxsize=200_000)
def _canonical_bits(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically minimal upper-triangle bit string over all orderings
    consistent with the equitable colouring (vertices sorted by colour)."""
    if n == 0:
        return ()
    colors = _equitable_colors(adj)
    target = sorted(colors)
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)

    best: list[int] | None = None
    order: list[int] = []
    bits: list[int] = []
    used = [False] * n

    def dfs(pos: int, tight: bool):
        # tight: the bits so far equal best's prefix (best only ever changes
        # to a completion of the current path, so this stays accurate)
        nonlocal best
        if pos == n:
            if best is None or bits < best:
                best = bits.copy()
            return
        base = len(bits)
        for v in by_color[target[pos]]:
            if used[v]:
                continue
            chunk = [(adj[v] >> order[i]) & 1 for i in range(pos)]
            new_tight = tight
            if best is not None and tight:
                ref = best[base : base + len(chunk)]
                if chunk > ref:
                    continue
                new_tight = chunk == ref
            used[v] = True
            order.append(v)
            bits.extend(chunk)
            dfs(pos + 1, new_tight)
            del bits[base:]
            order.pop()
            used[v] = False

    dfs(0, True)
    assert best is not None
    return tuple(best)


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: the graph6 word of the minimal relabelling.

    Two graphs get equal forms iff they are isomorphic.  Supported for
    n <= CANONICAL_FORM_MAX_VERTICES.
    """
    if g.n > CANONICAL_FORM_MAX_VERTICES:
        raise UnsupportedSizeError(
            f"canonical form supports at most {CANONICAL_FORM_MAX_VERTICES} vertices, got {g.n}"
        )
    bits = _canonical_bits(g.n, g.adj)
    adj = [0] * g.n
    pos = 0
    for j in range(1, g.n):
        for i in range(j):
            if bits[pos]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return write_graph6(Graph(g.n, tuple(adj), _default_names(g.n))).encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return parse_graph6(canonical_form(g).decode("ascii"))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


# ---------------------------------------------------------------------------
# Named families
#
# Vertex naming conventions (all 1-based names):
#   path/cycle/complete: vertices 1..n in order.
#   complete_bipartite(m, n): first part 1..m, second part m+1..m+n.
#   wheel(n): rim cycle 1..n-1 in order, hub last (vertex n).
#   fan(m, n): spine path 1..n, then the m apex vertices n+1..n+m.
#   prism(n): outer cycle 1..n, inner cycle n+1..2n, spokes i -- n+i.
#   hypercube(n): vertex i+1 is the n-bit word of i; edges flip one bit.
# ---------------------------------------------------------------------------

def make_family(name: str, *params: int) -> Graph:
    key = name.replace("-", "_").lower()
    builders = {
        "path": _path,
        "cycle": _cycle,
        "complete": _complete,
        "complete_bipartite": _complete_bipartite,
        "wheel": _wheel,
        "fan": _fan,
        "prism": _prism,
        "hypercube": _hypercube,
    }
    if key not in builders:
        raise ValueError(f"unknown family {name!r}; known: {sorted(builders)}")
    return builders[key](*params)


def _path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def _complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete bipartite graph needs m, n >= 1")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def _wheel(n: int) -> Graph:
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph.from_edges(n, edges)


def _fan(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("fan needs m, n >= 1")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(i, n + j) for j in range(m) for i in range(n)]
    return Graph.from_edges(m + n, edges)


def _prism(n: int) -> Graph:
    if n < 3:
        raise ValueError("prism needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def _hypercube(n: int) -> Graph:
    if n < 1:
        raise ValueError("hypercube needs n >= 1")
    size = 1 << n
    edges = [
        (i, i ^ (1 << b))
        for i in range(size)
        for b in range(n)
        if i < i ^ (1 << b)
    ]
    return Graph.from_edges(size, edges)
