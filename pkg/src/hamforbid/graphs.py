"""Immutable bitmask graphs, the graph6 codec, and basic queries.

Vertices are dense integers 0..n-1; there are no labels. Adjacency is one
bitmask per vertex, so neighborhood algebra (unions, flood fills, set
difference) is plain integer arithmetic. Every "vertex set" accepted or
returned by this package is such a bitmask.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import Graph6Error

GRAPH6_MAX_N = 62


def bit(v: int) -> int:
    return 1 << v


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph on 0..n-1, immutable by convention.

    All removal-style operations take a ``removed`` mask instead of
    mutating; instances are safe to share across worker processes.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = tuple(masks)
        n = len(masks)
        g = cls(n)
        for v, m in enumerate(masks):
            if m >> n:
                raise ValueError(f"adjacency mask of {v} exceeds n={n}")
            if m & (1 << v):
                raise ValueError(f"loop at vertex {v}")
        for v, m in enumerate(masks):
            for u in bits(m):
                if not masks[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        g.adj = masks
        return g

    @classmethod
    def _from_masks_unchecked(cls, n: int, masks: tuple[int, ...]) -> "Graph":
        # Hot-path constructor for enumeration sweeps; masks must already be
        # symmetric and irreflexive.
        g = object.__new__(cls)
        g.n = n
        g.adj = masks
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.neighbor_mask(v)))

    def degree(self, v: int) -> int:
        return self.neighbor_mask(v).bit_count()

    def min_degree(self) -> int:
        return min(m.bit_count() for m in self.adj)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(self.adj[v] == full ^ (1 << v) for v in range(self.n))

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"


# -- named constructions ----------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen_graph() -> Graph:
    """The Petersen graph: outer 5-cycle 0..4, spokes v-(v+5), inner pentagram."""
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return Graph(10, outer + spokes + inner)


# -- graph6 codec ------------------------------------------------------------
#
# One record per line: header byte n+63 (n <= 62 only; multi-byte headers are
# rejected), then the upper triangle in column order x01,x02,x12,x03,...
# packed into 6-bit groups, each offset by 63 and padded with zero bits to a
# multiple of 6. Padding bits must be zero.


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record into a Graph.

    Raises Graph6Error naming the byte offset for malformed length, bytes
    outside 63..126, oversized headers, and nonzero padding bits.
    """
    data = text.rstrip("\r\n")
    if not data:
        raise Graph6Error(0, "empty record")
    raw = data.encode("ascii", errors="replace")
    for i, b in enumerate(raw):
        if not 63 <= b <= 126:
            raise Graph6Error(i, f"byte value {b} outside graph6 range 63..126")
    n = raw[0] - 63
    if n == 0:
        raise Graph6Error(0, "vertex count 0 not supported")
    if n > GRAPH6_MAX_N:
        raise Graph6Error(0, f"vertex count {n} exceeds {GRAPH6_MAX_N}")
    nbits = _pair_count(n)
    nbytes = (nbits + 5) // 6
    if len(raw) < 1 + nbytes:
        raise Graph6Error(len(raw), f"record truncated: need {1 + nbytes} bytes")
    if len(raw) > 1 + nbytes:
        raise Graph6Error(1 + nbytes, "trailing bytes after edge data")
    masks = [0] * n
    pairs = _pairs_for(n)
    idx = 0
    for off in range(nbytes):
        group = raw[1 + off] - 63
        for shift in range(5, -1, -1):
            b = group >> shift & 1
            if idx >= nbits:
                if b:
                    raise Graph6Error(1 + off, "nonzero padding bit")
                continue
            if b:
                u, v = pairs[idx]
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            idx += 1
    return Graph._from_masks_unchecked(n, tuple(masks))


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 record (inverse of parse_graph6)."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 supports at most {GRAPH6_MAX_N} vertices")
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for u, v in _pairs_for(g.n):
        group = group << 1 | (g.adj[u] >> v & 1)
        filled += 1
        if filled == 6:
            out.append(chr(group + 63))
            group, filled = 0, 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


_PAIR_CACHE: dict[int, tuple[tuple[int, int], ...]] = {}


def _pairs_for(n: int) -> tuple[tuple[int, int], ...]:
    pairs = _PAIR_CACHE.get(n)
    if pairs is None:
        pairs = _PAIR_CACHE[n] = tuple(
            (u, v) for v in range(1, n) for u in range(v)
        )
    return pairs


# -- basic queries -----------------------------------------------------------


def distance(g: Graph, u: int, v: int) -> int | None:
    """Shortest-path length between u and v; None when disconnected."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return 0
    seen = 1 << u
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        nxt &= ~seen
        if nxt >> v & 1:
            return d
        seen |= nxt
        frontier = nxt
    return None


def component_masks(g: Graph, removed: int = 0) -> list[int]:
    """Connected components of g minus ``removed``, as masks in id order."""
    if removed >> g.n:
        raise ValueError("removed mask exceeds vertex range")
    remaining = g.full_mask & ~removed
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def component_count(g: Graph, removed: int = 0) -> int:
    return len(component_masks(g, removed))


def is_connected(g: Graph, removed: int = 0) -> bool:
    remaining = g.full_mask & ~removed
    if remaining == 0:
        return True
    start = remaining & -remaining
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        nxt &= remaining & ~comp
        comp |= nxt
        frontier = nxt
    return comp == remaining


def is_independent(g: Graph, members: int) -> bool:
    """True iff the masked vertex set spans no edge."""
    if members >> g.n:
        raise ValueError("vertex mask exceeds vertex range")
    for v in bits(members):
        if g.adj[v] & members:
            return False
    return True
