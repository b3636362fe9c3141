"""Exact Hamiltonian-cycle decision, longest cycles, Petersen recognition.

Two independent engines back the cycle decision: a bitmask backtracker with
degree and reachability pruning (the primary, witness-producing route) and a
subset dynamic program (cross-check). Longest-cycle extraction is canonical:
among maximum-length cycles it returns the lexicographically smallest vertex
sequence, started at its smallest vertex and oriented toward that vertex's
smaller cycle neighbor, so downstream replays are reproducible.
"""

from __future__ import annotations

from .errors import ResourceLimitError
from .graphs import Graph, bit, bits, is_connected, mask_of, petersen_graph
from .invariants import resource_cap


class OrientedCycle:
    """A cycle with a fixed traversal direction.

    ``order`` lists distinct vertices; consecutive entries (cyclically) must
    be adjacent in the host graph. Supports successor/predecessor navigation
    and forward segment extraction.
    """

    __slots__ = ("host", "order", "_pos")

    def __init__(self, host: Graph, order: tuple[int, ...]) -> None:
        if len(order) < 3:
            raise ValueError("a cycle needs at least three vertices")
        if len(set(order)) != len(order):
            raise ValueError("cycle vertices must be distinct")
        for i, v in enumerate(order):
            w = order[(i + 1) % len(order)]
            if not host.adj[v] >> w & 1:
                raise ValueError(f"consecutive vertices {v},{w} not adjacent")
        self.host = host
        self.order = tuple(order)
        self._pos = {v: i for i, v in enumerate(order)}

    def __len__(self) -> int:
        return len(self.order)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, OrientedCycle)
            and self.host == other.host
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        return f"OrientedCycle{self.order}"

    @property
    def vertex_mask(self) -> int:
        return mask_of(self.order)

    def position(self, v: int) -> int:
        return self._pos[v]

    def succ(self, v: int) -> int:
        return self.order[(self._pos[v] + 1) % len(self.order)]

    def pred(self, v: int) -> int:
        return self.order[(self._pos[v] - 1) % len(self.order)]

    def pred2(self, v: int) -> int:
        return self.order[(self._pos[v] - 2) % len(self.order)]

    def segment(self, z: int, w: int) -> tuple[int, ...]:
        """Vertices from z to w inclusive, following the orientation."""
        i, j = self._pos[z], self._pos[w]
        L = len(self.order)
        span = (j - i) % L
        return tuple(self.order[(i + s) % L] for s in range(span + 1))

    def pred_mask(self, members: int) -> int:
        out = 0
        for v in bits(members):
            out |= bit(self.pred(v))
        return out

    def succ_mask(self, members: int) -> int:
        out = 0
        for v in bits(members):
            out |= bit(self.succ(v))
        return out

    def reversed(self) -> "OrientedCycle":
        return OrientedCycle(self.host, (self.order[0],) + self.order[:0:-1])


def canonical_cycle(host: Graph, order: tuple[int, ...]) -> OrientedCycle:
    """Rotate to the smallest vertex and orient toward its smaller neighbor."""
    start = min(order)
    i = order.index(start)
    rotated = order[i:] + order[:i]
    if rotated[1] > rotated[-1]:
        rotated = (rotated[0],) + rotated[:0:-1]
    return OrientedCycle(host, rotated)


# -- exact Hamiltonicity (backtracking engine) --------------------------------


def hamiltonian_cycle(g: Graph, max_n: int | None = None) -> OrientedCycle | None:
    """A Hamiltonian cycle of g, canonical, or None (exhaustive search)."""
    n = g.n
    if n > resource_cap("cycle", max_n):
        raise ResourceLimitError(f"exact search capped, got n={n}")
    if n < 3:
        return None
    if g.min_degree() < 2 or not is_connected(g):
        return None
    adj = g.adj
    full = g.full_mask
    path = [0]

    def extend(cur: int, visited: int) -> tuple[int, ...] | None:
        if visited == full:
            return tuple(path) if adj[cur] & 1 else None
        cand = adj[cur] & ~visited
        if not cand:
            return None
        unvisited = full & ~visited
        # Every unvisited vertex still needs two usable connections, except
        # that a neighbor of the anchor may close the cycle.
        for v in bits(unvisited):
            avail = (adj[v] & (unvisited | bit(cur))).bit_count()
            if avail == 0:
                return None
            if avail == 1 and not adj[v] & 1:
                return None
        # All unvisited vertices must be reachable from the current endpoint.
        reach = bit(cur)
        frontier = reach
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= adj[w]
            nxt &= unvisited & ~reach
            reach |= nxt
            frontier = nxt
        if reach | bit(cur) != unvisited | bit(cur):
            return None
        for w in bits(cand):
            path.append(w)
            found = extend(w, visited | bit(w))
            if found is not None:
                return found
            path.pop()
        return None

    order = extend(0, 1)
    return None if order is None else canonical_cycle(g, order)


def is_hamiltonian(g: Graph, max_n: int | None = None) -> bool:
    return hamiltonian_cycle(g, max_n) is not None


# -- exact Hamiltonicity (subset dynamic program, cross-check engine) ---------


def hamiltonian_dp(g: Graph, max_n: int | None = None) -> bool:
    """Subset DP over (visited set, endpoint) pairs anchored at vertex 0."""
    n = g.n
    cap = min(resource_cap("cycle", max_n), 20)
    if n > cap:
        raise ResourceLimitError(f"dynamic program capped at n={cap}, got n={n}")
    if n < 3:
        return False
    if g.min_degree() < 2:
        return False
    adj = g.adj
    size = 1 << n
    # ends[mask] = bitmask of vertices reachable as the path end when the
    # visited set is exactly mask (paths start at 0, 0 in mask).
    ends = [0] * size
    ends[1] = 1
    full = size - 1
    for mask in range(1, size, 2):
        e = ends[mask]
        if not e:
            continue
        for last in bits(e):
            for nxt in bits(adj[last] & ~mask):
                ends[mask | bit(nxt)] |= bit(nxt)
    return bool(ends[full] & adj[0] & ~1)


# -- longest cycles ------------------------------------------------------------


def longest_cycle(g: Graph, max_n: int | None = None) -> OrientedCycle | None:
    """A maximum-length cycle, canonical and deterministic; None on forests."""
    n = g.n
    if n > resource_cap("cycle", max_n):
        raise ResourceLimitError(f"exact search capped, got n={n}")
    if n < 3:
        return None
    adj = g.adj
    best_len = _longest_cycle_length(g)
    if best_len == 0:
        return None

    # Lexicographic DFS per anchor; the first cycle of maximum length found
    # is the canonical minimum because second elements are tried ascending
    # and the reverse traversal of the same cycle appears no earlier.
    for anchor in range(n):
        allowed = sum(bit(v) for v in range(anchor, n))
        path = [anchor]

        def dfs(cur: int, visited: int) -> tuple[int, ...] | None:
            if len(path) == best_len:
                return tuple(path) if adj[cur] >> anchor & 1 else None
            free = allowed & ~visited
            # Reachability bound: the tail must supply the missing vertices.
            reach = 0
            frontier = adj[cur] & free
            while frontier:
                reach |= frontier
                nxt = 0
                for w in bits(frontier):
                    nxt |= adj[w]
                frontier = nxt & free & ~reach
            if len(path) + reach.bit_count() < best_len:
                return None
            for w in bits(adj[cur] & free):
                path.append(w)
                found = dfs(w, visited | bit(w))
                if found is not None:
                    return found
                path.pop()
            return None

        order = dfs(anchor, bit(anchor))
        if order is not None:
            return canonical_cycle(g, order)
    return None


def _longest_cycle_length(g: Graph) -> int:
    n = g.n
    adj = g.adj
    best = 0
    for anchor in range(n):
        if adj[anchor].bit_count() < 2:
            continue
        allowed = sum(bit(v) for v in range(anchor, n))
        if allowed.bit_count() <= best:
            # every later anchor allows even fewer vertices
            break
        def explore(cur: int, visited: int, length: int) -> None:
            nonlocal best
            if length >= 3 and adj[cur] >> anchor & 1 and length > best:
                best = length
            free = allowed & ~visited
            reach = 0
            frontier = adj[cur] & free
            while frontier:
                reach |= frontier
                nxt = 0
                for w in bits(frontier):
                    nxt |= adj[w]
                frontier = nxt & free & ~reach
            if length + reach.bit_count() <= best:
                return
            for w in bits(adj[cur] & free):
                explore(w, visited | bit(w), length + 1)

        explore(anchor, bit(anchor), 1)
    return best


# -- Petersen recognition ------------------------------------------------------


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test for small graphs."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(m.bit_count() for m in g.adj) != sorted(
        m.bit_count() for m in h.adj
    ):
        return False
    n = g.n
    gdeg = [m.bit_count() for m in g.adj]
    hdeg = [m.bit_count() for m in h.adj]
    # Map g-vertices in an order that keeps the partial map connected where
    # possible, so adjacency constraints bite early.
    order: list[int] = []
    placed = 0
    while len(order) < n:
        cand = [
            v
            for v in range(n)
            if not placed >> v & 1
        ]
        cand.sort(key=lambda v: (-(g.adj[v] & placed).bit_count(), -gdeg[v], v))
        order.append(cand[0])
        placed |= bit(cand[0])

    mapping = [-1] * n
    used = [False] * n

    def assign(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or hdeg[w] != gdeg[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (g.adj[v] >> u & 1) != (h.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if assign(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return assign(0)


def is_petersen(g: Graph) -> bool:
    if g.n != 10 or any(m.bit_count() != 3 for m in g.adj):
        return False
    return are_isomorphic(g, petersen_graph())
