"""Independent brute-force oracles for the test suite.

These deliberately avoid the library's bitmask machinery: graphs are edge
sets and adjacency dicts, searches are itertools enumerations. They are the
reference values the fast implementations are checked against.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from hamforbid import Graph


def edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def adjacency(g: Graph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def components_of(g: Graph, removed: set[int]) -> list[set[int]]:
    adj = adjacency(g)
    left = set(range(g.n)) - removed
    comps = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in left and w not in comp:
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
        left -= comp
    return comps


def all_pairs_distances(g: Graph) -> dict[tuple[int, int], float]:
    # Floyd-Warshall
    INF = float("inf")
    d = {(u, v): (0 if u == v else INF) for u in range(g.n) for v in range(g.n)}
    for u, v in g.edges():
        d[(u, v)] = d[(v, u)] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[(i, k)] + d[(k, j)] < d[(i, j)]:
                    d[(i, j)] = d[(i, k)] + d[(k, j)]
    return d


def toughness_of(g: Graph) -> Fraction | float:
    best = None
    for size in range(0, g.n - 1):
        for cut in itertools.combinations(range(g.n), size):
            comps = components_of(g, set(cut))
            if len(comps) >= 2:
                ratio = Fraction(size, len(comps))
                if best is None or ratio < best:
                    best = ratio
    return float("inf") if best is None else best


def connectivity_of(g: Graph) -> int:
    es = edge_set(g)
    if len(es) == g.n * (g.n - 1) // 2:
        return g.n - 1
    for size in range(0, g.n - 1):
        for cut in itertools.combinations(range(g.n), size):
            if len(components_of(g, set(cut))) >= 2:
                return size
    return g.n - 1


def free_at(g: Graph, k: int) -> bool:
    # no induced subgraph with exactly one edge on k+2 vertices
    for sub in itertools.combinations(range(g.n), k + 2):
        inner = [
            (u, v) for u, v in itertools.combinations(sub, 2) if g.has_edge(u, v)
        ]
        if len(inner) == 1:
            return False
    return True


def essential_pairs(g: Graph, k: int) -> list[tuple[frozenset[int], int]]:
    dist = all_pairs_distances(g)
    out = []
    for sub in itertools.combinations(range(g.n), k):
        if any(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
            continue
        for center in sub:
            if all(dist[(center, v)] == 2 for v in sub if v != center):
                out.append((frozenset(sub), center))
    return out


def alpha_e_of(g: Graph) -> int:
    best = 1
    for k in range(2, g.n + 1):
        if essential_pairs(g, k):
            best = k
    return best


def mu_of(g: Graph, k: int) -> int | float:
    degs = {v: g.degree(v) for v in range(g.n)}
    values = [
        max(degs[v] for v in members) for members, _ in essential_pairs(g, k)
    ]
    return min(values) if values else float("inf")


def hamiltonian_by_enumeration(g: Graph) -> bool:
    if g.n < 3:
        return False
    rest = list(range(1, g.n))
    for perm in itertools.permutations(rest):
        seq = (0,) + perm
        if all(
            g.has_edge(seq[i], seq[(i + 1) % g.n]) for i in range(g.n)
        ):
            return True
    return False


def longest_cycle_by_enumeration(g: Graph) -> int:
    best = 0
    for size in range(g.n, 2, -1):
        for sub in itertools.combinations(range(g.n), size):
            anchor = sub[0]
            for perm in itertools.permutations(sub[1:]):
                seq = (anchor,) + perm
                if all(
                    g.has_edge(seq[i], seq[(i + 1) % size]) for i in range(size)
                ):
                    best = size
                    break
            if best:
                break
        if best:
            return best
    return 0


def encode_graph6_reference(g: Graph) -> str:
    """Independent graph6 encoder built from the format description."""
    bits = ""
    for col in range(1, g.n):
        for row in range(col):
            bits += "1" if g.has_edge(row, col) else "0"
    while len(bits) % 6:
        bits += "0"
    out = chr(g.n + 63)
    for i in range(0, len(bits), 6):
        out += chr(int(bits[i : i + 6], 2) + 63)
    return out


def random_graph(rng, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)
