"""Exact hypothesis-side invariants.

Everything here is computed exactly: connectivity by repeated
vertex-disjoint-path search, toughness and essential-set quantities by
exhaustive enumeration under explicit vertex caps, and all threshold
comparisons in rational arithmetic (fractions.Fraction, with math.inf as
the distinguished infinite value). No floating point enters any verdict.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import PreconditionError, ResourceLimitError
from .graphs import Graph, bit, bits, distance, is_independent

INF = math.inf

Rational = Union[int, Fraction, float]  # float is only ever +inf

DEFAULT_CAPS = {
    "toughness": 16,  # 2^n subset scan
    "essential": 20,  # independent-subset search per center
    "cycle": 24,  # exact Hamiltonicity / longest-cycle search
}


def resource_cap(kind: str, override: int | None = None) -> int:
    """Effective vertex cap for an exhaustive routine.

    ``HAMFORBID_MAX_N`` raises all caps globally (use at own risk);
    an explicit ``override`` argument wins outright.
    """
    if override is not None:
        return override
    cap = DEFAULT_CAPS[kind]
    env = os.environ.get("HAMFORBID_MAX_N")
    if env:
        cap = max(cap, int(env))
    return cap


def _require_cap(g: Graph, kind: str, override: int | None) -> None:
    cap = resource_cap(kind, override)
    if g.n > cap:
        raise ResourceLimitError(
            f"{kind} enumeration capped at n={cap}, got n={g.n}"
        )


def rational_to_json(value: Rational) -> dict | str:
    if value == INF:
        return "inf"
    f = Fraction(value)
    return {"num": f.numerator, "den": f.denominator}


def rational_from_json(obj: dict | str) -> Rational:
    if obj == "inf":
        return INF
    return Fraction(obj["num"], obj["den"])


# -- connectivity ------------------------------------------------------------


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int, cutoff: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths, s,t non-adjacent.

    Unit-capacity flow on the vertex-split digraph (in(v)=2v, out(v)=2v+1),
    augmenting one path at a time; stops early at ``cutoff``.
    """
    n = g.n
    # succ[node] currently usable arcs, stored as residual capability sets.
    cap: dict[tuple[int, int], int] = {}
    arcs: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int) -> None:
        cap[(a, b)] = 1
        cap[(b, a)] = cap.get((b, a), 0)
        arcs[a].append(b)
        arcs[b].append(a)

    for v in range(n):
        add(2 * v, 2 * v + 1)
    for u in range(n):
        for v in bits(g.adj[u]):
            add(2 * u + 1, 2 * v)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cutoff:
        prev = {source: source}
        queue = [source]
        while queue and sink not in prev:
            nq = []
            for a in queue:
                for b in arcs[a]:
                    if b not in prev and cap[(a, b)] > 0:
                        prev[b] = a
                        nq.append(b)
            queue = nq
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def connectivity(g: Graph) -> int:
    """Vertex connectivity: minimum over non-adjacent pairs of the maximum
    number of internally disjoint paths between them; n-1 for complete graphs.
    """
    n = g.n
    if g.is_complete():
        return n - 1
    best = n - 1
    for s in range(n):
        others = g.full_mask & ~g.adj[s] & ~bit(s)
        for t in bits(others):
            if t <= s:
                continue
            best = min(best, _max_vertex_disjoint_paths(g, s, t, best + 1))
            if best == 0:
                return 0
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """Exact test for connectivity >= k.

    For small n this removes every vertex subset of size k-1 and flood-fills,
    which is far cheaper than flow augmentation inside enumeration sweeps; the
    two routes agree and are cross-checked in the test suite.
    """
    if k <= 0:
        return True
    n = g.n
    if n <= k:
        return False
    if g.is_complete():
        return True
    if g.min_degree() < k:
        return False
    if _subset_work(n, k - 1) <= 4096:
        return not _has_small_cutset(g, k - 1)
    best = k
    for s in range(n):
        others = g.full_mask & ~g.adj[s] & ~bit(s)
        for t in bits(others):
            if t <= s:
                continue
            if _max_vertex_disjoint_paths(g, s, t, best) < k:
                return False
    return True


def _subset_work(n: int, size: int) -> int:
    total = 0
    c = 1
    for s in range(size + 1):
        total += c
        c = c * (n - s) // (s + 1)
    return total


def _has_small_cutset(g: Graph, max_size: int) -> bool:
    # Any subset of size <= max_size whose removal disconnects the rest.
    n = g.n
    full = g.full_mask

    def rec(chosen: int, count: int, next_v: int) -> bool:
        remaining = full & ~chosen
        if not _mask_connected(g, remaining):
            return True
        if count == max_size:
            return False
        for v in range(next_v, n):
            if rec(chosen | bit(v), count + 1, v + 1):
                return True
        return False

    return rec(0, 0, 0)


def _mask_connected(g: Graph, remaining: int) -> bool:
    if remaining == 0:
        return True
    comp = remaining & -remaining
    frontier = comp
    adj = g.adj
    table = _BITS_TABLE if remaining < 4096 else None
    while frontier:
        nxt = 0
        if table is not None:
            for w in table[frontier]:
                nxt |= adj[w]
        else:
            for w in bits(frontier):
                nxt |= adj[w]
        nxt &= remaining & ~comp
        comp |= nxt
        frontier = nxt
    return comp == remaining


# -- toughness ---------------------------------------------------------------


def toughness_witness(
    g: Graph, max_n: int | None = None
) -> tuple[Rational, int | None]:
    """Exact toughness and a witness cut set (mask), or (inf, None).

    Minimum of |S|/components(g-S) over all S leaving at least two
    components; exhaustive over all 2^n subsets.
    """
    _require_cap(g, "toughness", max_n)
    n = g.n
    adj = g.adj
    full = g.full_mask
    best_num, best_den = None, None  # best ratio as integers, cross-compared
    best_mask = None
    for s_mask in range(full + 1):
        remaining = full & ~s_mask
        if remaining == 0:
            continue
        omega = _mask_component_count(adj, remaining)
        if omega < 2:
            continue
        size = s_mask.bit_count()
        if best_num is None or size * best_den < best_num * omega:
            best_num, best_den, best_mask = size, omega, s_mask
    if best_num is None:
        return INF, None
    return Fraction(best_num, best_den), best_mask


def toughness(g: Graph, max_n: int | None = None) -> Rational:
    return toughness_witness(g, max_n)[0]


def is_t_tough(g: Graph, t: Rational, max_n: int | None = None) -> bool:
    """Exact test toughness(g) >= t, scanning subsets with early exit."""
    if t == INF:
        return toughness(g, max_n) == INF
    _require_cap(g, "toughness", max_n)
    t = Fraction(t)
    n = g.n
    adj = g.adj
    full = g.full_mask
    tn, td = t.numerator, t.denominator
    for s_mask in range(full + 1):
        remaining = full & ~s_mask
        if remaining == 0:
            continue
        size = s_mask.bit_count()
        # |S| < t * omega needs omega > size*td/tn; cheap popcount screen.
        if tn * (n - size) <= td * size:
            continue
        omega = _mask_component_count(adj, remaining)
        if omega >= 2 and size * td < tn * omega:
            return False
    return True


# Set-bit tuples for small masks keep flood fills off the bit-peeling path.
_BITS_TABLE = tuple(
    tuple(v for v in range(12) if m >> v & 1) for m in range(1 << 12)
)


def _mask_component_count(adj: tuple[int, ...], remaining: int) -> int:
    count = 0
    table = _BITS_TABLE if remaining < 4096 else None
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            nxt = 0
            if table is not None:
                for v in table[frontier]:
                    nxt |= adj[v]
            else:
                m = frontier
                while m:
                    low = m & -m
                    nxt |= adj[low.bit_length() - 1]
                    m ^= low
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        remaining &= ~comp
        count += 1
    return count


# -- forbidden induced subgraph: one edge plus k isolated vertices -----------


def has_independent_subset(g: Graph, candidates: int, k: int) -> bool:
    """True iff ``candidates`` contains an independent set of size k."""
    if k <= 0:
        return True
    if candidates.bit_count() < k:
        return False
    adj = g.adj

    def rec(mask: int, need: int) -> bool:
        if need == 0:
            return True
        if mask.bit_count() < need:
            return False
        v = (mask & -mask).bit_length() - 1
        # include v, drop its closed neighborhood; or exclude v
        if rec(mask & ~adj[v] & ~bit(v), need - 1):
            return True
        return rec(mask & ~bit(v), need)

    return rec(candidates, k)


def is_p2kp1_free(g: Graph, k: int) -> bool:
    """No induced subgraph made of one edge plus k pairwise-isolated vertices."""
    if k < 1:
        raise ValueError("k must be >= 1")
    full = g.full_mask
    adj = g.adj
    for x in range(g.n):
        higher = adj[x] >> (x + 1) << (x + 1)
        for y in bits(higher):
            rest = full & ~(adj[x] | adj[y] | bit(x) | bit(y))
            if has_independent_subset(g, rest, k):
                return False
    return True


# -- essential independent sets ----------------------------------------------


@dataclass(frozen=True)
class EssentialSet:
    """An independent set whose ``center`` is at distance exactly two from
    every other member."""

    members: int
    center: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(bits(self.members))

    def validate(self, g: Graph) -> None:
        if not self.members >> self.center & 1:
            raise ValueError("center not a member")
        if not is_independent(g, self.members):
            raise ValueError("members not independent")
        for v in bits(self.members & ~bit(self.center)):
            if distance(g, self.center, v) != 2:
                raise ValueError(f"member {v} not at distance 2 from center")


def _distance_two_mask(g: Graph, center: int) -> int:
    lvl1 = g.adj[center]
    lvl2 = 0
    for v in bits(lvl1):
        lvl2 |= g.adj[v]
    return lvl2 & ~lvl1 & ~bit(center) & g.full_mask


def essential_sets(
    g: Graph, k: int, max_n: int | None = None
) -> Iterator[EssentialSet]:
    """Yield every (members, center) pair of an essential set of order k.

    The same member set is yielded once per valid center. Order k=1 yields
    every singleton (the distance condition is vacuous).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_cap(g, "essential", max_n)
    adj = g.adj
    for center in range(g.n):
        if k == 1:
            yield EssentialSet(bit(center), center)
            continue
        candidates = tuple(bits(_distance_two_mask(g, center)))

        def rec(start: int, chosen: int, need: int) -> Iterator[int]:
            if need == 0:
                yield chosen
                return
            for i in range(start, len(candidates) - need + 1):
                v = candidates[i]
                if chosen & adj[v]:
                    continue
                yield from rec(i + 1, chosen | bit(v), need - 1)

        for members in rec(0, bit(center), k - 1):
            yield EssentialSet(members, center)


def alpha_e(g: Graph, max_n: int | None = None) -> int:
    """Largest k admitting an essential set of order k; at least 1."""
    _require_cap(g, "essential", max_n)
    best = 1
    for center in range(g.n):
        d2 = _distance_two_mask(g, center)
        if d2 == 0:
            continue
        best = max(best, 1 + _max_independent_size(g, d2))
    return best


def _max_independent_size(g: Graph, candidates: int) -> int:
    adj = g.adj

    def rec(mask: int, have: int, best: int) -> int:
        if have + mask.bit_count() <= best:
            return best
        if mask == 0:
            return max(best, have)
        v = (mask & -mask).bit_length() - 1
        best = rec(mask & ~adj[v] & ~bit(v), have + 1, best)
        return rec(mask & ~bit(v), have, best)

    return rec(candidates, 0, 0)


def mu(g: Graph, k: int, max_n: int | None = None) -> Rational:
    """Minimum over essential sets of order k of the maximum degree inside;
    +inf when no such set exists. Defined for k >= 2."""
    if k < 2:
        raise ValueError("k must be >= 2")
    _require_cap(g, "essential", max_n)
    degrees = [m.bit_count() for m in g.adj]
    feasible = None
    for d in sorted(set(degrees)):
        if feasible is not None and d >= feasible:
            break
        allowed = mask_of_degrees_at_most(g, degrees, d)
        for center in bits(allowed):
            cands = _distance_two_mask(g, center) & allowed
            if has_independent_subset(g, cands, k - 1):
                feasible = d
                break
    return INF if feasible is None else feasible


def mask_of_degrees_at_most(g: Graph, degrees: list[int], d: int) -> int:
    m = 0
    for v in range(g.n):
        if degrees[v] <= d:
            m |= 1 << v
    return m


# -- independence propagation oracles ----------------------------------------


def independent_union_oracle(g: Graph, k: int, a: int, b: int) -> bool:
    """Whether the union of two independent sets sharing >= k vertices is
    itself independent; under the freeness precondition this always holds.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not is_independent(g, a):
        raise PreconditionError("a-independent", "first set spans an edge")
    if not is_independent(g, b):
        raise PreconditionError("b-independent", "second set spans an edge")
    if (a & b).bit_count() < k:
        raise PreconditionError("overlap", f"|a&b| must be >= {k}")
    if not is_p2kp1_free(g, k):
        raise PreconditionError("freeness", f"graph is not free at k={k}")
    return is_independent(g, a | b)


def neighbor_count_oracle(g: Graph, k: int, a: int, x: int) -> bool:
    """Whether |N(x) & a| >= |a| - k + 1 for x adjacent to the independent
    set a; under the freeness precondition this always holds."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not is_independent(g, a):
        raise PreconditionError("a-independent", "set spans an edge")
    g._check_vertex(x)
    if not g.adj[x] & a:
        raise PreconditionError("x-in-neighborhood", "x has no neighbor in a")
    if not is_p2kp1_free(g, k):
        raise PreconditionError("freeness", f"graph is not free at k={k}")
    return (g.adj[x] & a).bit_count() >= a.bit_count() - k + 1


# -- aggregate report ----------------------------------------------------------


@dataclass
class InvariantReport:
    """Hypothesis-side quantities for one graph at one k."""

    n: int
    kappa: int
    toughness: Rational
    alpha_e: int
    mu: dict[int, Rational]
    freeness: dict[int, bool]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kappa": self.kappa,
            "toughness": rational_to_json(self.toughness),
            "alpha_e": self.alpha_e,
            "mu": {str(k): rational_to_json(v) for k, v in sorted(self.mu.items())},
            "freeness": {str(k): v for k, v in sorted(self.freeness.items())},
        }


def invariant_report(g: Graph, k: int, max_n: int | None = None) -> InvariantReport:
    if k < 1:
        raise ValueError("k must be >= 1")
    report = InvariantReport(
        n=g.n,
        kappa=connectivity(g),
        toughness=toughness(g, max_n),
        alpha_e=alpha_e(g, max_n),
        mu={k + 1: mu(g, k + 1, max_n)},
        freeness={k: is_p2kp1_free(g, k)},
    )
    assert report.kappa <= g.min_degree() or g.n == 1
    return report
