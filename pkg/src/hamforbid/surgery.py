"""Cycle surgery: exchanges, good paths, interval structure, and replay.

Everything revolves around a longest cycle C with a fixed orientation, an
exterior vertex u0 of maximum degree, and the anchors X = N_C(u0) labelled
x_1..x_m in cycle order. The operations here perform the explicit splices
that either extend C (impossible when C is longest) or pin down structure.
The replay driver runs the whole deduction cascade: for a non-Hamiltonian
graph passing the hypothesis battery it must terminate in a rigidity
certificate whose only realization is the Petersen graph.

Indices follow the 1-based x_i convention inside contexts; graph vertices
stay 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import (
    ContextError,
    HypothesisError,
    InternalConsistencyError,
    PreconditionError,
)
from .graphs import Graph, bit, bits, component_masks, mask_of
from .hamilton import OrientedCycle, is_petersen, longest_cycle
from .invariants import (
    EssentialSet,
    INF,
    is_p2kp1_free,
    is_t_tough,
    is_k_connected,
    mu,
)


@dataclass(frozen=True)
class LongerCycle:
    """A strictly longer cycle than the context's C, with its splice recipe."""

    cycle: OrientedCycle
    recipe: str


@dataclass(frozen=True)
class CycleExchange:
    """An equal-length cycle that moves ``exposed`` off the cycle."""

    cycle: OrientedCycle
    exposed: int
    recipe: str


@dataclass(frozen=True)
class GoodPath:
    """A spanning path of G[V(C)] from x_q, with its good segments.

    A segment (z, w) is good when the path traverses C[z, w] exactly in
    cycle order.
    """

    path: tuple[int, ...]
    segments: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PathFacts:
    """What a non-extendable good path certifies about its endpoint."""

    endpoint: int
    endpoint_avoids_center: bool
    empty_segments: tuple[tuple[int, int], ...]


class SurgeryContext:
    """Longest-cycle bookkeeping: (C, u0, x_1..x_m) plus the bad edge uv.

    ``uv`` is the first cycle edge, scanning forward from x_m, whose both
    endpoints neighbor the predecessor set X-; the anchor labels are rotated
    so that uv lies on the final interval (between x_m and x_1). q is the
    least i with pred(x_i) adjacent to u; i_indices are all i with pred(x_i)
    adjacent to v, so p = len(i_indices) and h = ceil(p/2).
    """

    def __init__(
        self,
        g: Graph,
        k: int,
        cycle: OrientedCycle,
        u0: int,
        forced_uv: tuple[int, int] | None = None,
    ) -> None:
        if cycle.host != g:
            raise ContextError("cycle does not live in the given graph")
        if u0 in cycle:
            raise ContextError("u0 must lie outside the cycle")
        self.g = g
        self.k = k
        self.cycle = cycle
        self.u0 = u0
        x_mask = g.adj[u0] & cycle.vertex_mask
        if not x_mask:
            raise ContextError("u0 has no neighbor on the cycle")
        xs = [v for v in cycle.order if x_mask >> v & 1]
        self.m = len(xs)
        self.x_mask = x_mask
        self.xminus_mask = cycle.pred_mask(x_mask)
        self.xplus_mask = cycle.succ_mask(x_mask)
        nxm = 0
        for v in bits(self.xminus_mask):
            nxm |= g.adj[v]
        self.n_xminus_mask = nxm
        nxp = 0
        for v in bits(self.xplus_mask):
            nxp |= g.adj[v]
        self.n_xplus_mask = nxp

        if forced_uv is not None:
            z, w = forced_uv
            if cycle.succ(z) != w:
                raise ContextError("forced uv is not a forward cycle edge")
            if not (nxm >> z & 1 and nxm >> w & 1):
                raise ContextError("forced uv endpoints must neighbor X-")
            self.uv: tuple[int, int] | None = (z, w)
        else:
            self.uv = self._scan_bad_edge(xs)
        if self.uv is not None:
            xs = self._rotate_for(xs, self.uv[0])
        self.xs = tuple(xs)
        self._xpos = {v: i + 1 for i, v in enumerate(self.xs)}

        self.q: int | None = None
        self.p = 0
        self.i_indices: tuple[int, ...] = ()
        self.h = 0
        if self.uv is not None:
            u, v = self.uv
            qs = [i for i in range(1, self.m + 1) if g.adj[u] >> self.xminus(i) & 1]
            self.q = min(qs) if qs else None
            self.i_indices = tuple(
                i for i in range(1, self.m + 1) if g.adj[v] >> self.xminus(i) & 1
            )
            self.p = len(self.i_indices)
            self.h = (self.p + 1) // 2

    # -- anchor accessors (1-based) --

    def x(self, i: int) -> int:
        return self.xs[(i - 1) % self.m]

    def xminus(self, i: int) -> int:
        return self.cycle.pred(self.x(i))

    def xplus(self, i: int) -> int:
        return self.cycle.succ(self.x(i))

    def xminus2(self, i: int) -> int:
        return self.cycle.pred2(self.x(i))

    def anchor_index(self, v: int) -> int | None:
        return self._xpos.get(v)

    def exterior_mask(self) -> int:
        return self.g.full_mask & ~self.cycle.vertex_mask

    def interval(self, i: int) -> tuple[int, ...]:
        """Vertices of the cycle stretch from x_i to x_{i+1} (inclusive)."""
        if self.m < 2:
            raise ContextError("intervals need at least two anchors")
        return self.cycle.segment(self.x(i), self.x(i + 1))

    def _scan_bad_edge(self, xs: list[int]) -> tuple[int, int] | None:
        cyc, nxm = self.cycle, self.n_xminus_mask
        L = len(cyc)
        start = cyc.position(xs[-1])
        for step in range(L):
            z = cyc.order[(start + step) % L]
            w = cyc.succ(z)
            if nxm >> z & 1 and nxm >> w & 1:
                return (z, w)
        return None

    def _rotate_for(self, xs: list[int], u: int) -> list[int]:
        # Relabel so the interval holding edge (u, succ u) ends the order.
        cyc = self.cycle
        pos_u = cyc.position(u)
        L = len(cyc)
        xpos = sorted(range(len(xs)), key=lambda i: cyc.position(xs[i]))
        xs_sorted = [xs[i] for i in xpos]
        # last anchor at-or-before u along the orientation, cyclically
        best = None
        for idx, v in enumerate(xs_sorted):
            d = (pos_u - cyc.position(v)) % L
            if best is None or d < best[0]:
                best = (d, idx)
        j = best[1]
        return xs_sorted[j + 1 :] + xs_sorted[: j + 1]

    def describe(self) -> dict:
        return {
            "u0": self.u0,
            "m": self.m,
            "anchors": list(self.xs),
            "uv": list(self.uv) if self.uv else None,
            "q": self.q,
            "p": self.p,
            "i_indices": list(self.i_indices),
            "h": self.h,
        }


def build_context(
    g: Graph,
    k: int,
    cycle: OrientedCycle | None = None,
    u0: int | None = None,
    forced_uv: tuple[int, int] | None = None,
    max_n: int | None = None,
) -> SurgeryContext:
    """Assemble a surgery context; defaults pick the canonical longest cycle
    and the exterior vertex of maximum degree (smallest id on ties)."""
    if cycle is None:
        cycle = longest_cycle(g, max_n)
        if cycle is None:
            raise ContextError("graph has no cycle")
    exterior = g.full_mask & ~cycle.vertex_mask
    if exterior == 0:
        raise ContextError("cycle is spanning; no exterior vertex")
    if u0 is None:
        u0 = max(bits(exterior), key=lambda v: (g.degree(v), -v))
    elif not exterior >> u0 & 1:
        raise ContextError(f"u0={u0} is not an exterior vertex")
    return SurgeryContext(g, k, cycle, u0, forced_uv)


# -- longest paths through a small vertex pool --------------------------------


def _longest_path(g: Graph, pool: int, s: int, t: int) -> tuple[int, ...] | None:
    """Longest s-t path using only vertices in ``pool`` (s, t included)."""
    best: tuple[int, ...] | None = None
    path = [s]

    def rec(cur: int, visited: int) -> None:
        nonlocal best
        if cur == t:
            if best is None or len(path) > len(best):
                best = tuple(path)
            return
        for w in bits(g.adj[cur] & pool & ~visited):
            path.append(w)
            rec(w, visited | bit(w))
            path.pop()

    rec(s, bit(s))
    return best


# -- exterior components -------------------------------------------------------


def exterior_structure(
    g: Graph, cycle: OrientedCycle, component: int, k: int
) -> Union[EssentialSet, LongerCycle]:
    """Resolve one component H of g - V(C).

    When H is a singleton {u0} and pred(N_C(H)) + u0 is independent, that
    set is essential with center u0 and is returned. Any adjacency inside
    pred(N_C(H)) + V(H) instead yields an explicit longer cycle through H.
    A connected H of order >= 2 with neither outcome witnesses a violated
    precondition (freeness or connectivity) and raises.
    """
    if component == 0 or component & cycle.vertex_mask:
        raise PreconditionError("component", "H must avoid the cycle")
    comps = component_masks(g, cycle.vertex_mask)
    if component not in comps:
        raise PreconditionError("component", "H is not a component of g - V(C)")

    nch = 0
    for v in bits(component):
        nch |= g.adj[v]
    nch &= cycle.vertex_mask
    pred_mask = cycle.pred_mask(nch)
    preds = sorted(bits(pred_mask))

    # H itself adjacent to some predecessor: splice through H. (Checked
    # before the pair case, which such an adjacency always also creates.)
    for u0 in sorted(bits(component)):
        for y in preds:
            if g.adj[u0] >> y & 1:
                yp = cycle.succ(y)
                pool = component | bit(yp)
                path = _longest_path(g, pool, u0, yp)
                # ride the cycle from succ(y) around to y, hop to the
                # component, cross it, and rejoin at succ(y)
                order = cycle.segment(yp, y) + path[:-1]
                return LongerCycle(
                    OrientedCycle(g, order), recipe="exterior-center-pred"
                )

    # adjacent pair inside pred(N_C(H)): splice through H
    for ai, x in enumerate(preds):
        for y in preds[ai + 1 :]:
            if g.adj[x] >> y & 1:
                xp, yp = cycle.succ(x), cycle.succ(y)
                pool = component | bit(xp) | bit(yp)
                path = _longest_path(g, pool, xp, yp)
                # xp, yp both neighbor H and H is connected, so an xp-yp
                # path with at least one interior vertex exists.
                order = (
                    cycle.segment(yp, x)
                    + tuple(reversed(cycle.segment(xp, y)))
                    + path[1:-1]
                )
                return LongerCycle(
                    OrientedCycle(g, order), recipe="exterior-pred-pair"
                )

    if component.bit_count() == 1:
        u0 = component.bit_length() - 1
        ess = EssentialSet(pred_mask | component, u0)
        ess.validate(g)
        return ess

    # H has an internal edge; independence of pred + endpoint on both ends
    # contradicts freeness (or H's attachment is thinner than k-connectivity
    # allows); surface which precondition fails.
    if pred_mask.bit_count() >= k:
        u, v = next((u, v) for u in bits(component) for v in bits(g.adj[u] & component))
        witness = sorted(bits(pred_mask))[:k] + [u, v]
        raise PreconditionError(
            "freeness",
            f"edge ({u},{v}) plus {k} predecessors induce the forbidden graph: "
            f"{sorted(witness)}",
        )
    raise PreconditionError(
        "connectivity",
        f"component attaches through {pred_mask.bit_count()} < k = {k} vertices",
    )


# -- equal-length exchanges ------------------------------------------------------


def exchange_cycle(ctx: SurgeryContext, i: int) -> CycleExchange | None:
    """Equal-length cycle exposing pred(x_i), when a direct or crossing
    splice through u0 exists; None otherwise."""
    if not 1 <= i <= ctx.m:
        raise PreconditionError("index", f"i={i} outside [1,{ctx.m}]")
    g, cyc = ctx.g, ctx.cycle
    xi = ctx.x(i)
    xi2 = ctx.xminus2(i)
    if xi2 == xi:
        return None
    if g.adj[ctx.u0] >> xi2 & 1:
        order = cyc.segment(xi, xi2) + (ctx.u0,)
        return CycleExchange(
            OrientedCycle(g, order), exposed=ctx.xminus(i), recipe="exchange-direct"
        )
    for j in range(1, ctx.m + 1):
        if j == i:
            continue
        xjm = ctx.xminus(j)
        if g.adj[xi2] >> xjm & 1 and xjm != xi2:
            order = (
                cyc.segment(xi, xjm)
                + tuple(reversed(cyc.segment(ctx.x(j), xi2)))
                + (ctx.u0,)
            )
            return CycleExchange(
                OrientedCycle(g, order),
                exposed=ctx.xminus(i),
                recipe="exchange-cross",
            )
    return None


# -- good paths -------------------------------------------------------------------


def _require_bad_edge(ctx: SurgeryContext) -> tuple[int, int]:
    if ctx.uv is None:
        raise PreconditionError("bad-edge", "context has no bad edge uv")
    if ctx.q is None:
        raise PreconditionError("q-undefined", "u has no neighbor in X-")
    u, v = ctx.uv
    # the segment layout needs uv strictly inside the final interval, which
    # holds whenever the anchor predecessors form an independent set
    if ctx.anchor_index(v) is not None or ctx.xminus_mask & (bit(u) | bit(v)):
        raise PreconditionError(
            "bad-edge-position", "uv touches the anchor ring; context degenerate"
        )
    return ctx.uv


def good_path_single(ctx: SurgeryContext, a: int) -> GoodPath:
    """Spanning path x_q..u, u->pred(x_q)..pred(x_a), v..pred2(x_a)."""
    u, v = _require_bad_edge(ctx)
    if not 1 <= a <= ctx.m:
        raise PreconditionError("index", f"a={a} outside [1,{ctx.m}]")
    if not ctx.g.adj[v] >> ctx.xminus(a) & 1:
        raise PreconditionError("a-neighbor", "pred(x_a) must neighbor v")
    if not a < ctx.q:
        raise PreconditionError("a-before-q", f"need a < q, got a={a}, q={ctx.q}")
    cyc = ctx.cycle
    xq = ctx.x(ctx.q)
    path = (
        cyc.segment(xq, u)
        + tuple(reversed(cyc.segment(ctx.xminus(a), cyc.pred(xq))))
        + cyc.segment(v, ctx.xminus2(a))
    )
    gp = GoodPath(path, ((xq, u), (v, ctx.xminus2(a))))
    _validate_good_path(ctx, gp)
    return gp


def good_path_double(ctx: SurgeryContext, a: int, b: int) -> GoodPath:
    u, v = _require_bad_edge(ctx)
    for name, idx in (("a", a), ("b", b)):
        if not 1 <= idx <= ctx.m:
            raise PreconditionError("index", f"{name}={idx} outside [1,{ctx.m}]")
    if not ctx.g.adj[v] >> ctx.xminus(a) & 1:
        raise PreconditionError("a-neighbor", "pred(x_a) must neighbor v")
    if not ctx.g.adj[ctx.xminus2(a)] >> ctx.xminus(b) & 1:
        raise PreconditionError("b-neighbor", "pred(x_b) must neighbor pred2(x_a)")
    if not a < b <= ctx.q:
        raise PreconditionError("order", f"need a < b <= q, got {a},{b},{ctx.q}")
    cyc = ctx.cycle
    xq = ctx.x(ctx.q)
    path = (
        cyc.segment(xq, u)
        + tuple(reversed(cyc.segment(ctx.xminus(b), cyc.pred(xq))))
        + tuple(reversed(cyc.segment(v, ctx.xminus2(a))))
        + cyc.segment(ctx.xminus(a), ctx.xminus2(b))
    )
    gp = GoodPath(path, ((xq, u), (ctx.xminus(a), ctx.xminus2(b))))
    _validate_good_path(ctx, gp)
    return gp


def good_path_triple(ctx: SurgeryContext, a: int, b: int, c: int) -> GoodPath:
    u, v = _require_bad_edge(ctx)
    for name, idx in (("a", a), ("b", b), ("c", c)):
        if not 1 <= idx <= ctx.m:
            raise PreconditionError("index", f"{name}={idx} outside [1,{ctx.m}]")
    if not ctx.g.adj[v] >> ctx.xminus(a) & 1:
        raise PreconditionError("a-neighbor", "pred(x_a) must neighbor v")
    if not ctx.g.adj[ctx.xminus2(a)] >> ctx.xminus(b) & 1:
        raise PreconditionError("b-neighbor", "pred(x_b) must neighbor pred2(x_a)")
    if not ctx.g.adj[ctx.xminus2(b)] >> ctx.xminus(c) & 1:
        raise PreconditionError("c-neighbor", "pred(x_c) must neighbor pred2(x_b)")
    if not a < b < c <= ctx.q:
        raise PreconditionError(
            "order", f"need a < b < c <= q, got {a},{b},{c},{ctx.q}"
        )
    cyc = ctx.cycle
    xq = ctx.x(ctx.q)
    path = (
        cyc.segment(xq, u)
        + tuple(reversed(cyc.segment(ctx.xminus(c), cyc.pred(xq))))
        + tuple(reversed(cyc.segment(ctx.xminus(a), ctx.xminus2(b))))
        + cyc.segment(v, ctx.xminus2(a))
        + cyc.segment(ctx.xminus(b), ctx.xminus2(c))
    )
    gp = GoodPath(
        path, ((xq, u), (v, ctx.xminus2(a)), (ctx.xminus(b), ctx.xminus2(c)))
    )
    _validate_good_path(ctx, gp)
    return gp


def _validate_good_path(ctx: SurgeryContext, gp: GoodPath) -> None:
    cyc, g = ctx.cycle, ctx.g
    path = gp.path
    if ctx.q is None or path[0] != ctx.x(ctx.q):
        raise PreconditionError("good-path", "path must start at x_q")
    if len(path) != len(cyc) or set(path) != set(cyc.order):
        raise PreconditionError("good-path", "path must span V(C) exactly once")
    for p, w in zip(path, path[1:]):
        if not g.adj[p] >> w & 1:
            raise PreconditionError("good-path", f"non-edge ({p},{w}) on path")
    pos = {v: i for i, v in enumerate(path)}
    for z, w in gp.segments:
        seg = cyc.segment(z, w)
        i = pos[z]
        if tuple(path[i : i + len(seg)]) != seg:
            raise PreconditionError(
                "good-path", f"segment ({z},{w}) not traversed in cycle order"
            )


def path_extension(
    ctx: SurgeryContext, gp: GoodPath
) -> Union[LongerCycle, PathFacts]:
    """Extend a good path into a longer cycle through u0 when possible.

    Closes x_q..y with u0 when the endpoint neighbors u0; otherwise hooks any
    neighbor pred(x_i) of y inside a half-open good segment, rides the path
    back to x_i and closes through u0. When neither exists, returns the
    verified emptiness facts.
    """
    _validate_good_path(ctx, gp)
    g, cyc = ctx.g, ctx.cycle
    y = gp.path[-1]
    if g.adj[ctx.u0] >> y & 1:
        return LongerCycle(
            OrientedCycle(g, gp.path + (ctx.u0,)), recipe="extension-endpoint"
        )
    pos = {v: i for i, v in enumerate(gp.path)}
    for z, w in gp.segments:
        seg = cyc.segment(z, w)
        for xm in seg[:-1]:  # half-open: [z, w)
            if not ctx.xminus_mask >> xm & 1:
                continue
            if not g.adj[y] >> xm & 1:
                continue
            i = pos[xm]
            # successor of xm on the path equals its cycle successor x_i
            order = gp.path[: i + 1] + tuple(reversed(gp.path[i + 1 :])) + (ctx.u0,)
            return LongerCycle(OrientedCycle(g, order), recipe="extension-segment")
    empty = []
    for z, w in gp.segments:
        seg = cyc.segment(z, w)
        assert not any(
            ctx.xminus_mask >> t & 1 and g.adj[y] >> t & 1 for t in seg[:-1]
        )
        empty.append((z, w))
    return PathFacts(
        endpoint=y,
        endpoint_avoids_center=True,
        empty_segments=tuple(empty),
    )


# -- intervals ----------------------------------------------------------------


def bad_interval(ctx: SurgeryContext, i: int) -> bool:
    """Whether the stretch from x_i to x_{i+1} holds an edge with both
    endpoints neighboring X-."""
    if not 1 <= i <= ctx.m:
        raise PreconditionError("index", f"i={i} outside [1,{ctx.m}]")
    seg = ctx.interval(i)
    nxm = ctx.n_xminus_mask
    return any(
        nxm >> z & 1 and nxm >> w & 1 for z, w in zip(seg, seg[1:])
    )


def interval_bad_edges(ctx: SurgeryContext, i: int) -> list[tuple[int, int]]:
    seg = ctx.interval(i)
    nxm = ctx.n_xminus_mask
    return [
        (z, w) for z, w in zip(seg, seg[1:]) if nxm >> z & 1 and nxm >> w & 1
    ]


# -- the replay driver -----------------------------------------------------------


@dataclass
class StructureCertificate:
    """Rigid structure forced on a hypothesis-passing non-Hamiltonian graph."""

    t: int
    k: int
    m: int
    u0: int
    cycle: OrientedCycle
    anchors: tuple[int, ...]
    petersen: bool

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "k": self.k,
            "m": self.m,
            "u0": self.u0,
            "cycle": list(self.cycle.order),
            "anchors": list(self.anchors),
            "petersen": self.petersen,
        }


@dataclass
class ReplayOutcome:
    kind: str  # "certificate" | "longer-cycle"
    trace: list[dict] = field(default_factory=list)
    certificate: StructureCertificate | None = None
    longer: LongerCycle | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "trace": self.trace}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.longer is not None:
            out["longer_cycle"] = {
                "recipe": self.longer.recipe,
                "order": list(self.longer.cycle.order),
            }
        return out

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


class _Longer(Exception):
    """Internal control flow: a splice produced a longer cycle."""

    def __init__(self, longer: LongerCycle) -> None:
        self.longer = longer


def _fail(allow_longer: bool, step: str, message: str, longer: LongerCycle | None):
    if longer is not None and allow_longer:
        raise _Longer(longer)
    raise InternalConsistencyError(step, message)


def check_hypotheses(g: Graph, k: int, max_n: int | None = None) -> None:
    """Raise HypothesisError unless g is 1-tough, k-connected, free at k,
    with the anchored-degree minimum at k+1 meeting (7k-6)/5."""
    if k < 2:
        raise HypothesisError("k must be >= 2")
    if g.n < 3:
        raise HypothesisError("graph has fewer than three vertices")
    if not is_k_connected(g, k):
        raise HypothesisError(f"graph is not {k}-connected")
    if not is_t_tough(g, 1, max_n):
        raise HypothesisError("graph is not 1-tough")
    if not is_p2kp1_free(g, k):
        raise HypothesisError(f"graph is not free at k={k}")
    bound = Fraction(7 * k - 6, 5)
    if not mu(g, k + 1, max_n) >= bound:
        raise HypothesisError(f"degree minimum below {bound}")


def replay(
    g: Graph,
    k: int,
    cycle: OrientedCycle | None = None,
    max_n: int | None = None,
) -> ReplayOutcome:
    """Walk the full deduction cascade on a longest cycle of g.

    With the default cycle (exact longest), every step must hold and the
    outcome is a StructureCertificate with petersen=True; any splice firing
    then raises InternalConsistencyError. Passing a non-longest cycle
    explicitly turns splice hits into a "longer-cycle" outcome instead.
    """
    check_hypotheses(g, k, max_n)
    if cycle is None:
        allow_longer = False
        if longest_cycle(g, max_n) is None:
            raise HypothesisError("graph has no cycle")
        cycle = longest_cycle(g, max_n)
        if len(cycle) == g.n:
            raise HypothesisError("graph is Hamiltonian")
    else:
        allow_longer = True
        if g.full_mask == cycle.vertex_mask:
            raise HypothesisError("cycle is spanning; nothing to replay")

    trace: list[dict] = []
    try:
        cert = _replay_inner(g, k, cycle, trace, allow_longer, max_n)
    except _Longer as stop:
        _check_longer(stop.longer, len(cycle))
        return ReplayOutcome(kind="longer-cycle", trace=trace, longer=stop.longer)
    return ReplayOutcome(kind="certificate", trace=trace, certificate=cert)


def _check_longer(lc: LongerCycle, base_len: int) -> None:
    if len(lc.cycle) <= base_len:
        raise InternalConsistencyError(
            "longer-cycle", f"splice produced length {len(lc.cycle)} <= {base_len}"
        )


def _replay_inner(
    g: Graph,
    k: int,
    cycle: OrientedCycle,
    trace: list[dict],
    allow_longer: bool,
    max_n: int | None,
) -> StructureCertificate:
    L = len(cycle)

    # exterior components are singletons with essential predecessor sets
    for comp in component_masks(g, cycle.vertex_mask):
        result = exterior_structure(g, cycle, comp, k)
        if isinstance(result, LongerCycle):
            _check_longer(result, L)
            _fail(
                allow_longer,
                "exterior-structure",
                f"component {sorted(bits(comp))} admits a longer cycle",
                result,
            )
        trace.append(
            {
                "step": "exterior-structure",
                "component": sorted(bits(comp)),
                "essential": sorted(bits(result.members)),
                "center": result.center,
            }
        )

    ctx = build_context(g, k, cycle, max_n=max_n)
    trace.append({"step": "context", **ctx.describe()})
    if ctx.m < k:
        raise InternalConsistencyError(
            "context", f"center degree m={ctx.m} below connectivity k={k}"
        )

    # anchored degree bound: m >= mu_{k+1}
    mu_val = mu(g, k + 1, max_n)
    if mu_val == INF:
        raise InternalConsistencyError(
            "anchor-degree-bound", "mu at k+1 is infinite; filter should not reach here"
        )
    if not ctx.m >= mu_val:
        raise InternalConsistencyError(
            "anchor-degree-bound", f"m={ctx.m} < mu={mu_val}"
        )
    trace.append({"step": "anchor-degree-bound", "m": ctx.m, "mu": int(mu_val)})

    _check_exterior_independence(ctx, trace, allow_longer)
    _check_edge_coverage(ctx, trace)

    if ctx.uv is None:
        raise InternalConsistencyError(
            "bad-edge", "no cycle edge has both endpoints neighboring X-"
        )

    facts = _cascade(ctx, trace, allow_longer, label="primary")
    t = facts["t"]

    # every interval's bad edges force the same rigid pattern (rotation)
    for i in range(1, ctx.m + 1):
        for z, w in interval_bad_edges(ctx, i):
            rot = build_context(g, k, cycle, u0=ctx.u0, forced_uv=(z, w))
            rfacts = _cascade(rot, trace, allow_longer, label=f"rotation-{i}")
            if rfacts["t"] != t:
                raise InternalConsistencyError(
                    "rigidity-rotation", f"inconsistent t: {rfacts['t']} vs {t}"
                )
            if (z, w) != (ctx.x(i), ctx.xplus(i)):
                raise InternalConsistencyError(
                    "rigidity-rotation",
                    f"bad edge ({z},{w}) is not (x_{i}, succ x_{i})",
                )
            _check_local_pattern(ctx, i, t, trace, tag="rotation")

    # reflected orientation: the same pattern for successor sets
    rev = cycle.reversed()
    reflected_edges = 0
    for i in range(1, ctx.m + 1):
        seg = ctx.interval(i)
        nxp = ctx.n_xplus_mask
        for z, w in zip(seg, seg[1:]):
            if nxp >> z & 1 and nxp >> w & 1:
                rot = build_context(g, k, rev, u0=ctx.u0, forced_uv=(w, z))
                rfacts = _cascade(rot, trace, allow_longer, label=f"reflection-{i}")
                if rfacts["t"] != t:
                    raise InternalConsistencyError(
                        "rigidity-reflection", f"inconsistent t: {rfacts['t']} vs {t}"
                    )
                reflected_edges += 1
    trace.append({"step": "rigidity-reflection", "edges": reflected_edges})

    _check_interval_parity(ctx, trace)

    for i in range(1, ctx.m + 1):
        if not bad_interval(ctx, i):
            raise InternalConsistencyError(
                "all-intervals-bad", f"interval {i} has no bad edge"
            )
    trace.append({"step": "all-intervals-bad", "m": ctx.m})

    for i in range(1, ctx.m + 1):
        _check_local_pattern(ctx, i, t, trace, tag="local")

    if t >= 1:
        lc = _tightness_splice(ctx)
        _fail(
            allow_longer,
            "tightness",
            f"t={t} >= 1 admits a longer cycle",
            lc,
        )
    trace.append({"step": "tightness", "t": t, "k": ctx.k, "m": ctx.m})

    cert = _assemble_certificate(ctx, t, trace, allow_longer)
    return cert


def _check_exterior_independence(
    ctx: SurgeryContext, trace: list[dict], allow_longer: bool
) -> None:
    g = ctx.g
    for v in sorted(bits(ctx.exterior_mask())):
        for mask, succ_side in ((ctx.xminus_mask, False), (ctx.xplus_mask, True)):
            hits = g.adj[v] & mask
            if not hits:
                continue
            if v == ctx.u0 and not succ_side:
                raise InternalConsistencyError(
                    "exterior-independence", "u0 adjacent to X-"
                )
            if hits.bit_count() >= 2:
                lc = _exterior_pair_splice(ctx, v, hits, succ_side)
                _fail(
                    allow_longer,
                    "exterior-independence",
                    f"exterior {v} has two neighbors across the anchor shifts",
                    lc,
                )
            raise InternalConsistencyError(
                "exterior-independence",
                f"exterior {v} adjacent to a single anchor shift",
            )
    trace.append(
        {
            "step": "exterior-independence",
            "exterior": sorted(bits(ctx.exterior_mask())),
        }
    )


def _exterior_pair_splice(
    ctx: SurgeryContext, v: int, hits: int, succ_side: bool
) -> LongerCycle:
    g = ctx.g
    cyc = ctx.cycle.reversed() if succ_side else ctx.cycle
    # anchors whose shifted vertices are the two hits, on the working cycle
    picks = []
    for w in bits(hits):
        anchor = cyc.succ(w)
        picks.append(anchor)
    xi, xj = picks[0], picks[1]
    order = (
        cyc.segment(xi, cyc.pred(xj))
        + (v,)
        + tuple(reversed(cyc.segment(xj, cyc.pred(xi))))
        + (ctx.u0,)
    )
    return LongerCycle(OrientedCycle(g, order), recipe="exterior-two-shift")


def _check_edge_coverage(ctx: SurgeryContext, trace: list[dict]) -> None:
    cyc = ctx.cycle
    for z in cyc.order:
        w = cyc.succ(z)
        if not (ctx.n_xminus_mask & (bit(z) | bit(w))):
            raise InternalConsistencyError(
                "cycle-edge-coverage", f"edge ({z},{w}) misses N(X-)"
            )
        if not (ctx.n_xplus_mask & (bit(z) | bit(w))):
            raise InternalConsistencyError(
                "cycle-edge-coverage", f"edge ({z},{w}) misses N(X+)"
            )
    trace.append({"step": "cycle-edge-coverage", "edges": len(cyc)})


def _cascade(
    ctx: SurgeryContext, trace: list[dict], allow_longer: bool, label: str
) -> dict:
    """Deductions over one context with its bad edge fixed: neighbor bounds,
    jump ordering, the good-path sweeps, and the rigidity pin (k,m)=(5t+3,7t+3).
    """
    g = ctx.g
    m, k = ctx.m, ctx.k
    u, v = ctx.uv
    q, p = ctx.q, ctx.p

    # the bad edge sits strictly inside the final interval
    if ctx.anchor_index(v) is not None or ctx.xminus_mask >> v & 1:
        raise InternalConsistencyError("bad-edge", f"v={v} touches the anchor ring")
    if g.adj[ctx.u0] >> v & 1:
        raise InternalConsistencyError("bad-edge", f"v={v} neighbors u0")
    if q is None:
        raise InternalConsistencyError("bad-edge", "u has no neighbor in X-")

    # lower bounds on anchor-shift neighborhoods
    targets = [u, v] + [ctx.xminus2(i) for i in range(1, m + 1)]
    for z in targets:
        need = m - k + 2 - (1 if g.adj[ctx.u0] >> z & 1 else 0)
        got = (g.adj[z] & ctx.xminus_mask).bit_count()
        if got < need:
            raise InternalConsistencyError(
                "anchor-neighbor-lower-bound", f"z={z}: {got} < {need}"
            )
    if not p >= m - k + 2:
        raise InternalConsistencyError(
            "anchor-neighbor-lower-bound", f"p={p} < m-k+2={m - k + 2}"
        )
    u_count = (g.adj[u] & ctx.xminus_mask).bit_count()
    if not (m - q + 1 >= u_count >= m - k + 1):
        raise InternalConsistencyError(
            "anchor-neighbor-lower-bound",
            f"u-neighbor count {u_count} outside [{m - k + 1},{m - q + 1}]",
        )

    i_p = ctx.i_indices[-1]
    if i_p >= q:
        lc = _jump_order_splice(ctx) if i_p > q else _jump_order_equal_splice(ctx)
        _fail(allow_longer, "jump-order", f"i_p={i_p} >= q={q}", lc)

    # single-jump sweep over all anchors of v
    single_facts: dict[int, PathFacts] = {}
    for a in ctx.i_indices:
        gp = good_path_single(ctx, a)
        ext = path_extension(ctx, gp)
        if isinstance(ext, LongerCycle):
            _fail(allow_longer, "span-single", f"a={a} extends the cycle", ext)
        single_facts[a] = ext
        hood = {
            ctx.anchor_index(ctx.cycle.succ(w))
            for w in bits(g.adj[ctx.xminus2(a)] & ctx.xminus_mask)
        }
        if not all(a <= i <= q for i in hood):
            raise InternalConsistencyError(
                "span-single", f"a={a}: neighbor anchors {sorted(hood)} leave [a,q]"
            )
        if len(hood) < m - k + 2:
            raise InternalConsistencyError(
                "span-single", f"a={a}: only {len(hood)} anchor neighbors"
            )

    # double-jump sweep
    for a in ctx.i_indices:
        for b in range(1, m + 1):
            if b == a or not g.adj[ctx.xminus2(a)] >> ctx.xminus(b) & 1:
                continue
            if not a < b <= q:
                raise InternalConsistencyError(
                    "span-double", f"(a,b)=({a},{b}) violates a < b <= q={q}"
                )
            gp = good_path_double(ctx, a, b)
            ext = path_extension(ctx, gp)
            if isinstance(ext, LongerCycle):
                _fail(
                    allow_longer, "span-double", f"(a,b)=({a},{b}) extends", ext
                )
            hood = {
                ctx.anchor_index(ctx.cycle.succ(w))
                for w in bits(g.adj[ctx.xminus2(b)] & ctx.xminus_mask)
            }
            if not all(i < a or b <= i <= q for i in hood):
                raise InternalConsistencyError(
                    "span-double",
                    f"(a,b)=({a},{b}): anchors {sorted(hood)} leave [1,a)+[b,q]",
                )
            if len(hood) < m - k + 2:
                raise InternalConsistencyError(
                    "span-double", f"(a,b)=({a},{b}): only {len(hood)} anchors"
                )

    # top jump bound
    if not Fraction(i_p) <= Fraction(3 * (m - k), 2) + 2:
        raise InternalConsistencyError(
            "top-jump-bound", f"i_p={i_p} exceeds 3(m-k)/2+2"
        )

    h = ctx.h
    i_h = ctx.i_indices[h - 1]
    if not Fraction(i_h) >= Fraction(m - k + 2, 2):
        raise InternalConsistencyError(
            "halfway-bound", f"i_h={i_h} below (m-k+2)/2"
        )

    # a second anchor shared by v and pred2(x_{i_h})
    shared = [
        i
        for i in ctx.i_indices
        if i != i_h and g.adj[ctx.xminus2(i_h)] >> ctx.xminus(i) & 1
    ]
    if not shared:
        raise InternalConsistencyError(
            "second-shared-neighbor", f"no second anchor shared at i_h={i_h}"
        )
    j = min(shared)
    if j not in ctx.i_indices[h:]:
        raise InternalConsistencyError(
            "second-shared-neighbor", f"j={j} not among the upper jumps"
        )

    ell = max(
        (
            i
            for i in range(1, m + 1)
            if g.adj[ctx.xminus2(j)] >> ctx.xminus(i) & 1
        ),
        default=None,
    )
    if ell is None or not (i_h < j < ell <= q):
        raise InternalConsistencyError(
            "rigidity", f"chain i_h={i_h} < j={j} < ell={ell} <= q={q} broken"
        )
    if not ell - j + 1 >= m - k + 2:
        raise InternalConsistencyError(
            "rigidity", f"span [j,ell] too small: {ell - j + 1}"
        )

    gp3 = good_path_triple(ctx, i_h, j, ell)
    ext3 = path_extension(ctx, gp3)
    if isinstance(ext3, LongerCycle):
        _fail(allow_longer, "rigidity", "triple jump extends the cycle", ext3)
    hood = {
        ctx.anchor_index(ctx.cycle.succ(w))
        for w in bits(g.adj[ctx.xminus2(ell)] & ctx.xminus_mask)
    }
    if not all(i_h <= i < j or ell <= i <= q for i in hood):
        raise InternalConsistencyError(
            "rigidity", f"ell-anchors {sorted(hood)} leave [i_h,j)+[ell,q]"
        )
    if not (j - i_h) + (q - ell + 1) >= m - k + 2:
        raise InternalConsistencyError(
            "rigidity", "window [i_h,j)+[ell,q] below m-k+2"
        )

    # the summed equalities pin m exactly
    bound = Fraction(7 * k - 6, 5)
    if Fraction(m) != bound:
        raise InternalConsistencyError(
            "rigidity", f"m={m} differs from (7k-6)/5={bound}"
        )
    t5, r5 = divmod(k - 3, 5)
    t7, r7 = divmod(m - 3, 7)
    if r5 or r7 or t5 != t7 or t5 < 0:
        raise InternalConsistencyError(
            "rigidity", f"(k,m)=({k},{m}) not of the form (5t+3,7t+3)"
        )
    t = t5

    # equalities: the bad edge hugs x_m, the halfway jump lands at t+1,
    # and the anchor neighborhoods are rigid
    if (u, v) != (ctx.x(m), ctx.xplus(m)):
        raise InternalConsistencyError(
            "rigidity", f"(u,v)=({u},{v}) is not (x_m, succ x_m)"
        )
    if i_h != t + 1:
        raise InternalConsistencyError(
            "rigidity", f"halfway jump i_h={i_h} differs from t+1={t + 1}"
        )
    want_u = mask_of(ctx.xminus(m - i) for i in range(0, 2 * t + 1))
    if g.adj[u] & ctx.xminus_mask != want_u:
        raise InternalConsistencyError("rigidity", "u-anchor neighborhood not rigid")
    v_hits = g.adj[v] & ctx.xminus_mask
    if v_hits.bit_count() != 2 * t + 2:
        raise InternalConsistencyError(
            "rigidity", f"v has {v_hits.bit_count()} anchor shifts, want {2 * t + 2}"
        )
    if not (v_hits >> ctx.xminus(1) & 1 and v_hits >> ctx.xminus(2) & 1):
        raise InternalConsistencyError(
            "rigidity", "v misses pred(x_1) or pred(x_2)"
        )

    trace.append(
        {
            "step": "cascade",
            "label": label,
            "u": u,
            "v": v,
            "q": q,
            "p": p,
            "i_indices": list(ctx.i_indices),
            "i_h": i_h,
            "j": j,
            "ell": ell,
            "t": t,
        }
    )
    return {"t": t, "j": j, "ell": ell, "i_h": i_h}


def _jump_order_splice(ctx: SurgeryContext) -> LongerCycle:
    # i_p > q: ride up from x_{i_p}, hook u to pred(x_q), fall to v, hook
    # back through pred(x_{i_p}) and close via u0.
    g, cyc = ctx.g, ctx.cycle
    u, v = ctx.uv
    q, i_p = ctx.q, ctx.i_indices[-1]
    order = (
        cyc.segment(ctx.x(i_p), u)
        + tuple(reversed(cyc.segment(v, cyc.pred(ctx.x(q)))))
        + tuple(reversed(cyc.segment(ctx.x(q), ctx.xminus(i_p))))
        + (ctx.u0,)
    )
    return LongerCycle(OrientedCycle(g, order), recipe="jump-order")


def _jump_order_equal_splice(ctx: SurgeryContext) -> LongerCycle | None:
    # i_p == q: both u and v neighbor pred(x_q); find an anchor shift
    # adjacent to pred2(x_q), reroute around pred(x_q), then stitch pred(x_q)
    # back between u and v.
    g, cyc = ctx.g, ctx.cycle
    u, v = ctx.uv
    q = ctx.q
    xq = ctx.x(q)
    xqm, xqm2 = cyc.pred(xq), cyc.pred2(xq)
    if g.adj[ctx.u0] >> xqm2 & 1:
        order = (
            cyc.segment(xq, u)
            + (xqm,)
            + cyc.segment(v, xqm2)
            + (ctx.u0,)
        )
        return LongerCycle(OrientedCycle(g, order), recipe="jump-order-equal")
    for i in range(1, ctx.m + 1):
        if i == q or not g.adj[xqm2] >> ctx.xminus(i) & 1:
            continue
        base = (
            cyc.segment(ctx.x(i), xqm2)
            + tuple(reversed(cyc.segment(xq, ctx.xminus(i))))
            + (ctx.u0,)
        )
        # replace the uv edge on the rerouted cycle with u, pred(x_q), v
        seq = list(base)
        for idx, z in enumerate(seq):
            nxt = seq[(idx + 1) % len(seq)]
            if (z, nxt) == (u, v) or (z, nxt) == (v, u):
                seq[idx + 1 : idx + 1] = [xqm]
                return LongerCycle(
                    OrientedCycle(g, tuple(seq)), recipe="jump-order-equal"
                )
    return None


def _tightness_splice(ctx: SurgeryContext) -> LongerCycle:
    # with t >= 1 the rigid pattern itself yields a longer cycle
    g, cyc = ctx.g, ctx.cycle
    i = 1
    order = (
        cyc.segment(ctx.x(i + 2), ctx.x(i))
        + cyc.segment(ctx.xplus(i + 1), cyc.pred2(ctx.x(i + 2)))
        + cyc.segment(ctx.xplus(i), ctx.x(i + 1))
        + (ctx.u0,)
    )
    return LongerCycle(OrientedCycle(g, order), recipe="tightness")


def _check_local_pattern(
    ctx: SurgeryContext, i: int, t: int, trace: list[dict], tag: str
) -> None:
    g = ctx.g
    want_minus = mask_of(ctx.xminus(i - j) for j in range(0, 2 * t + 1))
    if g.adj[ctx.x(i)] & ctx.xminus_mask != want_minus:
        raise InternalConsistencyError(
            "local-structure", f"x_{i} predecessor window broken"
        )
    want_plus = mask_of(ctx.xplus(i + j) for j in range(0, 2 * t + 1))
    if g.adj[ctx.x(i)] & ctx.xplus_mask != want_plus:
        raise InternalConsistencyError(
            "local-structure", f"x_{i} successor window broken"
        )
    succ_hits = g.adj[ctx.xplus(i)] & ctx.xminus_mask
    if succ_hits.bit_count() != 2 * t + 2:
        raise InternalConsistencyError(
            "local-structure", f"succ(x_{i}) anchor count != {2 * t + 2}"
        )
    for j in (1, 2):
        if not succ_hits >> ctx.xminus(i + j) & 1:
            raise InternalConsistencyError(
                "local-structure", f"succ(x_{i}) misses pred(x_{i + j})"
            )
    pred_hits = g.adj[ctx.xminus(i)] & ctx.xplus_mask
    if pred_hits.bit_count() != 2 * t + 2:
        raise InternalConsistencyError(
            "local-structure", f"pred(x_{i}) anchor count != {2 * t + 2}"
        )
    for j in (1, 2):
        if not pred_hits >> ctx.xplus(i - j) & 1:
            raise InternalConsistencyError(
                "local-structure", f"pred(x_{i}) misses succ(x_{i - j})"
            )
    trace.append({"step": "local-structure", "tag": tag, "i": i, "t": t})


def _check_interval_parity(ctx: SurgeryContext, trace: list[dict]) -> None:
    rows = []
    for i in range(1, ctx.m + 1):
        a = bad_interval(ctx, i)
        b = bool(ctx.n_xminus_mask >> ctx.xplus(i) & 1)
        c = bool(ctx.n_xplus_mask >> ctx.xminus(i + 1) & 1)
        d = len(ctx.interval(i)) % 2 == 0
        if not a == b == c == d:
            raise InternalConsistencyError(
                "interval-parity",
                f"interval {i}: bad={a} succ-in-N(X-)={b} "
                f"pred-in-N(X+)={c} even={d}",
            )
        rows.append([i, a])
    trace.append({"step": "interval-parity", "intervals": rows})


def interval_parity_agrees(ctx: SurgeryContext, i: int) -> bool:
    """Four-way agreement at interval i: bad edge, succ(x_i) in N(X-),
    pred(x_{i+1}) in N(X+), and even interval order."""
    a = bad_interval(ctx, i)
    b = bool(ctx.n_xminus_mask >> ctx.xplus(i) & 1)
    c = bool(ctx.n_xplus_mask >> ctx.xminus(i + 1) & 1)
    d = len(ctx.interval(i)) % 2 == 0
    return a == b == c == d


def _assemble_certificate(
    ctx: SurgeryContext, t: int, trace: list[dict], allow_longer: bool
) -> StructureCertificate:
    g, cyc = ctx.g, ctx.cycle
    if ctx.m != 3 or ctx.k != 3 or t != 0:
        raise InternalConsistencyError(
            "tightness", f"expected k=m=3 at t=0, got k={ctx.k}, m={ctx.m}, t={t}"
        )
    exterior = ctx.exterior_mask()
    if exterior != bit(ctx.u0):
        raise InternalConsistencyError(
            "unique-exterior", f"exterior {sorted(bits(exterior))} != [u0]"
        )
    trace.append({"step": "unique-exterior", "u0": ctx.u0})

    for i in range(1, 4):
        if cyc.succ(ctx.xplus(i)) != ctx.xminus(i + 1):
            raise InternalConsistencyError(
                "interval-spacing", f"succ2(x_{i}) != pred(x_{i + 1})"
            )
    if len(cyc) != 9 or g.n != 10:
        raise InternalConsistencyError(
            "interval-spacing", f"cycle length {len(cyc)} with n={g.n}"
        )
    trace.append({"step": "interval-spacing", "cycle_length": len(cyc)})

    for i in range(1, 4):
        want = mask_of((ctx.u0, ctx.xminus(i), ctx.xplus(i)))
        if g.adj[ctx.x(i)] != want:
            raise InternalConsistencyError(
                "anchor-degree-three", f"N(x_{i}) is not {{u0, pred, succ}}"
            )
    trace.append({"step": "anchor-degree-three", "anchors": list(ctx.xs)})

    chords = {
        frozenset((ctx.xplus(1), ctx.xminus(3))),
        frozenset((ctx.xplus(2), ctx.xminus(1))),
        frozenset((ctx.xplus(3), ctx.xminus(2))),
    }
    cyc_edges = {
        frozenset((z, cyc.succ(z))) for z in cyc.order
    }
    actual = {
        frozenset((a, b))
        for a in cyc.order
        for b in bits(g.adj[a] & cyc.vertex_mask)
    }
    if actual != cyc_edges | chords:
        raise InternalConsistencyError("chord-set", "induced edges off pattern")
    if g.adj[ctx.u0] != ctx.x_mask:
        raise InternalConsistencyError("chord-set", "u0 neighborhood is not X")
    trace.append(
        {"step": "chord-set", "chords": sorted(sorted(c) for c in chords)}
    )

    cert = StructureCertificate(
        t=t,
        k=ctx.k,
        m=ctx.m,
        u0=ctx.u0,
        cycle=cyc,
        anchors=ctx.xs,
        petersen=is_petersen(g),
    )
    if not cert.petersen:
        raise InternalConsistencyError(
            "petersen-assembly", "rigid structure failed the isomorphism test"
        )
    petersen_assembly(cert, g)
    trace.append({"step": "petersen-assembly", "petersen": True})
    return cert


def petersen_assembly(cert: StructureCertificate, g: Graph) -> bool:
    """Re-verify every terminal equality of a certificate against g, then
    confirm the Petersen isomorphism. Failures raise AssemblyError naming
    the check."""
    from .errors import AssemblyError

    if cert.t != 0 or cert.k != 3 or cert.m != 3:
        raise AssemblyError("shape", f"(t,k,m)=({cert.t},{cert.k},{cert.m})")
    cyc = cert.cycle
    xs = cert.anchors
    u0 = cert.u0
    if len(xs) != 3:
        raise AssemblyError("shape", "need exactly three anchors")

    def x(i: int) -> int:
        return xs[(i - 1) % 3]

    xminus = {i: cyc.pred(x(i)) for i in range(1, 4)}
    xplus = {i: cyc.succ(x(i)) for i in range(1, 4)}
    xm_mask = mask_of(xminus.values())
    xp_mask = mask_of(xplus.values())

    for i in range(1, 4):
        if g.adj[x(i)] & (xm_mask | xp_mask) != bit(xminus[i]) | bit(xplus[i]):
            raise AssemblyError(
                "anchor-cycle-neighbors", f"x_{i} off pattern"
            )
    for i in range(1, 4):
        if g.adj[xplus[i]] & xm_mask != bit(xminus[(i % 3) + 1]) | bit(
            xminus[((i + 1) % 3) + 1]
        ):
            raise AssemblyError("successor-cross", f"succ(x_{i}) off pattern")
    for i in range(1, 4):
        lo = ((i - 2) % 3) + 1
        lo2 = ((i - 3) % 3) + 1
        if g.adj[xminus[i]] & xp_mask != bit(xplus[lo]) | bit(xplus[lo2]):
            raise AssemblyError("predecessor-cross", f"pred(x_{i}) off pattern")
    if g.full_mask & ~cyc.vertex_mask != bit(u0):
        raise AssemblyError("unique-exterior", "exterior is not exactly u0")
    for i in range(1, 4):
        if cyc.succ(xplus[i]) != xminus[(i % 3) + 1]:
            raise AssemblyError("interval-spacing", f"interval {i}")
    for i in range(1, 4):
        if g.adj[x(i)] != mask_of((u0, xminus[i], xplus[i])):
            raise AssemblyError("anchor-degree", f"x_{i} degree pattern")
    chords = {
        frozenset((xplus[1], xminus[3])),
        frozenset((xplus[2], xminus[1])),
        frozenset((xplus[3], xminus[2])),
    }
    cyc_edges = {frozenset((z, cyc.succ(z))) for z in cyc.order}
    actual = {
        frozenset((a, b))
        for a in cyc.order
        for b in bits(g.adj[a] & cyc.vertex_mask)
    }
    if actual != cyc_edges | chords:
        raise AssemblyError("chord-set", "induced edge set off pattern")
    if g.adj[u0] != mask_of(xs):
        raise AssemblyError("center-neighbors", "u0 not attached to the anchors")
    return is_petersen(g)
