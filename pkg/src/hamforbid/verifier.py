"""Corpus generation, hypothesis filtering, and verdict sweeps.

A Hypothesis bundles the exact conditions one of the supported statements
places on a graph (toughness, connectivity, freeness, degree and essential
thresholds); ``verify`` drives a corpus through the filter and requires each
passing graph to be Hamiltonian (witnessed) or the certified Petersen
exception. Any other outcome is a counterexample and aborts the run.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import HamforbidError, ResourceLimitError
from .graphs import (
    Graph,
    _pairs_for,
    bit,
    bits,
    complete_bipartite,
    encode_graph6,
    mask_of,
    parse_graph6,
    petersen_graph,
)
from .hamilton import hamiltonian_cycle, is_petersen, longest_cycle
from .invariants import (
    Rational,
    alpha_e,
    independent_union_oracle,
    is_k_connected,
    is_p2kp1_free,
    is_t_tough,
    mu,
    neighbor_count_oracle,
    rational_to_json,
)
from .surgery import LongerCycle, exterior_structure, replay

HYPOTHESIS_NAMES = (
    "thm-main",
    "cor-tough",
    "cor-alpha",
    "xcheck-conn",
    "xcheck-mindeg",
)


@dataclass(frozen=True)
class Hypothesis:
    """One verifiable statement: its filter thresholds and conclusion shape."""

    name: str
    k: int
    toughness_bound: Rational
    connectivity_bound: int
    freeness_k: int
    mu_index: int | None = None
    mu_bound: Rational | None = None
    alpha_e_max: int | None = None
    min_degree_bound: Rational | None = None
    allow_petersen: bool = True

    def to_json(self) -> dict:
        out: dict = {
            "name": self.name,
            "k": self.k,
            "toughness_bound": rational_to_json(self.toughness_bound),
            "connectivity_bound": self.connectivity_bound,
            "freeness_k": self.freeness_k,
            "allow_petersen": self.allow_petersen,
        }
        if self.mu_index is not None:
            out["mu_index"] = self.mu_index
            out["mu_bound"] = rational_to_json(self.mu_bound)
        if self.alpha_e_max is not None:
            out["alpha_e_max"] = self.alpha_e_max
        if self.min_degree_bound is not None:
            out["min_degree_bound"] = rational_to_json(self.min_degree_bound)
        return out


def hypothesis(name: str, k: int) -> Hypothesis:
    """Build one of the supported hypotheses at parameter k.

    thm-main      1-tough, k-connected, free at k, mu_{k+1} >= (7k-6)/5;
                  conclusion Hamiltonian or Petersen (k >= 2).
    cor-tough     (7k-6)/10-tough, free at k; Hamiltonian or Petersen (k >= 3).
    cor-alpha     1-tough, k-connected, free at k, alpha_e <= k; Hamiltonian.
    xcheck-conn   1-tough, max(2k-2, 2)-connected, free at k; Hamiltonian.
    xcheck-mindeg 1-tough, k-connected, free at k, min degree >= 3(k-1)/2;
                  Hamiltonian or Petersen.
    """
    if name == "thm-main":
        if k < 2:
            raise ValueError("thm-main needs k >= 2")
        return Hypothesis(
            name=name,
            k=k,
            toughness_bound=Fraction(1),
            connectivity_bound=k,
            freeness_k=k,
            mu_index=k + 1,
            mu_bound=Fraction(7 * k - 6, 5),
        )
    if name == "cor-tough":
        if k < 3:
            raise ValueError("cor-tough needs k >= 3")
        return Hypothesis(
            name=name,
            k=k,
            toughness_bound=Fraction(7 * k - 6, 10),
            connectivity_bound=0,
            freeness_k=k,
        )
    if name == "cor-alpha":
        if k < 2:
            raise ValueError("cor-alpha needs k >= 2")
        return Hypothesis(
            name=name,
            k=k,
            toughness_bound=Fraction(1),
            connectivity_bound=k,
            freeness_k=k,
            alpha_e_max=k,
            allow_petersen=False,
        )
    if name == "xcheck-conn":
        if k < 1:
            raise ValueError("xcheck-conn needs k >= 1")
        return Hypothesis(
            name=name,
            k=k,
            toughness_bound=Fraction(1),
            connectivity_bound=max(2 * k - 2, 2),
            freeness_k=k,
            allow_petersen=False,
        )
    if name == "xcheck-mindeg":
        if k < 2:
            raise ValueError("xcheck-mindeg needs k >= 2")
        return Hypothesis(
            name=name,
            k=k,
            toughness_bound=Fraction(1),
            connectivity_bound=k,
            freeness_k=k,
            min_degree_bound=Fraction(3 * (k - 1), 2),
        )
    raise ValueError(f"unknown hypothesis {name!r}; choose from {HYPOTHESIS_NAMES}")


# Evaluation order, cheapest screens first; rejects are attributed to the
# first failing condition.
CONDITION_ORDER = (
    "order",
    "connectivity",
    "min_degree",
    "freeness",
    "toughness",
    "alpha_e",
    "mu",
)


@dataclass
class FilterResult:
    passes: bool
    breakdown: dict[str, bool | None]
    first_fail: str | None


def filter_graph(g: Graph, h: Hypothesis, max_n: int | None = None) -> FilterResult:
    """Evaluate the hypothesis conditions with early exit; every evaluated
    conjunct is reported individually."""
    breakdown: dict[str, bool | None] = {c: None for c in _conditions(h)}

    def fail(cond: str) -> FilterResult:
        breakdown[cond] = False
        return FilterResult(False, breakdown, cond)

    breakdown["order"] = g.n >= 3
    if not breakdown["order"]:
        return fail("order")
    if h.connectivity_bound > 0:
        breakdown["connectivity"] = is_k_connected(g, h.connectivity_bound)
        if not breakdown["connectivity"]:
            return fail("connectivity")
    if h.min_degree_bound is not None:
        breakdown["min_degree"] = g.min_degree() >= h.min_degree_bound
        if not breakdown["min_degree"]:
            return fail("min_degree")
    breakdown["freeness"] = is_p2kp1_free(g, h.freeness_k)
    if not breakdown["freeness"]:
        return fail("freeness")
    breakdown["toughness"] = is_t_tough(g, h.toughness_bound, max_n)
    if not breakdown["toughness"]:
        return fail("toughness")
    if h.alpha_e_max is not None:
        breakdown["alpha_e"] = alpha_e(g, max_n) <= h.alpha_e_max
        if not breakdown["alpha_e"]:
            return fail("alpha_e")
    if h.mu_index is not None:
        # any essential degree minimum is at least the graph minimum degree,
        # so min_degree >= bound settles the conjunct without enumeration
        if g.min_degree() >= h.mu_bound:
            breakdown["mu"] = True
        else:
            breakdown["mu"] = mu(g, h.mu_index, max_n) >= h.mu_bound
        if not breakdown["mu"]:
            return fail("mu")
    return FilterResult(True, breakdown, None)


def _conditions(h: Hypothesis) -> list[str]:
    conds = ["order"]
    if h.connectivity_bound > 0:
        conds.append("connectivity")
    if h.min_degree_bound is not None:
        conds.append("min_degree")
    conds += ["toughness", "freeness"]
    if h.alpha_e_max is not None:
        conds.append("alpha_e")
    if h.mu_index is not None:
        conds.append("mu")
    return conds


# -- corpora -------------------------------------------------------------------

EXHAUSTIVE_MAX_N = 7


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Labeled graph number ``mask``; bit i is edge pair i in graph6 column
    order, so enumeration order and codec order coincide."""
    pairs = _pairs_for(n)
    adj = [0] * n
    while mask:
        low = mask & -mask
        u, v = pairs[low.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        mask ^= low
    return Graph._from_masks_unchecked(n, tuple(adj))


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def generate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All labeled graphs on n vertices in deterministic (edge-mask) order."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise ResourceLimitError(
            f"exhaustive enumeration supports 1 <= n <= {EXHAUSTIVE_MAX_N}"
        )
    for mask in range(labeled_graph_count(n)):
        yield graph_from_edge_mask(n, mask)


def ingest_corpus(path: str) -> tuple[list[tuple[int, Graph]], list[tuple[int, str]]]:
    """Parse a graph6 file; returns ((lineno, graph) records, diagnostics).

    Parse errors are collected per line, not fatal; blank lines are skipped.
    """
    records: list[tuple[int, Graph]] = []
    diagnostics: list[tuple[int, str]] = []
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                records.append((lineno, parse_graph6(text)))
            except HamforbidError as exc:
                diagnostics.append((lineno, str(exc)))
    return records, diagnostics


# -- verdicts and reports --------------------------------------------------------


@dataclass
class Verdict:
    graph6: str
    hypothesis: str
    passes_filter: bool
    conclusion: str | None  # "hamiltonian" | "petersen_exception" | "COUNTEREXAMPLE"
    witness: list[int] | dict | None = None


def judge(g: Graph, h: Hypothesis) -> Verdict:
    """Full verdict for one graph: filter, then witness or certificate.

    A filtered non-Hamiltonian graph that is not the allowed Petersen
    exception is a COUNTEREXAMPLE; one of those failing a run means the
    hypothesis is refuted (or its implementation broken).
    """
    fr = filter_graph(g, h)
    text = encode_graph6(g)
    if not fr.passes:
        return Verdict(text, h.name, False, None)
    cyc = hamiltonian_cycle(g)
    if cyc is not None:
        return Verdict(text, h.name, True, "hamiltonian", list(cyc.order))
    if h.allow_petersen and is_petersen(g):
        outcome = replay(g, h.k)
        return Verdict(
            text, h.name, True, "petersen_exception", outcome.certificate.to_json()
        )
    return Verdict(text, h.name, True, "COUNTEREXAMPLE")


@dataclass
class VerifyReport:
    hypothesis: Hypothesis
    corpus_size: int
    filtered: int
    hamiltonian_count: int
    exceptions: list[str]
    counterexamples: list[str]
    per_condition_rejects: dict[str, int]
    runtime_ms: int
    seed: int
    aborted: bool = False

    def to_json(self) -> dict:
        return {
            "hypothesis": self.hypothesis.to_json(),
            "corpus_size": self.corpus_size,
            "filtered": self.filtered,
            "hamiltonian_count": self.hamiltonian_count,
            "exceptions": self.exceptions,
            "counterexamples": self.counterexamples,
            "per_condition_rejects": dict(
                sorted(self.per_condition_rejects.items())
            ),
            "runtime_ms": self.runtime_ms,
            "seed": self.seed,
            "aborted": self.aborted,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


@dataclass
class ExhaustiveCorpus:
    n: int


_STOP_EVENT = None


def _init_worker(event) -> None:
    global _STOP_EVENT
    _STOP_EVENT = event


def _blank_partial() -> dict:
    return {
        "count": 0,
        "filtered": 0,
        "hamiltonian": 0,
        "exceptions": [],
        "counterexamples": [],
        "rejects": {},
        "aborted": False,
    }


def _judge(g: Graph, h: Hypothesis, part: dict) -> None:
    fr = filter_graph(g, h)
    if not fr.passes:
        part["rejects"][fr.first_fail] = part["rejects"].get(fr.first_fail, 0) + 1
        return
    part["filtered"] += 1
    cyc = hamiltonian_cycle(g)
    if cyc is not None:
        part["hamiltonian"] += 1
        return
    if h.allow_petersen and is_petersen(g):
        outcome = replay(g, h.k)
        assert outcome.kind == "certificate" and outcome.certificate.petersen
        part["exceptions"].append(encode_graph6(g))
        return
    part["counterexamples"].append(encode_graph6(g))


def _sweep_range(args) -> dict:
    n, lo, hi, h = args
    part = _blank_partial()
    for mask in range(lo, hi):
        if _STOP_EVENT is not None and mask % 4096 == 0 and _STOP_EVENT.is_set():
            part["aborted"] = True
            return part
        g = graph_from_edge_mask(n, mask)
        part["count"] += 1
        _judge(g, h, part)
        if part["counterexamples"] and _STOP_EVENT is not None:
            _STOP_EVENT.set()
    return part


def _sweep_list(args) -> dict:
    encoded, h = args
    part = _blank_partial()
    for text in encoded:
        if _STOP_EVENT is not None and _STOP_EVENT.is_set():
            part["aborted"] = True
            return part
        part["count"] += 1
        _judge(parse_graph6(text), h, part)
        if part["counterexamples"] and _STOP_EVENT is not None:
            _STOP_EVENT.set()
    return part


def verify(
    corpus: ExhaustiveCorpus | Sequence[Graph],
    h: Hypothesis,
    *,
    jobs: int | None = None,
    seed: int = 0,
) -> VerifyReport:
    """Run the hypothesis over a corpus; counterexamples abort the sweep.

    For a fixed corpus, hypothesis, and seed the report is deterministic
    (shard merging is associative and results are sorted).
    """
    start = time.monotonic()
    jobs = jobs or os.cpu_count() or 1

    if isinstance(corpus, ExhaustiveCorpus):
        n = corpus.n
        if not 1 <= n <= EXHAUSTIVE_MAX_N:
            raise ResourceLimitError(
                f"exhaustive mode supports 1 <= n <= {EXHAUSTIVE_MAX_N}"
            )
        total = labeled_graph_count(n)
        chunk = max(1, total // (jobs * 16))
        tasks = [
            (n, lo, min(lo + chunk, total), h) for lo in range(0, total, chunk)
        ]
        worker = _sweep_range
    else:
        encoded = [encode_graph6(g) for g in corpus]
        total = len(encoded)
        chunk = max(1, total // (jobs * 4)) if total else 1
        tasks = [
            (encoded[i : i + chunk], h) for i in range(0, total, chunk)
        ]
        worker = _sweep_list

    partials: list[dict]
    if jobs <= 1 or len(tasks) <= 1:
        _init_worker(None)
        partials = [worker(t) for t in tasks]
    else:
        event = multiprocessing.Event()
        with multiprocessing.Pool(
            jobs, initializer=_init_worker, initargs=(event,)
        ) as pool:
            partials = pool.map(worker, tasks)

    report = VerifyReport(
        hypothesis=h,
        corpus_size=total,
        filtered=0,
        hamiltonian_count=0,
        exceptions=[],
        counterexamples=[],
        per_condition_rejects={},
        runtime_ms=0,
        seed=seed,
    )
    scanned = 0
    for part in partials:
        scanned += part["count"]
        report.filtered += part["filtered"]
        report.hamiltonian_count += part["hamiltonian"]
        report.exceptions.extend(part["exceptions"])
        report.counterexamples.extend(part["counterexamples"])
        for cond, c in part["rejects"].items():
            report.per_condition_rejects[cond] = (
                report.per_condition_rejects.get(cond, 0) + c
            )
    report.exceptions.sort()
    report.counterexamples.sort()
    report.aborted = scanned < total
    if report.aborted:
        report.corpus_size = scanned
    report.runtime_ms = int((time.monotonic() - start) * 1000)
    return report


# -- randomized property trials ----------------------------------------------------


@dataclass
class LemmaSection:
    valid_trials: int = 0
    passes: int = 0

    @property
    def vacuous(self) -> bool:
        return self.valid_trials == 0

    def to_json(self) -> dict:
        return {
            "valid_trials": self.valid_trials,
            "passes": self.passes,
            "vacuous": self.vacuous,
        }


@dataclass
class LemmaReport:
    trials: int
    seed: int
    union: LemmaSection = field(default_factory=LemmaSection)
    neighbor: LemmaSection = field(default_factory=LemmaSection)
    exterior: LemmaSection = field(default_factory=LemmaSection)

    def all_pass(self) -> bool:
        return (
            self.union.passes == self.union.valid_trials
            and self.neighbor.passes == self.neighbor.valid_trials
            and self.exterior.passes == self.exterior.valid_trials
        )

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "independent_union": self.union.to_json(),
            "neighbor_count": self.neighbor.to_json(),
            "exterior_structure": self.exterior.to_json(),
            "all_pass": self.all_pass(),
        }


_EDGE_PROBS = [Fraction(p, 10) for p in range(2, 9)]


def _random_graph(rng: random.Random, n: int, p: Fraction) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def _random_maximal_independent(rng: random.Random, g: Graph, seed_set: int = 0) -> int:
    chosen = seed_set
    order = list(range(g.n))
    rng.shuffle(order)
    taken = 0
    for v in bits(chosen):
        taken |= g.adj[v]
    for v in order:
        if chosen >> v & 1 or taken >> v & 1:
            continue
        chosen |= bit(v)
        taken |= g.adj[v]
    return chosen


def _relabel(g: Graph, perm: list[int]) -> Graph:
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return Graph(g.n, edges)


def lemma_suite(trials: int, seed: int, max_attempts_factor: int = 400) -> LemmaReport:
    """Randomized precondition-filtered trials of the independence oracles
    and the exterior-component check, all seed-deterministic.

    Graphs come from the Erdos-Renyi model with per-trial edge probability
    in {0.2..0.8}; the exterior section additionally mixes in randomly
    relabeled unbalanced complete-bipartite instances (plus the Petersen
    graph), because sparse random sampling alone almost never produces a
    k-connected free graph whose longest cycle is non-spanning.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    report = LemmaReport(trials=trials, seed=seed)

    # independence-propagation oracles
    attempts = 0
    while report.union.valid_trials < trials and attempts < trials * max_attempts_factor:
        attempts += 1
        k = rng.choice((2, 3))
        n = rng.randint(5, 10)
        g = _random_graph(rng, n, rng.choice(_EDGE_PROBS))
        if not is_p2kp1_free(g, k):
            continue
        a = _random_maximal_independent(rng, g)
        if a.bit_count() < k:
            continue
        core = rng.sample(sorted(bits(a)), k)
        b = _random_maximal_independent(rng, g, seed_set=mask_of(core))
        report.union.valid_trials += 1
        if independent_union_oracle(g, k, a, b):
            report.union.passes += 1

    attempts = 0
    while (
        report.neighbor.valid_trials < trials
        and attempts < trials * max_attempts_factor
    ):
        attempts += 1
        k = rng.choice((2, 3))
        n = rng.randint(5, 10)
        g = _random_graph(rng, n, rng.choice(_EDGE_PROBS))
        if not is_p2kp1_free(g, k):
            continue
        a = _random_maximal_independent(rng, g)
        if not a:
            continue
        hood = 0
        for v in bits(a):
            hood |= g.adj[v]
        hood &= ~a
        if not hood:
            continue
        x = rng.choice(sorted(bits(hood)))
        report.neighbor.valid_trials += 1
        if neighbor_count_oracle(g, k, a, x):
            report.neighbor.passes += 1

    attempts = 0
    while (
        report.exterior.valid_trials < trials
        and attempts < trials * max_attempts_factor
    ):
        attempts += 1
        g, k = _exterior_trial_graph(rng)
        if not (is_p2kp1_free(g, k) and is_k_connected(g, k)):
            continue
        cyc = longest_cycle(g)
        if cyc is None or cyc.vertex_mask == g.full_mask:
            continue  # vacuous: nothing off the cycle
        report.exterior.valid_trials += 1
        ok = True
        from .graphs import component_masks

        for comp in component_masks(g, cyc.vertex_mask):
            result = exterior_structure(g, cyc, comp, k)
            if isinstance(result, LongerCycle) or comp.bit_count() != 1:
                ok = False
                break
            try:
                result.validate(g)
            except ValueError:
                ok = False
                break
        if ok:
            report.exterior.passes += 1

    return report


def _exterior_trial_graph(rng: random.Random) -> tuple[Graph, int]:
    roll = rng.random()
    if roll < 0.45:
        k = rng.choice((2, 3))
        n = rng.randint(5, 9)
        return _random_graph(rng, n, rng.choice(_EDGE_PROBS)), k
    if roll < 0.9:
        a = rng.randint(2, 4)
        b = rng.randint(a + 1, a + 4)
        g = complete_bipartite(a, b)
        perm = list(range(g.n))
        rng.shuffle(perm)
        return _relabel(g, perm), a
    g = petersen_graph()
    perm = list(range(10))
    rng.shuffle(perm)
    return _relabel(g, perm), 3
