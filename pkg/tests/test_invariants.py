import math
import random
from fractions import Fraction

import pytest

from hamforbid import (
    INF,
    EssentialSet,
    Graph,
    PreconditionError,
    ResourceLimitError,
    alpha_e,
    bits,
    complete_graph,
    component_count,
    connectivity,
    cycle_graph,
    essential_sets,
    independent_union_oracle,
    invariant_report,
    is_k_connected,
    is_p2kp1_free,
    is_t_tough,
    mask_of,
    mu,
    neighbor_count_oracle,
    path_graph,
    star_graph,
    toughness,
    toughness_witness,
)
from oracles import (
    alpha_e_of,
    connectivity_of,
    essential_pairs,
    free_at,
    mu_of,
    random_graph,
    toughness_of,
)


class TestConnectivity:
    def test_examples(self, petersen):
        assert connectivity(petersen) == 3
        assert connectivity(complete_graph(5)) == 4
        assert connectivity(cycle_graph(6)) == 2
        assert connectivity(path_graph(4)) == 1
        assert connectivity(Graph(1)) == 0
        assert connectivity(Graph(4, [(0, 1), (2, 3)])) == 0

    def test_against_cut_enumeration(self):
        rng = random.Random(21)
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 8), rng.choice([0.2, 0.5, 0.8]))
            assert connectivity(g) == connectivity_of(g)

    def test_threshold_form_agrees(self):
        rng = random.Random(22)
        for _ in range(80):
            g = random_graph(rng, rng.randint(2, 9), rng.choice([0.3, 0.6]))
            kappa = connectivity(g)
            for k in range(0, g.n + 1):
                assert is_k_connected(g, k) == (kappa >= k)

    def test_threshold_flow_route(self):
        # large k on a wider graph exercises the disjoint-path route
        rng = random.Random(220)
        for _ in range(6):
            g = random_graph(rng, 14, 0.7)
            kappa = connectivity(g)
            assert is_k_connected(g, 8) == (kappa >= 8)


class TestToughness:
    def test_examples(self, petersen):
        assert toughness(complete_graph(4)) == INF
        assert toughness(cycle_graph(6)) == 1
        assert toughness(petersen) == Fraction(4, 3)

    def test_petersen_matches_brute_force(self, petersen):
        assert toughness_of(petersen) == Fraction(4, 3)

    def test_witness_achieves_value(self):
        rng = random.Random(23)
        for _ in range(50):
            g = random_graph(rng, rng.randint(2, 8), 0.45)
            value, witness = toughness_witness(g)
            if value == INF:
                assert witness is None
                continue
            omega = component_count(g, witness)
            assert omega >= 2
            assert Fraction(witness.bit_count(), omega) == value
            assert value == toughness_of(g)

    def test_t_tough_predicate(self, petersen):
        assert is_t_tough(petersen, 1)
        assert is_t_tough(petersen, Fraction(4, 3))
        assert not is_t_tough(petersen, Fraction(3, 2))
        assert is_t_tough(complete_graph(7), 100)
        assert is_t_tough(complete_graph(7), INF)
        assert not is_t_tough(path_graph(3), INF)

    def test_t_tough_matches_exact_value(self):
        rng = random.Random(24)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 8), 0.4)
            value = toughness(g)
            for t in (Fraction(1, 2), 1, Fraction(4, 3), 2):
                assert is_t_tough(g, t) == (value >= t)

    def test_disconnected_graph_is_zero_tough(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert toughness(g) == 0

    def test_infinite_iff_complete(self):
        rng = random.Random(231)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 8), rng.choice([0.4, 0.9]))
            assert (toughness(g) == INF) == g.is_complete()

    def test_resource_cap(self):
        with pytest.raises(ResourceLimitError):
            toughness(complete_graph(17))
        with pytest.raises(ResourceLimitError):
            alpha_e(complete_graph(21))
        with pytest.raises(ResourceLimitError):
            list(essential_sets(complete_graph(21), 2))
        with pytest.raises(ResourceLimitError):
            mu(complete_graph(21), 2)

    def test_cap_override_env(self, monkeypatch):
        monkeypatch.setenv("HAMFORBID_MAX_N", "17")
        assert toughness(complete_graph(17)) == INF

    def test_nonnegative_and_connectivity_bound(self):
        # a non-complete graph's connectivity is at least ceil(2 * toughness)
        rng = random.Random(25)
        for _ in range(60):
            g = random_graph(rng, rng.randint(3, 8), 0.5)
            if g.is_complete():
                continue
            value = toughness(g)
            assert connectivity(g) >= math.ceil(2 * value)


class TestFreeness:
    def test_examples(self, petersen):
        assert is_p2kp1_free(petersen, 3)
        assert not is_p2kp1_free(petersen, 2)
        for n in (2, 4, 6):
            for k in (1, 2, 3):
                assert is_p2kp1_free(complete_graph(n), k)

    def test_small_cycles(self):
        # every edge of a 6-cycle sees all but two vertices, and those two
        # are adjacent, so no edge+2-isolated pattern embeds; at 7 it does
        assert is_p2kp1_free(cycle_graph(6), 2)
        assert not is_p2kp1_free(cycle_graph(7), 2)

    def test_against_oracle(self):
        rng = random.Random(26)
        for _ in range(120):
            g = random_graph(rng, rng.randint(3, 8), rng.choice([0.25, 0.5, 0.75]))
            for k in (1, 2, 3):
                assert is_p2kp1_free(g, k) == free_at(g, k)

    def test_monotone_in_k(self):
        rng = random.Random(27)
        for _ in range(80):
            g = random_graph(rng, rng.randint(3, 9), 0.4)
            for k in (1, 2, 3):
                if is_p2kp1_free(g, k):
                    assert is_p2kp1_free(g, k + 1)

    def test_k_validation(self):
        with pytest.raises(ValueError):
            is_p2kp1_free(complete_graph(3), 0)


class TestEssentialSets:
    def test_no_independent_pair(self):
        assert list(essential_sets(complete_graph(4), 2)) == []

    def test_star_leaves(self):
        got = {(e.members, e.center) for e in essential_sets(star_graph(3), 3)}
        leaves = mask_of([1, 2, 3])
        assert got == {(leaves, 1), (leaves, 2), (leaves, 3)}

    def test_petersen_order_four(self, petersen):
        assert next(essential_sets(petersen, 4), None) is not None

    def test_yields_valid_sets_matching_oracle(self):
        rng = random.Random(28)
        for _ in range(60):
            g = random_graph(rng, rng.randint(3, 8), 0.4)
            for k in (1, 2, 3):
                got = {
                    (frozenset(bits(e.members)), e.center)
                    for e in essential_sets(g, k)
                }
                if k == 1:
                    assert got == {(frozenset([v]), v) for v in range(g.n)}
                else:
                    assert got == set(essential_pairs(g, k))
                for e in essential_sets(g, k):
                    e.validate(g)

    def test_validate_rejects_bad_sets(self):
        g = cycle_graph(5)
        with pytest.raises(ValueError):
            EssentialSet(mask_of([0, 1]), 0).validate(g)  # adjacent members
        with pytest.raises(ValueError):
            EssentialSet(mask_of([0, 2]), 1).validate(g)  # center outside


class TestAlphaAndMu:
    def test_alpha_examples(self, petersen):
        assert alpha_e(complete_graph(5)) == 1
        assert alpha_e(star_graph(3)) == 3
        assert alpha_e(petersen) == 4  # fixes the strict > 3 bound exactly

    def test_mu_examples(self, petersen):
        assert mu(complete_graph(5), 2) == INF
        assert mu(cycle_graph(5), 2) == 2
        assert mu(petersen, 4) == 3
        assert mu(petersen, 5) == INF

    def test_against_oracles(self):
        rng = random.Random(29)
        for _ in range(60):
            g = random_graph(rng, rng.randint(3, 8), rng.choice([0.3, 0.6]))
            assert alpha_e(g) == alpha_e_of(g)
            for k in (2, 3, 4):
                assert mu(g, k) == mu_of(g, k)

    def test_mu_dominates_min_degree_and_connectivity(self):
        rng = random.Random(30)
        for _ in range(60):
            g = random_graph(rng, rng.randint(3, 9), 0.5)
            for k in (2, 3):
                value = mu(g, k)
                if value != INF:
                    assert value >= g.min_degree() >= connectivity(g)

    def test_mu_requires_k_at_least_two(self):
        with pytest.raises(ValueError):
            mu(complete_graph(3), 1)


class TestIndependenceOracles:
    def test_union_trivial(self):
        g = cycle_graph(6)
        a = mask_of([0, 2, 4])
        assert independent_union_oracle(g, 2, a, a)

    def test_union_precondition_errors(self):
        forbidden = Graph(4, [(0, 1)])  # one edge plus 2 isolated vertices
        with pytest.raises(PreconditionError) as err:
            independent_union_oracle(forbidden, 2, mask_of([2, 3]), mask_of([2, 3]))
        assert err.value.condition == "freeness"
        g = cycle_graph(6)
        with pytest.raises(PreconditionError):
            independent_union_oracle(g, 2, mask_of([0, 1]), mask_of([0, 2]))
        with pytest.raises(PreconditionError):
            independent_union_oracle(g, 2, mask_of([0, 2]), mask_of([3, 5]))

    def test_neighbor_count_trivial(self):
        g = star_graph(3)
        assert neighbor_count_oracle(g, 3, mask_of([1]), 0)

    def test_neighbor_count_petersen_triples(self, petersen):
        # every independent triple and every attached vertex
        import itertools

        for tri in itertools.combinations(range(10), 3):
            members = mask_of(tri)
            if any(petersen.has_edge(u, v) for u, v in itertools.combinations(tri, 2)):
                continue
            hood = set()
            for v in tri:
                hood.update(bits(petersen.adj[v]))
            hood -= set(tri)
            for x in hood:
                assert neighbor_count_oracle(petersen, 3, members, x)

    def test_random_precondition_trials_always_pass(self):
        rng = random.Random(31)
        union_hits = neighbor_hits = 0
        while union_hits < 80 or neighbor_hits < 80:
            k = rng.choice((2, 3))
            g = random_graph(rng, rng.randint(4, 9), rng.choice([0.3, 0.5, 0.7]))
            if not is_p2kp1_free(g, k):
                continue
            sets = [e.members for e in essential_sets(g, 1)]
            # grow two random independent sets sharing k members
            verts = list(range(g.n))
            rng.shuffle(verts)
            a = 0
            for v in verts:
                if not g.adj[v] & a:
                    a |= 1 << v
            if a.bit_count() >= k and union_hits < 80:
                core = mask_of(rng.sample(sorted(bits(a)), k))
                b = core
                rng.shuffle(verts)
                for v in verts:
                    if not g.adj[v] & b and not b >> v & 1:
                        b |= 1 << v
                assert independent_union_oracle(g, k, a, b)
                union_hits += 1
            hood = 0
            for v in bits(a):
                hood |= g.adj[v]
            hood &= ~a
            if hood and neighbor_hits < 80:
                x = rng.choice(sorted(bits(hood)))
                assert neighbor_count_oracle(g, k, a, x)
                neighbor_hits += 1
            del sets


class TestReport:
    def test_petersen_report_json(self, petersen):
        report = invariant_report(petersen, 3)
        assert report.to_json() == {
            "n": 10,
            "kappa": 3,
            "toughness": {"num": 4, "den": 3},
            "alpha_e": 4,
            "mu": {"4": {"num": 3, "den": 1}},
            "freeness": {"3": True},
        }

    def test_complete_graph_report(self):
        report = invariant_report(complete_graph(4), 2)
        assert report.kappa == 3
        assert report.toughness == INF
        assert report.to_json()["toughness"] == "inf"
