import random

import pytest

from hamforbid import (
    Graph,
    Graph6Error,
    bits,
    complete_graph,
    component_count,
    component_masks,
    cycle_graph,
    distance,
    encode_graph6,
    is_connected,
    is_independent,
    mask_of,
    parse_graph6,
)
from conftest import PETERSEN_G6
from oracles import (
    all_pairs_distances,
    components_of,
    encode_graph6_reference,
    random_graph,
)


class TestGraphType:
    def test_rejects_loops_and_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(0)

    def test_adjacency_is_symmetric_and_irreflexive(self):
        rng = random.Random(11)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 12), 0.4)
            for v in range(g.n):
                assert not g.adj[v] >> v & 1
                for u in bits(g.adj[v]):
                    assert g.adj[u] >> v & 1

    def test_from_masks_validation(self):
        assert Graph.from_masks((0b10, 0b01)) == Graph(2, [(0, 1)])
        with pytest.raises(ValueError):
            Graph.from_masks((0b10, 0b00))  # asymmetric
        with pytest.raises(ValueError):
            Graph.from_masks((0b01,))  # loop

    def test_equality_and_hash(self):
        a = Graph(4, [(0, 1), (2, 3)])
        b = Graph(4, [(2, 3), (0, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != Graph(4, [(0, 1)])


class TestGraph6:
    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and list(g.edges()) == []
        assert encode_graph6(g) == "@"

    def test_k4_is_c_tilde(self):
        # header 'C' = 4+63; upper triangle 111111 -> 63+63 = '~'
        g = parse_graph6("C~")
        assert g == complete_graph(4)
        assert encode_graph6(complete_graph(4)) == "C~"

    def test_petersen_round_trip(self, petersen):
        enc = encode_graph6(petersen)
        assert enc == PETERSEN_G6
        assert parse_graph6(enc) == petersen

    def test_matches_reference_encoder(self):
        rng = random.Random(5)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 62), rng.random())
            assert encode_graph6(g) == encode_graph6_reference(g)

    def test_round_trip_random(self):
        rng = random.Random(6)
        for _ in range(300):
            g = random_graph(rng, rng.randint(1, 62), rng.random())
            assert parse_graph6(encode_graph6(g)) == g

    def test_byte_out_of_range(self):
        with pytest.raises(Graph6Error) as err:
            parse_graph6("C!~")
        assert err.value.offset == 1

    def test_header_out_of_range(self):
        with pytest.raises(Graph6Error) as err:
            parse_graph6("~~~")  # would be a multi-byte header
        assert err.value.offset == 0
        with pytest.raises(Graph6Error):
            parse_graph6("?")  # zero vertices

    def test_truncated_and_trailing(self):
        with pytest.raises(Graph6Error) as err:
            parse_graph6("C")
        assert err.value.offset == 1
        with pytest.raises(Graph6Error) as err:
            parse_graph6("C~~")
        assert err.value.offset == 2

    def test_nonzero_padding_rejected(self):
        # n=2: one edge bit then five padding bits; any padding bit set
        # must be rejected at the offending byte.
        assert parse_graph6("A_").has_edge(0, 1)
        for bad in range(1, 32):
            record = "A" + chr(63 + bad)
            with pytest.raises(Graph6Error) as err:
                parse_graph6(record)
            assert err.value.offset == 1

    def test_empty_record(self):
        with pytest.raises(Graph6Error):
            parse_graph6("")


class TestQueries:
    def test_distance_examples(self, petersen):
        g = cycle_graph(5)
        assert distance(g, 2, 2) == 0
        assert distance(g, 0, 2) == 2
        dist = all_pairs_distances(petersen)
        for u in range(10):
            for v in range(10):
                expected = dist[(u, v)]
                got = distance(petersen, u, v)
                assert got == (None if expected == float("inf") else expected)
        # non-adjacent pairs all at distance exactly two
        for u in range(10):
            for v in range(u + 1, 10):
                if not petersen.has_edge(u, v):
                    assert distance(petersen, u, v) == 2

    def test_distance_symmetry(self):
        rng = random.Random(7)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 10), 0.3)
            for u in range(g.n):
                for v in range(g.n):
                    assert distance(g, u, v) == distance(g, v, u)

    def test_distance_invalid_vertex(self):
        with pytest.raises(ValueError):
            distance(cycle_graph(4), 0, 7)

    def test_components_examples(self, petersen):
        assert component_count(complete_graph(4)) == 1
        assert component_count(cycle_graph(6), mask_of([0, 3])) == 2
        for v in range(10):
            removed = petersen.adj[v] | 1 << v
            expected = len(components_of(petersen, set(bits(removed))))
            assert component_count(petersen, removed) == expected

    def test_components_match_oracle(self):
        rng = random.Random(8)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 10), 0.3)
            removed = rng.randrange(0, 1 << g.n)
            want = components_of(g, set(bits(removed)))
            got = component_masks(g, removed)
            assert [set(bits(m)) for m in got] == sorted(want, key=min)

    def test_connectivity_consistency(self):
        rng = random.Random(9)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 9), 0.35)
            connected = is_connected(g)
            assert connected == (component_count(g) == 1)
            assert connected == all(
                distance(g, 0, v) is not None for v in range(g.n)
            )

    def test_is_independent(self, petersen):
        g = cycle_graph(5)
        assert is_independent(g, 0)
        assert is_independent(g, mask_of([3]))
        assert is_independent(petersen, mask_of([0, 2, 6]))
        assert not is_independent(petersen, mask_of([0, 1]))
        with pytest.raises(ValueError):
            is_independent(g, 1 << 9)
