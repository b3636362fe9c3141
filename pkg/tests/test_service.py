import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore", DeprecationWarning)
    from fastapi.testclient import TestClient

from hamforbid.service.app import create_app
from conftest import PETERSEN_G6


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json() == {"status": "ok"}


class TestInvariantsEndpoint:
    def test_complete_graph(self, client):
        resp = client.post("/invariants", json={"graph6": "C~", "k": 2})
        assert resp.status_code == 200
        assert resp.json() == {
            "n": 4,
            "kappa": 3,
            "toughness": "inf",
            "alpha_e": 1,
            "mu": {"3": "inf"},
            "freeness": {"2": True},
        }

    def test_petersen(self, client):
        resp = client.post("/invariants", json={"graph6": PETERSEN_G6, "k": 3})
        body = resp.json()
        assert body["kappa"] == 3
        assert body["toughness"] == {"num": 4, "den": 3}
        assert body["mu"]["4"] == {"num": 3, "den": 1}
        assert body["freeness"]["3"] is True

    def test_bad_graph6_is_400(self, client):
        resp = client.post("/invariants", json={"graph6": "!!", "k": 2})
        assert resp.status_code == 400
        assert resp.json()["error"] == "Graph6Error"

    def test_resource_cap_is_400(self, client):
        from hamforbid import complete_graph, encode_graph6

        big = encode_graph6(complete_graph(30))
        resp = client.post("/invariants", json={"graph6": big, "k": 2})
        assert resp.status_code == 400
        assert resp.json()["error"] == "ResourceLimitError"

    def test_validation_error_is_422(self, client):
        resp = client.post("/invariants", json={"graph6": "C~", "k": 0})
        assert resp.status_code == 422


class TestCodecEndpoints:
    def test_round_trip(self, client):
        enc = client.post(
            "/codec/encode",
            json={"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0], [0, 2], [1, 3]]},
        )
        assert enc.json() == {"graph6": "C~"}
        dec = client.post("/codec/decode", json={"graph6": "C~"})
        body = dec.json()
        assert body["n"] == 4 and len(body["edges"]) == 6
        assert body["degrees"] == [3, 3, 3, 3]

    def test_bad_edge_rejected(self, client):
        resp = client.post("/codec/encode", json={"n": 3, "edges": [[0, 7]]})
        assert resp.status_code == 400


class TestVerifyEndpoint:
    def test_exhaustive(self, client):
        resp = client.post(
            "/verify",
            json={
                "hypothesis": {"name": "thm-main", "k": 2},
                "corpus": {"exhaustive_n": 5},
                "jobs": 1,
                "seed": 11,
            },
        )
        body = resp.json()
        assert body["corpus_size"] == 1024
        assert body["counterexamples"] == []
        assert body["seed"] == 11
        assert body["filtered"] == body["hamiltonian_count"]

    def test_corpus_lines_with_diagnostics(self, client):
        resp = client.post(
            "/verify",
            json={
                "hypothesis": {"name": "thm-main", "k": 3},
                "corpus": {"graph6_lines": [PETERSEN_G6, "zz!", ""]},
                "jobs": 1,
                "seed": 0,
            },
        )
        body = resp.json()
        assert body["corpus_size"] == 1
        assert body["exceptions"] == [PETERSEN_G6]
        assert len(body["diagnostics"]) == 1

    def test_corpus_spec_validation(self, client):
        resp = client.post(
            "/verify",
            json={
                "hypothesis": {"name": "thm-main", "k": 2},
                "corpus": {},
                "seed": 0,
            },
        )
        assert resp.status_code == 422

    def test_unknown_hypothesis(self, client):
        resp = client.post(
            "/verify",
            json={
                "hypothesis": {"name": "nope", "k": 2},
                "corpus": {"exhaustive_n": 3},
                "seed": 0,
            },
        )
        assert resp.status_code in (400, 422, 500)


class TestReplayEndpoint:
    def test_petersen(self, client):
        resp = client.post("/replay", json={"graph6": PETERSEN_G6, "k": 3})
        body = resp.json()
        assert body["kind"] == "certificate"
        assert body["certificate"]["petersen"] is True
        assert body["certificate"]["t"] == 0
        assert body["trace"][-1]["step"] == "petersen-assembly"

    def test_hamiltonian_rejected(self, client):
        from hamforbid import cycle_graph, encode_graph6

        resp = client.post(
            "/replay", json={"graph6": encode_graph6(cycle_graph(6)), "k": 2}
        )
        assert resp.status_code == 400
        assert resp.json()["error"] == "HypothesisError"


class TestLemmasEndpoint:
    def test_small_run(self, client):
        resp = client.post("/lemmas", json={"trials": 15, "seed": 4})
        body = resp.json()
        assert body["all_pass"] is True
        assert body["trials"] == 15 and body["seed"] == 4
        assert body["independent_union"]["valid_trials"] == 15
