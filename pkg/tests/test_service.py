"""HTTP endpoints: status codes, bodies, and parity with the library calls."""

from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from valuetrust import GeneratorConfig, builtin_fixture, generate_population, scenario_to_document
from valuetrust.schemas import to_json
from valuetrust.service import app

WORKED = {
    "values": list("abcdefgh"),
    "oppositions": [["c", "e"], ["c", "f"], ["g", "h"]],
    "v_a": list("abcd"),
    "v_b": list("abefg"),
    "v_c": list("aeh"),
}


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def _divergent_payload() -> dict:
    return json.loads(builtin_fixture("divergent_choice").read_text(encoding="utf-8"))


class TestHealth:
    def test_reports_ok_and_version(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        body = response.json()
        assert body["status"] == "ok"
        assert body["version"]


class TestAssess:
    @pytest.mark.parametrize(
        "function, expected",
        [
            ("independent", 1),
            ("cautious", -1),
            ("bold", 0),
            ("semi_independent", 1),
            ("bold_debiased", -1),
        ],
    )
    def test_worked_example_scores(self, client, function, expected):
        response = client.post("/assess", json={**WORKED, "function": function})
        assert response.status_code == 200
        assert response.json() == {"function": function, "score": expected}

    def test_value_state_with_weights(self, client):
        payload = {
            **WORKED,
            "function": "value_state",
            "up": ["a"],
            "down": ["b"],
            "weights": {"alpha": 2.0, "beta": 1.0, "gamma": 1.0},
        }
        response = client.post("/assess", json=payload)
        assert response.status_code == 200
        assert response.json()["score"] == 0.0

    def test_missing_required_set_is_semantic_422(self, client):
        payload = {**WORKED, "function": "cautious"}
        payload.pop("v_c")
        response = client.post("/assess", json=payload)
        assert response.status_code == 422
        detail = response.json()["detail"]
        assert detail[0]["type"] == "semantic"
        assert "requires v_c" in detail[0]["msg"]

    def test_inconsistent_input_rejected(self, client):
        payload = {**WORKED, "function": "independent", "v_a": ["c", "e"]}
        response = client.post("/assess", json=payload)
        assert response.status_code == 422
        assert "inconsistent" in response.json()["detail"][0]["msg"]

    def test_unknown_value_rejected(self, client):
        payload = {**WORKED, "function": "independent", "v_b": ["zz"]}
        assert client.post("/assess", json=payload).status_code == 422

    def test_unknown_function_rejected(self, client):
        payload = {**WORKED, "function": "psychic"}
        assert client.post("/assess", json=payload).status_code == 422


class TestRun:
    def test_default_mode_comes_from_the_document(self, client):
        response = client.post("/run", json={"scenario": _divergent_payload()})
        assert response.status_code == 200
        body = response.json()
        assert body["aggregate"] == 3
        assert [s["trustee"] for s in body["steps"]] == ["B", "C"]

    def test_mode_override(self, client):
        response = client.post("/run", json={"scenario": _divergent_payload(), "mode": "bold"})
        assert response.status_code == 200
        body = response.json()
        assert body["aggregate"] == 4
        assert body["scenario"]["mode"] == "bold"

    def test_check_theorem_block(self, client):
        response = client.post(
            "/run", json={"scenario": _divergent_payload(), "check_theorem": True}
        )
        theorem = response.json()["theorem"]
        assert theorem["q_bold"] == 4
        assert theorem["q_cautious"] == 3
        assert theorem["holds"] is True
        assert theorem["oracle_holds"] is True

    def test_dead_end_returns_409_partial(self, client):
        payload = _divergent_payload()
        # strip everyone's act2 capability so the chain dies after step 1
        for agent in payload["agents"]:
            agent["capabilities"] = [c for c in agent["capabilities"] if c != "act2"]
        response = client.post("/run", json={"scenario": payload})
        assert response.status_code == 409
        body = response.json()
        assert body["error"]["code"] == "no_candidate"
        assert body["error"]["step"] == 2
        assert [s["trustee"] for s in body["steps"]] == ["B"]
        assert body["aggregate"] == 2

    def test_semantic_error_is_422_with_location(self, client):
        payload = _divergent_payload()
        payload["agents"][0]["core_values"].append("ghost")
        response = client.post("/run", json={"scenario": payload})
        assert response.status_code == 422
        detail = response.json()["detail"]
        assert detail[0]["loc"] == ["agents[0].core_values"]
        assert detail[0]["type"] == "semantic"

    def test_schema_error_is_422(self, client):
        payload = _divergent_payload()
        payload["version"] = 2
        assert client.post("/run", json={"scenario": payload}).status_code == 422

    def test_mode_override_must_be_a_policy(self, client):
        response = client.post(
            "/run", json={"scenario": _divergent_payload(), "mode": "independent"}
        )
        assert response.status_code == 422


class TestGenerate:
    def test_matches_the_library_generator(self, client):
        response = client.post("/generate", json={"seed": 7})
        assert response.status_code == 200
        local = scenario_to_document(generate_population(GeneratorConfig(seed=7)))
        assert to_json(local) == json.dumps(response.json(), indent=2) + "\n"

    def test_impossible_config_is_422(self, client):
        response = client.post("/generate", json={"seed": 7, "capability_density": 0.0})
        assert response.status_code == 422
        assert "seed 7" in response.json()["detail"][0]["msg"]

    def test_mode_parameter(self, client):
        response = client.post("/generate", json={"seed": 7, "mode": "bold"})
        assert response.json()["mode"] == "bold"


class TestVerify:
    def test_props_only(self, client):
        response = client.post(
            "/verify", json={"check_props": True, "max_universe": 2, "check_theorem": False}
        )
        assert response.status_code == 200
        body = response.json()
        assert body["passed"] is True
        assert body["props"]["universes"] == 4
        assert body["fuzz"] is None

    def test_fuzz_only(self, client):
        response = client.post(
            "/verify", json={"check_props": False, "check_theorem": True, "trials": 30, "seed": 2}
        )
        body = response.json()
        assert body["props"] is None
        assert body["fuzz"]["trials"] == 30
        assert body["passed"] == body["fuzz"]["passed"]
