import pytest
from fastapi.testclient import TestClient

from app.main import app

client = TestClient(app)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("PCURV_MAX_PRIME", "PCURV_THREADS"):
        monkeypatch.delenv(name, raising=False)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_decide_algebraic():
    response = client.post("/decide", json={"expr": "(3x-4)/(2x^2-6x+4)"})
    assert response.status_code == 200
    body = response.json()
    assert body["verdict"] == "algebraic"
    assert body["residues"] == ["1/2", "1"]


def test_decide_explicit_budget():
    response = client.post("/decide", json={"expr": "1/(x^2-4)", "max_prime": 200})
    body = response.json()
    assert body["verdict"] == "inconclusive"
    assert body["checked_up_to"] == "200"


def test_decide_by_roots():
    response = client.post("/decide", json={"expr": "1/(x^2-2)", "method": "roots"})
    body = response.json()
    assert body["verdict"] == "transcendental"
    assert body["reason"] == "irrational_residue"
    assert body["delta"] == "8"


def test_bounds():
    response = client.post("/bounds", json={"expr": "1/(x^2-4)"})
    assert response.status_code == 200
    assert response.json()["sigma"] == "104208014998"


def test_pcurvature():
    response = client.post("/pcurvature", json={"expr": "1/(x^2-2)", "p": 3})
    body = response.json()
    assert body["outcome"] == "NonZero"
    assert body["shift"] == 0
    naive = client.post("/pcurvature", json={"expr": "1/(x^2-2)", "p": 7, "naive": True}).json()
    assert naive["outcome"] == "Zero"


@pytest.mark.parametrize(
    "path, payload",
    [
        ("/decide", {"expr": "x +* 1"}),
        ("/decide", {"expr": "1/(x-x)"}),
        ("/bounds", {"expr": "x^3/(x+1)"}),
        ("/pcurvature", {"expr": "1/(x^2-2)", "p": 9}),
    ],
)
def test_bad_input(path, payload):
    assert client.post(path, json=payload).status_code == 400


def test_validation():
    assert client.post("/decide", json={"expr": "1/x", "method": "other"}).status_code == 422
    assert client.post("/pcurvature", json={"expr": "1/x", "p": 1}).status_code == 422
