import threading
import time
from concurrent.futures import ThreadPoolExecutor

from fastapi.testclient import TestClient

from nasheq.service import create_app
from nasheq.treexml import to_xml

from .conftest import build_commitment_tree
from .test_cli import SIMULTANEOUS_MATRIX
from .test_reporting import SIMULTANEOUS_BLOCK


def client(**kwargs):
    return TestClient(create_app(**kwargs))


def test_solve_simultaneous_matrix():
    c = client()
    resp = c.post(
        "/api/solve",
        json={"game": SIMULTANEOUS_MATRIX, "algorithm": "enum", "session": "s1"},
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "ok"
    assert body["report_text"].split() == SIMULTANEOUS_BLOCK.split()
    assert body["session"] == "s1"


def test_solve_commitment_xml_structured():
    c = client()
    xml = to_xml(build_commitment_tree())
    resp = c.post("/api/solve", json={"game": xml, "algorithm": "enum"})
    assert resp.status_code == 200
    body = resp.json()
    assert len(body["structured"]["equilibria"]) == 4
    assert len(body["structured"]["components"]) == 2
    probs = {
        tuple(e["p2"]["probs"]) for e in body["structured"]["equilibria"]
    }
    assert ("0", "1/2", "0", "1/2") in probs
    assert ("1/2", "1/2", "0", "0") in probs


def test_structured_round_trips_to_report_text():
    c = client()
    resp = c.post("/api/solve", json={"game": SIMULTANEOUS_MATRIX, "algorithm": "enum"})
    body = resp.json()
    text = body["report_text"]
    for ee in body["structured"]["equilibria"]:
        for p in ee["p1"]["probs"] + ee["p2"]["probs"]:
            assert p in text.split()


def test_three_players_unsupported():
    c = client()
    xml = to_xml(build_commitment_tree())
    xml = xml.replace("<players>", '<players>\n      <player id="3">ref</player>')
    xml = xml.replace('player="2"', 'player="ref"', 1)  # a node owned by player 3
    resp = c.post("/api/solve", json={"game": xml, "algorithm": "enum"})
    assert resp.status_code == 422
    assert resp.json()["status"] == "error"


def test_malformed_game_400():
    c = client()
    resp = c.post("/api/solve", json={"game": "5 x\n1 2\n", "algorithm": "enum"})
    assert resp.status_code == 400
    resp = c.post("/api/solve", json={"game": "<game><broken*", "algorithm": "enum"})
    assert resp.status_code == 400


def test_lh_and_lemke_algorithms():
    c = client()
    resp = c.post(
        "/api/solve",
        json={"game": SIMULTANEOUS_MATRIX, "algorithm": "lh", "options": {"label": "T"}},
    )
    assert resp.status_code == 200
    assert "EE 1" in resp.json()["report_text"]
    resp = c.post(
        "/api/solve",
        json={"game": SIMULTANEOUS_MATRIX, "algorithm": "lemke", "options": {"seed": 3}},
    )
    assert resp.status_code == 200


def test_convert_endpoints():
    c = client()
    xml = to_xml(build_commitment_tree())
    resp = c.post("/api/convert", json={"game": xml, "target": "strategic"})
    assert resp.status_code == 200
    assert "2 x 4 Payoff player 1" in resp.json()["text"]
    resp = c.post("/api/convert", json={"game": xml, "target": "sequence"})
    assert resp.status_code == 200
    assert "Constraints player 2:" in resp.json()["text"]
    resp = c.post("/api/convert", json={"game": xml, "target": "xml"})
    assert resp.json()["text"] == xml
    resp = c.post("/api/convert", json={"game": SIMULTANEOUS_MATRIX, "target": "xml"})
    assert "strategicForm" in resp.json()["text"]
    resp = c.post("/api/convert", json={"game": "junk x", "target": "xml"})
    assert resp.status_code == 400


def test_timeout_answers_408_and_frees_worker():
    c = client(max_workers=1)
    big = "\n".join(" ".join(str((i * 7 + j * 13) % 23 - 11) for j in range(9)) for i in range(9))
    big = big + "\n\n" + big + "\n"
    resp = c.post(
        "/api/solve",
        json={"game": big, "algorithm": "enum", "options": {"timeout": 0.02}},
    )
    assert resp.status_code == 408
    assert resp.json()["status"] == "timeout"
    deadline = time.time() + 5
    while time.time() < deadline:
        if c.get("/api/health").json()["active_jobs"] == 0:
            break
        time.sleep(0.05)
    assert c.get("/api/health").json()["active_jobs"] == 0


def test_health_endpoint():
    c = client()
    body = c.get("/api/health").json()
    assert body == {"status": "ok", "active_jobs": 0}


def test_concurrent_sessions_match_sequential():
    c = client(max_workers=4)

    def matrix(seed):
        vals = [((seed + 1) * (i * 5 + j + 2)) % 11 - 5 for i in range(3) for j in range(3)]
        a = "\n".join(" ".join(str(vals[i * 3 + j]) for j in range(3)) for i in range(3))
        b = "\n".join(" ".join(str(vals[(i * 3 + j + 4) % 9]) for j in range(3)) for i in range(3))
        return a + "\n\n" + b + "\n"

    payloads = [
        {"game": matrix(k), "algorithm": "enum", "session": f"job-{k}"}
        for k in range(8)
    ]
    sequential = [c.post("/api/solve", json=p).json() for p in payloads]
    with ThreadPoolExecutor(max_workers=8) as pool:
        concurrent = list(pool.map(lambda p: c.post("/api/solve", json=p).json(), payloads))
    assert concurrent == sequential
