from __future__ import annotations

import json
import threading

import pytest
import requests

from rgbt.planar import k4
from rgbt.server import make_server


@pytest.fixture(scope="module")
def api():
    httpd = make_server(0)
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{httpd.server_address[1]}"
    httpd.shutdown()
    httpd.server_close()


def _new_session(api, body=None):
    body = body or {"graph": k4().to_json(), "mode": "rgb"}
    r = requests.post(f"{api}/sessions", json=body)
    assert r.status_code == 201
    return r.json()


def test_create_and_get(api):
    doc = _new_session(api)
    sid = doc["id"]
    assert doc["history"] == 0
    r = requests.get(f"{api}/sessions/{sid}")
    assert r.status_code == 200
    assert r.json()["coloring"] == doc["coloring"]


def test_missing_session(api):
    assert requests.get(f"{api}/sessions/zzz").status_code == 404


def test_rings_listing(api):
    doc = _new_session(api)
    r = requests.get(f"{api}/sessions/{doc['id']}/rings")
    rings = r.json()["rings"]
    assert len(rings) == 3  # one ring per color on K4
    assert {x["color"] for x in rings} == {"r", "g", "b"}


def test_ecs_and_undo_byte_identical(api):
    doc = _new_session(api)
    sid = doc["id"]
    initial = json.dumps(doc["coloring"], sort_keys=True)
    rings = requests.get(f"{api}/sessions/{sid}/rings").json()
    r = requests.post(
        f"{api}/sessions/{sid}/ecs",
        json={"ring_id": 0, "version": rings["version"]},
    )
    assert r.status_code == 200
    assert r.json()["history"] == 1
    moved = json.dumps(r.json()["coloring"], sort_keys=True)
    assert moved != initial
    r = requests.post(f"{api}/sessions/{sid}/undo", json={})
    assert r.status_code == 200
    assert json.dumps(r.json()["coloring"], sort_keys=True) == initial
    assert r.json()["history"] == 0


def test_stale_ring_409(api):
    doc = _new_session(api)
    sid = doc["id"]
    requests.get(f"{api}/sessions/{sid}/rings")
    r = requests.post(
        f"{api}/sessions/{sid}/ecs", json={"ring_id": 0, "version": 999}
    )
    assert r.status_code == 409


def test_undo_empty_history(api):
    doc = _new_session(api)
    r = requests.post(f"{api}/sessions/{doc['id']}/undo", json={})
    assert r.status_code == 409


def test_vcs_roundtrip(api):
    doc = _new_session(api)
    sid = doc["id"]
    r = requests.post(f"{api}/sessions/{sid}/vcs", json={"pair": [1, 2], "seed": 0})
    assert r.status_code == 200
    r = requests.post(f"{api}/sessions/{sid}/undo", json={})
    assert json.dumps(r.json()["coloring"], sort_keys=True) == json.dumps(
        doc["coloring"], sort_keys=True
    )


def test_scenario_session_and_panels(api):
    doc = _new_session(api, {"scenario": "fig7_rotation"})
    sid = doc["id"]
    assert doc["mode"] == "ergb"
    sk = requests.get(f"{api}/sessions/{sid}/skeleton").json()["skeleton"]
    assert set(sk["partitions"]) == {"r", "g", "b"}
    dia = requests.get(f"{api}/sessions/{sid}/diamonds").json()["diamonds"]
    assert len(dia) == 1  # the abandoned a-b edge


def test_ring_by_descriptor(api):
    doc = _new_session(api)
    sid = doc["id"]
    rings = requests.get(f"{api}/sessions/{sid}/rings").json()["rings"]
    descriptor = {"color": rings[0]["color"], "crossings": rings[0]["crossings"]}
    r = requests.post(f"{api}/sessions/{sid}/ecs", json={"ring": descriptor})
    assert r.status_code == 200


def test_concurrent_reads_see_whole_states(api):
    doc = _new_session(api)
    sid = doc["id"]
    stop = threading.Event()
    seen = []
    legal = set()

    def reader():
        while not stop.is_set():
            state = requests.get(f"{api}/sessions/{sid}").json()
            seen.append(json.dumps(state["coloring"], sort_keys=True))

    th = threading.Thread(target=reader)
    th.start()
    legal.add(json.dumps(doc["coloring"], sort_keys=True))
    for _ in range(5):
        rings = requests.get(f"{api}/sessions/{sid}/rings").json()
        r = requests.post(
            f"{api}/sessions/{sid}/ecs",
            json={"ring_id": 0, "version": rings["version"]},
        )
        assert r.status_code == 200
        legal.add(json.dumps(r.json()["coloring"], sort_keys=True))
    stop.set()
    th.join()
    assert seen
    assert set(seen) <= legal  # never a half-applied move
