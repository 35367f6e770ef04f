"""The HTTP layer: endpoints agree with the library bit for bit, errors
map to clean status codes, and one handle survives concurrent clients."""

import base64
import concurrent.futures

import pytest
from fastapi.testclient import TestClient

from randstream import state_io
from randstream.service import create_app


@pytest.fixture()
def client():
    with TestClient(create_app()) as c:
        yield c


def _handle(client, engine="x256++", seed=(42,), **extra):
    body = {"engine": engine, "seed": list(seed), **extra}
    r = client.post("/rngs", json=body)
    assert r.status_code == 201, r.text
    return r.json()["handle"]


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200 and r.json() == {"status": "ok"}


def test_engines_catalogue(client):
    rows = client.get("/engines").json()
    assert len(rows) == 14
    assert rows[0]["id"] == "x256++"
    assert {"id", "name", "authors", "year", "state_words", "seed_words", "period"} <= set(rows[0])


def test_sample_matches_library(client):
    h = _handle(client, "pcg64", seed=(42, 7))
    got = client.post(f"/rngs/{h}/sample", json={"dist": "norm", "n": 6}).json()["values"]
    ref = state_io.create("pcg64", seed=[42, 7]).fill("norm", {}, 6)
    assert got == ref


def test_sample_accepts_string_words(client):
    h = _handle(client, "sfc64", seed=("42",))
    got = client.post(f"/rngs/{h}/sample", json={"dist": "u01", "n": 4}).json()["values"]
    ref = state_io.create("sfc64", seed=[42]).fill("u01", {}, 4)
    assert got == ref


def test_uint64_samples_arrive_as_strings(client):
    h = _handle(client, "x256++", seed=(9,))
    vals = client.post(
        f"/rngs/{h}/sample", json={"dist": "uint64", "n": 3}
    ).json()["values"]
    ref = state_io.create("x256++", seed=[9]).fill("uint64", {}, 3)
    assert all(isinstance(v, str) for v in vals)
    assert [int(v) for v in vals] == ref


def test_mvn_sample_round_trips(client):
    h = _handle(client, "pcg64", seed=(3,))
    body = {
        "dist": "mvn",
        "params": {"mean": [1.0, -1.0], "cov": [[2.0, 0.5], [0.5, 1.0]]},
        "n": 3,
    }
    got = client.post(f"/rngs/{h}/sample", json=body).json()["values"]
    ref = state_io.create("pcg64", seed=[3]).mvn([1.0, -1.0], [[2.0, 0.5], [0.5, 1.0]], n=3)
    assert got == [[float(v) for v in row] for row in ref]


def test_create_rejects_unknown_engine(client):
    r = client.post("/rngs", json={"engine": "mt19937", "seed": [1]})
    assert r.status_code == 400
    assert "unknown engine" in r.json()["detail"]


def test_create_rejects_bad_word(client):
    r = client.post("/rngs", json={"engine": "pcg64", "seed": ["forty-two"]})
    assert r.status_code == 400
    assert "not a 64-bit word" in r.json()["detail"]
    r = client.post("/rngs", json={"engine": "pcg64", "seed": [1 << 64]})
    assert r.status_code == 400
    assert "out of range" in r.json()["detail"]


def test_missing_handle_is_404(client):
    for method, path, body in [
        ("post", "/rngs/r999/sample", {"dist": "u01", "n": 1}),
        ("get", "/rngs/r999/state", None),
        ("delete", "/rngs/r999", None),
        ("get", "/rngs/r999/error", None),
    ]:
        r = getattr(client, method)(path, json=body) if body else getattr(client, method)(path)
        assert r.status_code == 404, path
        assert "no such generator" in r.json()["detail"]


def test_seed_endpoint_resets_stream(client):
    h = _handle(client, "x256**", seed=(1,))
    client.post(f"/rngs/{h}/sample", json={"dist": "u01", "n": 10})
    r = client.post(f"/rngs/{h}/seed", json={"seed": [55], "spawn_key": [2]})
    assert r.status_code == 200
    got = client.get(f"/rngs/{h}/state").json()
    ref = state_io.create("x256**", seed=[55], spawn_key=(2,))
    assert [int(w) for w in got["words"]] == ref.get_state()


def test_randomize_endpoint_reports_source(client):
    h = _handle(client, "sfc64", seed=(1,))
    r = client.post(f"/rngs/{h}/randomize")
    assert r.status_code == 200
    body = r.json()
    assert body["source"] in ("os.urandom", "/dev/urandom", "clock")
    assert body["degraded"] is False


def test_jump_endpoint_matches_library(client):
    h = _handle(client, "x256++", seed=(12,))
    assert client.post(f"/rngs/{h}/jump", json={"k": 64}).status_code == 200
    got = client.get(f"/rngs/{h}/state").json()["words"]
    ref = state_io.create("x256++", seed=[12])
    ref.jump(64)
    assert [int(w) for w in got] == ref.get_state()


def test_jump_unsupported_engine_maps_to_400(client):
    h = _handle(client, "chacha20", seed=(1,))
    r = client.post(f"/rngs/{h}/jump", json={"k": 32})
    assert r.status_code == 400
    assert "jump unsupported" in r.json()["detail"]
    assert client.get(f"/rngs/{h}/error").json()["last_error"].startswith("jump unsupported")


def test_advance_endpoint_takes_string_count(client):
    h = _handle(client, "pcg64", seed=(4,))
    assert client.post(f"/rngs/{h}/advance", json={"n": "1000"}).status_code == 200
    got = client.get(f"/rngs/{h}/state").json()["words"]
    ref = state_io.create("pcg64", seed=[4])
    ref.advance(1000)
    assert [int(w) for w in got] == ref.get_state()
    r = client.post(f"/rngs/{h}/advance", json={"n": "-3"})
    assert r.status_code == 400


def test_stream_endpoint(client):
    h = _handle(client, "pcg64", seed=(4,))
    assert client.post(f"/rngs/{h}/stream", json={"words": ["77", 3]}).status_code == 200
    got = client.get(f"/rngs/{h}/state").json()["words"]
    ref = state_io.create("pcg64", seed=[4])
    ref.set_stream([77, 3])
    assert [int(w) for w in got] == ref.get_state()
    r = client.post(f"/rngs/{h}/stream", json={"words": [1]})
    assert r.status_code == 400 and "takes 2 words" in r.json()["detail"]
    h2 = _handle(client, "x256++", seed=(4,))
    r = client.post(f"/rngs/{h2}/stream", json={"words": [1]})
    assert r.status_code == 400 and "stream selection unsupported" in r.json()["detail"]


def test_duplicate_endpoint_forks_identical_stream(client):
    h = _handle(client, "x256++simd", seed=(8,))
    client.post(f"/rngs/{h}/sample", json={"dist": "u01", "n": 5})
    r = client.post(f"/rngs/{h}/duplicate")
    assert r.status_code == 201
    h2 = r.json()["handle"]
    assert h2 != h
    a = client.post(f"/rngs/{h}/sample", json={"dist": "norm", "n": 20}).json()["values"]
    b = client.post(f"/rngs/{h2}/sample", json={"dist": "norm", "n": 20}).json()["values"]
    assert a == b


def test_raw_endpoint_returns_library_bytes(client):
    h = _handle(client, "sfc64", seed=(21,))
    r = client.post(f"/rngs/{h}/raw", json={"nbytes": 37})
    assert r.status_code == 200
    assert r.headers["content-type"].startswith("application/octet-stream")
    assert r.content == state_io.create("sfc64", seed=[21]).raw(37)
    assert client.post(f"/rngs/{h}/raw", json={"nbytes": -1}).status_code == 400


def test_mode_endpoint(client):
    h = _handle(client, "x256++", seed=(1,))
    body = client.post(f"/rngs/{h}/mode", json={"bitexact": True}).json()
    assert body == {"bitexact": True, "full_mantissa": False}
    body = client.post(f"/rngs/{h}/mode", json={"full_mantissa": True}).json()
    assert body == {"bitexact": True, "full_mantissa": True}
    assert client.post(f"/rngs/{h}/mode", json={}).json() == body


def test_state_put_get_roundtrip(client):
    # engine-level snapshot: words travel as strings and put/get agree
    h1 = _handle(client, "cwg128", seed=(31,))
    words = client.get(f"/rngs/{h1}/state").json()["words"]
    assert all(isinstance(w, str) for w in words)
    h2 = _handle(client, "cwg128", seed=(99,))
    assert client.put(f"/rngs/{h2}/state", json={"words": words}).status_code == 200
    assert client.get(f"/rngs/{h2}/state").json()["words"] == words
    a = client.post(f"/rngs/{h1}/sample", json={"dist": "uint32", "n": 16}).json()["values"]
    b = client.post(f"/rngs/{h2}/sample", json={"dist": "uint32", "n": 16}).json()["values"]
    assert a == b


def test_serialized_restore_resumes_mid_buffer(client):
    h = _handle(client, "x256++", seed=(14,))
    client.post(f"/rngs/{h}/sample", json={"dist": "u01", "n": 3})
    blob = client.get(f"/rngs/{h}/serialized").json()["blob"]
    base64.b64decode(blob, validate=True)
    r = client.post("/rngs/restore", json={"blob": blob})
    assert r.status_code == 201
    h2 = r.json()["handle"]
    assert r.json()["engine"] == "x256++"
    a = client.post(f"/rngs/{h}/sample", json={"dist": "norm", "n": 30}).json()["values"]
    b = client.post(f"/rngs/{h2}/sample", json={"dist": "norm", "n": 30}).json()["values"]
    assert a == b


def test_restore_rejects_garbage(client):
    r = client.post("/rngs/restore", json={"blob": "@@not-base64@@"})
    assert r.status_code == 400
    assert "base64" in r.json()["detail"]
    r = client.post("/rngs/restore", json={"blob": base64.b64encode(b"PNGjunk").decode()})
    assert r.status_code == 400
    assert "not a randstream state blob" in r.json()["detail"]


def test_error_slot_via_http(client):
    h = _handle(client, "x256++", seed=(1,))
    r = client.post(f"/rngs/{h}/sample", json={"dist": "gamma", "params": {"alpha": -1.0}})
    assert r.status_code == 400
    assert r.json()["detail"] == "gamma shape must be > 0"
    assert client.get(f"/rngs/{h}/error").json()["last_error"] == "gamma shape must be > 0"
    client.post(f"/rngs/{h}/sample", json={"dist": "u01", "n": 1})
    assert client.get(f"/rngs/{h}/error").json()["last_error"] == ""


def test_unknown_distribution_is_400(client):
    h = _handle(client, "x256++", seed=(1,))
    r = client.post(f"/rngs/{h}/sample", json={"dist": "poisson", "n": 1})
    assert r.status_code == 400
    assert "unknown" in r.json()["detail"] and "poisson" in r.json()["detail"]


def test_delete_frees_handle(client):
    h = _handle(client)
    assert client.delete(f"/rngs/{h}").status_code == 204
    assert client.delete(f"/rngs/{h}").status_code == 404
    r = client.post(f"/rngs/{h}/sample", json={"dist": "u01", "n": 1})
    assert r.status_code == 404


def test_selftest_endpoint(client):
    r = client.post("/selftest", json={"engine": "sfc64", "n": 5000})
    assert r.status_code == 200
    body = r.json()
    assert body["engine"] == "sfc64"
    assert len(body["records"]) == 38
    assert body["passed"] == all(rec["passed"] for rec in body["records"])
    r = client.post("/selftest", json={"engine": "nope", "n": 5000})
    assert r.status_code == 400


def test_one_handle_survives_concurrent_clients(client):
    h = _handle(client, "x256++", seed=(5,))
    per_call, calls, workers = 20, 5, 8

    def hammer(_):
        out = []
        for _ in range(calls):
            r = client.post(f"/rngs/{h}/sample", json={"dist": "u01", "n": per_call})
            assert r.status_code == 200
            out.extend(r.json()["values"])
        return out

    with concurrent.futures.ThreadPoolExecutor(workers) as pool:
        chunks = list(pool.map(hammer, range(workers)))
    drawn = [v for chunk in chunks for v in chunk]
    ref = state_io.create("x256++", seed=[5]).fill("u01", {}, per_call * calls * workers)
    assert sorted(drawn) == sorted(ref)
