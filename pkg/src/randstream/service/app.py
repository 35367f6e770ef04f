"""HTTP front end over the generator library.

Every generator lives server-side under an opaque handle; requests
operate on it under a per-handle lock, so concurrent clients see a
serialized stream instead of interleaved corruption. The CLI talks to
this app in-process, a deployment can run it under uvicorn unchanged.
"""

import base64
import itertools
import threading

from fastapi import FastAPI, HTTPException, Response

from .. import engines, quality, serialize, state_io
from . import models

_MASK64 = 0xFFFFFFFFFFFFFFFF

# sample values that must not be squeezed through a JS double
_STRING_VALUED = {"uint64", "long_long"}


def _word(v):
    try:
        w = int(v)
    except (TypeError, ValueError):
        raise HTTPException(400, "not a 64-bit word: %r" % (v,))
    if not 0 <= w <= _MASK64:
        raise HTTPException(400, "word out of range: %r" % (v,))
    return w


def _count(v):
    try:
        c = int(v)
    except (TypeError, ValueError):
        raise HTTPException(400, "not a step count: %r" % (v,))
    if c < 0:
        raise HTTPException(400, "step count must be >= 0")
    return c


class _Registry:
    def __init__(self):
        self._lock = threading.Lock()
        self._ids = itertools.count(1)
        self._live = {}

    def add(self, rng):
        with self._lock:
            handle = "r%d" % next(self._ids)
            self._live[handle] = (rng, threading.Lock())
        return handle

    def get(self, handle):
        with self._lock:
            entry = self._live.get(handle)
        if entry is None:
            raise HTTPException(404, "no such generator: %s" % handle)
        return entry

    def drop(self, handle):
        with self._lock:
            entry = self._live.pop(handle, None)
        if entry is None:
            raise HTTPException(404, "no such generator: %s" % handle)
        return entry[0]


def create_app():
    app = FastAPI(title="randstream", version="0.1.0")
    registry = _Registry()

    def run(handle, fn):
        """Apply fn to the handle's generator under its lock, mapping
        library errors to 400s. The generator's own error slot keeps
        the diagnostic for GET .../error."""
        rng, lock = registry.get(handle)
        with lock:
            try:
                return fn(rng)
            except (ValueError, OverflowError) as exc:
                raise HTTPException(400, str(exc))

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/engines", response_model=list[models.EngineInfo])
    def list_engines():
        return engines.catalogue()

    @app.post("/rngs", response_model=models.HandleResponse, status_code=201)
    def create_rng(req: models.CreateRequest):
        try:
            rng = state_io.create(
                req.engine,
                seed=None if req.seed is None else [_word(w) for w in req.seed],
                spawn_key=tuple(_word(w) for w in req.spawn_key),
            )
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        return {"handle": registry.add(rng), "engine": rng.engine_id}

    @app.delete("/rngs/{handle}", status_code=204)
    def free_rng(handle: str):
        state_io.free(registry.drop(handle))
        return Response(status_code=204)

    @app.post("/rngs/{handle}/seed")
    def seed_rng(handle: str, req: models.SeedRequest):
        seed = [_word(w) for w in req.seed]
        key = tuple(_word(w) for w in req.spawn_key)
        run(handle, lambda rng: rng.seed(seed, key))
        return {"ok": True}

    @app.post("/rngs/{handle}/randomize", response_model=models.RandomizeResponse)
    def randomize_rng(handle: str):
        def go(rng):
            rng.randomize()
            return {"source": rng.entropy_source, "degraded": rng.entropy_degraded}

        return run(handle, go)

    @app.post("/rngs/{handle}/jump")
    def jump_rng(handle: str, req: models.JumpRequest):
        run(handle, lambda rng: rng.jump(req.k))
        return {"ok": True}

    @app.post("/rngs/{handle}/advance")
    def advance_rng(handle: str, req: models.AdvanceRequest):
        delta = _count(req.n)
        run(handle, lambda rng: rng.advance(delta))
        return {"ok": True}

    @app.post("/rngs/{handle}/stream")
    def stream_rng(handle: str, req: models.StreamRequest):
        words = [_word(w) for w in req.words]
        run(handle, lambda rng: rng.set_stream(words))
        return {"ok": True}

    @app.post("/rngs/{handle}/duplicate", response_model=models.HandleResponse, status_code=201)
    def duplicate_rng(handle: str):
        copy = run(handle, lambda rng: rng.duplicate())
        return {"handle": registry.add(copy), "engine": copy.engine_id}

    @app.post("/rngs/{handle}/sample", response_model=models.SampleResponse)
    def sample_rng(handle: str, req: models.SampleRequest):
        if req.dist == "mvn":
            def go(rng):
                p = dict(req.params)
                out = rng.mvn(
                    p.get("mean"), p.get("cov"), n=req.n, layout=p.get("layout", "n_d")
                )
                return [[float(v) for v in row] for row in out]

            return {"values": run(handle, go)}
        values = run(handle, lambda rng: rng.fill(req.dist, req.params, req.n))
        if req.dist in _STRING_VALUED:
            values = [str(v) for v in values]
        return {"values": values}

    @app.post("/rngs/{handle}/raw")
    def raw_rng(handle: str, req: models.RawRequest):
        if req.nbytes < 0:
            raise HTTPException(400, "nbytes must be >= 0")
        data = run(handle, lambda rng: rng.raw(req.nbytes))
        return Response(content=data, media_type="application/octet-stream")

    @app.post("/rngs/{handle}/mode", response_model=models.ModeResponse)
    def set_mode(handle: str, req: models.ModeRequest):
        def go(rng):
            if req.bitexact is not None:
                rng.set_bitexact(req.bitexact)
            if req.full_mantissa is not None:
                rng.set_full_mantissa(req.full_mantissa)
            return {"bitexact": rng.bitexact, "full_mantissa": rng.full_mantissa}

        return run(handle, go)

    @app.get("/rngs/{handle}/state", response_model=models.StateResponse)
    def get_state(handle: str):
        def go(rng):
            return {
                "engine": rng.engine_id,
                "words": [str(w) for w in rng.get_state()],
            }

        return run(handle, go)

    @app.put("/rngs/{handle}/state")
    def set_state(handle: str, req: models.StateRequest):
        words = [_word(w) for w in req.words]
        run(handle, lambda rng: rng.set_state(words))
        return {"ok": True}

    @app.get("/rngs/{handle}/serialized", response_model=models.SerializedResponse)
    def get_serialized(handle: str):
        blob = run(handle, lambda rng: serialize.serialize(rng))
        return {"blob": base64.b64encode(blob).decode("ascii")}

    @app.post("/rngs/restore", response_model=models.HandleResponse, status_code=201)
    def restore_rng(req: models.RestoreRequest):
        try:
            blob = base64.b64decode(req.blob, validate=True)
        except Exception:
            raise HTTPException(400, "blob is not valid base64")
        try:
            rng = serialize.restore(blob)
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        return {"handle": registry.add(rng), "engine": rng.engine_id}

    @app.get("/rngs/{handle}/error", response_model=models.ErrorResponse)
    def get_error(handle: str):
        rng, lock = registry.get(handle)
        with lock:
            return {"last_error": state_io.last_error(rng)}

    @app.post("/selftest", response_model=models.SelftestResponse)
    def selftest(req: models.SelftestRequest):
        try:
            rng = state_io.create(req.engine, seed=None)
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        records = quality.battery(rng, n=req.n)
        return {
            "engine": rng.engine_id,
            "passed": all(r["passed"] for r in records),
            "records": records,
        }

    return app


app = create_app()
