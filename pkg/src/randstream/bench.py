"""Throughput measurement harness.

Methodology: repeated fixed-duration runs (default 10 x 1 s for engines,
10 x 0.5 s for distributions), always working in 4096-value buffers, and
the mean over runs is reported. Absolute numbers are machine-dependent;
the orderings between engines are what the harness is expected to
reproduce, and the interpreter overhead is shared by every row.
"""

import time

from . import engines as engine_registry
from . import state_io

BUFFER = 4096

DIST_BENCH = (
    ("u01", {}),
    ("norm", {}),
    ("exp", {}),
    ("gamma", {"alpha": 2.0, "theta": 3.0}),
)


def _timed_words(engine, seconds):
    """One fixed-duration run; returns ns per 64-bit word."""
    chunk = getattr(engine, "CHUNK", 1)
    size = BUFFER + (-BUFFER % chunk)
    words = 0
    t0 = time.perf_counter()
    while True:
        engine.generate(size)
        words += size
        elapsed = time.perf_counter() - t0
        if elapsed >= seconds:
            return elapsed * 1e9 / words


def bench_engines(ids=None, runs=10, seconds=1.0):
    """ns per 64 output bits for each engine, mean over runs."""
    ids = list(ids) if ids else [c.ID for c in engine_registry.ENGINE_CLASSES]
    rows = []
    for eid in ids:
        engine = state_io.create(eid, seed=[3735928559]).engine
        samples = [_timed_words(engine, seconds) for _ in range(runs)]
        rows.append({"id": eid, "ns_per_word": sum(samples) / len(samples)})
    return rows


def bench_dists(engine=None, runs=10, seconds=0.5):
    """ns per value for the benchmark distributions on one engine."""
    rows = []
    for dist, params in DIST_BENCH:
        rng = state_io.create(engine, seed=[3735928559])
        samples = []
        for _ in range(runs):
            values = 0
            t0 = time.perf_counter()
            while True:
                rng.fill(dist, params, BUFFER)
                values += BUFFER
                elapsed = time.perf_counter() - t0
                if elapsed >= seconds:
                    samples.append(elapsed * 1e9 / values)
                    break
        rows.append({"dist": dist, "ns_per_value": sum(samples) / len(samples)})
    return rows
