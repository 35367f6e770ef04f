"""Freeze reproducibility golden files under tests/golden/repro/.

These are byte-for-byte anchors: any platform, architecture, or
refactor that changes a single bit in seeded output shows up as a file
mismatch. Regenerate only on a deliberate, documented format change.

Run from the repository root:  python tools/gen_repro_golden.py
"""

import json
import pathlib
import struct
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from randstream import serialize, state_io

OUT = pathlib.Path(__file__).resolve().parents[1] / "tests" / "golden" / "repro"

SEED = [20240615]
ENGINES = ("x256++", "pcg64")
BITEXACT_DISTS = ("lognormal", "gumbel", "pareto", "weibull", "gpd")
BITEXACT_PARAMS = {"pareto": {"alpha": 2.5}, "weibull": {"k": 1.7}, "gpd": {"xi": 0.3}}


def f64le(values):
    return struct.pack("<%dd" % len(values), *values)


def f32le(values):
    return struct.pack("<%df" % len(values), *values)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    manifest = []

    def emit(name, data, how):
        (OUT / name).write_bytes(data)
        manifest.append({"file": name, "construction": how})

    for eid in ENGINES:
        tag = eid.replace("+", "p").replace("*", "s")

        rng = state_io.create(eid, seed=SEED)
        emit("%s_raw64.bin" % tag, rng.raw(64), "seed %r, raw(64)" % (SEED,))

        for dist in ("u01", "norm", "exp"):
            rng = state_io.create(eid, seed=SEED)
            emit(
                "%s_%s_f64le.bin" % (tag, dist),
                f64le(rng.fill(dist, {}, 16)),
                "seed %r, 16 x %s, f64le" % (SEED, dist),
            )

        rng = state_io.create(eid, seed=SEED)
        draws = rng.fill("uint64", {"b": 1000000}, 16)
        emit(
            "%s_uint64_u64le.bin" % tag,
            struct.pack("<16Q", *draws),
            "seed %r, 16 x uint64 below 10^6, u64le" % (SEED,),
        )

        rng = state_io.create(eid, seed=SEED)
        rng.set_bitexact(True)
        chunks = []
        for dist in BITEXACT_DISTS:
            chunks.append(f64le(rng.fill(dist, BITEXACT_PARAMS.get(dist, {}), 8)))
        emit(
            "%s_bitexact_f64le.bin" % tag,
            b"".join(chunks),
            "seed %r, bitexact, 8 each of %s, f64le" % (SEED, ", ".join(BITEXACT_DISTS)),
        )

        rng = state_io.create(eid, seed=SEED)
        vals = rng.fill("u01f", {}, 16) + rng.fill("normf", {}, 16) + rng.fill("expf", {}, 16)
        emit(
            "%s_float32_f32le.bin" % tag,
            f32le(vals),
            "seed %r, 16 each of u01f/normf/expf, f32le" % (SEED,),
        )

    # frozen checkpoint: mid-buffer blob plus the stream it must resume
    rng = state_io.create("x256++", seed=SEED)
    rng.fill("u01", {}, 5)
    blob = serialize.serialize(rng)
    emit("checkpoint_x256pp.blob", blob, "seed %r, 5 u01 draws, then serialized" % (SEED,))
    resumed = struct.pack("<16Q", *[rng.next_u64() for _ in range(16)])
    emit("checkpoint_x256pp_next_u64le.bin", resumed, "the 16 words after the checkpoint")

    (OUT / "manifest.json").write_text(json.dumps(manifest, indent=1) + "\n")
    print("wrote %d files to %s" % (len(manifest) + 1, OUT))


if __name__ == "__main__":
    main()
