"""Command-line front end.

Generation, raw byte piping, and the engine catalogue go through the
HTTP service in-process, so the CLI exercises exactly the surface a
remote client sees. Benchmarks talk to the library directly: timing
through a JSON layer would measure the JSON layer.

Exit codes: 0 ok, 1 runtime failure, 2 usage error.
"""

import argparse
import struct
import sys
import warnings

from . import bench, jumps

_REV8 = bytes(int("{:08b}".format(b)[::-1], 2) for b in range(256))

_RAW_CHUNK = 65536

# distributions whose draws come back as integers
_INT_DISTS = {"uint8", "uint16", "uint32", "uint64", "int", "long_long", "perm", "sample"}


def _client():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient
    from .service import create_app

    return TestClient(create_app(), base_url="http://cli")


def _fail(msg, code):
    print("randstream: %s" % msg, file=sys.stderr)
    return code


def _parse_words(text):
    return [int(part, 0) for part in text.split(",") if part != ""]


def _parse_params(text):
    params = {}
    if not text:
        return params
    for item in text.split(","):
        if "=" not in item:
            raise ValueError("parameter %r is not name=value" % item)
        key, _, value = item.partition("=")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            params[key.strip()] = float(value)
    return params


def _make_rng(client, args):
    body = {"engine": args.engine}
    if args.seed is not None:
        body["seed"] = [str(w) for w in _parse_words(args.seed)]
    if args.spawn_key:
        body["spawn_key"] = [str(w) for w in _parse_words(args.spawn_key)]
    resp = client.post("/rngs", json=body)
    if resp.status_code != 201:
        raise SystemExit(_fail(resp.json()["detail"], 2))
    handle = resp.json()["handle"]
    if args.bitexact or args.full_mantissa:
        client.post(
            "/rngs/%s/mode" % handle,
            json={"bitexact": args.bitexact, "full_mantissa": args.full_mantissa},
        )
    return handle


def _out_stream(args, binary):
    if args.out:
        return open(args.out, "wb" if binary else "w")
    return sys.stdout.buffer if binary else sys.stdout


def cmd_gen(args):
    client = _client()
    try:
        params = _parse_params(args.params)
    except ValueError as exc:
        return _fail(str(exc), 2)
    handle = _make_rng(client, args)
    resp = client.post(
        "/rngs/%s/sample" % handle,
        json={"dist": args.dist, "params": params, "n": args.count},
    )
    if resp.status_code != 200:
        return _fail(resp.json()["detail"], 2)
    values = resp.json()["values"]
    sequence = args.dist in ("perm", "sample")
    if args.dist in _INT_DISTS:
        values = [int(v) for v in values]
    elif args.format == "u64le":
        return _fail("format u64le needs an integer distribution", 2)

    binary = args.format != "text"
    out = _out_stream(args, binary)
    try:
        if args.format == "text":
            if sequence:
                out.write(" ".join(str(v) for v in values) + "\n")
            else:
                for v in values:
                    out.write("%r\n" % v if isinstance(v, float) else "%d\n" % v)
        elif args.format == "f64le":
            out.write(struct.pack("<%dd" % len(values), *[float(v) for v in values]))
        elif args.format == "f32le":
            out.write(struct.pack("<%df" % len(values), *[float(v) for v in values]))
        else:  # u64le
            out.write(struct.pack("<%dQ" % len(values), *[v & (2**64 - 1) for v in values]))
        if binary:
            out.flush()
    except BrokenPipeError:
        pass
    finally:
        if args.out:
            out.close()
    return 0


def cmd_raw(args):
    client = _client()
    handle = _make_rng(client, args)
    remaining = args.bytes
    out = sys.stdout.buffer if not args.out else open(args.out, "wb")
    try:
        while remaining is None or remaining > 0:
            chunk = _RAW_CHUNK if remaining is None else min(_RAW_CHUNK, remaining)
            data = client.post("/rngs/%s/raw" % handle, json={"nbytes": chunk}).content
            if args.bit_reverse:
                data = data.translate(_REV8)
            out.write(data)
            if remaining is not None:
                remaining -= len(data)
        out.flush()
    except BrokenPipeError:
        return 0
    finally:
        if args.out:
            out.close()
    return 0


def cmd_engines(args):
    rows = _client().get("/engines").json()
    widths = [
        max(len(str(r[k])) for r in rows)
        for k in ("id", "name", "authors", "year", "state_words", "period")
    ]
    for r in rows:
        print(
            "%-*s  %-*s  %-*s  %*d  %*d  %-*s"
            % (
                widths[0], r["id"],
                widths[1], r["name"],
                widths[2], r["authors"],
                widths[3], r["year"],
                widths[4], r["state_words"],
                widths[5], r["period"],
            )
        )
    return 0


def cmd_selftest(args):
    resp = _client().post(
        "/selftest", json={"engine": args.engine, "n": args.count}
    )
    if resp.status_code != 200:
        return _fail(resp.json()["detail"], 2)
    report = resp.json()
    for rec in report["records"]:
        print(
            "%-22s  stat %12.5g  p %10.4g  %s"
            % (rec["name"], rec["statistic"], rec["p_value"], "pass" if rec["passed"] else "FAIL")
        )
    print("engine %s: %s" % (report["engine"], "all checks passed" if report["passed"] else "FAILED"))
    return 0 if report["passed"] else 1


def cmd_bench(args):
    ids = args.engines.split(",") if args.engines else None
    print("engines (ns per 64-bit word, mean of %d x %gs runs):" % (args.runs, args.seconds))
    for row in bench.bench_engines(ids, runs=args.runs, seconds=args.seconds):
        print("  %-12s %10.1f" % (row["id"], row["ns_per_word"]))
    if not args.skip_dists:
        print("distributions on %s (ns per value, %d x %gs runs):" % (
            args.engine or "default engine", args.runs, args.dist_seconds))
        for row in bench.bench_dists(args.engine, runs=args.runs, seconds=args.dist_seconds):
            print("  %-12s %10.1f" % (row["dist"], row["ns_per_value"]))
    return 0


def cmd_jumptable(args):
    text = jumps.generate_table_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print("wrote %s" % args.out)
        return 0
    committed = jumps.TABLE_PATH.read_text()
    records = sum(1 for line in text.splitlines() if line and not line.startswith("#"))
    if text == committed:
        print("jump polynomial table: %d records, regeneration is byte-identical" % records)
        return 0
    print("jump polynomial table MISMATCH against %s" % jumps.TABLE_PATH, file=sys.stderr)
    return 1


def _add_rng_flags(sub):
    sub.add_argument("--engine", default=None, help="engine id (default: library default)")
    sub.add_argument("--seed", default=None, help="comma-separated 64-bit seed words")
    sub.add_argument("--spawn-key", default=None, dest="spawn_key",
                     help="comma-separated spawn key words")
    sub.add_argument("--bitexact", action="store_true",
                     help="platform-identical bulk sampling")
    sub.add_argument("--full-mantissa", action="store_true", dest="full_mantissa",
                     help="uniforms with a full random mantissa")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="randstream",
        description="Portable random number generation: engines, distributions, substreams.",
    )
    cmds = parser.add_subparsers(dest="cmd", required=True)

    gen = cmds.add_parser("gen", help="draw from a distribution")
    _add_rng_flags(gen)
    gen.add_argument("--dist", default="u01", help="distribution name")
    gen.add_argument("--params", default="", help="name=value pairs, comma-separated")
    gen.add_argument("-n", type=int, default=1, dest="count", help="number of draws")
    gen.add_argument("--format", default="text", choices=("text", "f64le", "f32le", "u64le"))
    gen.add_argument("-o", "--out", default=None, help="write to file instead of stdout")
    gen.set_defaults(fn=cmd_gen)

    raw = cmds.add_parser("raw", help="pipe raw generator bytes")
    _add_rng_flags(raw)
    raw.add_argument("--bytes", type=int, default=None, help="stop after this many bytes")
    raw.add_argument("--bit-reverse", action="store_true", dest="bit_reverse",
                     help="reverse the bits inside every byte")
    raw.add_argument("-o", "--out", default=None)
    raw.set_defaults(fn=cmd_raw)

    eng = cmds.add_parser("engines", help="list the engine catalogue")
    eng.set_defaults(fn=cmd_engines)

    selftest = cmds.add_parser("selftest", help="run the statistical battery")
    selftest.add_argument("--engine", default=None)
    selftest.add_argument("-n", type=int, default=100000, dest="count",
                          help="draws per stream in the battery")
    selftest.set_defaults(fn=cmd_selftest)

    bench_cmd = cmds.add_parser("bench", help="throughput benchmarks")
    bench_cmd.add_argument("--engines", default=None, help="comma-separated engine ids")
    bench_cmd.add_argument("--engine", default=None, help="engine for the distribution rows")
    bench_cmd.add_argument("--runs", type=int, default=10)
    bench_cmd.add_argument("--seconds", type=float, default=1.0)
    bench_cmd.add_argument("--dist-seconds", type=float, default=0.5, dest="dist_seconds")
    bench_cmd.add_argument("--skip-dists", action="store_true", dest="skip_dists")
    bench_cmd.set_defaults(fn=cmd_bench)

    table = cmds.add_parser("jumptable", help="regenerate and verify the jump table")
    table.add_argument("-o", "--out", default=None, help="write the regenerated table here")
    table.set_defaults(fn=cmd_jumptable)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit as exc:
        return exc.code
    except KeyboardInterrupt:
        return 1
    except Exception as exc:
        return _fail(str(exc), 1)


if __name__ == "__main__":
    sys.exit(main())
