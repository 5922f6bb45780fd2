"""Command-line front end.

Exit codes: 0 success or pattern absent, 10 pattern found, 2 usage or
configuration errors (including pipeline diagnostics caused by a lying
--m), 3 witness verification failure.  Bench output is a CSV that is
byte-identical across reruns of the same manifest except for the
runtime_ms column.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import json
import sys
import time
from fractions import Fraction

from . import io
from .detect import find_induced_f4, find_induced_p4, find_induced_p5
from .extract import extract_cograph
from .generators import GeneratorError, generate
from .graph import Graph
from .growth import GrowthFunction
from .oracle import SizeLimitError, es_floor, hom_exact, hom_greedy, limits
from .pairfinder import PipelineDiagnostic, find_anticomplete_pair

EXIT_OK = 0
EXIT_FOUND = 10
EXIT_USAGE = 2
EXIT_BADWITNESS = 3


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _growth(args) -> GrowthFunction:
    c = Fraction(args.c) if "/" in args.c else Fraction(args.c)
    return GrowthFunction(c=c)


def _pick_m(g: Graph, override: int | None) -> tuple[int, str]:
    if override is not None:
        return override, "override"
    if g.n <= limits()["hom"]:
        return hom_exact(g).size, "exact"
    return hom_greedy(g).size, "greedy"


def cmd_detect(args) -> int:
    g = io.load_graph(args.infile)
    finder = {"p5": find_induced_p5, "f4": find_induced_f4, "p4": find_induced_p4}[
        args.pattern
    ]
    w = finder(g)
    if w is None:
        _emit({"found": False, "pattern": args.pattern}, args.out)
        return EXIT_OK
    _emit({"found": True, "witness": io.witness_to_json(w)}, args.out)
    return EXIT_FOUND


def cmd_hom(args) -> int:
    g = io.load_graph(args.infile)
    try:
        w = hom_exact(g)
        method = "exact"
    except SizeLimitError:
        w = hom_greedy(g)
        method = "greedy"
    _emit(
        {
            "witness": io.witness_to_json(w),
            "size": w.size,
            "method": method,
            "es_floor": es_floor(g.n),
        },
        args.out,
    )
    return EXIT_OK


def cmd_pair(args) -> int:
    g = io.load_graph(args.infile)
    m, m_source = _pick_m(g, args.m)
    out = find_anticomplete_pair(g, m)
    payload = {
        "kind": out.kind,
        "m": m,
        "m_source": m_source,
        "trace": out.trace.to_json(),
    }
    if out.pair is not None:
        payload["pair"] = io.witness_to_json(out.pair)
    if out.p5 is not None:
        payload["p5"] = io.witness_to_json(out.p5)
    _emit(payload, args.out)
    return EXIT_FOUND if out.kind == "p5" else EXIT_OK


def cmd_extract(args) -> int:
    g = io.load_graph(args.infile)
    gf = _growth(args)
    res = extract_cograph(g, gf)
    payload = {
        "witness": io.witness_to_json(res.witness),
        "size": res.witness.size,
        "f_n": gf.f(g.n) if g.n >= 1 else 0.0,
        "es_floor": es_floor(g.n),
        "p5": io.witness_to_json(res.p5) if res.p5 is not None else None,
        "trace": res.trace.to_json(),
    }
    _emit(payload, args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    lines = []
    manifest = []
    for i in range(args.count):
        seed = args.seed + i
        params = {}
        if args.gen in ("repair", "gnp"):
            params["p"] = args.p
        if args.gen == "c5_blowup" and args.fill:
            params["fill"] = args.fill
        g = generate(args.gen, args.n, seed, **params)
        lines.append(io.graph6_encode(g))
        manifest.append(
            {
                "id": f"{args.gen}-{args.n}-{seed}",
                "generator": args.gen,
                "n": args.n,
                "seed": seed,
                "params": params,
            }
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
        with open(args.out + ".manifest.json", "w", encoding="ascii") as fh:
            json.dump({"instances": manifest}, fh, indent=2, sort_keys=True)
            fh.write("\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = io.load_graph(args.graph)
    with open(args.witness, "r", encoding="ascii") as fh:
        data = json.load(fh)
    if "witness" in data:  # accept whole command outputs too
        data = data["witness"]
    w = io.witness_from_json(data)
    if w.verify(g):
        print("ok")
        return EXIT_OK
    print("witness FAILED verification", file=sys.stderr)
    return EXIT_BADWITNESS


BENCH_COLUMNS = [
    "instance_id",
    "n",
    "generator",
    "task",
    "hom_or_cograph_size",
    "f_n",
    "es_floor",
    "runtime_ms",
    "p5_found",
    "fallbacks_fired",
    "t",
]


def _bench_one(entry: dict, c_str: str) -> dict:
    gf = GrowthFunction(c=Fraction(c_str))
    g = generate(
        entry["generator"], entry["n"], entry["seed"], **entry.get("params", {})
    )
    task = entry.get("task", "extract")
    start = time.perf_counter()
    p5_found = False
    fallbacks = 0
    t_iters = 0
    if task == "hom":
        try:
            size = hom_exact(g).size
        except SizeLimitError:
            size = hom_greedy(g).size
    elif task == "extract":
        res = extract_cograph(g, gf)
        size = res.witness.size
        p5_found = res.p5 is not None
        fallbacks = len(res.trace.fallbacks)
        t_iters = res.trace.t
    else:
        raise ValueError(f"unknown task {task!r}")
    ms = int((time.perf_counter() - start) * 1000)
    return {
        "instance_id": entry["id"],
        "n": g.n,
        "generator": entry["generator"],
        "task": task,
        "hom_or_cograph_size": size,
        "f_n": f"{gf.f(g.n):.6f}",
        "es_floor": es_floor(g.n),
        "runtime_ms": ms,
        "p5_found": p5_found,
        "fallbacks_fired": fallbacks,
        "t": t_iters,
    }


def cmd_bench(args) -> int:
    with open(args.manifest, "r", encoding="ascii") as fh:
        manifest = json.load(fh)
    entries = manifest["instances"]
    c_str = str(Fraction(args.c))
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_one, entries, [c_str] * len(entries)))
    else:
        rows = [_bench_one(e, c_str) for e in entries]
    rows.sort(key=lambda r: r["instance_id"])
    with open(args.out, "w", encoding="ascii", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="p5hom",
        description="certificate-producing homogeneous-set and cograph tools "
        "for P5-free graphs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_io(p, needs_in=True):
        if needs_in:
            p.add_argument("--in", dest="infile", required=True, help="graph6 or JSON file")
        p.add_argument("--out", default=None, help="write JSON here instead of stdout")

    p = sub.add_parser("detect", help="find an induced P5 / F4 / P4")
    add_io(p)
    p.add_argument("--pattern", choices=["p5", "f4", "p4"], default="p5")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("hom", help="maximum homogeneous set (exact when small)")
    add_io(p)
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("pair", help="anticomplete pair with connected sides")
    add_io(p)
    p.add_argument("--m", type=int, default=None, help="homogeneous bound override")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("extract", help="extract a large induced cograph")
    add_io(p)
    p.add_argument("--c", default="1/16", help="growth constant (fraction)")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("gen", help="generate corpus instances (graph6 lines)")
    p.add_argument("--gen", required=True, help="generator name")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--p", type=float, default=0.2, help="edge probability (repair/gnp)")
    p.add_argument("--fill", default=None, help="blow-up part filler")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="re-check a witness JSON against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--witness", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a manifest and emit a CSV table")
    p.add_argument("--manifest", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--c", default="1/16")
    p.set_defaults(func=cmd_bench)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except PipelineDiagnostic as exc:
        print(f"pipeline diagnostic: {exc}", file=sys.stderr)
        print(json.dumps(exc.trace.to_json(), indent=2), file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, KeyError, GeneratorError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
