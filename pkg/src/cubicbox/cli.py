"""Command-line front end: build, verify, gen, bench, export.

Exit codes: 0 success, 1 verification failure, 2 usage or format errors.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path

import numpy as np

from .boxes import verify
from .document import (DocumentError, box_document, boxes_from_document,
                       dumps_document, export_obj, input_hash, loads_document)
from .graph import (DegreeError, Graph, GraphFormatError, parse_graph,
                    random_cubic, random_max_degree3, serialize_graph)
from .partition import TheoryViolation
from .pipeline import build_representation, construct_boxes

USAGE_ERROR = 2
VERIFY_ERROR = 1


def _read_graph(path: str, fmt: str) -> Graph:
    return parse_graph(Path(path).read_text(), fmt=fmt)


def cmd_build(args) -> int:
    try:
        g = _read_graph(args.input, args.format)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        res = build_representation(g, check=True)
    except DegreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (TheoryViolation, AssertionError) as exc:
        print(f"construction failed verification: {exc}", file=sys.stderr)
        return VERIFY_ERROR
    doc = box_document(g, res.boxes, seed=args.seed)
    text = dumps_document(doc)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.dump_partition:
        Path(args.dump_partition).write_text(
            json.dumps(res.partition.to_json_dict(), indent=1) + "\n")
    return 0


def cmd_verify(args) -> int:
    try:
        g = _read_graph(args.graph, args.format)
        doc = loads_document(Path(args.boxes).read_text())
    except (OSError, GraphFormatError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if doc["n"] != g.n:
        print(f"error: document has {doc['n']} boxes but the graph has "
              f"{g.n} vertices", file=sys.stderr)
        return USAGE_ERROR
    report = verify(g, boxes_from_document(doc))
    sys.stdout.write(json.dumps(report.to_json_dict(), sort_keys=True) + "\n")
    return 0 if report.ok else VERIFY_ERROR


def cmd_gen(args) -> int:
    try:
        if args.max_degree_3_fraction is not None:
            g = random_max_degree3(args.n, args.seed,
                                   args.max_degree_3_fraction)
        else:
            g = random_cubic(args.n, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    text = serialize_graph(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    import gc

    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        print("error: --sizes wants a comma-separated integer list",
              file=sys.stderr)
        return USAGE_ERROR
    rows = ["n,runs,median_s,min_s,max_s,per_vertex_us"]
    # warm the compiled kernels outside the timed region
    construct_boxes(random_cubic(64, 0))
    for n in sizes:
        times = []
        for seed in range(args.seeds):
            g = random_cubic(n, seed)
            gc.collect()
            gc.disable()
            t0 = time.perf_counter()
            construct_boxes(g)
            times.append(time.perf_counter() - t0)
            gc.enable()
            del g
        med = statistics.median(times)
        rows.append(f"{n},{len(times)},{med:.6f},{min(times):.6f},"
                    f"{max(times):.6f},{med / n * 1e6:.3f}")
    text = "\n".join(rows) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_export(args) -> int:
    try:
        doc = loads_document(Path(args.boxes).read_text())
    except (OSError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    text = export_obj(doc)
    Path(args.obj).write_text(text)
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cubicbox",
        description="Touching 3-box representations of max-degree-3 graphs")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct and self-verify a box "
                                     "document for a graph")
    b.add_argument("input")
    b.add_argument("--format", choices=("edgelist", "graph6"),
                   default="edgelist")
    b.add_argument("--out")
    b.add_argument("--seed", type=int, default=None,
                   help="generator seed recorded in provenance")
    b.add_argument("--dump-partition", metavar="PATH",
                   help="also write the vertex classification as JSON")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="verify a box document against a graph")
    v.add_argument("graph")
    v.add_argument("boxes")
    v.add_argument("--format", choices=("edgelist", "graph6"),
                   default="edgelist")
    v.set_defaults(func=cmd_verify)

    ge = sub.add_parser("gen", help="generate a random instance")
    ge.add_argument("--n", type=int, required=True)
    ge.add_argument("--seed", type=int, default=0)
    ge.add_argument("--max-degree-3-fraction", type=float, default=None,
                    help="delete this fraction of edges from a cubic instance")
    ge.add_argument("--out")
    ge.set_defaults(func=cmd_gen)

    be = sub.add_parser("bench", help="time construction only (CSV)")
    be.add_argument("--sizes", required=True,
                    help="comma-separated vertex counts")
    be.add_argument("--seeds", type=int, default=5)
    be.add_argument("--out")
    be.set_defaults(func=cmd_bench)

    ex = sub.add_parser("export", help="export a box document as an OBJ scene")
    ex.add_argument("boxes")
    ex.add_argument("--obj", required=True)
    ex.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
