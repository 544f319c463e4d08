"""Command line interface.

stdout carries JSON (or the requested graph format); progress and warnings go
to stderr prefixed with ``#``.  Exit codes: 0 success, 1 domain error, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import io as gio
from .construct import (
    ConstructionError,
    add_spaced_boundaries,
    build_tower,
    complete_tower,
    gamma_tower,
    verify_construction,
)
from .lcf import LcfError, named_graph, parse_lcf
from .moves import IllegalMove
from .multigraph import GraphError, girth
from .pants import PantsError, Target, validate
from .reference import DMAX_TABLE
from .search import SearchError, build_class_graph, compute_dmax, distance_to_target, enumerate_pants_graphs, report_from_class_graph

log = logging.getLogger("pantsdist")

DESK_SCALE_VERTICES = 10


def _progress(msg: str) -> None:
    print(f"# {msg}", file=sys.stderr, flush=True)


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return gio.read_graph_text(text)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=None, sort_keys=False)
    sys.stdout.write("\n")


def _emit_graph(graph, fmt: str, extra: dict | None = None) -> None:
    if fmt == "edgelist":
        sys.stdout.write(gio.to_edge_list(graph))
    elif fmt == "dot":
        sys.stdout.write(gio.to_dot(graph))
    else:
        obj = gio.to_json_obj(graph)
        if extra:
            obj.update(extra)
        _emit(obj)


def _target(name: str) -> Target:
    return Target.GENUS_ONLY if name == "genus" else Target.ANY_SEPARATING


def _warn_size(g: int, n: int) -> None:
    if 2 * g - 2 + n > DESK_SCALE_VERTICES:
        _progress(f"warning: S_{{{g},{n}}} has {2 * g - 2 + n} pants; enumeration may take very long")


def cmd_enumerate(args) -> int:
    _warn_size(args.g, args.n)
    classes = enumerate_pants_graphs(args.g, args.n, cache_dir=args.cache_dir)
    _emit({"g": args.g, "n": args.n, "classes": len(classes), "graphs": [p.to_json_obj() for p in classes]})
    return 0


def cmd_distance(args) -> int:
    graph, _ = _read_graph(args.graphfile)
    p = validate(graph)
    res = distance_to_target(p, _target(args.target), max_depth=args.max_depth)
    out = {"g": p.genus, "n": p.boundary, "distance": res.distance, "target": res.target.value}
    if args.witness:
        out["witness"] = res.to_json_obj()["witness"]
    _emit(out)
    return 0


def cmd_dmax(args) -> int:
    _warn_size(args.g, args.n)
    t0 = time.perf_counter()
    rep = compute_dmax(args.g, args.n, threads=args.threads, cache_dir=args.cache_dir, target=_target(args.target))
    _progress(f"S_{{{args.g},{args.n}}}: {rep.class_count} classes in {time.perf_counter() - t0:.2f}s")
    _emit(rep.to_json_obj())
    return 0


def cmd_table(args) -> int:
    cells = []
    for g in range(args.max_genus + 1):
        for n in range(args.max_boundary + 1):
            if 3 * g - 3 + n <= 2:
                continue
            _warn_size(g, n)
            t0 = time.perf_counter()
            cg = build_class_graph(g, n, threads=args.threads, cache_dir=args.cache_dir)
            rep = report_from_class_graph(cg)
            ref = DMAX_TABLE.get((g, n))
            cells.append(
                {
                    "g": g,
                    "n": n,
                    "classes": rep.class_count,
                    "dmax": rep.dmax,
                    "published": ref,
                    "match": None if ref is None else ref == rep.dmax,
                }
            )
            _progress(f"S_{{{g},{n}}}: dmax={rep.dmax} published={ref} ({rep.class_count} classes, {time.perf_counter() - t0:.2f}s)")
    _emit({"cells": cells})
    return 0


def cmd_construct(args) -> int:
    if args.kind == "tower":
        tower, layout = build_tower(args.size)
        graph = tower
        g = layout.g
        report = verify_construction(tower, g)
        extra = {"kind": "tower", "girth": g, "cycle_lengths": layout.cycle_lengths}
    else:
        tower, layout = gamma_tower(args.size)
        g = layout.g
        graph = complete_tower(tower, layout)
        report = verify_construction(graph, g, tower=tower)
        extra = {"kind": "gamma", "girth": g, "tower": gio.to_json_obj(tower)}
    if args.boundaries:
        p = add_spaced_boundaries(graph, args.boundaries, g)
        graph = p.graph
        extra.update(genus=p.genus, boundary=p.boundary)
    if args.format == "edgelist":
        sys.stdout.write(gio.to_edge_list(graph))
        _progress("report " + json.dumps(report.to_json_obj()))
        return 0
    _emit({"graph": gio.to_json_obj(graph), "report": report.to_json_obj(), **extra})
    return 0


def cmd_verify(args) -> int:
    graph, extra = _read_graph(args.graphfile)
    tower = None
    if args.tower:
        tower, _ = _read_graph(args.tower)
    elif isinstance(extra.get("tower"), dict):
        tower = gio.from_json_obj(extra["tower"])
    report = verify_construction(graph, args.girth, tower=tower)
    _emit(report.to_json_obj())
    return 0


def cmd_lcf(args) -> int:
    if args.action == "parse":
        graph = parse_lcf(args.value)
    else:
        graph = named_graph(args.value)
    g = girth(graph)
    _emit_graph(graph, args.format, {"girth": None if g == float("inf") else int(g)})
    return 0


def cmd_export(args) -> int:
    graph, _ = _read_graph(args.graphfile)
    sys.stdout.write(gio.to_dot(graph) if args.dot else gio.to_edge_list(graph))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pantsdist", description="Pants-graph distances to the separating locus.")
    ap.add_argument("--seed", type=int, default=0, help="recorded only; all algorithms are deterministic")
    ap.add_argument("--cache-dir", default=None, help="directory for cached enumerations")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list pants-graph classes of S_{g,n}")
    p.add_argument("g", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("distance", help="distance from a pants graph to the separating locus")
    p.add_argument("graphfile")
    p.add_argument("--target", choices=["sep", "genus"], default="sep")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--max-depth", type=int, default=None)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("dmax", help="maximal distance over all classes of S_{g,n}")
    p.add_argument("g", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--target", choices=["sep", "genus"], default="sep")
    p.set_defaults(func=cmd_dmax)

    p = sub.add_parser("table", help="D_{g,n} over a region")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--max-boundary", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("construct", help="tower T_g or completed graph on 2m vertices")
    p.add_argument("kind", choices=["tower", "gamma"])
    p.add_argument("size", type=int, help="girth g for tower, vertex count 2m for gamma")
    p.add_argument("--boundaries", type=int, default=0)
    p.add_argument("--format", choices=["json", "edgelist"], default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="certificate for a constructed graph")
    p.add_argument("graphfile")
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--tower", default=None, help="tower graph file; enables the tower checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lcf", help="LCF codes and named graphs")
    p.add_argument("action", choices=["parse", "named"])
    p.add_argument("value")
    p.add_argument("--format", choices=["json", "edgelist", "dot"], default="json")
    p.set_defaults(func=cmd_lcf)

    p = sub.add_parser("export", help="convert a graph file")
    p.add_argument("graphfile")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_export)
    return ap


DOMAIN_ERRORS = (GraphError, PantsError, IllegalMove, SearchError, LcfError, ConstructionError, ValueError, OSError)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="# %(message)s", stream=sys.stderr)
    log.info("seed=%d threads=%d", args.seed, args.threads)
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"# error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
