"""Command-line front end: decompose, validate, kernel-eds, solve, oracle,
bounds, generate, bench.

Exit codes: 0 solved/valid, 1 no-instance, 2 input error, 3 invariant
violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import bounds as bounds_mod
from . import generators
from .eds import eds_brute_force, eds_kernelize, eds_modulator
from .fdeletion import Family, f_deletion_brute_force, planar_f_deletion
from .io import GraphParseError, load_graph, load_vertex_set, save_graph, serialize_graph
from .protrusion import (ProtrusionDecomposition, build_protrusion_decomposition,
                         validate_protrusion_decomposition)
from .treewidth import TreeDecomposition, validate_decomposition

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3


@dataclass
class RunReport:
    command: list[str]
    timings_ms: dict = field(default_factory=dict)
    statistics: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    answer: dict = field(default_factory=dict)
    seeds: dict = field(default_factory=dict)
    artifacts: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"command": self.command, "timings_ms": self.timings_ms,
                "statistics": self.statistics, "bounds": self.bounds,
                "answer": self.answer, "seeds": self.seeds,
                "artifacts": self.artifacts}


def _emit(report: RunReport, out: str | None) -> None:
    text = json.dumps(report.to_json(), indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    print(text)


def _load_family(arg: str, tf: int | None) -> Family:
    patterns = [load_graph(p.strip(), pattern=True) for p in arg.split(",") if p.strip()]
    return Family.from_patterns(patterns, tf=tf)


def cmd_decompose(args) -> int:
    report = RunReport(command=sys.argv[1:])
    g = load_graph(args.input)
    x = load_vertex_set(args.modulator)
    t0 = time.perf_counter()
    try:
        pd = build_protrusion_decomposition(g, x, args.r, args.t)
    except ValueError as exc:
        if "tw(G-X)" in str(exc):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVARIANT
        raise
    report.timings_ms["decompose"] = round((time.perf_counter() - t0) * 1000, 3)
    t0 = time.perf_counter()
    val = validate_protrusion_decomposition(g, pd)
    report.timings_ms["validate"] = round((time.perf_counter() - t0) * 1000, 3)
    report.artifacts["decomposition"] = pd.to_json()
    report.statistics = {
        "n": g.n, "m": g.m, "y0": len(pd.y0), "clusters": len(pd.clusters),
        "marked_bags": len(pd.trace.marked_bags) if pd.trace else 0,
        "cluster_sizes": sorted(len(c) for c in pd.clusters),
        "violations": val.violations,
    }
    if args.out:
        Path(args.out).write_text(json.dumps(pd.to_json(), indent=2) + "\n",
                                  encoding="utf-8")
    _emit(report, None)
    return EXIT_OK if val.ok else EXIT_INVARIANT


def cmd_validate(args) -> int:
    g = load_graph(args.graph)
    data = json.loads(Path(args.decomposition).read_text(encoding="utf-8"))
    if args.kind == "td" or (args.kind == "auto" and "bags" in data):
        td = TreeDecomposition.from_json(data)
        rep = validate_decomposition(g, td)
        print(json.dumps({"kind": "td", "width": rep.width,
                          "violations": rep.violations}, indent=2))
        return EXIT_OK if rep.ok else EXIT_INVARIANT
    pd = ProtrusionDecomposition(
        frozenset(data["y0"]), tuple(frozenset(c) for c in data["clusters"]),
        int(data["beta"]), int(data["r"]), int(data["t"]))
    rep = validate_protrusion_decomposition(g, pd)
    print(json.dumps({"kind": "pd", "violations": rep.violations,
                      "treewidth_checked": rep.treewidth_checked}, indent=2))
    return EXIT_OK if rep.ok else EXIT_INVARIANT


def cmd_kernel_eds(args) -> int:
    report = RunReport(command=sys.argv[1:])
    g = load_graph(args.input)
    t0 = time.perf_counter()
    result = eds_kernelize(g, args.k, args.r)
    report.timings_ms["kernelize"] = round((time.perf_counter() - t0) * 1000, 3)
    if result is None:
        report.answer = {"answer": "NO"}
        _emit(report, args.report)
        return EXIT_NO
    kernel, k2 = result
    bound = bounds_mod.eds_kernel_bound(args.k, args.r) if args.r > 2 else None
    report.answer = {"answer": "kernel", "k": k2, "n": kernel.n, "m": kernel.m}
    report.bounds = {"eds_kernel_bound": bound}
    report.statistics = {"input_n": g.n, "input_m": g.m}
    report.artifacts["kernel"] = serialize_graph(kernel)
    if args.out:
        save_graph(args.out, kernel)
    _emit(report, args.report)
    return EXIT_OK


def cmd_solve(args) -> int:
    report = RunReport(command=sys.argv[1:])
    g = load_graph(args.input)
    family = _load_family(args.family, args.tf)
    stats: dict = {}
    test_cap = None if args.exact_fallback else args.test_cap
    t0 = time.perf_counter()
    sol = planar_f_deletion(g, family, args.k, test_cap=test_cap, stats=stats)
    elapsed = round((time.perf_counter() - t0) * 1000, 3)
    report.timings_ms["solve"] = elapsed
    payload = {
        "answer": "YES" if sol is not None else "NO",
        "solution": sorted(sol) if sol is not None else None,
        "branches_explored": stats.get("branches_explored", 0),
        "marked_bags": stats.get("marked_bags", 0),
        "clusters": stats.get("clusters", 0),
        "bounds": {},
    }
    if family.r > 2:
        try:
            from .fdeletion import treewidth_bound_for_family
            tf = treewidth_bound_for_family(family, args.tf)
            payload["bounds"] = {
                "marked_bags_bound": bounds_mod.marked_bags_bound(args.k, family.r, tf),
                "cluster_count_bound": bounds_mod.cluster_count_bound(args.k, family.r, tf),
            }
        except ValueError:
            payload["bounds"] = {}
    report.answer = payload
    report.statistics = stats if _json_safe(stats) else {}
    print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK if sol is not None else EXIT_NO


def _json_safe(obj) -> bool:
    try:
        json.dumps(obj)
        return True
    except TypeError:
        return False


def cmd_oracle(args) -> int:
    g = load_graph(args.input)
    if args.problem == "eds":
        ok = eds_brute_force(g, args.k)
        print(json.dumps({"answer": "YES" if ok else "NO"}))
        return EXIT_OK if ok else EXIT_NO
    family = _load_family(args.family, args.tf)
    forbidden = load_vertex_set(args.forbidden) if args.forbidden else frozenset()
    sol = f_deletion_brute_force(g, family, args.k, forbidden)
    print(json.dumps({"answer": "YES" if sol is not None else "NO",
                      "solution": sorted(sol) if sol is not None else None}))
    return EXIT_OK if sol is not None else EXIT_NO


def cmd_bounds(args) -> int:
    k, r, t = args.k, args.r, args.t
    rows = [
        ("topo_edge_bound(r, n=k)", bounds_mod.topo_edge_bound(r, k)),
        ("topo_clique_bound(r, n=k)", bounds_mod.topo_clique_bound(r, k)),
        ("minor_edge_bound(r, n=k)", bounds_mod.minor_edge_bound(r, k)),
        ("minor_clique_bound(r, n=k)", bounds_mod.minor_clique_bound(r, k)),
        ("alpha_r", bounds_mod.alpha_r(r)),
        ("mu_r", bounds_mod.mu_r(r)),
        ("eds_kernel_bound(k, r)", bounds_mod.eds_kernel_bound(k, r)),
        ("marked_bags_bound(k, r, t)", bounds_mod.marked_bags_bound(k, r, t)),
        ("cluster_count_bound(k, r, t)", bounds_mod.cluster_count_bound(k, r, t)),
        ("kernel_size_bound(k, t, r, protd=1)", bounds_mod.kernel_size_bound(k, t, r, 1)),
    ]
    width = max(len(name) for name, _ in rows)
    print(f"bounds for k={k} r={r} t={t}")
    for name, value in rows:
        print(f"  {name:<{width}}  {value:.6g}")
    return EXIT_OK


def cmd_generate(args) -> int:
    kind = args.kind
    meta: dict = {"kind": kind, "seed": args.seed, "n": args.n}
    if kind == "tree":
        g = generators.tree(args.n, args.seed)
    elif kind == "cycle":
        g = generators.cycle(args.n)
    elif kind == "planar-triangulation-sample":
        g = generators.planar_triangulation_sample(args.n, args.seed)
    elif kind == "bounded-degree":
        g = generators.bounded_degree(args.n, args.seed, args.max_degree)
        meta["max_degree"] = args.max_degree
    elif kind == "planted-fvs":
        g, planted = generators.planted_fvs(args.n, args.k, args.seed)
        meta["planted"] = sorted(planted)
        meta["k"] = args.k
    elif kind == "series-parallel":
        g = generators.series_parallel(args.n, args.seed)
    else:
        print(f"error: unknown kind {kind!r}", file=sys.stderr)
        return EXIT_INPUT
    save_graph(args.out, g)
    Path(args.out + ".meta.json").write_text(
        json.dumps(meta, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {args.out} ({g.n} vertices, {g.m} edges)")
    return EXIT_OK


def _bench_one(path: Path) -> dict:
    row: dict = {"instance": path.name, "n": "", "m": "", "k": "", "y0": "",
                 "ell": "", "kernel_size": "", "kernel_bound": "",
                 "solve_ms": "", "answer": "", "error": ""}
    try:
        g = load_graph(str(path))
        row["n"], row["m"] = g.n, g.m
        meta_path = Path(str(path) + ".meta.json")
        meta = json.loads(meta_path.read_text(encoding="utf-8")) if meta_path.exists() else {}
        k = int(meta.get("k", 1))
        r = int(meta.get("r", 4))
        row["k"] = k
        t0 = time.perf_counter()
        x = eds_modulator(g, k)
        if x is None:
            row["answer"] = "NO"
        else:
            pd = build_protrusion_decomposition(g, x, r, 1)
            row["y0"] = len(pd.y0)
            row["ell"] = len(pd.clusters)
            result = eds_kernelize(g, k, r)
            if result is not None:
                kernel, _k2 = result
                row["kernel_size"] = kernel.n
                if r > 2:
                    row["kernel_bound"] = round(bounds_mod.eds_kernel_bound(k, r), 1)
                row["answer"] = "kernel"
        row["solve_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    except Exception as exc:  # per-instance failures are recorded, not fatal
        row["error"] = str(exc)
    return row


def cmd_bench(args) -> int:
    corpus = Path(args.corpus)
    paths = sorted(p for p in corpus.glob("*.txt"))
    workers = int(os.environ.get("PROTRUSIONKIT_THREADS", "1"))
    if workers > 1 and paths:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_bench_one, paths))
    else:
        rows = [_bench_one(p) for p in paths]
    fields = ["instance", "n", "m", "k", "y0", "ell", "kernel_size",
              "kernel_bound", "solve_ms", "answer", "error"]
    out = sys.stdout if not args.out else open(args.out, "w", newline="", encoding="utf-8")
    try:
        writer = csv.DictWriter(out, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="protrusionkit")
    sub = p.add_subparsers(dest="cmd", required=True)

    d = sub.add_parser("decompose", help="build and validate a protrusion decomposition")
    d.add_argument("--input", required=True)
    d.add_argument("--modulator", required=True)
    d.add_argument("--r", type=int, required=True)
    d.add_argument("--t", type=int, required=True)
    d.add_argument("--out")
    d.set_defaults(fn=cmd_decompose)

    v = sub.add_parser("validate", help="validate a decomposition JSON file")
    v.add_argument("--graph", required=True)
    v.add_argument("--decomposition", required=True)
    v.add_argument("--kind", choices=["auto", "td", "pd"], default="auto")
    v.set_defaults(fn=cmd_validate)

    ke = sub.add_parser("kernel-eds", help="edge dominating set kernel")
    ke.add_argument("--input", required=True)
    ke.add_argument("--k", type=int, required=True)
    ke.add_argument("--r", type=int, required=True)
    ke.add_argument("--out")
    ke.add_argument("--report")
    ke.set_defaults(fn=cmd_kernel_eds)

    s = sub.add_parser("solve", help="planar family deletion")
    s.add_argument("--input", required=True)
    s.add_argument("--family", required=True, help="comma separated pattern files")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--tf", type=int)
    s.add_argument("--test-cap", type=int, dest="test_cap")
    s.add_argument("--exact-fallback", action="store_true", dest="exact_fallback")
    s.set_defaults(fn=cmd_solve)

    o = sub.add_parser("oracle", help="brute-force reference answers")
    o.add_argument("--input", required=True)
    o.add_argument("--problem", choices=["fdeletion", "eds"], default="fdeletion")
    o.add_argument("--family")
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--tf", type=int)
    o.add_argument("--forbidden")
    o.set_defaults(fn=cmd_oracle)

    b = sub.add_parser("bounds", help="print the closed-form bounds")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--t", type=int, required=True)
    b.set_defaults(fn=cmd_bounds)

    gen = sub.add_parser("generate", help="write a seeded instance")
    gen.add_argument("--kind", required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, default=2)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--max-degree", type=int, default=3, dest="max_degree")
    gen.add_argument("--out", required=True)
    gen.set_defaults(fn=cmd_generate)

    be = sub.add_parser("bench", help="run the corpus and emit CSV")
    be.add_argument("--corpus", required=True)
    be.add_argument("--out")
    be.set_defaults(fn=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
