"""ocover command line: gen, search, pipeline, report.

Exit codes: 0 success, 1 usage or IO error, 2 search budget exhausted,
3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__, certificate, kernels
from .classify import ClassificationError
from .corpus import CORPUS_ENV, corpus_dir
from .cover import SearchConfig, search_cycle_cover
from .flower import FlowerConstructionError
from .graph import (NAMED_GRAPHS, CubicGraph, GraphError, gen_flower_snark, gen_named, graph6_decode, graph6_encode,
                    read_graph6_file)
from .pipeline import STEPS, run_steps
from .ribbon import TheoremViolation, triple_table_text
from .surface import SurfaceError, glue_surface, to_dot

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3
INTERNAL_ERRORS = (TheoremViolation, FlowerConstructionError, ClassificationError, SurfaceError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# -- gen ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.kind == "flower":
        if args.m is None:
            raise UsageError("gen flower needs --m")
        try:
            g = gen_flower_snark(args.m)
        except GraphError as exc:
            raise UsageError(str(exc)) from exc
    else:
        try:
            g = gen_named(args.kind)
        except GraphError as exc:
            raise UsageError(str(exc)) from exc
    line = graph6_encode(g) + "\n"
    if args.output:
        Path(args.output).write_text(line)
    else:
        sys.stdout.write(line)
    return EXIT_OK


# -- search ------------------------------------------------------------------------

def load_graphs(spec: str) -> list[CubicGraph]:
    """A graph6 file, a named fixture, or ``flower:<m>``; relative names fall back to the corpus directory."""
    p = Path(spec)
    if p.exists():
        return read_graph6_file(p)
    if spec.startswith("flower:"):
        return [gen_flower_snark(int(spec.split(":", 1)[1]))]
    stem = Path(spec).stem
    if stem in NAMED_GRAPHS or stem.lower() in ("j3", "10.04-6"):
        return [gen_named(stem)]
    q = corpus_dir() / spec
    if q.exists():
        return read_graph6_file(q)
    raise UsageError(f"no such graph file or name: {spec}")


def _search_one(task):
    g6, name, cfg = task
    g = graph6_decode(g6, name=name)
    t = time.perf_counter()
    res = search_cycle_cover(g, SearchConfig(**cfg))
    docs = []
    for sol in res.solutions:
        docs.append(certificate.cover_to_dict(sol, name) if cfg["oriented"]
                    else certificate.unoriented_to_dict(sol, name))
    return {"name": name, "status": res.status, "count": res.count, "docs": docs,
            "seconds": round(time.perf_counter() - t, 4)}


def _safe(name: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "-_." else "_" for ch in name)


def cmd_search(args) -> int:
    graphs = load_graphs(args.input)
    cfg = dict(k=args.k, m=args.m, oriented=args.oriented, mode=args.mode, node_budget=args.budget)
    try:
        SearchConfig(**cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    tasks = [(graph6_encode(g), g.name or f"graph-{i + 1}", cfg) for i, g in enumerate(graphs)]
    jobs = args.jobs or os.cpu_count() or 1
    t0 = time.time()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_search_one, tasks))
    else:
        results = [_search_one(t) for t in tasks]
    out = Path(args.out)
    outputs = []
    worst = EXIT_OK
    for r in results:  # input order, independent of jobs
        d = out / _safe(r["name"])
        if r["docs"]:
            for i, doc in enumerate(r["docs"], 1):
                outputs.append(str(certificate.write(doc, d / f"solution-{i:04d}.json")))
        marker = {"name": r["name"], "status": r["status"], "count": r["count"], "k": args.k, "m": args.m,
                  "oriented": args.oriented, "mode": args.mode}
        if not r["count"]:
            marker["verdict"] = "budget" if r["status"] == kernels.BUDGET else "none"
        outputs.append(str(certificate.write(marker, d / "status.json")))
        if r["status"] == kernels.BUDGET:
            worst = EXIT_BUDGET
        print(f"{r['name']}: {r['status']}, {r['count']} solution(s), {r['seconds']} s")
    _manifest(out, args, [args.input], outputs, t0, cfg)
    return worst


def _manifest(out: Path, args, inputs, outputs, t0, config):
    man = {
        "command": args.command, "argv": sys.argv[1:], "inputs": inputs, "config": config,
        "version": __version__, "kernels": kernels.IMPLEMENTATION, "outputs": sorted(outputs),
        "wall_clock_seconds": round(time.time() - t0, 3),
    }
    out.mkdir(parents=True, exist_ok=True)
    (out / "manifest.json").write_text(json.dumps(man, indent=1, sort_keys=True) + "\n")


# -- pipeline ------------------------------------------------------------------------

def solution_to_dot(doc: dict) -> str:
    """The graph with vertex/edge classes, when the classification section is present."""
    g = certificate.graph_of(doc)
    cls = doc.get("classification")
    lines = [f'graph "{doc.get("name") or "solution"}" {{']
    for v in range(g.n):
        shape = "box" if cls and cls["vertices"][v] == "ordered" else "circle"
        lines.append(f"  {v} [shape={shape}];")
    for e, (u, v) in enumerate(g.edges):
        style = ' [style=dashed, label="poor"]' if cls and cls["edges"][e] == "poor" else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_pipeline(args) -> int:
    steps = [s.strip() for s in args.steps.split(",") if s.strip()]
    bad = [s for s in steps if s not in STEPS]
    if bad:
        raise UsageError(f"unknown step(s) {bad}; choose from {', '.join(STEPS)}")
    t0 = time.time()
    outputs = []
    for path in args.certificates:
        doc = certificate.read(path)
        run_steps(doc, steps, args.budget)
        target = Path(args.output) if args.output and len(args.certificates) == 1 else Path(path)
        outputs.append(str(certificate.write(doc, target)))
        if args.dot:
            dd = Path(args.dot)
            dd.mkdir(parents=True, exist_ok=True)
            stem = Path(path).parent.name + "-" + Path(path).stem
            (dd / f"{stem}-graph.dot").write_text(solution_to_dot(doc))
            if doc.get("k") == 6 and doc.get("m") == 4:
                oc = certificate.cover_from_dict(doc)
                (dd / f"{stem}-surface.dot").write_text(to_dot(glue_surface(oc), "surface"))
        summary = ", ".join(f"{s}: skipped ({doc['skipped'][s]})" if s in doc.get("skipped", {}) else f"{s}: ok"
                            for s in steps)
        print(f"{path}: {summary}")
    if args.manifest:
        _manifest(Path(args.manifest), args, list(args.certificates), outputs, t0, {"steps": steps})
    return EXIT_OK


# -- report ----------------------------------------------------------------------------

def _row(path: Path, doc: dict) -> list[str]:
    c = doc.get("classification", {}).get("counts", {})
    s = doc.get("surface", {})
    genus = [comp["genus"] for comp in s.get("components", [])]
    return [str(path), doc.get("name", ""), str(doc.get("k", "")), str(doc.get("m", "")),
            str(c.get("ordered", "")), str(c.get("rich", "")), str(c.get("poor", "")),
            str(s.get("boundaries", "")), ",".join(map(str, genus)),
            "yes" if "o6cdc" in doc else ("skip" if "ribbon" in doc.get("skipped", {}) else "")]


def cmd_report(args) -> int:
    run = Path(args.run_dir)
    if not run.is_dir():
        raise UsageError(f"not a directory: {run}")
    rows = []
    checks: dict[str, dict[str, int]] = {}
    statuses = []
    for p in sorted(run.rglob("*.json")):
        if p.name == "manifest.json":
            continue
        doc = certificate.read(p)
        if p.name == "status.json":
            statuses.append(doc)
            continue
        if "graph6" not in doc:
            continue
        rows.append(_row(p.relative_to(run), doc))
        for name, r in doc.get("checks", {}).items():
            checks.setdefault(name, {}).setdefault(r["verdict"], 0)
            checks[name][r["verdict"]] += 1
        if args.dot and "classification" in doc:
            dd = Path(args.dot)
            dd.mkdir(parents=True, exist_ok=True)
            (dd / (str(p.relative_to(run)).replace(os.sep, "_")[:-5] + ".dot")).write_text(solution_to_dot(doc))
    header = ["certificate", "graph", "k", "m", "ordered", "rich", "poor", "boundaries", "genus", "o6cdc"]
    lines = []
    if rows:
        widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
        lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
        lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    if statuses:
        lines.append("")
        lines += [f"search {s['name']}: {s['status']}, {s['count']} solution(s)" for s in statuses]
    if checks:
        lines.append("")
        for name in sorted(checks):
            lines.append(f"check {name}: " + ", ".join(f"{v}={n}" for v, n in sorted(checks[name].items())))
    text = "\n".join(lines) + ("\n" if lines else "")
    sys.stdout.write(text or "no certificates\n")
    if args.summary:
        Path(args.summary).write_text(text)
    if args.table:
        Path(args.table).write_text(triple_table_text())
    return EXIT_OK


# -- entry ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ocover", description="Oriented cycle covers of cubic graphs.")
    p.add_argument("--version", action="version", version=f"ocover {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a graph6 line for a generated or named graph")
    g.add_argument("kind", help="flower or a named graph: " + ", ".join(NAMED_GRAPHS))
    g.add_argument("--m", type=int, help="flower snark J_m, m odd >= 3")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("search", help="search k-cycle m-covers; one certificate per solution")
    s.add_argument("input", help=f"graph6 file, named graph, or corpus file under ${CORPUS_ENV}")
    s.add_argument("-k", type=int, default=6)
    s.add_argument("-m", type=int, default=4)
    s.add_argument("--oriented", action="store_true")
    s.add_argument("--mode", choices=("first", "all", "count"), default="first")
    s.add_argument("--budget", type=int, default=0, help="node budget per kernel call (0 = none)")
    s.add_argument("--out", default="runs/search")
    s.add_argument("--jobs", type=int, default=0, help="worker processes (default: all cores)")
    s.set_defaults(func=cmd_search)

    pl = sub.add_parser("pipeline", help="append analysis sections to certificates")
    pl.add_argument("certificates", nargs="+")
    pl.add_argument("--steps", default="classify,surface,split")
    pl.add_argument("-o", "--output", help="write here instead of in place (single certificate)")
    pl.add_argument("--dot", help="directory for DOT renderings")
    pl.add_argument("--budget", type=int, default=0)
    pl.add_argument("--manifest", help="directory for a run manifest")
    pl.set_defaults(func=cmd_pipeline)

    r = sub.add_parser("report", help="summarize a run directory")
    r.add_argument("run_dir")
    r.add_argument("--summary", help="also write the summary table here")
    r.add_argument("--table", help="write the triple-class table here")
    r.add_argument("--dot", help="directory for DOT renderings of classified solutions")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ocover: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, certificate.CertificateError, GraphError) as exc:
        print(f"ocover: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except INTERNAL_ERRORS as exc:
        print(f"ocover: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
