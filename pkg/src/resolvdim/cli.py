"""Command-line front end.

One executable with subcommands {graph, dim, twins, check, exchange,
intersect, verify}.  Exit codes are a stable contract: 0 all pass, 1
verification failure, 2 usage error (including instances over the vertex
cap and parse errors), 3 budget exceeded.

Reports are deterministic: identical configurations (including --seed)
produce byte-identical output regardless of --workers, because cells are
rendered in sorted order, randomized trials derive their generator from
(seed, q, n), and timings are only included when --timings is given.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import exchange as exchange_mod
from . import field as field_mod
from . import graph as graph_mod
from . import intersection as intersection_mod
from . import resolving as resolving_mod
from . import twins as twins_mod
from . import vectorspace
from .errors import (BadParameters, BudgetExceeded, InstanceTooLarge,
                     ResolvdimError, VertexParseError)

SCHEMA_VERSION = 1
BUDGET_ENV_VAR = "RESOLVDIM_BUDGET"

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    qs: list[int]
    ns: list[int]
    budget: int
    vertex_cap: int
    seed: int
    allow_theorem: bool
    fmt: str = "text"
    out: str | None = None
    workers: int = 1
    timings: bool = False

    def cell_list(self) -> list[tuple[int, int]]:
        return [(q, n) for q in sorted(self.qs) for n in sorted(self.ns)]


def render_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _parse_range(raw: str, what: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", raw)
    if m is None:
        raise BadParameters(f"malformed {what} range {raw!r}; expected A..B")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise BadParameters(f"malformed {what} range {raw!r}: {lo} > {hi}")
    return lo, hi


def _resolve_qs(args) -> list[int]:
    if args.q is not None and args.q_range is not None:
        raise BadParameters("give either --q or --q-range, not both")
    if args.q is not None:
        field_mod.validate_order(args.q)
        return [args.q]
    if args.q_range is not None:
        lo, hi = _parse_range(args.q_range, "q")
        qs = [q for q in field_mod.SUPPORTED_ORDERS if lo <= q <= hi]
        if not qs:
            raise BadParameters(f"no supported field orders in {lo}..{hi}")
        return qs
    raise BadParameters("missing --q or --q-range")


def _resolve_ns(args) -> list[int]:
    if args.n is not None and args.n_range is not None:
        raise BadParameters("give either --n or --n-range, not both")
    if args.n is not None:
        if args.n < 1:
            raise BadParameters(f"n must be >= 1, got {args.n}")
        return [args.n]
    if args.n_range is not None:
        lo, hi = _parse_range(args.n_range, "n")
        if lo < 1:
            raise BadParameters("n range must start at 1 or above")
        return list(range(lo, hi + 1))
    raise BadParameters("missing --n or --n-range")


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return resolving_mod.DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise BadParameters(f"{BUDGET_ENV_VAR}={raw!r} is not an integer") from None


def _labels(g: graph_mod.ComponentGraph, ids) -> list[str]:
    return [g.label(v) for v in ids]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_graph(args) -> int:
    g = graph_mod.ComponentGraph(args.q, args.n, vertex_cap=args.vertex_cap)
    prefix = args.out if args.out else f"gamma_q{args.q}_n{args.n}"
    dot_path = prefix + ".gv"
    edges_path = prefix + ".edges"
    with open(dot_path, "w", newline="\n") as fh:
        fh.write(graph_mod.to_dot(g))
    with open(edges_path, "w", newline="\n") as fh:
        fh.write(graph_mod.to_edge_list(g))
    size = graph_mod.size_bruteforce(g)
    sys.stdout.write(f"order={g.vertex_count} size={size}\n")
    sys.stdout.write(f"wrote {dot_path}\nwrote {edges_path}\n")
    return EXIT_PASS


def cmd_dim(args) -> int:
    g = graph_mod.ComponentGraph(args.q, args.n, vertex_cap=args.vertex_cap)
    formula = resolving_mod.metric_dimension_formula(args.q, args.n)
    search, witness = resolving_mod.metric_dimension_search(g, budget=args.budget)
    match = formula == search
    if args.format == "json":
        payload = {
            "q": args.q, "n": args.n, "formula": formula, "search": search,
            "witness": _labels(g, witness), "match": match,
        }
        _emit(render_json(payload), args.out)
    else:
        text = (f"q={args.q} n={args.n} dim_formula={formula} dim_search={search} "
                f"witness={','.join(_labels(g, witness))} match={str(match).lower()}\n")
        _emit(text, args.out)
    return EXIT_PASS if match else EXIT_FAIL


def cmd_twins(args) -> int:
    g = graph_mod.ComponentGraph(args.q, args.n, vertex_cap=args.vertex_cap)
    part = twins_mod.partition_by_neighborhood(g)
    lines = []
    for cls, mask in zip(part.classes, part.skeletons):
        members = ",".join(_labels(g, cls))
        lines.append(f"mask={mask:0{args.n}b} size={len(cls)} members=[{members}]")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS


def cmd_check(args) -> int:
    g = graph_mod.ComponentGraph(args.q, args.n, vertex_cap=args.vertex_cap)
    ids = vectorspace.parse_vertex_list(args.set, args.q, args.n)
    report = resolving_mod.is_resolving(g, ids)
    f = field_mod.field_new(args.q)
    vectors = [vectorspace.decode(v, args.q, args.n) for v in ids]
    spans = field_mod.has_full_rank(f, args.n, vectors)
    if args.format == "json":
        payload = {
            "q": args.q, "n": args.n, "W": _labels(g, ids),
            "resolving": report.is_resolving,
            "minimal": report.is_minimal,
            "contains_v_basis": spans,
            "colliding_pair": (None if report.colliding_pair is None
                               else _labels(g, report.colliding_pair)),
            "redundant_vertex": (None if report.redundant_vertex is None
                                 else g.label(report.redundant_vertex)),
        }
        _emit(render_json(payload), args.out)
    else:
        lines = [f"W={','.join(_labels(g, ids))}",
                 f"resolving={str(report.is_resolving).lower()}"]
        if report.colliding_pair is not None:
            u, v = report.colliding_pair
            lines.append(f"collision=({g.label(u)},{g.label(v)})")
        lines.append(f"minimal={str(report.is_minimal).lower()}")
        if report.redundant_vertex is not None:
            lines.append(f"redundant_vertex={g.label(report.redundant_vertex)}")
        lines.append(f"contains_v_basis={str(spans).lower()}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS if report.is_resolving else EXIT_FAIL


def cmd_exchange(args) -> int:
    g = graph_mod.ComponentGraph(args.q, args.n, vertex_cap=args.vertex_cap)
    report = exchange_mod.has_exchange_property(
        g, budget=args.budget, allow_theorem=args.allow_theorem)
    witness = None
    if report.witness is not None:
        witness = {
            "kind": "exchange-violation",
            "w1": _labels(g, report.witness.w1),
            "r": g.label(report.witness.r),
            "w2": _labels(g, report.witness.w2),
        }
    payload = {
        "q": args.q, "n": args.n,
        "holds": report.holds,
        "method": report.method,
        "sizes": list(report.minimal_set_sizes),
        "witness": witness,
    }
    _emit(render_json(payload), args.out)
    return EXIT_PASS


def cmd_intersect(args) -> int:
    if args.powerset is not None:
        fam = intersection_mod.powerset_family(args.powerset)
        _emit(intersection_mod.family_to_text(fam), args.out)
        return EXIT_PASS
    if args.correspondence is not None:
        ok = intersection_mod.powerset_matches_component_graph(args.correspondence)
        _emit(f"correspondence={str(ok).lower()}\n", args.out)
        return EXIT_PASS if ok else EXIT_FAIL
    if args.dim_powerset is not None:
        k = intersection_mod.powerset_intersection_dimension(
            args.dim_powerset, budget=args.budget)
        _emit(f"dim={k}\n", args.out)
        return EXIT_PASS
    if args.family is not None:
        with open(args.family) as fh:
            fam = intersection_mod.parse_family(fh.read())
        pg = intersection_mod.intersection_graph(fam)
        lines = [f"members={len(fam)} order={pg.vertex_count} size={len(pg.edges)}"]
        lines += [f"{u + 1} {v + 1}" for u, v in sorted(pg.edges)]
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_PASS
    if args.realize is not None:
        if args.vertices is None:
            raise BadParameters("--realize needs --vertices N")
        with open(args.realize) as fh:
            edges = _parse_edge_file(fh.read(), args.vertices)
        pg = intersection_mod.PlainGraph(args.vertices, edges)
        fam = intersection_mod.as_intersection_family(pg)
        _emit(intersection_mod.family_to_text(fam), args.out)
        return EXIT_PASS
    raise BadParameters(
        "intersect needs one of --powerset, --family, --correspondence, "
        "--realize, --dim-powerset")


def _parse_edge_file(text: str, vertices: int) -> list[tuple[int, int]]:
    """Edge list with 1-based ids, one `u v` pair per line."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BadParameters(f"line {lineno}: expected `u v`, got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= vertices and 1 <= v <= vertices):
            raise BadParameters(f"line {lineno}: vertex outside 1..{vertices}")
        edges.append((u - 1, v - 1))
    return edges


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _expected_exchange(q: int, n: int) -> bool:
    return q >= 3 or n <= 2


def _twin_swap_trials(g, cfg: RunConfig, trials: int = 20) -> dict:
    part = twins_mod.partition_by_neighborhood(g)
    multi = [c for c in part.classes if len(c) >= 2]
    if not multi:
        return {"status": "no-twins"}
    rng = random.Random(f"{cfg.seed}:{g.q}:{g.n}")
    base = resolving_mod.canonical_metric_basis(g.q, g.n)
    all_ids = list(g.vertex_ids())
    passed = 0
    for _ in range(trials):
        w = set(base)
        for _ in range(rng.randrange(0, 3)):
            w.add(rng.choice(all_ids))
        swappable = [c for c in part.classes
                     if any(x in w for x in c) and any(x not in w for x in c)]
        if not swappable:
            continue
        cls = rng.choice(swappable)
        u = rng.choice([x for x in cls if x in w])
        v = rng.choice([x for x in cls if x not in w])
        if not resolving_mod.is_resolving(g, sorted(w)).is_resolving:
            return {"status": "checked", "trials": trials, "all_resolving": False}
        swapped = twins_mod.twin_swap(g, w, u, v)
        if not resolving_mod.is_resolving(g, swapped).is_resolving:
            return {"status": "checked", "trials": trials, "all_resolving": False}
        passed += 1
    return {"status": "checked", "trials": passed, "all_resolving": True}


def _verify_cell(cfg: RunConfig, q: int, n: int) -> dict:
    t0 = time.perf_counter()
    record: dict = {"q": q, "n": n}
    timings: dict[str, float] = {}
    okays: list[bool] = []

    try:
        g = graph_mod.ComponentGraph(q, n, vertex_cap=cfg.vertex_cap)
    except InstanceTooLarge as exc:
        record["status"] = "skipped"
        record["reason"] = str(exc)
        record["pass"] = True
        return record
    record["vertices"] = g.vertex_count

    # order and size against the counting formulas
    enumerated = sum(1 for _ in vectorspace.enumerate_vertices(q, n, cfg.vertex_cap))
    order_ok = graph_mod.order_formula(q, n) == enumerated
    record["order"] = {"formula": graph_mod.order_formula(q, n),
                       "enumerated": enumerated, "match": order_ok}
    okays.append(order_ok)

    brute = graph_mod.size_bruteforce(g)
    formula = graph_mod.size_formula(q, n)
    record["size"] = {"formula": formula, "bruteforce": brute,
                      "match": formula == brute}
    okays.append(formula == brute)

    complete = graph_mod.is_complete(g)
    record["complete"] = {"value": complete, "expected": n == 1,
                          "match": complete == (n == 1)}
    okays.append(complete == (n == 1))
    timings["counts"] = time.perf_counter() - t0

    # twin partitions
    t1 = time.perf_counter()
    try:
        coincide = twins_mod.partitions_coincide(g)
        record["twins"] = {"status": "checked", "coincide": coincide}
        okays.append(coincide)
    except InstanceTooLarge as exc:
        record["twins"] = {"status": "skipped", "reason": str(exc)}
    timings["twins"] = time.perf_counter() - t1

    # metric dimension, formula against search
    t2 = time.perf_counter()
    dim_value: int | None = None
    try:
        formula_dim = resolving_mod.metric_dimension_formula(q, n)
        search_dim, witness = resolving_mod.metric_dimension_search(g, budget=cfg.budget)
        dim_value = search_dim
        record["dim"] = {"status": "checked", "formula": formula_dim,
                         "search": search_dim,
                         "witness": _labels(g, witness),
                         "match": formula_dim == search_dim}
        okays.append(formula_dim == search_dim)
    except (BudgetExceeded, InstanceTooLarge) as exc:
        record["dim"] = {"status": "skipped", "reason": str(exc)}
    timings["dim"] = time.perf_counter() - t2

    # minimum resolving sets against linear independence
    t3 = time.perf_counter()
    if q >= 3:
        if dim_value is None:
            record["corollary"] = {"status": "skipped", "reason": "dim search skipped"}
        else:
            try:
                subsets = resolving_mod.all_resolving_k_subsets(
                    g.distance_matrix(), dim_value, cfg.budget)
                f = field_mod.field_new(q)
                all_span = all(
                    field_mod.has_full_rank(
                        f, n, [vectorspace.decode(c + 1, q, n) for c in cols])
                    for cols in subsets)
                record["corollary"] = {"status": "verified",
                                       "minimum_sets": len(subsets),
                                       "all_contain_v_basis": all_span}
                okays.append(all_span)
            except BudgetExceeded as exc:
                record["corollary"] = {"status": "skipped", "reason": str(exc)}
    elif q == 2 and n == 3:
        ids = [vectorspace.parse_vertex(t, q, n) for t in ("e1", "e1+e3", "e3")]
        rep = resolving_mod.is_resolving(g, ids)
        f = field_mod.field_new(q)
        dependent = not field_mod.has_full_rank(
            f, n, [vectorspace.decode(v, q, n) for v in ids])
        minimum = len(ids) == resolving_mod.metric_dimension_formula(q, n)
        ok = rep.is_resolving and minimum and dependent
        record["corollary"] = {"status": "counterexample-verified",
                               "witness": _labels(g, ids), "ok": ok}
        okays.append(ok)
    else:
        record["corollary"] = {"status": "not-applicable"}
    timings["corollary"] = time.perf_counter() - t3

    # exchange property
    t4 = time.perf_counter()
    try:
        report = exchange_mod.has_exchange_property(
            g, budget=cfg.budget, allow_theorem=cfg.allow_theorem)
        expected = _expected_exchange(q, n)
        record["exchange"] = {"status": "checked", "holds": report.holds,
                              "method": report.method,
                              "sizes": list(report.minimal_set_sizes),
                              "expected": expected,
                              "match": report.holds == expected}
        okays.append(report.holds == expected)
    except (BudgetExceeded, InstanceTooLarge) as exc:
        record["exchange"] = {"status": "skipped", "reason": str(exc)}
    timings["exchange"] = time.perf_counter() - t4

    # randomized twin-swap trials
    t5 = time.perf_counter()
    try:
        swaps = _twin_swap_trials(g, cfg)
        record["twin_swap_trials"] = swaps
        if swaps.get("status") == "checked":
            okays.append(bool(swaps["all_resolving"]))
    except InstanceTooLarge as exc:
        record["twin_swap_trials"] = {"status": "skipped", "reason": str(exc)}
    timings["swaps"] = time.perf_counter() - t5

    record["pass"] = all(okays)
    if cfg.timings:
        record["timings"] = {k: round(v, 6) for k, v in timings.items()}
    return record


def _status_token(section: dict, ok_key: str = "match") -> str:
    status = section.get("status")
    if status == "skipped":
        return "skipped"
    if status == "not-applicable":
        return "n/a"
    if status == "no-twins":
        return "no-twins"
    if status == "counterexample-verified":
        return "ok" if section.get("ok") else "FAIL"
    if status == "verified":
        return "ok" if section.get("all_contain_v_basis") else "FAIL"
    if status == "checked":
        if "coincide" in section:
            return "ok" if section["coincide"] else "FAIL"
        if "all_resolving" in section:
            return "ok" if section["all_resolving"] else "FAIL"
        return "ok" if section.get(ok_key) else "FAIL"
    return "ok" if section.get(ok_key) else "FAIL"


def _render_verify_text(report: dict) -> str:
    lines = [f"schema_version={report['schema_version']}"]
    for rec in report["records"]:
        if rec.get("status") == "skipped":
            lines.append(f"q={rec['q']} n={rec['n']} cell=SKIPPED ({rec['reason']})")
            continue
        parts = [f"q={rec['q']}", f"n={rec['n']}",
                 f"order={_status_token(rec['order'])}",
                 f"size={_status_token(rec['size'])}",
                 f"complete={_status_token(rec['complete'])}",
                 f"twins={_status_token(rec['twins'])}",
                 f"dim={_status_token(rec['dim'])}",
                 f"corollary={_status_token(rec['corollary'])}",
                 f"exchange={_status_token(rec['exchange'])}",
                 f"swaps={_status_token(rec['twin_swap_trials'])}",
                 f"cell={'PASS' if rec['pass'] else 'FAIL'}"]
        lines.append(" ".join(parts))
    lines.append(f"OVERALL: {'PASS' if report['overall_pass'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    cfg = RunConfig(qs=_resolve_qs(args), ns=_resolve_ns(args),
                    budget=args.budget, vertex_cap=args.vertex_cap,
                    seed=args.seed, allow_theorem=args.allow_theorem,
                    fmt=args.format, out=args.out, workers=args.workers,
                    timings=args.timings)
    cells = cfg.cell_list()
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            records = list(pool.map(lambda c: _verify_cell(cfg, *c), cells))
    else:
        records = [_verify_cell(cfg, q, n) for q, n in cells]
    overall = all(r["pass"] for r in records)
    report = {
        "schema_version": SCHEMA_VERSION,
        "config": {
            "qs": sorted(cfg.qs), "ns": sorted(cfg.ns), "budget": cfg.budget,
            "vertex_cap": cfg.vertex_cap, "seed": cfg.seed,
            "allow_theorem": cfg.allow_theorem,
        },
        "records": records,
        "overall_pass": overall,
    }
    if cfg.fmt == "json":
        _emit(render_json(report), cfg.out)
    else:
        _emit(_render_verify_text(report), cfg.out)
    return EXIT_PASS if overall else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser and entry point
# ---------------------------------------------------------------------------

def _add_qn(sp, required: bool = True) -> None:
    sp.add_argument("--q", type=int, required=required,
                    help="field order (a supported prime power)")
    sp.add_argument("--n", type=int, required=required, help="space dimension")


def _add_common(sp) -> None:
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--out", default=None, help="write output to this path")
    sp.add_argument("--budget", type=int, default=None,
                    help=f"max subset evaluations (default ${BUDGET_ENV_VAR} "
                         f"or {resolving_mod.DEFAULT_BUDGET})")
    sp.add_argument("--vertex-cap", type=int, default=vectorspace.DEFAULT_VERTEX_CAP)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--allow-theorem", action="store_true",
                    help="permit theorem citation when exchange is over budget")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="resolvdim",
        description="Resolving sets and metric dimension of the nonzero "
                    "component graph of GF(q)^n, with exact verification.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("graph", help="export DOT and edge-list files")
    _add_qn(sp)
    _add_common(sp)

    sp = sub.add_parser("dim", help="metric dimension, formula vs search")
    _add_qn(sp)
    _add_common(sp)

    sp = sub.add_parser("twins", help="twin classes, one line per class")
    _add_qn(sp)
    _add_common(sp)

    sp = sub.add_parser("check", help="resolving/minimal status of a vertex set")
    _add_qn(sp)
    sp.add_argument("-W", "--set", required=True,
                    help="comma-separated vertices, e.g. e1,e1+e3,e3")
    _add_common(sp)

    sp = sub.add_parser("exchange", help="exchange-property verdict (JSON)")
    _add_qn(sp)
    _add_common(sp)

    sp = sub.add_parser("intersect", help="set families and intersection graphs")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--powerset", type=int, metavar="N",
                       help="emit the nonempty-subsets family of {1..N}")
    group.add_argument("--family", metavar="FILE",
                       help="read a family file and print its intersection graph")
    group.add_argument("--correspondence", type=int, metavar="N",
                       help="check the q=2 powerset identification for GF(2)^N")
    group.add_argument("--realize", metavar="FILE",
                       help="realize an edge-list graph as an intersection family")
    group.add_argument("--dim-powerset", type=int, metavar="N",
                       help="metric dimension of the powerset intersection graph")
    sp.add_argument("--vertices", type=int, default=None,
                    help="vertex count for --realize (ids are 1-based)")
    _add_common(sp)

    sp = sub.add_parser("verify", help="run the verification suite over a grid")
    sp.add_argument("--q", type=int, default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--q-range", default=None, metavar="A..B")
    sp.add_argument("--n-range", default=None, metavar="A..B")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--timings", action="store_true",
                    help="include wall-clock timings (breaks byte determinism)")
    _add_common(sp)

    return p


_HANDLERS = {
    "graph": cmd_graph,
    "dim": cmd_dim,
    "twins": cmd_twins,
    "check": cmd_check,
    "exchange": cmd_exchange,
    "intersect": cmd_intersect,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "budget", None) is None:
            args.budget = _default_budget()
        return _HANDLERS[args.command](args)
    except BudgetExceeded as exc:
        bounds = ""
        if exc.lower_bound is not None or exc.upper_bound is not None:
            bounds = f" (bounds: {exc.lower_bound}..{exc.upper_bound})"
        sys.stderr.write(f"budget exceeded: {exc}{bounds}\n")
        return EXIT_BUDGET
    except (VertexParseError, BadParameters, InstanceTooLarge) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ResolvdimError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"io error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
