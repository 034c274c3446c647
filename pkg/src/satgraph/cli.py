"""Command-line entry point.

JSON goes to stdout, human prose to stderr.  Exit codes: 0 ok, 2 usage,
3 domain error, 4 certification mismatch.  Graphs are passed as graph6
strings, inline or as ``@file``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from . import bounds as bnd
from . import constructions as cons
from . import staropt
from .errors import DomainError, SplitPathFreeError
from .graph import Graph, decode_graph6, encode_graph6, to_adjacency_json
from .patterns import parse_pattern
from .saturation import is_family_saturated, is_saturated
from .search import (SearchConstraints, satnum_exact, tstar_scan)
from .counting import count_pattern

SCHEMA = {
    "schema_version": 1,
    "report": {
        "command": "string", "parameters": "object", "result": "object",
        "wall_time_s": "number (excluded from byte-stability guarantees)",
        "version": "string",
    },
    "results": {
        "construct": {"graph6": "string", "n": "int", "edges": "int",
                      "degree_sequence": "[int]", "properties": "object"},
        "count": {"count": "int"},
        "check-sat": {"graph": "graph6", "pattern": "string|[string]",
                      "free": "bool", "saturated": "bool",
                      "witness": "object|null", "checked_nonedges": "int"},
        "satnum star-star / m0": {"satnum": "int", "m0": "int", "tie": "bool",
                                  "xbar": "number|null"},
        "satnum exact": {"n": "int", "forbid": "string", "count": "string",
                         "minimum": "int", "witnesses": "[graph6]",
                         "witness_total": "int", "graphs_examined": "int",
                         "saturated_found": "int", "workers": "int"},
        "bounds": {"name": "string", "parameters": "object",
                   "value": "number|object", "satisfied": "bool|null"},
        "tie-ts": {"ts": "[int]"},
        "scan tstar": {"n_max": "int", "per_n": "object", "any_found": "bool"},
        "certify": {"entries": "[object]", "mismatches": "[object]"},
    },
    "exit_codes": {"0": "ok", "2": "usage", "3": "domain error",
                   "4": "certification mismatch"},
}


def _read_graph(text: str) -> Graph:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read().strip()
    return decode_graph6(text)


def _jsonable(x):
    if isinstance(x, Fraction):
        return {"numerator": x.numerator, "denominator": x.denominator,
                "value": float(x)}
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(command: str, parameters: dict, result, started: float) -> None:
    report = {
        "command": command,
        "parameters": _jsonable(parameters),
        "result": _jsonable(result),
        "wall_time_s": round(time.perf_counter() - started, 6),
        "version": __version__,
    }
    print(json.dumps(report, sort_keys=True))


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="satgraph",
                                description="graph saturation toolkit")
    p.add_argument("--schema", action="store_true",
                   help="print the JSON schema and exit")
    sub = p.add_subparsers(dest="command")

    c = sub.add_parser("construct", help="emit a named construction")
    c.add_argument("family", choices=[
        "split", "near-regular", "kr", "regular-multipartite", "partite",
        "g49", "g4n", "gtn", "wt", "fig1", "fig2", "tstar", "cycle-pendants"])
    for flag in ("--n", "--t", "--r", "--m", "--a", "--b", "--k", "--c"):
        c.add_argument(flag, type=int)
    c.add_argument("--sizes", type=str,
                   help="comma-separated class sizes (wt: m1..m5)")

    q = sub.add_parser("count", help="count pattern copies in a graph")
    q.add_argument("--graph", required=True)
    q.add_argument("--pattern", required=True)

    s = sub.add_parser("check-sat", help="saturation certificate")
    s.add_argument("--graph", required=True)
    s.add_argument("--forbid", required=True, nargs="+")

    sn = sub.add_parser("satnum", help="generalized saturation numbers")
    snsub = sn.add_subparsers(dest="mode", required=True)
    ss = snsub.add_parser("star-star")
    for flag in ("--n", "--r", "--t"):
        ss.add_argument(flag, type=int, required=True)
    se = snsub.add_parser("exact")
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--forbid", required=True)
    se.add_argument("--count", required=True)
    se.add_argument("--max-degree", type=int)
    se.add_argument("--workers", type=int,
                    default=int(os.environ.get("SATGRAPH_WORKERS", "1")))
    se.add_argument("--connected-only", action="store_true")

    m = sub.add_parser("m0", help="optimal clique size for the KR family")
    for flag in ("--n", "--r", "--t"):
        m.add_argument(flag, type=int, required=True)

    tt = sub.add_parser("tie-ts", help="t values with two optimal m (r=2)")
    tt.add_argument("--max", type=int, required=True)

    b = sub.add_parser("bounds", help="closed-form bounds and thresholds")
    b.add_argument("name", choices=[
        "ehm", "cl", "partite-threshold", "partite-smooth", "best-c",
        "partite-necessary", "krfree", "krfree-at-r", "kt-threshold",
        "path-sat-threshold", "split-path-leading"])
    for flag in ("--n", "--t", "--r", "--c", "--m"):
        b.add_argument(flag, type=int)
    b.add_argument("--pattern")

    sc = sub.add_parser("scan", help="exhaustive scans")
    scsub = sc.add_subparsers(dest="what", required=True)
    st = scsub.add_parser("tstar")
    st.add_argument("--max-n", type=int, default=10)
    st.add_argument("--workers", type=int,
                    default=int(os.environ.get("SATGRAPH_WORKERS", "1")))

    ce = sub.add_parser("certify", help="oracle/formula comparison archive")
    ce.add_argument("--grid", required=True,
                    help="file of lines: <n> <forbid> <count>")
    ce.add_argument("--out", help="write the archive here instead of stdout")
    ce.add_argument("--workers", type=int,
                    default=int(os.environ.get("SATGRAPH_WORKERS", "1")))
    return p


def _construct(args) -> dict:
    fam = args.family
    parts = None
    target = None
    if fam == "split":
        g = cons.split_graph(args.n, args.t)
        target = parse_pattern(f"K{args.t}")
    elif fam == "near-regular":
        g = cons.near_regular(args.a, args.b)
    elif fam == "kr":
        g = cons.kr_graph(args.t, args.n, args.m)
        target = parse_pattern(f"S{args.t}")
    elif fam == "regular-multipartite":
        g, parts = cons.regular_multipartite(args.a, args.r, args.k)
    elif fam == "partite":
        g, parts = cons.partite_saturated(args.n, args.r, args.t, args.c)
        target = parse_pattern(f"S{args.t}")
    elif fam == "g49":
        g = cons.g49()
        target = parse_pattern("K4")
    elif fam == "g4n":
        g = cons.g4n(args.n)
        target = parse_pattern("K4")
    elif fam == "gtn":
        g = cons.gtn(args.t, args.n)
        target = parse_pattern(f"K{args.t}")
    elif fam == "wt":
        sizes = [int(x) for x in args.sizes.split(",")]
        if len(sizes) != 5:
            raise DomainError("wt needs five sizes m1,m2,m3,m4,m5")
        g = cons.w_t(args.t, *sizes)
        target = parse_pattern(f"K{args.t}")
    elif fam == "fig1":
        g = cons.fig1()
        target = parse_pattern("S5")
    elif fam == "fig2":
        g = cons.fig2()
        target = parse_pattern("S5")
    elif fam == "tstar":
        g = cons.t_star()
    else:
        g = cons.cycle_pendants(args.k)
    props: dict = {"degree_sequence": sorted(g.degrees())}
    if parts is not None:
        props["parts"] = [list(p) for p in parts]
    if target is not None:
        cert = is_saturated(g, target)
        props["target"] = str(target)
        props["saturated"] = cert.is_saturated
    return {"graph6": encode_graph6(g), "n": g.n, "edges": g.num_edges(),
            "adjacency": to_adjacency_json(g), "properties": props}


def _bounds(args) -> dict:
    name = args.name
    satisfied = None
    if name == "ehm":
        value = bnd.ehm_value(args.n, args.t)
    elif name == "cl":
        value = bnd.cl_value(args.n, args.r, args.t)
    elif name == "partite-threshold":
        value = bnd.partite_threshold(args.r, args.t, args.c)
        if args.n is not None:
            satisfied = args.n >= max(args.t + 1, value)
    elif name == "partite-smooth":
        value = bnd.partite_threshold_smooth(args.r, args.t, args.c)
    elif name == "best-c":
        value = bnd.best_c(args.r, args.t)
    elif name == "partite-necessary":
        value = bnd.partite_necessary(args.r, args.t)
        if args.n is not None:
            satisfied = Fraction(args.n) >= value
    elif name == "krfree":
        value = bnd.krfree_bound(args.r, args.t, args.m)
    elif name == "krfree-at-r":
        value = bnd.krfree_bound_at_r(args.r, args.t)
    elif name == "kt-threshold":
        value = bnd.kt_threshold(parse_pattern(args.pattern))
    elif name == "path-sat-threshold":
        value = bnd.path_sat_threshold(args.t)
        if args.n is not None:
            satisfied = args.n >= value
    else:
        try:
            value = bnd.split_path_leading(args.n, args.t, args.r)
        except SplitPathFreeError as exc:
            return {"name": name, "parameters": _params(args),
                    "value": None, "note": str(exc), "satisfied": None}
    return {"name": name, "parameters": _params(args),
            "value": value, "satisfied": satisfied}


def _params(args) -> dict:
    skip = {"command", "mode", "what", "schema", "func"}
    return {k: v for k, v in vars(args).items()
            if v is not None and k not in skip}


def _certify(args) -> tuple[dict, bool]:
    from .staropt import satnum_star_star
    entries = []
    mismatches = []
    with open(args.grid, "r", encoding="utf-8") as fh:
        lines = fh.readlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise DomainError(f"malformed grid line {lineno}: {raw.strip()!r} "
                              f"(expected: <n> <forbid> <count>)",
                              code="grid")
        try:
            n = int(fields[0])
            forbid = parse_pattern(fields[1])
            count = parse_pattern(fields[2])
        except (ValueError, DomainError) as exc:
            raise DomainError(f"malformed grid line {lineno}: {exc}",
                              code="grid")
        report = satnum_exact(n, forbid, count, workers=args.workers)
        formula = None
        source = None
        if forbid.kind == "star" and count.kind == "star":
            if n >= 2 * forbid.size - 1:
                formula = satnum_star_star(n, count.size, forbid.size)
                source = "kr-minimum"
        elif forbid.kind == "clique" and count.kind == "star" and count.size == 1:
            formula = bnd.ehm_value(n, forbid.size)
            source = "edge-minimum"
        elif forbid.kind == "clique" and count.kind == "clique":
            formula = bnd.cl_value(n, count.size, forbid.size)
            source = "clique-minimum"
        entry = {"n": n, "forbid": str(forbid), "count": str(count),
                 "oracle": report.minimum, "formula": formula,
                 "formula_source": source,
                 "witnesses": report.witnesses,
                 "graphs_examined": report.graphs_examined}
        entries.append(entry)
        if formula is not None and formula != report.minimum:
            mismatches.append(entry)
    archive = {"entries": entries, "mismatches": mismatches}
    return archive, not mismatches


def run(argv) -> int:
    parser = _parser()
    started = time.perf_counter()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if args.schema:
        print(json.dumps(SCHEMA, sort_keys=True))
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        if args.command == "construct":
            _emit("construct", _params(args), _construct(args), started)
        elif args.command == "count":
            g = _read_graph(args.graph)
            pat = parse_pattern(args.pattern)
            _emit("count", {"graph": args.graph, "pattern": args.pattern},
                  {"count": count_pattern(g, pat)}, started)
        elif args.command == "check-sat":
            g = _read_graph(args.graph)
            pats = [parse_pattern(s) for s in args.forbid]
            cert = is_family_saturated(g, pats)
            _emit("check-sat", {"graph": args.graph,
                                "forbid": [str(p) for p in pats]},
                  cert.to_json(), started)
        elif args.command == "satnum" and args.mode == "star-star":
            result = _star_star_payload(args.n, args.r, args.t)
            _emit("satnum star-star", _params(args), result, started)
        elif args.command == "satnum":
            cons_ = SearchConstraints(max_degree=args.max_degree,
                                      connected_only=args.connected_only)
            rep = satnum_exact(args.n, parse_pattern(args.forbid),
                               parse_pattern(args.count), cons_,
                               workers=args.workers)
            _emit("satnum exact", _params(args), rep.to_json(), started)
        elif args.command == "m0":
            result = _star_star_payload(args.n, args.r, args.t)
            _emit("m0", _params(args), result, started)
        elif args.command == "tie-ts":
            _emit("tie-ts", {"max": args.max},
                  {"ts": staropt.tie_ts(args.max)}, started)
        elif args.command == "bounds":
            _emit("bounds", _params(args), _bounds(args), started)
        elif args.command == "scan":
            _emit("scan tstar", _params(args),
                  tstar_scan(args.max_n, workers=args.workers), started)
        elif args.command == "certify":
            archive, ok = _certify(args)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    json.dump(archive, fh, sort_keys=True, indent=1)
                _emit("certify", _params(args),
                      {"out": args.out,
                       "entries": len(archive["entries"]),
                       "mismatches": len(archive["mismatches"])}, started)
            else:
                _emit("certify", _params(args), archive, started)
            if not ok:
                bad = archive["mismatches"][0]
                print(f"certification mismatch at (n={bad['n']}, "
                      f"forbid={bad['forbid']}, count={bad['count']})",
                      file=sys.stderr)
                return 4
        else:
            parser.print_usage(sys.stderr)
            return 2
    except DomainError as exc:
        print(json.dumps({"error": {"code": exc.code, "message": str(exc)}},
                         sort_keys=True))
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


def _star_star_payload(n: int, r: int, t: int) -> dict:
    if r >= t:
        return {"satnum": 0, "m0": None, "tie": None, "xbar": None,
                "note": "trivially zero: r >= t"}
    inst = staropt.star_star_instance(n, r, t)
    return {"satnum": inst.satnum, "m0": inst.m0, "tie": inst.tie,
            "xbar": inst.xbar}


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
