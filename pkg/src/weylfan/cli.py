"""Command line front end.

Four subcommands: ``count`` prints face/flat count rows by a chosen method,
``enumerate`` streams the objects themselves as JSON lines or text,
``graph`` emits the chamber adjacency graph, and ``verify`` runs the
cross-checks (table consistency plus errata, the geometric oracle, or the
degenerate weight-system certificates).

Every value printed to stdout is exact and deterministic; anything that
depends on the clock goes to stderr.  Exit codes: 0 success, 2 usage or
refused request, 3 a cross-check disagreed, 4 output could not be written.

Configuration precedence is flag, then ``WEYLFAN_*`` environment variable,
then default (threads 1, cell-oracle cap 4, flat-oracle cap 6).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import counting as ct
from . import incidence as inc
from .chambers import all_chambers, extreme_rays
from .oracle import (
    CapExceeded,
    check_weights_proportional_to_roots,
    chamber_cell_counts,
    enumerate_cells,
    enumerate_flats_geometric,
    simplex_counts,
    weight_system,
)
from .oracle import weightsystems as wsys
from .poset import INF, enumerate_chains, enumerate_ensembles

ENUMERATION_BOUND = 10  # largest rank where count --method enumerate walks objects
GRAPH_BOUND = 12
RECORD_LIMIT = 100000

_PROVENANCE_BY_METHOD = {
    "recurrence": "recurrence",
    "series": "rational-expansion",
    "closed-form": "closed-form",
    "enumerate": "enumeration",
    "oracle": "oracle",
    "all": "recurrence",
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    threads: int
    cap_cells: int
    cap_flats: int


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    threads = getattr(args, "threads", None)
    if threads is None:
        threads = _env_int("WEYLFAN_THREADS", 1)
    cap_cells = getattr(args, "oracle_cap_cells", None)
    if cap_cells is None:
        cap_cells = _env_int("WEYLFAN_ORACLE_CAP_CELLS", 4)
    cap_flats = getattr(args, "oracle_cap_flats", None)
    if cap_flats is None:
        cap_flats = _env_int("WEYLFAN_ORACLE_CAP_FLATS", 6)
    if threads < 1:
        raise UsageError("threads must be at least 1")
    return RunConfig(threads=threads, cap_cells=cap_cells, cap_flats=cap_flats)


def _emit(text: str, out: Optional[str]) -> int:
    if out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {out}: {exc}", file=sys.stderr)
        return 4
    return 0


def _jsonline(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# --- count -------------------------------------------------------------------


def _count_row(table: str, n: int, method: str, cfg: RunConfig) -> list[int]:
    """One table row by one method; raises UsageError when the method does
    not apply at this rank (or at all)."""
    if method == "recurrence":
        fn = ct.g_recurrence if table == "faces" else ct.h_recurrence
        return [fn(n, k) for k in range(n + 1)]
    if method == "series":
        series = ct.g_series(n) if table == "faces" else ct.h_series(n)
        return [series.coeff(n, k) for k in range(n + 1)]
    if method == "closed-form":
        if table == "flats":
            raise UsageError("no closed form is implemented for the flat table")
        return [ct.g_closed_form(n, k) for k in range(n + 1)]
    if method == "enumerate":
        if n > ENUMERATION_BOUND:
            raise UsageError(
                f"object enumeration is limited to n <= {ENUMERATION_BOUND}"
            )
        if table == "faces":
            return [sum(1 for _ in enumerate_chains(n, k)) for k in range(n + 1)]
        return [sum(1 for _ in enumerate_ensembles(n, k)) for k in range(n + 1)]
    assert method == "oracle"
    try:
        if table == "faces":
            return enumerate_cells(n, cap=cfg.cap_cells, threads=cfg.threads).counts
        return enumerate_flats_geometric(n, cap=cfg.cap_flats).counts
    except CapExceeded as exc:
        raise UsageError(str(exc)) from None


def cmd_count(args: argparse.Namespace, cfg: RunConfig) -> int:
    table, n = args.table, args.n
    if n < 0:
        print("n must be nonnegative", file=sys.stderr)
        return 2
    if args.k is not None and not 0 <= args.k <= n:
        print(f"k must be between 0 and {n}", file=sys.stderr)
        return 2

    if args.method == "all":
        methods = ["recurrence", "series"]
        if table == "faces":
            methods.append("closed-form")
        if n <= ENUMERATION_BOUND:
            methods.append("enumerate")
        cap = cfg.cap_cells if table == "faces" else cfg.cap_flats
        if n <= cap:
            methods.append("oracle")
        else:
            print(f"skipped: oracle (cap {cap})", file=sys.stderr)
        rows = {m: _count_row(table, n, m, cfg) for m in methods}
        reference = rows["recurrence"]
        for m, row in rows.items():
            if row != reference:
                print(
                    f"method disagreement on {table} n={n}: "
                    f"recurrence gives {reference}, {m} gives {row}",
                    file=sys.stderr,
                )
                return 3
        print(f"cross-checked: {', '.join(methods)}", file=sys.stderr)
        row = reference
    else:
        try:
            row = _count_row(table, n, args.method, cfg)
        except UsageError as exc:
            print(str(exc), file=sys.stderr)
            return 2

    provenance = _PROVENANCE_BY_METHOD[args.method]
    if args.k is None:
        entries = tuple((n, k, v, provenance) for k, v in enumerate(row))
    else:
        entries = ((n, args.k, row[args.k], provenance),)
    result = ct.CountTable(table, entries)

    if args.format == "text":
        text = " ".join(str(v) for (_, _, v, _) in entries) + "\n"
    elif args.format == "json":
        text = result.to_json() + "\n"
    else:
        text = result.to_csv()
    return _emit(text, args.out)


# --- enumerate ---------------------------------------------------------------


def _point_pair(p) -> list[int]:
    return [p.a, p.b]


def _interval_json(iv) -> list:
    hi = None if iv.hi is INF else _point_pair(iv.hi)
    return [_point_pair(iv.lo), hi]


def _interval_text(iv) -> str:
    hi = "inf" if iv.hi is INF else f"({iv.hi.a},{iv.hi.b})"
    return f"({iv.lo.a},{iv.lo.b})..{hi}"


def _chamber_records(n):
    for i, c in enumerate(all_chambers(n)):
        yield {
            "index": i,
            "signs": c.char_string(),
            "subset": sorted(c.subset),
            "rays": [list(r) for r in extreme_rays(c)],
        }


def _face_records(n, dims):
    for k in dims:
        for chain in enumerate_chains(n, k):
            face = inc.face_from_chain(n, chain)
            yield {
                "dim": k,
                "chain": [_point_pair(p) for p in chain],
                "rays": [list(r) for r in face.rays()],
            }


def _flat_records(n, dims):
    for k in dims:
        for flat in inc.flats_of(n, k):
            yield {
                "dim": k,
                "intervals": [_interval_json(iv) for iv in flat.ensemble.intervals],
                "points": [_point_pair(p) for p in flat.rays()],
                "hyperplanes": [list(idx) for idx in flat.hyperplanes],
            }


def _record_text(kind: str, rec: dict) -> str:
    if kind == "chambers":
        subset = ",".join(str(i) for i in rec["subset"]) or "-"
        return f"{rec['index']}\t{rec['signs']}\t{subset}"
    if kind == "faces":
        chain = " ".join(f"({a},{b})" for a, b in rec["chain"]) or "-"
        return f"{rec['dim']}\t{chain}"
    parts = []
    for lo, hi in rec["intervals"]:
        hi_text = "inf" if hi is None else f"({hi[0]},{hi[1]})"
        parts.append(f"({lo[0]},{lo[1]})..{hi_text}")
    return f"{rec['dim']}\t" + (" ".join(parts) or "-")


def cmd_enumerate(args: argparse.Namespace, cfg: RunConfig) -> int:
    kind, n = args.kind, args.n
    if n < 1:
        print("n must be at least 1", file=sys.stderr)
        return 2
    if kind == "chambers":
        if args.k is not None:
            print("chambers have no dimension filter; drop -k", file=sys.stderr)
            return 2
        estimate = 2**n
        records = _chamber_records(n)
    else:
        if args.k is not None and not 0 <= args.k <= n:
            print(f"k must be between 0 and {n}", file=sys.stderr)
            return 2
        dims = range(n + 1) if args.k is None else [args.k]
        count_fn = ct.g_recurrence if kind == "faces" else ct.h_recurrence
        estimate = sum(count_fn(n, k) for k in dims)
        records = _face_records(n, dims) if kind == "faces" else _flat_records(n, dims)

    if estimate > args.limit:
        print(
            f"refusing to enumerate {estimate} records (limit {args.limit}); "
            f"raise --limit to proceed",
            file=sys.stderr,
        )
        return 2

    if args.format == "json":
        lines = (_jsonline(rec) for rec in records)
    else:
        lines = (_record_text(kind, rec) for rec in records)
    return _emit("".join(line + "\n" for line in lines), args.out)


# --- graph -------------------------------------------------------------------


def cmd_graph(args: argparse.Namespace, cfg: RunConfig) -> int:
    n = args.n
    if n < 1:
        print("n must be at least 1", file=sys.stderr)
        return 2
    if n > GRAPH_BOUND:
        print(
            f"the adjacency graph has 2^{n} nodes; supported up to n = {GRAPH_BOUND}",
            file=sys.stderr,
        )
        return 2
    if args.format == "dot":
        text = inc.adjacency_dot(n, threads=cfg.threads)
    else:
        chambers, edges = inc.chamber_adjacency_graph(n, threads=cfg.threads)
        payload = {
            "nodes": [c.char_string() for c in chambers],
            "edges": [[a, b] for a, b in edges],
        }
        text = _jsonline(payload) + "\n"
    return _emit(text, args.out)


# --- verify ------------------------------------------------------------------


def _verify_tables() -> int:
    """Recompute both tables along every cheap path and report the bundled
    errata entries; any unexplained disagreement is an error."""
    top = 10
    lines = []
    for n in range(top + 1):
        rows = {
            "recurrence": [ct.g_recurrence(n, k) for k in range(n + 1)],
            "linear recurrence": list(ct._g_linear_row(n)),
            "series": [ct.g_series(top).coeff(n, k) for k in range(n + 1)],
            "closed form": [ct.g_closed_form(n, k) for k in range(n + 1)],
        }
        if len({tuple(r) for r in rows.values()}) != 1:
            print(f"faces n={n}: computing paths disagree: {rows}", file=sys.stderr)
            return 3
    lines.append(
        f"faces n<=%d: 4 computing paths agree "
        f"(recurrence, linear recurrence, series, closed form)" % top
    )
    for n in range(top + 1):
        rows = {
            "mutual recursion": [ct.h_recurrence(n, k) for k in range(n + 1)],
            "linear recurrence": list(ct._h_linear_row(n)),
            "series": [ct.h_series(top).coeff(n, k) for k in range(n + 1)],
        }
        if len({tuple(r) for r in rows.values()}) != 1:
            print(f"flats n={n}: computing paths disagree: {rows}", file=sys.stderr)
            return 3
    lines.append(
        f"flats n<=%d: 3 computing paths agree "
        f"(mutual recursion, linear recurrence, series)" % top
    )

    for entry in ct.errata_entries():
        fn = ct.g_recurrence if entry["table"] == "faces" else ct.h_recurrence
        computed = fn(entry["n"], entry["k"])
        if computed != entry["adopted"]:
            print(
                f"errata entry {entry['id']} adopts {entry['adopted']} "
                f"but the package computes {computed}",
                file=sys.stderr,
            )
            return 3
        deviant = ", ".join(
            f"{reading}={value}"
            for reading, value in sorted(entry["printed"].items())
            if value != entry["adopted"]
        )
        lines.append(
            f"{entry['status']} {entry['table']}({entry['n']},{entry['k']}): "
            f"printed {deviant}; adopted {entry['adopted']}"
        )
    lines.append("ok")
    sys.stdout.write("".join(line + "\n" for line in lines))
    return 0


def _verify_oracle(n: int, cfg: RunConfig) -> int:
    started = time.monotonic()
    try:
        cells = enumerate_cells(n, cap=cfg.cap_cells, threads=cfg.threads)
    except CapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return 2
    cells_done = time.monotonic()
    try:
        flats = enumerate_flats_geometric(n, cap=cfg.cap_flats)
    except CapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return 2
    flats_done = time.monotonic()

    expected_cells = [ct.g_recurrence(n, k) for k in range(n + 1)]
    expected_flats = [ct.h_recurrence(n, k) for k in range(n + 1)]
    report = {
        "n": n,
        "cells": {
            "counts": cells.counts,
            "expected": expected_cells,
            "match": cells.counts == expected_cells,
            "stats": cells.stats,
        },
        "flats": {
            "counts": flats.counts,
            "expected": expected_flats,
            "match": flats.counts == expected_flats,
            "stats": flats.stats,
        },
    }
    report["match"] = report["cells"]["match"] and report["flats"]["match"]
    sys.stdout.write(_jsonline(report) + "\n")
    print(
        f"elapsed: cells {cells_done - started:.2f}s "
        f"flats {flats_done - cells_done:.2f}s",
        file=sys.stderr,
    )
    return 0 if report["match"] else 3


def _verify_degenerate(cfg: RunConfig) -> int:
    failures = 0
    for tag in (wsys.TAG_SO_ODD_V, wsys.TAG_SP_V, wsys.TAG_SP_LAMBDA, wsys.TAG_SP_BOTH):
        report = check_weights_proportional_to_roots(weight_system(tag, 2))
        status = "proportional" if report.ok else "NOT proportional"
        failures += 0 if report.ok else 1
        print(
            f"{tag} n=2: {status}, certificates={len(report.certificates)}, "
            f"zero-weights={report.zero_weights}"
        )
    for tag in (wsys.TAG_F4, wsys.TAG_G2):
        report = check_weights_proportional_to_roots(weight_system(tag))
        status = "proportional" if report.ok else "NOT proportional"
        failures += 0 if report.ok else 1
        print(
            f"{tag}: {status}, certificates={len(report.certificates)}, "
            f"zero-weights={report.zero_weights}"
        )
    gl = check_weights_proportional_to_roots(weight_system(wsys.TAG_GL, 2))
    if gl.ok:
        print(f"{wsys.TAG_GL} n=2: proportional, which should not happen")
        failures += 1
    else:
        print(
            f"{wsys.TAG_GL} n=2: not proportional "
            f"({len(gl.failures)} weights off the walls), as intended"
        )

    simplex_row = [simplex_counts(2, k) for k in range(3)]
    print(f"simplex row n=2: {simplex_row}")
    for tag, n in ((wsys.TAG_SO_ODD_V, 2), (wsys.TAG_SP_BOTH, 2), (wsys.TAG_G2, None)):
        counts = chamber_cell_counts(tag, n, threads=cfg.threads)
        verdict = "matches" if counts == simplex_row else "MISMATCH"
        failures += 0 if counts == simplex_row else 1
        label = tag if n is None else f"{tag} n={n}"
        print(f"{label} chamber cells: {counts} ({verdict})")
    print("ok" if failures == 0 else f"{failures} check(s) failed")
    return 0 if failures == 0 else 3


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.oracle:
        if args.n is None:
            print("verify --oracle needs -n", file=sys.stderr)
            return 2
        if args.n < 1:
            print("n must be at least 1", file=sys.stderr)
            return 2
        return _verify_oracle(args.n, cfg)
    if args.non_simply_laced:
        return _verify_degenerate(cfg)
    return _verify_tables()


# --- wiring ------------------------------------------------------------------


def _add_resource_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--threads", type=int, default=None)
    sub.add_argument("--oracle-cap-cells", type=int, default=None)
    sub.add_argument("--oracle-cap-flats", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylfan",
        description="count, enumerate and cross-check the strata of the "
        "restricted weight arrangement",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", help="print a count row")
    table = count.add_mutually_exclusive_group(required=True)
    table.add_argument("--faces", dest="table", action="store_const", const="faces")
    table.add_argument("--flats", dest="table", action="store_const", const="flats")
    count.add_argument("-n", type=int, required=True)
    count.add_argument("-k", type=int, default=None)
    count.add_argument(
        "--method",
        choices=["recurrence", "series", "closed-form", "enumerate", "oracle", "all"],
        default="recurrence",
    )
    count.add_argument("--format", choices=["text", "json", "csv"], default="text")
    count.add_argument("--out", default=None)
    _add_resource_flags(count)
    count.set_defaults(func=cmd_count)

    enum = commands.add_parser("enumerate", help="stream objects, one per line")
    enum.add_argument("kind", choices=["chambers", "faces", "flats"])
    enum.add_argument("-n", type=int, required=True)
    enum.add_argument("-k", type=int, default=None)
    enum.add_argument("--format", choices=["json", "text"], default="json")
    enum.add_argument("--limit", type=int, default=RECORD_LIMIT)
    enum.add_argument("--out", default=None)
    enum.set_defaults(func=cmd_enumerate)

    graph = commands.add_parser("graph", help="chamber adjacency graph")
    graph.add_argument("-n", type=int, required=True)
    graph.add_argument("--format", choices=["dot", "json"], default="dot")
    graph.add_argument("--out", default=None)
    _add_resource_flags(graph)
    graph.set_defaults(func=cmd_graph)

    verify = commands.add_parser("verify", help="run cross-checks")
    verify.add_argument("--oracle", action="store_true")
    verify.add_argument("--non-simply-laced", action="store_true")
    verify.add_argument("-n", type=int, default=None)
    _add_resource_flags(verify)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        cfg = _resolve_config(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    return args.func(args, cfg)


if __name__ == "__main__":
    sys.exit(main())
