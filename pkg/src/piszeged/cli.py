"""Command-line front end.

Exit codes:
  0   success
  1   input/output failure
  2   at least one input line was not valid graph6 (other lines still processed)
  3   at least one input graph was disconnected
  4   a theorem check failed (inequality violated or equality class mismatch),
      a census disagreed with its expected value, or a survey found counterexamples
  64  usage error (bad flags, enumeration order above the cap without --allow-large)
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import Any, Callable, Iterable, Iterator, TextIO

from . import __version__
from .enumeration import (
    DEFAULT_SURVEY_CAP,
    TABLE1_EXPECTED,
    EnumerationError,
    format_findings,
    generate_graphs,
    odd_hole_free_probe,
    survey,
    table1,
    yn_census,
)
from .families import (
    SrgParams,
    complete_multipartite,
    generate_Yn,
    in_Xn,
    in_Yn,
    srg_closed_forms,
    xn_characterization,
    xn_universal_vertex,
    yn_count_formula,
)
from .graph import DisconnectedGraphError, GraphError, is_connected
from .graph6 import Graph6Error, iter_graph6_lines, parse_graph6, write_graph6
from .invariants import compute_invariants, profile
from .theorems import run_all

EXIT_OK = 0
EXIT_IO = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_FAILED = 4
EXIT_USAGE = 64

BATCH = 1024

INVARIANT_FIELDS = [
    "wiener", "pi", "vertex_pi", "szeged", "edge_szeged",
    "zagreb1", "zagreb2", "triangles", "diameter", "min_degree",
]
VERDICT_FIELDS = [
    "theorem", "relation", "applicable", "lhs", "rhs", "holds", "equality",
    "predicted_equality", "consistent", "characterization", "details",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# Per-line workers (top level so they can run in worker processes)

def _error_record(lineno: int, text: str, kind: str, message: str) -> dict[str, Any]:
    return {"line": lineno, "graph6": text, "error": {"kind": kind, "message": message}}


def _load(lineno: int, text: str) -> tuple[Any, dict[str, Any] | None]:
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        return None, _error_record(lineno, text, "parse", str(exc))
    if not is_connected(g) or g.n == 0:
        return None, _error_record(lineno, write_graph6(g), "disconnected", "graph is disconnected")
    return g, None


def compute_line(item: tuple[int, str]) -> list[dict[str, Any]]:
    lineno, text = item
    g, err = _load(lineno, text)
    if err:
        return [err]
    rec = {"line": lineno, "graph6": write_graph6(g), "n": g.n, "m": g.m}
    rec.update(compute_invariants(g).as_dict())
    return [rec]


def verify_line(item: tuple[int, str]) -> list[dict[str, Any]]:
    lineno, text = item
    g, err = _load(lineno, text)
    if err:
        return [err]
    g6 = write_graph6(g)
    return [{"line": lineno, "graph6": g6, **v.to_record()} for v in run_all(profile(g))]


def families_line(item: tuple[int, str]) -> list[dict[str, Any]]:
    lineno, text = item
    g, err = _load(lineno, text)
    if err:
        return [err]
    p = profile(g)
    return [{
        "line": lineno,
        "graph6": write_graph6(g),
        "in_xn": in_Xn(p),
        "xn_characterization": xn_characterization(g),
        "universal_vertex": xn_universal_vertex(g),
        "in_yn": in_Yn(p),
    }]


def _process_batch(args: tuple[Callable, list[tuple[int, str]]]) -> list[list[dict[str, Any]]]:
    fn, batch = args
    return [fn(item) for item in batch]


def process_stream(
    lines: Iterable[str], fn: Callable, workers: int = 1
) -> Iterator[dict[str, Any]]:
    """Apply ``fn`` to every graph6 line, preserving input order, in bounded batches."""
    items = iter_graph6_lines(lines)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while True:
            batch = list(islice(items, BATCH * max(workers, 1)))
            if not batch:
                return
            if pool is None:
                results = [fn(item) for item in batch]
            else:
                step = max(1, len(batch) // (workers * 4))
                parts = [(fn, batch[i:i + step]) for i in range(0, len(batch), step)]
                results = [r for block in pool.map(_process_batch, parts) for r in block]
            for recs in results:
                yield from recs
    finally:
        if pool is not None:
            pool.shutdown()


# ---------------------------------------------------------------------------
# Output

def _cell(v: Any) -> Any:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return "" if v is None else v


class Emitter:
    def __init__(self, out: TextIO, fmt: str, fields: list[str]):
        self.out = out
        self.fmt = fmt
        self.fields = fields
        self.writer = None

    def emit(self, rec: dict[str, Any]) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(rec, sort_keys=True) + "\n")
        elif self.fmt == "csv":
            if self.writer is None:
                self.writer = csv.writer(self.out, lineterminator="\n")
                self.writer.writerow(self.fields)
            self.writer.writerow([_cell(rec.get(f)) for f in self.fields])
        else:
            if "error" in rec:
                e = rec["error"]
                self.out.write(f"line {rec['line']}: {e['kind']} error: {e['message']}\n")
            else:
                body = "  ".join(
                    f"{f}={_cell(rec[f])}" for f in self.fields
                    if f in rec and f not in ("line", "graph6")
                )
                self.out.write(f"{rec.get('graph6', '')}  {body}\n")


def _open_input(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    return open(path, encoding="ascii", errors="replace")


def _run_stream(args, fn: Callable, fields: list[str], check: Callable | None = None) -> int:
    try:
        src = _open_input(args.input)
    except OSError as exc:
        print(f"cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_IO
    emitter = Emitter(sys.stdout, args.format, ["line", "graph6", "error"] + fields)
    parse_err = disconnected = failed = False
    try:
        with src if src is not sys.stdin else contextlib.nullcontext(src):
            for rec in process_stream(src, fn, args.workers):
                if "error" in rec:
                    if rec["error"]["kind"] == "parse":
                        parse_err = True
                    else:
                        disconnected = True
                elif check is not None and not check(rec):
                    failed = True
                emitter.emit(rec)
    except OSError as exc:
        print(f"I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO
    if parse_err:
        return EXIT_PARSE
    if disconnected:
        return EXIT_DISCONNECTED
    return EXIT_FAILED if failed else EXIT_OK


def _verdict_ok(rec: dict[str, Any]) -> bool:
    return not rec["applicable"] or bool(rec["holds"] and rec["consistent"])


# ---------------------------------------------------------------------------
# Commands

def cmd_compute(args) -> int:
    return _run_stream(args, compute_line, ["n", "m"] + INVARIANT_FIELDS)


def cmd_verify(args) -> int:
    return _run_stream(args, verify_line, VERDICT_FIELDS, check=_verdict_ok)


def _parse_shard(spec: str | None) -> tuple[int, int] | None:
    if spec is None:
        return None
    try:
        i, k = (int(x) for x in spec.split("/"))
    except ValueError:
        raise UsageError(f"--shard expects I/K, got {spec!r}") from None
    if not (k >= 1 and 0 <= i < k):
        raise UsageError(f"--shard {spec}: need 0 <= I < K")
    return i, k


def _require_n(args, lo: int, hi: int) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if not lo <= args.n <= hi:
        raise UsageError(f"--n must lie in {lo}..{hi}")
    if args.n > DEFAULT_SURVEY_CAP and not args.allow_large:
        raise UsageError(f"--n {args.n} exceeds {DEFAULT_SURVEY_CAP}; pass --allow-large")
    return args.n


def cmd_survey(args) -> int:
    n = _require_n(args, 3, 10)
    summary = survey(n, args.workers, allow_large=True, shard=_parse_shard(args.shard))
    if args.format == "human":
        d = summary.to_dict()
        print(f"order {n}: {d['total_graphs']} graphs, {d['connected_graphs']} connected")
        for t, s in d["theorems"].items():
            print(f"  {t:32s} checked={s['checked']:<7d} held={s['held']:<7d} "
                  f"equality={s['equality']:<6d} inconsistent={s['inconsistent']}")
        print(f"  counterexamples: {len(summary.counterexamples)}")
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["order", "theorem", "checked", "held", "equality", "inconsistent"])
        for t, s in summary.theorems.items():
            w.writerow([n, t, s.checked, s.held, s.equality, s.inconsistent])
    else:
        print(summary.to_json())
    print(f"elapsed {summary.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if summary.ok else EXIT_FAILED


def cmd_table1(args) -> int:
    orders = [_require_n(args, 3, 10)] if args.n is not None else list(range(3, DEFAULT_SURVEY_CAP + 1))
    rows = []
    for n in orders:
        got = table1(n, args.workers, allow_large=True)
        rows.append({"n": n, "count": got, "expected": TABLE1_EXPECTED[n],
                     "match": got == TABLE1_EXPECTED[n]})
    if args.format == "json":
        for r in rows:
            print(json.dumps(r, sort_keys=True))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "count", "expected", "match"])
        for r in rows:
            w.writerow([r["n"], r["count"], r["expected"], r["match"]])
    else:
        for r in rows:
            status = "OK" if r["match"] else "MISMATCH"
            print(f"n={r['n']}: {r['count']} (expected {r['expected']}) {status}")
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_FAILED


def cmd_families(args) -> int:
    if args.yn is not None:
        if args.yn < 1:
            raise UsageError("--yn must be positive")
        for g in generate_Yn(args.yn):
            print(write_graph6(g))
        return EXIT_OK
    if args.census is not None:
        if not 3 <= args.census <= 9:
            raise UsageError("--census must lie in 3..9")
        c = yn_census(args.census, args.workers)
        rec = {"n": c.order, "brute_force": c.brute_force, "formula": c.formula,
               "generated": c.generated, "sets_match": c.sets_match}
        if args.format == "json":
            print(json.dumps(rec, sort_keys=True))
        else:
            print("  ".join(f"{k}={v}" for k, v in rec.items()))
        return EXIT_OK if c.ok else EXIT_FAILED
    return _run_stream(
        args, families_line, ["in_xn", "xn_characterization", "universal_vertex", "in_yn"],
    )


def _ints(spec: str, name: str) -> list[int]:
    try:
        return [int(x) for x in spec.split(",")]
    except ValueError:
        raise UsageError(f"{name} expects comma-separated integers") from None


def cmd_formulas(args) -> int:
    recs = []
    if args.srg:
        vals = _ints(args.srg, "--srg")
        if len(vals) != 4:
            raise UsageError("--srg expects v,k,lambda,mu")
        try:
            params = SrgParams(*vals)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        vertex_pi, sz = srg_closed_forms(params)
        recs.append({"srg": vals, "vertex_pi": vertex_pi, "szeged": sz})
    if args.multipartite:
        parts = _ints(args.multipartite, "--multipartite")
        try:
            g = complete_multipartite(parts)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        inv = compute_invariants(g)
        recs.append({"parts": parts, "graph6": write_graph6(g), "n": g.n, "m": g.m,
                     "vertex_pi": inv.vertex_pi, "nm_minus_3t": g.n * g.m - 3 * inv.triangles,
                     "szeged": inv.szeged})
    if args.yn_count is not None:
        if args.yn_count < 1:
            raise UsageError("--yn-count must be positive")
        recs.append({"n": args.yn_count, "yn_count": yn_count_formula(args.yn_count)})
    if not recs:
        raise UsageError("formulas needs --srg, --multipartite or --yn-count")
    for rec in recs:
        if args.format == "json":
            print(json.dumps(rec, sort_keys=True))
        elif "srg" in rec:
            print(f"PIv={rec['vertex_pi']} Sz={rec['szeged']}")
        else:
            print("  ".join(f"{k}={v}" for k, v in rec.items()))
    return EXIT_OK


def cmd_generate(args) -> int:
    n = _require_n(args, 1, 10)
    connected = True if args.connected else None
    for g in generate_graphs(n, connected=connected, workers=args.workers,
                             shard=_parse_shard(args.shard)):
        sys.stdout.write(write_graph6(g) + "\n")
    return EXIT_OK


def cmd_oddhole(args) -> int:
    if not 3 <= args.max_n <= DEFAULT_SURVEY_CAP:
        raise UsageError(f"--max-n must lie in 3..{DEFAULT_SURVEY_CAP}")
    findings = odd_hole_free_probe(args.max_n)
    if args.format == "json":
        for f in findings:
            print(json.dumps(f.__dict__, sort_keys=True))
    else:
        sys.stdout.write(format_findings(findings))
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", default="-", help="graph6 file, one graph per line ('-' = stdin)")
    common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common.add_argument("--workers", type=int, default=1, help="worker processes (>= 1)")
    common.add_argument("--n", type=int, help="enumeration order")
    common.add_argument("--shard", help="I/K: only children of parents I, I+K, I+2K, ...")
    common.add_argument("--allow-large", action="store_true",
                        help=f"allow enumeration orders above {DEFAULT_SURVEY_CAP}")

    parser = _Parser(
        prog="piszeged",
        description="PI, vertex PI, Szeged and edge Szeged indices; inequality checks; "
                    "exhaustive small-graph censuses.",
        epilog="JSON field names are listed in docs/schema.json.  Exit codes: 0 ok, 1 I/O, "
               "2 parse error, 3 disconnected input, 4 check failed, 64 usage.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="all indices for each input graph")
    p.set_defaults(func=cmd_compute)
    p = sub.add_parser("verify", parents=[common], help="every applicable inequality per graph")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("survey", parents=[common], help="theorem sweep over all connected graphs of order n")
    p.set_defaults(func=cmd_survey)
    p = sub.add_parser("table1", parents=[common],
                       help="count non-bipartite graphs with PI_v = nm - 3t (n=3..8 by default)")
    p.set_defaults(func=cmd_table1)
    p = sub.add_parser("families", parents=[common], help="X_n / Y_n membership, generators, census")
    p.add_argument("--yn", type=int, help="print the Y_n members of this order as graph6")
    p.add_argument("--census", type=int, help="exhaustive Y_n census of this order")
    p.set_defaults(func=cmd_families)
    p = sub.add_parser("formulas", parents=[common], help="closed-form values")
    p.add_argument("--srg", help="v,k,lambda,mu")
    p.add_argument("--multipartite", help="part sizes, e.g. 2,2,2")
    p.add_argument("--yn-count", type=int, help="closed-form |Y_n|")
    p.set_defaults(func=cmd_formulas)
    p = sub.add_parser("generate", parents=[common], help="emit one graph6 line per isomorphism class")
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_generate)
    p = sub.add_parser("oddhole", parents=[common],
                       help="odd-hole-free graphs that are strict in PI_v <= nm - 3t")
    p.add_argument("--max-n", type=int, default=7)
    p.set_defaults(func=cmd_oddhole)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        print("piszeged: error: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, EnumerationError) as exc:
        print(f"piszeged: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DisconnectedGraphError as exc:
        print(f"piszeged: error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except BrokenPipeError:
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
