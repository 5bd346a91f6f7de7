"""Command-line interface.

Exit codes: 0 success (skipped items allowed unless --strict), 1 operational
error, 2 soundness violation (an exact value beat a bound that applied).
Outputs are deterministic for a fixed config: sorted JSON keys, stable
tie-breaking everywhere, timestamps only on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from . import bounds as bnd
from . import coloring as col
from . import metrics as met
from . import spectral as spec
from .graphs import (
    GenerationError,
    Graph,
    Graph6Error,
    encode_graph6,
    graph_from_spec,
    parse_graph6,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SOUNDNESS = 2


def _default_cap() -> int:
    env = os.environ.get("DISTCHROMA_CAP_N")
    return int(env) if env else col.DEFAULT_EXACT_CAP


def _header(args: argparse.Namespace) -> dict:
    config = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    return {"tool": "distchroma", "version": __version__, "config": config}


def _payload(args: argparse.Namespace) -> dict:
    return {"header": _header(args)}


def _emit(payload: dict, output: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_input(spec_text: str) -> Graph:
    return graph_from_spec(spec_text)


def cmd_invariants(args) -> int:
    g = _load_input(args.input)
    payload = _payload(args)
    payload["graph6"] = encode_graph6(g)
    payload["invariants"] = met.invariants(g).to_json_dict()
    _emit(payload, args.output)
    return EXIT_OK


def cmd_power(args) -> int:
    g = _load_input(args.input)
    pg = met.power_graph(g, args.gamma)
    payload = _payload(args)
    payload["graph6"] = encode_graph6(g)
    payload["power_graph6"] = encode_graph6(pg.graph)
    payload["power_degrees"] = pg.graph.degrees()
    _emit(payload, args.output)
    return EXIT_OK


def cmd_color(args) -> int:
    g = _load_input(args.input)
    payload = _payload(args)
    payload["graph6"] = encode_graph6(g)
    if args.exact:
        chi, witness = col.distance_chromatic_number(
            g, args.gamma, cap=args.cap, time_budget=args.timeout)
        payload["chi"] = chi
        payload["witness"] = witness.to_json_dict()
        print(f"chi_{args.gamma} = {chi}", file=sys.stderr)
    elif args.palette is not None:
        pg = met.power_graph(g, args.gamma)
        pc = col.greedy_coloring(pg, list(range(g.n)), args.palette)
        payload["palette"] = args.palette
        payload["uncolored"] = pc.uncolored_vertices()
        payload["assignment"] = pc.assignment
    else:
        outcome = col.save_color_strategy(g, args.gamma, cap=args.cap)
        payload["strategy"] = outcome.to_json_dict()
    _emit(payload, args.output)
    return EXIT_OK


def cmd_spectral(args) -> int:
    g = _load_input(args.input)
    payload = _payload(args)
    payload["graph6"] = encode_graph6(g)
    payload["spectral"] = spec.spectral_radius(g, args.tolerance).to_json_dict()
    if args.gamma >= 2:
        payload["matrix_inequalities"] = spec.power_matrix_inequalities(
            g, args.gamma).to_json_dict()
        payload["power_bounds"] = spec.spectral_power_bounds(
            g, args.gamma).to_json_dict()
    _emit(payload, args.output)
    return EXIT_OK


CSV_COLUMNS = ("id", "n", "delta", "gamma", "M", "best_bound", "exact_chi",
               "equality_class")


def _bounds_row(report: bnd.BoundReport, n: int) -> dict:
    return {
        "id": report.graph6,
        "n": n,
        "delta": report.delta,
        "gamma": report.gamma,
        "M": report.m_value,
        "best_bound": report.best_bound,
        "exact_chi": report.exact_chi,
        "equality_class": report.equality_class,
    }


def _corpus_lines(path: str) -> list[str] | None:
    """Graph6 lines when the input is a multi-graph corpus file, else None."""
    if not os.path.exists(path):
        return None
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if len(lines) < 2:
        return None
    try:
        parse_graph6(lines[0])
    except Graph6Error:
        return None  # multi-line edge list, not a corpus
    return lines


def _eval_one(line: str, gamma: int, cap: int) -> dict:
    g = parse_graph6(line)
    try:
        report = bnd.evaluate_bounds(g, gamma, exact_cap=cap)
    except ValueError:
        # disconnected or max degree < 3: out of scope, not an error
        return {
            "id": line, "n": g.n, "delta": g.max_degree(), "gamma": gamma,
            "M": None, "best_bound": None, "exact_chi": None,
            "equality_class": "out-of-scope",
            "report": {"graph6": line, "status": "out-of-scope"},
        }
    row = _bounds_row(report, g.n)
    row["report"] = report.to_json_dict()
    return row


def cmd_bounds(args) -> int:
    corpus = _corpus_lines(args.input)
    if corpus is None:
        g = _load_input(args.input)
        report = bnd.evaluate_bounds(g, args.gamma, exact_cap=args.cap,
                                     time_budget=args.timeout)
        if args.format == "csv":
            lines = [",".join(CSV_COLUMNS),
                     _csv_line(_bounds_row(report, g.n))]
            text = f"# distchroma {__version__}\n" + "\n".join(lines) + "\n"
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                print(text, end="")
        else:
            payload = _payload(args)
            payload["report"] = report.to_json_dict()
            _emit(payload, args.output)
        return EXIT_OK

    if args.jobs > 1:
        import multiprocessing as mp

        with mp.Pool(args.jobs) as pool:
            rows = pool.starmap(
                _eval_one, ((ln, args.gamma, args.cap) for ln in corpus),
                chunksize=64)
    else:
        rows = [_eval_one(ln, args.gamma, args.cap) for ln in corpus]

    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        if args.format == "csv":
            out.write(f"# distchroma {__version__} gamma={args.gamma}\n")
            out.write(",".join(CSV_COLUMNS) + "\n")
            for row in rows:
                out.write(_csv_line(row) + "\n")
        else:
            out.write(json.dumps({"header": _header(args)}, sort_keys=True) + "\n")
            for row in rows:
                out.write(json.dumps(row["report"], sort_keys=True) + "\n")
    finally:
        if args.output:
            out.close()
    return EXIT_OK


def _csv_line(row: dict) -> str:
    return ",".join("" if row[c] is None else str(row[c]) for c in CSV_COLUMNS)


def cmd_formulas(args) -> int:
    payload = _payload(args)
    if args.path is not None:
        value = col.path_distance_chromatic(args.path, args.gamma)
        payload["family"] = "path"
        payload["n"] = args.path
    elif args.cycle is not None:
        value = col.cycle_distance_chromatic(args.cycle, args.gamma)
        payload["family"] = "cycle"
        payload["n"] = args.cycle
    else:
        raise GenerationError("formulas needs --path N or --cycle N")
    payload["gamma"] = args.gamma
    payload["chi"] = value
    _emit(payload, args.output)
    print(value)
    return EXIT_OK


def cmd_scan(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    start = 0
    out_fh = None
    if args.output:
        if args.resume and os.path.exists(args.output):
            with open(args.output, "r", encoding="utf-8") as existing:
                done = sum(1 for ln in existing if ln.strip()) - 1  # header line
            start = max(0, done)
        out_fh = open(args.output, "a" if start else "w", encoding="utf-8")

    def write(obj: dict) -> None:
        text = json.dumps(obj, sort_keys=True)
        if out_fh:
            out_fh.write(text + "\n")
        else:
            print(text)

    skipped = 0
    try:
        if start == 0:
            write({"header": _header(args)})
        todo = lines[start:]
        if args.jobs > 1 and len(todo) > 1:
            import multiprocessing as mp

            with mp.Pool(args.jobs) as pool:
                records = pool.starmap(
                    bnd.scan_one, ((ln, args.gamma, args.cap) for ln in todo),
                    chunksize=64)
        else:
            records = [bnd.scan_one(ln, args.gamma, args.cap) for ln in todo]
        for rec in records:
            write(rec)
        report = _fold_scan(records, args.gamma)
        skipped = report.skipped
        write({"summary": report.to_json_dict()})
    except KeyboardInterrupt:
        if out_fh:
            out_fh.flush()
        print("interrupted; partial results flushed", file=sys.stderr)
        return 130
    finally:
        if out_fh:
            out_fh.close()
    if report.chi_equals_m or report.power_complete_m:
        print("counterexample candidate found", file=sys.stderr)
        return EXIT_SOUNDNESS
    if skipped and args.strict:
        return EXIT_ERROR
    return EXIT_OK


def _fold_scan(records: list[dict], gamma: int) -> bnd.ScanReport:
    report = bnd.ScanReport(gamma=gamma)
    for rec in records:
        if rec["status"] == "out-of-scope":
            report.out_of_scope += 1
        elif rec["status"] == "skipped":
            report.skipped += 1
        else:
            report.scanned += 1
            report.moore_count += bool(rec["is_moore"])
            report.girth_2gamma_count += bool(rec["girth_2gamma"])
            chi = rec["chi"]
            if not rec["is_moore"] and chi is not None and chi >= rec["m_value"]:
                report.chi_equals_m.append(bnd.ScanCandidate(
                    "chi-equals-m", rec["graph6"], chi, rec["m_value"],
                    met.invariants(parse_graph6(rec["graph6"])).to_json_dict()))
            if rec["power_complete_m"]:
                report.power_complete_m.append(bnd.ScanCandidate(
                    "power-complete-m", rec["graph6"], chi, rec["m_value"],
                    met.invariants(parse_graph6(rec["graph6"])).to_json_dict()))
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distchroma",
        description="distance chromatic numbers, bounds, and corpus scans")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, gamma_default=2):
        p.add_argument("--input", required=True,
                       help="file path or graph spec like petersen, cycle:7, "
                            "random-regular:n=20,d=3,seed=42")
        p.add_argument("--gamma", type=int, default=gamma_default)
        p.add_argument("--output", default=None)
        p.add_argument("--cap", type=int, default=_default_cap())
        p.add_argument("--timeout", type=float, default=None)

    p = sub.add_parser("invariants", help="structural invariants as JSON")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("power", help="gamma-th power of the graph")
    common(p)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("color", help="exact or constructive distance coloring")
    common(p)
    p.add_argument("--exact", action="store_true",
                   help="run the exact solver (default: save-a-color strategy)")
    p.add_argument("--palette", type=int, default=None,
                   help="greedy-color the power graph with this many colors")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("spectral", help="spectral radius and matrix checks")
    common(p)
    p.add_argument("--tolerance", type=float, default=1e-10)
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("bounds", help="evaluate every applicable bound")
    common(p)
    p.add_argument("--format", choices=("json", "jsonl", "csv"), default="json",
                   help="corpus inputs emit one report per line (jsonl) or a "
                        "csv projection")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("formulas", help="closed forms for paths and cycles")
    p.add_argument("--path", type=int, default=None)
    p.add_argument("--cycle", type=int, default=None)
    p.add_argument("--gamma", type=int, default=2)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("scan", help="conjecture scan over a graph6 corpus")
    p.add_argument("--input", required=True, help="graph6 file, one per line")
    p.add_argument("--gamma", type=int, default=2)
    p.add_argument("--output", default=None, help="JSON-lines report path")
    p.add_argument("--cap", type=int, default=_default_cap())
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--strict", action="store_true",
                   help="exit nonzero when any graph was skipped")
    p.add_argument("--resume", action="store_true",
                   help="continue an interrupted scan by line offset")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except bnd.SoundnessViolation as err:
        print(f"SOUNDNESS VIOLATION: {err}", file=sys.stderr)
        print(json.dumps(err.report.to_json_dict(), sort_keys=True),
              file=sys.stderr)
        return EXIT_SOUNDNESS
    except (Graph6Error, GenerationError, col.SolverBudgetError,
            spec.SpectralConvergenceError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
