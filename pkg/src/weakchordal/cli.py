"""Command line interface.

Exit codes: 0 success, 1 negative result (graph not weakly chordal,
difftest mismatches, batch verification failures), 2 usage errors,
3 I/O or input-format failures.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from .difftest import exhaustive_difftest, random_difftest
from .formats import EdgeListError, export_dot, format_report, parse_edgelist, write_edgelist
from .graph import GraphInputError
from .pipeline import PipelineReport, generate_run
from .randgen import SEED_MAX
from .recognition import is_weakly_chordal

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

REPORT_FIELDS = list(PipelineReport.__dataclass_fields__)


class _IOFailure(Exception):
    pass


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value <= SEED_MAX:
        raise argparse.ArgumentTypeError("seed must lie in [0, 2**64)")
    return value


def _count(text: str) -> int | str:
    if text == "exhaustive":
        return text
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("count must be non-negative")
    return value


def _default_seed() -> int:
    seed = int(np.random.SeedSequence().generate_state(1, np.uint64)[0])
    print(f"seed={seed}", file=sys.stderr)
    return seed


def _write(path: str | Path | None, text: str) -> None:
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weakchordal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate one weakly chordal graph")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int)
    gen.add_argument("--seed", type=_seed)
    gen.add_argument("--out", help="output path (default stdout)")
    gen.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    gen.add_argument("--emit-stages", metavar="DIR", help="also write arbitrary/chordal/weakly_chordal stage graphs")
    gen.add_argument("--stats", metavar="PATH", help="write the run report (.json for JSON, else key=value)")
    gen.add_argument("--random-ties", action="store_true", help="break minimum-degree ties at random")
    gen.add_argument("--no-long-antiholes", action="store_true", help="skip the 7+ vertex anti-hole check")

    check = sub.add_parser("check", help="test an edge-list file for weak chordality")
    check.add_argument("path")

    diff = sub.add_parser("difftest", help="compare the deletion detectors with the brute-force oracle")
    diff.add_argument("--n", type=int, required=True)
    diff.add_argument("--count", type=_count, required=True, help="number of random graphs, or 'exhaustive'")
    diff.add_argument("--seed", type=_seed, default=0)
    diff.add_argument("--no-long-antiholes", action="store_true")
    diff.add_argument("--show", type=int, default=20, help="mismatches to print")

    batch = sub.add_parser("batch", help="run many seeds and summarise fill statistics")
    batch.add_argument("--count", type=int, required=True)
    batch.add_argument("--n", type=int, required=True)
    batch.add_argument("--m", type=int)
    batch.add_argument("--seed", type=_seed)
    batch.add_argument("--jobs", type=int, default=1)
    batch.add_argument("--out", metavar="TSV", help="per-run rows as tab-separated values")
    batch.add_argument("--plot", metavar="IMAGE", help="render fill statistics with matplotlib")
    batch.add_argument("--verify", action="store_true", help="check every output with the oracle")
    batch.add_argument("--no-long-antiholes", action="store_true")
    return parser


def _stage_files(run, directory: Path) -> None:
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise _IOFailure(f"cannot create {directory}: {exc}") from exc
    stages = [
        ("arbitrary", run.arbitrary, []),
        ("chordal", run.chordal, run.fill_queue),
        ("weakly_chordal", run.final, run.retained),
    ]
    for name, graph, highlight in stages:
        _write(directory / f"{name}.txt", write_edgelist(graph))
        _write(directory / f"{name}.dot", export_dot(graph, highlight, name=name))


def cmd_generate(args) -> int:
    seed = _default_seed() if args.seed is None else args.seed
    run = generate_run(args.n, args.m, seed, random_ties=args.random_ties, long_antiholes=not args.no_long_antiholes)
    if args.format == "dot":
        text = export_dot(run.final, run.retained)
    else:
        text = write_edgelist(run.final)
    _write(args.out, text)
    if args.emit_stages:
        _stage_files(run, Path(args.emit_stages))
    if args.stats:
        fmt = "json" if args.stats.endswith(".json") else "kv"
        _write(args.stats, format_report(run.report, fmt))
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        text = Path(args.path).read_text()
    except OSError as exc:
        raise _IOFailure(f"cannot read {args.path}: {exc}") from exc
    try:
        g = parse_edgelist(text)
    except EdgeListError as exc:
        raise _IOFailure(f"{args.path}: {exc}") from exc
    verdict = is_weakly_chordal(g)
    if verdict:
        print("weakly chordal")
        return EXIT_OK
    print(f"not weakly chordal: {verdict.location}: {' '.join(map(str, verdict.witness))}")
    return EXIT_NEGATIVE


def cmd_difftest(args) -> int:
    long_antiholes = not args.no_long_antiholes
    if args.count == "exhaustive":
        result = exhaustive_difftest(args.n, long_antiholes)
    else:
        result = random_difftest(args.n, args.count, args.seed, long_antiholes)
    print(f"n={result.n} graphs={result.graphs} probes={result.probes} mismatches={len(result.mismatches)}")
    for mm in result.mismatches[: args.show]:
        print(mm.describe())
    return EXIT_NEGATIVE if result.mismatches else EXIT_OK


def _batch_one(job):
    n, m, seed, verify, long_antiholes = job
    run = generate_run(n, m, seed, long_antiholes=long_antiholes)
    ok = bool(is_weakly_chordal(run.final)) if verify else None
    return run.report, run.final.m, ok


def summarise(reports: list[PipelineReport]) -> dict[str, float]:
    def spread(key):
        values = [getattr(r, key) for r in reports]
        return {
            f"{key}_mean": statistics.fmean(values),
            f"{key}_min": min(values),
            f"{key}_max": max(values),
        }

    out: dict[str, float] = {"runs": len(reports), "early_exits": sum(r.input_was_weakly_chordal for r in reports)}
    for key in ("fill_added", "fill_deleted", "fill_retained", "rounds"):
        out.update(spread(key))
    added = sum(r.fill_added for r in reports)
    out["deleted_fraction"] = sum(r.fill_deleted for r in reports) / added if added else 0.0
    return out


def cmd_batch(args) -> int:
    if args.count < 1:
        raise GraphInputError("count must be positive")
    base = _default_seed() if args.seed is None else args.seed
    seeds = np.random.SeedSequence(base).generate_state(args.count, np.uint64)
    jobs = [(args.n, args.m, int(s), args.verify, not args.no_long_antiholes) for s in seeds]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_batch_one, jobs, chunksize=8))
    else:
        results = [_batch_one(j) for j in jobs]

    reports = [r for r, _, _ in results]
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                writer = csv.writer(fh, delimiter="\t", lineterminator="\n")
                writer.writerow(REPORT_FIELDS + ["m_final"])
                for report, m_final, _ in results:
                    row = report.to_dict()
                    writer.writerow([row[k] for k in REPORT_FIELDS] + [m_final])
        except OSError as exc:
            raise _IOFailure(f"cannot write {args.out}: {exc}") from exc
    if args.plot:
        from .plotting import save_batch_figure

        try:
            save_batch_figure(reports, args.plot, title=f"n={args.n}, {args.count} runs")
        except OSError as exc:
            raise _IOFailure(f"cannot write {args.plot}: {exc}") from exc

    summary = summarise(reports)
    failures = sum(ok is False for _, _, ok in results)
    if args.verify:
        summary["oracle_failures"] = failures
    for key, value in summary.items():
        print(f"{key}={value:.4g}" if isinstance(value, float) else f"{key}={value}")
    return EXIT_NEGATIVE if failures else EXIT_OK


COMMANDS = {"generate": cmd_generate, "check": cmd_check, "difftest": cmd_difftest, "batch": cmd_batch}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except _IOFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except GraphInputError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
