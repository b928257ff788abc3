"""Command line front end: validate datasets, compute skylines, benchmark prefixes.

Exit codes: 0 success, 1 usage or IO error, 2 validation failure,
3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import skyline as sky
from .aggregate import AggregationSpec, combination_universe, display_pair
from .errors import GraphError, IntegrityError, ParseError
from .events import EventKind, count_direction
from .graph import Semantics, TemporalPropertyGraph
from .ingest import DatasetManifest, load_graph
from .report import RunResult, display_tuple, write_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_ORACLE = 3

DEFAULT_BENCH_CONFIGS = (
    (EventKind.STABILITY, Semantics.STRICT),
    (EventKind.STABILITY, Semantics.LOOSE),
    (EventKind.GROWTH, Semantics.LOOSE),
    (EventKind.SHRINKAGE, Semantics.LOOSE),
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; remap to the usage exit code
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    manifest: Path
    kind: EventKind
    semantics: Semantics
    edge_label: str
    agg_labels: tuple[str, ...]
    agg_props: tuple[str, ...]
    k: int | None
    individual: bool
    oracle: bool
    out: Path
    formats: tuple[str, ...]
    parallel: int

    @property
    def spec(self) -> AggregationSpec:
        return AggregationSpec.make(self.agg_labels, self.agg_props)


def _csv_list(text: str) -> tuple[str, ...]:
    items = tuple(part.strip() for part in text.split(",") if part.strip())
    if not items:
        raise argparse.ArgumentTypeError("expected a comma separated list")
    return items


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="evoskyline", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check a dataset against the graph invariants")
    p_validate.add_argument("--manifest", required=True, type=Path)

    p_sky = sub.add_parser("skyline", help="compute the unified evolution skyline")
    p_sky.add_argument("--manifest", required=True, type=Path)
    p_sky.add_argument("--event", required=True, choices=[k.value for k in EventKind])
    p_sky.add_argument("--semantics", required=True, choices=[s.value for s in Semantics])
    p_sky.add_argument("--edge-label", required=True)
    p_sky.add_argument("--agg-labels", required=True, type=_csv_list)
    p_sky.add_argument("--agg-props", required=True, type=_csv_list)
    p_sky.add_argument("--top-k", type=_positive, default=None)
    p_sky.add_argument("--individual", action="store_true", help="also write per-combination skylines")
    p_sky.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracle")
    p_sky.add_argument("--out", type=Path, default=Path("out"))
    p_sky.add_argument("--format", choices=["csv", "json"], default=None, help="restrict output to one format")
    p_sky.add_argument("--parallel", type=_positive, default=1)

    p_bench = sub.add_parser("bench", help="time skyline runs over growing horizon prefixes")
    p_bench.add_argument("--manifest", required=True, type=Path)
    p_bench.add_argument("--edge-label", required=True)
    p_bench.add_argument("--agg-labels", required=True, type=_csv_list)
    p_bench.add_argument("--agg-props", required=True, type=_csv_list)
    p_bench.add_argument(
        "--events",
        type=_csv_list,
        default=None,
        help="kind:semantics pairs, e.g. stability:strict,growth:loose (default: the four standard configs)",
    )
    p_bench.add_argument("--min-prefix", type=_positive, default=3)
    p_bench.add_argument("--out", type=Path, default=Path("out"))
    p_bench.add_argument("--parallel", type=_positive, default=1)
    return parser


def cmd_validate(args) -> int:
    try:
        manifest = DatasetManifest.load(args.manifest)
        load_graph(manifest)
    except IntegrityError as exc:
        print(json.dumps({"valid": False, "violations": [str(v) for v in exc.violations]}, indent=2))
        return EXIT_INVALID
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps({"valid": True, "violations": []}))
    return EXIT_OK


def _run_skyline(graph: TemporalPropertyGraph, cfg: RunConfig) -> RunResult:
    spec = cfg.spec
    universe = combination_universe(graph, cfg.edge_label, spec)
    candidates = list(
        sky.enumerate_candidates(graph, cfg.kind, cfg.semantics, cfg.edge_label, spec, universe)
    )
    result_sky, dods = sky.unified_skyline(
        graph, cfg.kind, cfg.semantics, cfg.edge_label, spec,
        parallel=cfg.parallel, universe=universe,
    )
    individuals = sky.all_individual_skylines(
        graph, cfg.kind, cfg.semantics, cfg.edge_label, spec,
        universe=universe, candidates=candidates,
    )
    return RunResult(
        kind=cfg.kind,
        semantics=cfg.semantics,
        edge_label=cfg.edge_label,
        spec=spec,
        universe=universe,
        time_labels=graph.time_labels,
        candidates=len(candidates),
        skyline=result_sky,
        dods=dods,
        symmetric=cfg.edge_label in graph.symmetric_labels,
        individuals=individuals,
        k=cfg.k,
        metadata={"manifest": str(cfg.manifest)},
    )


def cmd_skyline(args) -> int:
    cfg = RunConfig(
        manifest=args.manifest,
        kind=EventKind(args.event),
        semantics=Semantics(args.semantics),
        edge_label=args.edge_label,
        agg_labels=args.agg_labels,
        agg_props=args.agg_props,
        k=args.top_k,
        individual=args.individual,
        oracle=args.oracle,
        out=args.out,
        formats=(args.format,) if args.format else ("csv", "json"),
        parallel=args.parallel,
    )
    try:
        graph = load_graph(cfg.manifest)
    except IntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    result = _run_skyline(graph, cfg)
    if not cfg.individual:
        full = result.individuals
        # sizes still go to the console; per-combination files need the flag
        sizes = {p: len(full[p]) for p in result.universe}
        result.individuals = None
    else:
        sizes = {p: len(result.individuals[p]) for p in result.universe}

    written = write_report(result, cfg.out, cfg.formats)

    direction = count_direction(cfg.kind, cfg.semantics)
    print(
        f"{cfg.kind.value} ({cfg.semantics.value}, {direction.value} counts) "
        f"on edge label {cfg.edge_label!r}: "
        f"{result.candidates} candidates, unified skyline size {len(result.skyline)}"
    )
    print("skyline sizes per combination:")
    for pair in result.universe:
        print(f"  {display_pair(pair, result.symmetric)}: {sizes[pair]}")
    print(f"  *: {len(result.skyline)}")
    if cfg.k is not None:
        print(f"top-{cfg.k} by domination degree:")
        for t, dod in sky.top_k(result.skyline, result.dods, cfg.k):
            print(f"  {display_tuple(t, graph.time_labels)} dod {dod}")
    for path in written:
        print(f"wrote {path}")

    if cfg.oracle:
        oracle_sky, oracle_dods = sky.brute_force_skyline(
            graph, cfg.kind, cfg.semantics, cfg.edge_label, cfg.spec, universe=result.universe
        )
        ours = result.skyline.members()
        theirs = oracle_sky.members()
        mismatched = ours != theirs or any(
            result.dods.get(t) != oracle_dods.get(t) for t in ours
        )
        if mismatched:
            print("oracle mismatch:", file=sys.stderr)
            for t in sorted(ours - theirs, key=lambda x: (x.reference, x.length)):
                print(f"  only incremental: {display_tuple(t, graph.time_labels)}", file=sys.stderr)
            for t in sorted(theirs - ours, key=lambda x: (x.reference, x.length)):
                print(f"  only oracle: {display_tuple(t, graph.time_labels)}", file=sys.stderr)
            for t in sorted(ours & theirs, key=lambda x: (x.reference, x.length)):
                if result.dods.get(t) != oracle_dods.get(t):
                    print(
                        f"  dod differs for {display_tuple(t, graph.time_labels)}: "
                        f"{result.dods.get(t)} vs {oracle_dods.get(t)}",
                        file=sys.stderr,
                    )
            return EXIT_ORACLE
        print("oracle check passed")
    return EXIT_OK


def _parse_events(items) -> list[tuple[EventKind, Semantics]]:
    configs = []
    for item in items:
        try:
            kind_text, sem_text = item.split(":")
            configs.append((EventKind(kind_text), Semantics(sem_text)))
        except ValueError:
            raise UsageError(f"bad event config {item!r}, expected kind:semantics") from None
    return configs


def cmd_bench(args) -> int:
    try:
        graph = load_graph(args.manifest)
    except IntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if graph.horizon_length < 3:
        raise UsageError("bench needs a horizon of at least 3 instants")
    configs = _parse_events(args.events) if args.events else list(DEFAULT_BENCH_CONFIGS)
    spec = AggregationSpec.make(args.agg_labels, args.agg_props)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    totals: dict[Semantics, float] = {}
    for prefix in range(max(args.min_prefix, 3), graph.horizon_length + 1):
        sub = graph.restrict(prefix)
        universe = combination_universe(sub, args.edge_label, spec)
        for kind, semantics in configs:
            start = time.perf_counter()
            result_sky, _ = sky.unified_skyline(
                sub, kind, semantics, args.edge_label, spec,
                parallel=args.parallel, universe=universe,
            )
            elapsed = time.perf_counter() - start
            totals[semantics] = totals.get(semantics, 0.0) + elapsed
            rows.append(
                {
                    "prefix_length": prefix,
                    "event": kind.value,
                    "semantics": semantics.value,
                    "candidates": prefix * (prefix - 1) // 2,
                    "skyline_size": len(result_sky),
                    "seconds": f"{elapsed:.4f}",
                }
            )
            print(
                f"prefix {prefix:>3} {kind.value:<9} {semantics.value:<6} "
                f"skyline {len(result_sky):>5} in {elapsed:.3f}s"
            )
    path = out / "timing.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["prefix_length", "event", "semantics", "candidates", "skyline_size", "seconds"]
        )
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {path}")
    for semantics, total in sorted(totals.items(), key=lambda kv: kv[0].value):
        print(f"total {semantics.value}: {total:.3f}s")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "validate":
            return cmd_validate(args)
        if args.command == "skyline":
            return cmd_skyline(args)
        return cmd_bench(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
