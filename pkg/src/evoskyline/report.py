"""Report files for a skyline run: result tables, size summaries, top-k, plot data.

Rows are rendered in time-label space. The human-readable column uses the
``([reference], [window start, window end], total)`` form, where the total
is the sum of all pair counts and a single-instant window prints as one
bracketed label.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .aggregate import AggregationSpec, PairKey, display_pair
from .events import EventKind
from .graph import Semantics
from .skyline import DominationRecord, SkylineSet, SkylineTuple, top_k
from .temporal import TemporalElement


@dataclass
class RunResult:
    kind: EventKind
    semantics: Semantics
    edge_label: str
    spec: AggregationSpec
    universe: tuple[PairKey, ...]
    time_labels: tuple[str, ...]
    candidates: int
    skyline: SkylineSet
    dods: DominationRecord
    symmetric: bool = False
    individuals: Mapping[PairKey, Sequence[SkylineTuple]] | None = None
    k: int | None = None
    metadata: dict = field(default_factory=dict)


def format_window(window: TemporalElement, time_labels: Sequence[str]) -> str:
    start, end = time_labels[window.first], time_labels[window.last]
    return f"[{start}]" if window.first == window.last else f"[{start}, {end}]"


def display_tuple(t: SkylineTuple, time_labels: Sequence[str]) -> str:
    reference = time_labels[t.reference]
    return f"([{reference}], {format_window(t.window, time_labels)}, {t.vector.total})"


def _pair_names(result: RunResult) -> list[str]:
    return [display_pair(p, result.symmetric) for p in result.universe]


def _tuple_row(result: RunResult, t: SkylineTuple, dod: int | None) -> dict:
    labels = result.time_labels
    return {
        "t_r": labels[t.reference],
        "window_start": labels[t.window.first],
        "window_end": labels[t.window.last],
        "length": t.length,
        "counts": dict(zip(_pair_names(result), t.counts)),
        "total": t.vector.total,
        "dod": dod,
        "display": display_tuple(t, labels),
    }


def report_payload(result: RunResult) -> dict:
    """The full JSON document for a run; deterministic for fixed inputs."""
    tuples = [
        _tuple_row(result, t, result.dods.get(t)) for t in result.skyline.tuples()
    ]
    sizes: dict = {"unified": len(result.skyline)}
    payload = {
        "run": {
            "event": str(result.kind),
            "semantics": str(result.semantics),
            "edge_label": result.edge_label,
            "agg_labels": sorted(result.spec.labels),
            "agg_props": list(result.spec.props),
            **result.metadata,
        },
        "universe": _pair_names(result),
        "candidates": result.candidates,
        "skyline_size": len(result.skyline),
        "sizes": sizes,
        "tuples": tuples,
    }
    if result.individuals is not None:
        sizes["individual"] = {
            display_pair(p, result.symmetric): len(result.individuals[p])
            for p in result.universe
        }
        payload["individual"] = {
            display_pair(p, result.symmetric): [
                {
                    "t_r": result.time_labels[t.reference],
                    "window_start": result.time_labels[t.window.first],
                    "window_end": result.time_labels[t.window.last],
                    "length": t.length,
                    "count": t.counts[0],
                    "display": display_tuple(t, result.time_labels),
                }
                for t in result.individuals[p]
            ]
            for p in result.universe
        }
    if result.k is not None:
        payload["top_k"] = [
            _tuple_row(result, t, dod)
            for t, dod in top_k(result.skyline, result.dods, result.k)
        ]
    return payload


def write_report(
    result: RunResult, out_dir: str | Path, formats: Sequence[str] = ("csv", "json")
) -> list[Path]:
    """Write the run's report files; returns the created paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    payload = report_payload(result)
    pair_names = _pair_names(result)

    if "json" in formats:
        path = out / "skyline.json"
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        written.append(path)

    if "csv" in formats:
        path = out / "skyline.csv"
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["t_r", "window_start", "window_end", "length", *pair_names, "total", "dod", "display"])
            for row in payload["tuples"]:
                w.writerow(
                    [
                        row["t_r"],
                        row["window_start"],
                        row["window_end"],
                        row["length"],
                        *[row["counts"][name] for name in pair_names],
                        row["total"],
                        row["dod"],
                        row["display"],
                    ]
                )
        written.append(path)

        path = out / "sizes.csv"
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["combination", "skyline_size"])
            if result.individuals is not None:
                for name in pair_names:
                    w.writerow([name, payload["sizes"]["individual"][name]])
            w.writerow(["*", payload["sizes"]["unified"]])
        written.append(path)

        if result.individuals is not None:
            path = out / "individual.csv"
            with open(path, "w", newline="", encoding="utf-8") as fh:
                w = csv.writer(fh)
                w.writerow(["combination", "t_r", "window_start", "window_end", "length", "count"])
                for name in pair_names:
                    for row in payload["individual"][name]:
                        w.writerow(
                            [name, row["t_r"], row["window_start"], row["window_end"], row["length"], row["count"]]
                        )
            written.append(path)

            # (length, count) points per combination, ready for external plotting
            path = out / "plotdata.csv"
            with open(path, "w", newline="", encoding="utf-8") as fh:
                w = csv.writer(fh)
                w.writerow(["combination", "length", "count"])
                for name in pair_names:
                    for row in payload["individual"][name]:
                        w.writerow([name, row["length"], row["count"]])
            written.append(path)

        if result.k is not None:
            path = out / "topk.csv"
            with open(path, "w", newline="", encoding="utf-8") as fh:
                w = csv.writer(fh)
                w.writerow(["rank", "display", "dod"])
                for rank, row in enumerate(payload.get("top_k", []), start=1):
                    w.writerow([rank, row["display"], row["dod"]])
            written.append(path)

    return written
