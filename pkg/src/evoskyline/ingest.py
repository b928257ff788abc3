"""Loading temporal property graphs from CSV datasets, and writing them back out.

A dataset is a JSON manifest plus up to four CSV files:

* nodes:        ``id,label,start,end``   (one row per existence interval)
* edges:        ``src,dst,label,start,end``
* static props: ``id,prop,value``
* tv props:     ``id,prop,time,value``

``start``, ``end``, and ``time`` are time labels (years, months, hours)
declared in the manifest's ``time_labels`` list; their declaration order
defines the instant mapping. Duplicate rows merge their temporal elements.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .errors import IntegrityError, ParseError
from .graph import Edge, NodeData, TemporalPropertyGraph
from .temporal import TemporalElement

_MANIFEST_KEYS = {
    "time_labels",
    "nodes",
    "edges",
    "static_props",
    "tv_props",
    "symmetric_edge_labels",
    "property_labels",
}


@dataclass(frozen=True)
class DatasetManifest:
    base_dir: Path
    time_labels: tuple[str, ...]
    nodes_path: Path
    edges_path: Path
    static_props_path: Path | None
    tv_props_path: Path | None
    symmetric_edge_labels: frozenset[str]
    property_labels: Mapping[str, frozenset[str]]

    @classmethod
    def load(cls, path: str | Path) -> "DatasetManifest":
        path = Path(path)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise ParseError(f"cannot read manifest: {exc}", path=path) from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"manifest is not valid JSON: {exc}", path=path) from exc
        if not isinstance(raw, dict):
            raise ParseError("manifest must be a JSON object", path=path)
        unknown = set(raw) - _MANIFEST_KEYS
        if unknown:
            raise ParseError(f"unknown manifest keys: {sorted(unknown)}", path=path)
        for key in ("time_labels", "nodes", "edges"):
            if key not in raw:
                raise ParseError(f"manifest is missing required key {key!r}", path=path)
        labels = raw["time_labels"]
        if not isinstance(labels, list) or not labels or not all(isinstance(x, str) for x in labels):
            raise ParseError("time_labels must be a nonempty list of strings", path=path)
        base = path.parent

        def resolve(key: str) -> Path | None:
            if key not in raw or raw[key] is None:
                return None
            return base / raw[key]

        return cls(
            base_dir=base,
            time_labels=tuple(labels),
            nodes_path=base / raw["nodes"],
            edges_path=base / raw["edges"],
            static_props_path=resolve("static_props"),
            tv_props_path=resolve("tv_props"),
            symmetric_edge_labels=frozenset(raw.get("symmetric_edge_labels", [])),
            property_labels={
                p: frozenset(ls) for p, ls in raw.get("property_labels", {}).items()
            },
        )


def _read_rows(path: Path, required: tuple[str, ...]):
    try:
        handle = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc}", path=path) from exc
    with handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        missing = [col for col in required if col not in header]
        if missing:
            raise ParseError(f"missing column(s) {missing}; header is {header}", path=path, line=1)
        for row in reader:
            values = []
            for col in required:
                value = row.get(col)
                if value is None or value == "":
                    raise ParseError(f"empty value in column {col!r}", path=path, line=reader.line_num)
                values.append(value)
            yield reader.line_num, tuple(values)


def load_graph(manifest: DatasetManifest | str | Path) -> TemporalPropertyGraph:
    """Load, coalesce, and validate a dataset; raises IntegrityError on invariant violations."""
    if not isinstance(manifest, DatasetManifest):
        manifest = DatasetManifest.load(manifest)
    instant_of = {label: i for i, label in enumerate(manifest.time_labels)}
    if len(instant_of) != len(manifest.time_labels):
        raise ParseError("time labels must be unique", path=manifest.base_dir / "manifest")

    def to_instant(label: str, path: Path, line: int) -> int:
        try:
            return instant_of[label]
        except KeyError:
            raise ParseError(f"unknown time label {label!r}", path=path, line=line) from None

    node_labels: dict[str, str] = {}
    node_intervals: dict[str, list[tuple[int, int]]] = {}
    for line, (node_id, label, start, end) in _read_rows(manifest.nodes_path, ("id", "label", "start", "end")):
        known = node_labels.setdefault(node_id, label)
        if known != label:
            raise ParseError(
                f"node {node_id!r} declared with labels {known!r} and {label!r}",
                path=manifest.nodes_path,
                line=line,
            )
        lo = to_instant(start, manifest.nodes_path, line)
        hi = to_instant(end, manifest.nodes_path, line)
        if lo > hi:
            raise ParseError(f"interval [{start}, {end}] runs backwards", path=manifest.nodes_path, line=line)
        node_intervals.setdefault(node_id, []).append((lo, hi))

    static: dict[str, dict[str, str]] = {}
    if manifest.static_props_path is not None:
        for line, (node_id, prop, value) in _read_rows(manifest.static_props_path, ("id", "prop", "value")):
            slot = static.setdefault(node_id, {})
            if prop in slot and slot[prop] != value:
                raise ParseError(
                    f"conflicting static values {slot[prop]!r} and {value!r} for {node_id!r}.{prop!r}",
                    path=manifest.static_props_path,
                    line=line,
                )
            slot[prop] = value

    tv: dict[str, dict[str, dict[int, str]]] = {}
    if manifest.tv_props_path is not None:
        for line, (node_id, prop, time, value) in _read_rows(
            manifest.tv_props_path, ("id", "prop", "time", "value")
        ):
            t = to_instant(time, manifest.tv_props_path, line)
            slot = tv.setdefault(node_id, {}).setdefault(prop, {})
            if t in slot and slot[t] != value:
                raise ParseError(
                    f"conflicting values {slot[t]!r} and {value!r} for {node_id!r}.{prop!r} at {time!r}",
                    path=manifest.tv_props_path,
                    line=line,
                )
            slot[t] = value

    edge_intervals: dict[Edge, list[tuple[int, int]]] = {}
    for line, (src, dst, label, start, end) in _read_rows(
        manifest.edges_path, ("src", "dst", "label", "start", "end")
    ):
        lo = to_instant(start, manifest.edges_path, line)
        hi = to_instant(end, manifest.edges_path, line)
        if lo > hi:
            raise ParseError(f"interval [{start}, {end}] runs backwards", path=manifest.edges_path, line=line)
        edge_intervals.setdefault(Edge(src, dst, label), []).append((lo, hi))

    nodes = {
        node_id: NodeData(
            label=node_labels[node_id],
            existence=TemporalElement.from_intervals(intervals),
            static_props=static.get(node_id, {}),
            tv_props=tv.get(node_id, {}),
        )
        for node_id, intervals in node_intervals.items()
    }
    for node_id in sorted(set(static) | set(tv)):
        if node_id not in nodes:
            raise ParseError(
                f"property rows reference unknown node {node_id!r}",
                path=manifest.static_props_path if node_id in static else manifest.tv_props_path,
            )
    edges = {e: TemporalElement.from_intervals(iv) for e, iv in edge_intervals.items()}

    graph = TemporalPropertyGraph(
        time_labels=manifest.time_labels,
        nodes=nodes,
        edges=edges,
        symmetric_labels=manifest.symmetric_edge_labels,
        declared_prop_labels=manifest.property_labels,
    )
    violations = graph.validate()
    if violations:
        raise IntegrityError(violations)
    return graph


def write_dataset(g: TemporalPropertyGraph, out_dir: str | Path) -> Path:
    """Write a graph back out as a dataset; returns the manifest path."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    with open(out / "nodes.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "label", "start", "end"])
        for node_id in sorted(g.nodes):
            data = g.nodes[node_id]
            for start, end in data.existence.intervals:
                w.writerow([node_id, data.label, g.time_labels[start], g.time_labels[end]])

    with open(out / "edges.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["src", "dst", "label", "start", "end"])
        for e in sorted(g.edges):
            for start, end in g.edges[e].intervals:
                w.writerow([e.src, e.dst, e.label, g.time_labels[start], g.time_labels[end]])

    with open(out / "static_props.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "prop", "value"])
        for node_id in sorted(g.nodes):
            for prop in sorted(g.nodes[node_id].static_props):
                w.writerow([node_id, prop, g.nodes[node_id].static_props[prop]])

    with open(out / "tv_props.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "prop", "time", "value"])
        for node_id in sorted(g.nodes):
            for prop in sorted(g.nodes[node_id].tv_props):
                values = g.nodes[node_id].tv_props[prop]
                for t in sorted(values):
                    w.writerow([node_id, prop, g.time_labels[t], values[t]])

    manifest = {
        "time_labels": list(g.time_labels),
        "nodes": "nodes.csv",
        "edges": "edges.csv",
        "static_props": "static_props.csv",
        "tv_props": "tv_props.csv",
        "symmetric_edge_labels": sorted(g.symmetric_labels),
        "property_labels": {p: sorted(ls) for p, ls in sorted(g.prop_labels.items())},
    }
    manifest_path = out / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    return manifest_path
