"""Grouping a graph view into weighted super-nodes and counting edges per value combination.

Nodes whose label is selected for aggregation are grouped by the value
combination of the selected properties that apply to their label; other
nodes pass through untouched with weight 1. Grouped edges carry a weight
equal to the number of original edges they stand for, and the per-pair
edge count equals that weight, which gives the package its two independent
routes to the same numbers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .errors import SchemaError, UniverseMismatchError
from .events import EventGraph
from .graph import Snapshot, TemporalPropertyGraph

# A combination is a tuple of (property, value) pairs in spec order, restricted
# to the properties that apply to the node's label. Keeping the property name
# in the key means value collisions across different properties never merge.
Combo = tuple[tuple[str, str], ...]
# Endpoint of a grouped edge: a combination, or the node id for pass-through nodes.
EndpointKey = Union[Combo, str]
PairKey = tuple[EndpointKey, EndpointKey]

GraphView = Union[Snapshot, EventGraph]


@dataclass(frozen=True)
class AggregationSpec:
    """Node labels to group and the ordered property names to group them by."""

    labels: frozenset[str]
    props: tuple[str, ...]

    @classmethod
    def make(cls, labels: Iterable[str], props: Iterable[str]) -> "AggregationSpec":
        return cls(frozenset(labels), tuple(props))


@dataclass(frozen=True)
class PassthroughNode:
    label: str
    props: Mapping[str, str]
    weight: int = 1


@dataclass(frozen=True)
class AggregatedGraph:
    group_weights: Mapping[Combo, int]
    passthrough: Mapping[str, PassthroughNode]
    edge_weights: Mapping[tuple[str, EndpointKey, EndpointKey], int]

    @property
    def node_total(self) -> int:
        return sum(self.group_weights.values()) + len(self.passthrough)

    @property
    def edge_total(self) -> int:
        return sum(self.edge_weights.values())


def key_sort(key: EndpointKey):
    """Stable ordering over mixed combo/node-id endpoint keys."""
    return (0, key, ()) if isinstance(key, str) else (1, "", key)


def pair_sort(pair: PairKey):
    return (key_sort(pair[0]), key_sort(pair[1]))


def canonical_pair(a: EndpointKey, b: EndpointKey, symmetric: bool) -> PairKey:
    if symmetric and key_sort(b) < key_sort(a):
        return (b, a)
    return (a, b)


def display_key(key: EndpointKey) -> str:
    if isinstance(key, str):
        return key
    return ",".join(value for _, value in key)


def display_pair(pair: PairKey, symmetric: bool = False) -> str:
    sep = "--" if symmetric else "->"
    return f"{display_key(pair[0])}{sep}{display_key(pair[1])}"


def _applicable_props(schema_prop_labels: Mapping[str, frozenset[str]], label: str, spec: AggregationSpec) -> list[str]:
    return [p for p in spec.props if label in schema_prop_labels.get(p, frozenset())]


def validate_spec(g: TemporalPropertyGraph, spec: AggregationSpec) -> None:
    """Raise SchemaError when the aggregation spec does not fit the graph's schema."""
    if not spec.labels:
        raise SchemaError("aggregation needs at least one label")
    if not spec.props:
        raise SchemaError("aggregation needs at least one property")
    bindings = g.prop_labels
    for prop in spec.props:
        bound = bindings.get(prop, frozenset())
        if not bound & spec.labels:
            raise SchemaError(f"property {prop!r} is not defined for any aggregated label")
    present = {d.label for d in g.nodes.values()}
    for label in spec.labels & present:
        if not _applicable_props(bindings, label, spec):
            raise SchemaError(f"label {label!r} is aggregated but has no property in {spec.props}")


def combo_for(view: GraphView, node_id: str, spec: AggregationSpec) -> Combo | None:
    """The node's value combination, or None when its label passes through."""
    label = view.node_labels[node_id]
    if label not in spec.labels:
        return None
    props = _applicable_props(view.schema.prop_labels, label, spec)
    if not props:
        raise SchemaError(f"label {label!r} is aggregated but has no property in {spec.props}")
    values = view.node_props[node_id]
    combo = []
    for prop in props:
        if prop not in values:
            raise SchemaError(f"node {node_id!r} has no value for required property {prop!r}")
        combo.append((prop, values[prop]))
    return tuple(combo)


def endpoint_key(view: GraphView, node_id: str, spec: AggregationSpec) -> EndpointKey:
    combo = combo_for(view, node_id, spec)
    return node_id if combo is None else combo


def aggregate(view: GraphView, spec: AggregationSpec) -> AggregatedGraph:
    """Group the view's nodes by value combination and its edges by endpoint keys."""
    group_weights: dict[Combo, int] = {}
    passthrough: dict[str, PassthroughNode] = {}
    for v in view.nodes:
        combo = combo_for(view, v, spec)
        if combo is None:
            passthrough[v] = PassthroughNode(view.node_labels[v], dict(view.node_props[v]))
        else:
            group_weights[combo] = group_weights.get(combo, 0) + 1
    edge_weights: dict[tuple[str, EndpointKey, EndpointKey], int] = {}
    symmetric = view.schema.symmetric_labels
    for e in view.edges:
        pair = canonical_pair(
            endpoint_key(view, e.src, spec),
            endpoint_key(view, e.dst, spec),
            e.label in symmetric,
        )
        key = (e.label, pair[0], pair[1])
        edge_weights[key] = edge_weights.get(key, 0) + 1
    return AggregatedGraph(group_weights, passthrough, edge_weights)


def count(
    view: GraphView,
    edge_label: str,
    spec: AggregationSpec,
    p: EndpointKey,
    p_prime: EndpointKey,
    universe: tuple[PairKey, ...] | None = None,
) -> int:
    """Edges of ``edge_label`` whose source classifies as ``p`` and destination as ``p_prime``.

    Counted directly from the view's edges, independently of `aggregate`.
    """
    symmetric = edge_label in view.schema.symmetric_labels
    wanted = canonical_pair(p, p_prime, symmetric)
    if universe is not None and wanted not in universe:
        raise UniverseMismatchError(f"pair {display_pair(wanted, symmetric)} not in the active universe")
    total = 0
    for e in view.edges:
        if e.label != edge_label:
            continue
        pair = canonical_pair(
            endpoint_key(view, e.src, spec),
            endpoint_key(view, e.dst, spec),
            symmetric,
        )
        if pair == wanted:
            total += 1
    return total


def combination_universe(
    g: TemporalPropertyGraph, edge_label: str, spec: AggregationSpec
) -> tuple[PairKey, ...]:
    """Every endpoint-key pair the edge label can take, fixed over the whole horizon.

    Per endpoint side, aggregated labels contribute the cross product of the
    values their properties were ever observed to take; pass-through labels
    contribute the node ids seen on that side. The result is sorted so every
    count vector in a run shares one key order.
    """
    validate_spec(g, spec)
    bindings = g.prop_labels
    observed: dict[tuple[str, str], set[str]] = {}
    for data in g.nodes.values():
        for prop in spec.props:
            if data.label not in bindings.get(prop, frozenset()):
                continue
            slot = observed.setdefault((data.label, prop), set())
            if prop in data.static_props:
                slot.add(data.static_props[prop])
            if prop in data.tv_props:
                slot.update(data.tv_props[prop].values())

    def keys_for_label(label: str, side_ids: set[str]) -> set[EndpointKey]:
        if label not in spec.labels:
            return set(side_ids)
        props = _applicable_props(bindings, label, spec)
        pools = [sorted(observed.get((label, p), set())) for p in props]
        if any(not pool for pool in pools):
            return set()
        return {tuple(zip(props, values)) for values in itertools.product(*pools)}

    src_sides: dict[str, set[str]] = {}
    dst_sides: dict[str, set[str]] = {}
    for e in g.edges:
        if e.label != edge_label:
            continue
        if e.src in g.nodes:
            src_sides.setdefault(g.nodes[e.src].label, set()).add(e.src)
        if e.dst in g.nodes:
            dst_sides.setdefault(g.nodes[e.dst].label, set()).add(e.dst)

    src_keys: set[EndpointKey] = set()
    for label, ids in src_sides.items():
        src_keys |= keys_for_label(label, ids)
    dst_keys: set[EndpointKey] = set()
    for label, ids in dst_sides.items():
        dst_keys |= keys_for_label(label, ids)

    symmetric = edge_label in g.symmetric_labels
    if symmetric:
        keys = src_keys | dst_keys
        pairs = {canonical_pair(a, b, True) for a in keys for b in keys}
    else:
        pairs = {(a, b) for a in src_keys for b in dst_keys}
    return tuple(sorted(pairs, key=pair_sort))


@dataclass(frozen=True)
class CountVector:
    """Edge counts for every pair in the universe, plus the window length."""

    universe: tuple[PairKey, ...]
    counts: tuple[int, ...]
    length: int

    def __post_init__(self):
        if len(self.universe) != len(self.counts):
            raise UniverseMismatchError(
                f"{len(self.counts)} counts for a universe of {len(self.universe)} pairs"
            )

    def get(self, pair: PairKey) -> int:
        try:
            return self.counts[self.universe.index(pair)]
        except ValueError:
            raise UniverseMismatchError(f"pair {pair} not in the active universe") from None

    def as_dict(self) -> dict[PairKey, int]:
        return dict(zip(self.universe, self.counts))

    @property
    def total(self) -> int:
        return sum(self.counts)


def count_vector(
    ev: EventGraph,
    edge_label: str,
    spec: AggregationSpec,
    universe: tuple[PairKey, ...],
) -> CountVector:
    """The event graph's per-pair edge counts over the full universe (absent pairs count 0)."""
    index = {pair: i for i, pair in enumerate(universe)}
    counts = [0] * len(universe)
    symmetric = edge_label in ev.schema.symmetric_labels
    for e in ev.edges:
        if e.label != edge_label:
            continue
        pair = canonical_pair(
            endpoint_key(ev, e.src, spec),
            endpoint_key(ev, e.dst, spec),
            symmetric,
        )
        if pair not in index:
            raise UniverseMismatchError(f"pair {display_pair(pair, symmetric)} not in the active universe")
        counts[index[pair]] += 1
    return CountVector(universe, tuple(counts), ev.window.length)
