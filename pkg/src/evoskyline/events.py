"""Set-based graph operators and event graphs.

An event graph captures what happened at a reference instant relative to
the combined graph over the window that immediately precedes it: the
stable part (present in both), the grown part (new at the reference), or
the shrunk part (gone at the reference).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .errors import EmptyElementError, OutOfHorizonError, WindowError
from .graph import Edge, ElementSets, GraphSchema, Semantics, TemporalPropertyGraph
from .temporal import TemporalElement


class EventKind(Enum):
    STABILITY = "stability"
    GROWTH = "growth"
    SHRINKAGE = "shrinkage"

    def __str__(self) -> str:
        return self.value


class CountDirection(Enum):
    """How event edge counts move as the preceding window grows into the past."""

    INCREASING = "increasing"
    DECREASING = "decreasing"

    def __str__(self) -> str:
        return self.value


_DIRECTIONS = {
    (EventKind.STABILITY, Semantics.STRICT): CountDirection.DECREASING,
    (EventKind.STABILITY, Semantics.LOOSE): CountDirection.INCREASING,
    (EventKind.GROWTH, Semantics.STRICT): CountDirection.INCREASING,
    (EventKind.GROWTH, Semantics.LOOSE): CountDirection.DECREASING,
    (EventKind.SHRINKAGE, Semantics.STRICT): CountDirection.DECREASING,
    (EventKind.SHRINKAGE, Semantics.LOOSE): CountDirection.INCREASING,
}


def count_direction(kind: EventKind, semantics: Semantics) -> CountDirection:
    return _DIRECTIONS[(kind, semantics)]


def graph_union(a: ElementSets, b: ElementSets) -> ElementSets:
    return ElementSets(a.nodes | b.nodes, a.edges | b.edges)


def graph_intersection(a: ElementSets, b: ElementSets) -> ElementSets:
    return ElementSets(a.nodes & b.nodes, a.edges & b.edges)


def graph_difference(a: ElementSets, b: ElementSets) -> ElementSets:
    return ElementSets(a.nodes - b.nodes, a.edges - b.edges)


@dataclass(frozen=True)
class EventGraph:
    """One event's node and edge sets for a (reference, window, semantics) triple.

    ``node_props`` covers the event nodes and additionally every endpoint of
    an event edge, so edges whose endpoints fall outside the event node set
    (a deleted edge between surviving nodes, for example) can still be
    classified by endpoint property values. Values are resolved at the
    reference instant when the node exists there, otherwise at the last
    window instant where it exists.
    """

    kind: EventKind
    semantics: Semantics
    reference: int
    window: TemporalElement
    nodes: frozenset[str]
    edges: frozenset[Edge]
    node_labels: Mapping[str, str]
    node_props: Mapping[str, Mapping[str, str]]
    schema: GraphSchema

    @property
    def sets(self) -> ElementSets:
        return ElementSets(self.nodes, self.edges)


def event_graph(
    g: TemporalPropertyGraph,
    kind: EventKind,
    reference: int,
    window: TemporalElement,
    semantics: Semantics,
) -> EventGraph:
    """Build the event graph for ``reference`` against the immediately preceding ``window``."""
    if window.is_empty:
        raise EmptyElementError("event window must be nonempty")
    if not g.horizon.contains(reference):
        raise OutOfHorizonError(f"reference instant {reference} outside horizon")
    if not window.is_contiguous or window.last != reference - 1 or window.first < 0:
        raise WindowError(f"window {window} must be contiguous and end at instant {reference - 1}")

    current = g.snapshot(reference)
    past = g.combine(window, semantics)
    if kind is EventKind.STABILITY:
        sets = graph_intersection(current.sets, past)
    elif kind is EventKind.GROWTH:
        sets = graph_difference(current.sets, past)
    else:
        sets = graph_difference(past, current.sets)

    touched = set(sets.nodes)
    for e in sets.edges:
        touched.add(e.src)
        touched.add(e.dst)
    labels: dict[str, str] = {}
    props: dict[str, Mapping[str, str]] = {}
    for v in touched:
        data = g.nodes[v]
        if data.existence.contains(reference):
            at = reference
        else:
            at = data.existence.intersection(window).last
        labels[v] = data.label
        props[v] = g.props_at(v, at)
    return EventGraph(
        kind=kind,
        semantics=semantics,
        reference=reference,
        window=window,
        nodes=sets.nodes,
        edges=sets.edges,
        node_labels=labels,
        node_props=props,
        schema=g.schema,
    )
