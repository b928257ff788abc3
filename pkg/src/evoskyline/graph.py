"""The temporal property graph model.

A graph holds labeled nodes and directed labeled edges, each annotated with
an existence temporal element over a discrete horizon ``0..n-1``. Nodes
carry static properties (one value) and time-varying properties (one value
per existence instant). Graphs are immutable after construction; every
operation here is a pure function of the stored data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, NamedTuple

from .errors import EmptyElementError, OutOfHorizonError
from .temporal import TemporalElement


class Semantics(Enum):
    """How a graph is combined over a multi-instant element."""

    STRICT = "strict"  # present at every instant
    LOOSE = "loose"    # present at one instant or more

    def __str__(self) -> str:
        return self.value


class Edge(NamedTuple):
    src: str
    dst: str
    label: str


class ElementSets(NamedTuple):
    """A bare (node ids, edges) pair, the operand shape of the set-based operators."""

    nodes: frozenset[str]
    edges: frozenset[Edge]


@dataclass(frozen=True)
class NodeData:
    label: str
    existence: TemporalElement
    static_props: Mapping[str, str] = field(default_factory=dict)
    tv_props: Mapping[str, Mapping[int, str]] = field(default_factory=dict)


@dataclass(frozen=True)
class Violation:
    kind: str
    element: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} [{self.element}]: {self.detail}"


@dataclass(frozen=True)
class GraphSchema:
    """Shared metadata that graph views carry along for aggregation."""

    time_labels: tuple[str, ...]
    prop_labels: Mapping[str, frozenset[str]]
    symmetric_labels: frozenset[str]


@dataclass(frozen=True)
class Snapshot:
    """The graph instance at a single instant, with properties resolved at it."""

    instant: int
    nodes: frozenset[str]
    edges: frozenset[Edge]
    node_labels: Mapping[str, str]
    node_props: Mapping[str, Mapping[str, str]]
    schema: GraphSchema

    @property
    def sets(self) -> ElementSets:
        return ElementSets(self.nodes, self.edges)


class TemporalPropertyGraph:
    """Immutable temporal property graph over a contiguous instant horizon."""

    def __init__(
        self,
        time_labels: Iterable[str],
        nodes: Mapping[str, NodeData],
        edges: Mapping[Edge, TemporalElement],
        symmetric_labels: Iterable[str] = (),
        declared_prop_labels: Mapping[str, Iterable[str]] | None = None,
    ):
        self.time_labels: tuple[str, ...] = tuple(time_labels)
        if not self.time_labels:
            raise ValueError("a graph needs at least one time instant")
        self.nodes: dict[str, NodeData] = dict(nodes)
        self.edges: dict[Edge, TemporalElement] = dict(edges)
        self.symmetric_labels = frozenset(symmetric_labels)
        self._label_index = {lab: i for i, lab in enumerate(self.time_labels)}
        if len(self._label_index) != len(self.time_labels):
            raise ValueError("time labels must be unique")
        self._declared_prop_labels = {
            p: frozenset(ls) for p, ls in (declared_prop_labels or {}).items()
        }
        self._snapshots: dict[int, Snapshot] = {}
        self._schema: GraphSchema | None = None

    # -- basic shape ---------------------------------------------------

    @property
    def horizon(self) -> TemporalElement:
        return TemporalElement.span(0, len(self.time_labels) - 1)

    @property
    def horizon_length(self) -> int:
        return len(self.time_labels)

    def instant_of_label(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise OutOfHorizonError(f"unknown time label {label!r}") from None

    def label_of_instant(self, t: int) -> str:
        if not 0 <= t < len(self.time_labels):
            raise OutOfHorizonError(f"instant {t} outside horizon 0..{len(self.time_labels) - 1}")
        return self.time_labels[t]

    @property
    def prop_labels(self) -> dict[str, frozenset[str]]:
        """Property name -> node labels carrying it (declared bindings plus observed ones)."""
        out: dict[str, set[str]] = {p: set(ls) for p, ls in self._declared_prop_labels.items()}
        for data in self.nodes.values():
            for prop in list(data.static_props) + list(data.tv_props):
                out.setdefault(prop, set()).add(data.label)
        return {p: frozenset(ls) for p, ls in out.items()}

    @property
    def schema(self) -> GraphSchema:
        if self._schema is None:
            self._schema = GraphSchema(
                time_labels=self.time_labels,
                prop_labels=self.prop_labels,
                symmetric_labels=self.symmetric_labels,
            )
        return self._schema

    def __eq__(self, other) -> bool:
        if not isinstance(other, TemporalPropertyGraph):
            return NotImplemented
        return (
            self.time_labels == other.time_labels
            and self.nodes == other.nodes
            and self.edges == other.edges
            and self.symmetric_labels == other.symmetric_labels
        )

    # -- property resolution -------------------------------------------

    def props_at(self, node_id: str, t: int) -> dict[str, str]:
        """All property values of a node at instant ``t`` (static merged with time-varying)."""
        data = self.nodes[node_id]
        merged = dict(data.static_props)
        for prop, values in data.tv_props.items():
            if t in values:
                merged[prop] = values[t]
        return merged

    # -- operations ------------------------------------------------------

    def snapshot(self, t: int) -> Snapshot:
        """Materialize the graph instance at instant ``t``; cached per instant."""
        cached = self._snapshots.get(t)
        if cached is not None:
            return cached
        if not self.horizon.contains(t):
            raise OutOfHorizonError(f"instant {t} outside horizon 0..{self.horizon_length - 1}")
        nodes = frozenset(v for v, d in self.nodes.items() if d.existence.contains(t))
        edges = frozenset(e for e, te in self.edges.items() if te.contains(t))
        snap = Snapshot(
            instant=t,
            nodes=nodes,
            edges=edges,
            node_labels={v: self.nodes[v].label for v in nodes},
            node_props={v: self.props_at(v, t) for v in nodes},
            schema=self.schema,
        )
        # idempotent fill: concurrent readers may race, the value is identical
        return self._snapshots.setdefault(t, snap)

    def combine(self, element: TemporalElement, semantics: Semantics) -> ElementSets:
        """Elements present at every instant (strict) or at least one instant (loose) of ``element``."""
        if element.is_empty:
            raise EmptyElementError("cannot combine a graph over an empty temporal element")
        if not element.issubset(self.horizon):
            raise OutOfHorizonError(f"element {element} not within horizon")
        if semantics is Semantics.STRICT:
            keep = lambda existence: element.issubset(existence)
        else:
            keep = lambda existence: element.intersects(existence)
        nodes = frozenset(v for v, d in self.nodes.items() if keep(d.existence))
        edges = frozenset(e for e, te in self.edges.items() if keep(te))
        return ElementSets(nodes, edges)

    def validate(self) -> list[Violation]:
        """Every invariant violation in the stored data; an empty list means the graph is valid."""
        violations: list[Violation] = []
        horizon = self.horizon
        for v, data in sorted(self.nodes.items()):
            if not data.existence.issubset(horizon):
                violations.append(Violation("existence-outside-horizon", v, f"{data.existence} vs {horizon}"))
            alive = set(data.existence.instants())
            for prop in sorted(set(data.static_props) & set(data.tv_props)):
                violations.append(Violation("property-static-and-tv", v, f"property {prop!r} declared both ways"))
            for prop, values in sorted(data.tv_props.items()):
                have = set(values)
                missing = sorted(alive - have)
                extra = sorted(have - alive)
                if missing:
                    violations.append(
                        Violation("property-totality", v, f"{prop!r} missing values at instants {missing}")
                    )
                if extra:
                    violations.append(
                        Violation("property-outside-existence", v, f"{prop!r} has values at instants {extra}")
                    )
        for e, te in sorted(self.edges.items()):
            name = f"{e.src}->{e.dst}:{e.label}"
            if not te.issubset(horizon):
                violations.append(Violation("existence-outside-horizon", name, f"{te} vs {horizon}"))
            missing_endpoint = [v for v in (e.src, e.dst) if v not in self.nodes]
            if missing_endpoint:
                violations.append(Violation("unknown-endpoint", name, f"node(s) {missing_endpoint} not in graph"))
                continue
            allowed = self.nodes[e.src].existence.intersection(self.nodes[e.dst].existence)
            if not te.issubset(allowed):
                gaps = sorted(set(te.instants()) - set(allowed.instants()))
                violations.append(
                    Violation("referential-integrity", name, f"edge alive without both endpoints at instants {gaps}")
                )
        return violations

    def restrict(self, length: int) -> "TemporalPropertyGraph":
        """The prefix graph over the first ``length`` instants of the horizon."""
        if not 1 <= length <= self.horizon_length:
            raise OutOfHorizonError(f"prefix length {length} outside 1..{self.horizon_length}")
        hi = length - 1
        nodes: dict[str, NodeData] = {}
        for v, data in self.nodes.items():
            existence = data.existence.clip(0, hi)
            if existence.is_empty:
                continue
            nodes[v] = NodeData(
                label=data.label,
                existence=existence,
                static_props=dict(data.static_props),
                tv_props={
                    p: {t: val for t, val in vals.items() if t <= hi}
                    for p, vals in data.tv_props.items()
                },
            )
        edges: dict[Edge, TemporalElement] = {}
        for e, te in self.edges.items():
            clipped = te.clip(0, hi)
            if clipped.is_empty or e.src not in nodes or e.dst not in nodes:
                continue
            edges[e] = clipped
        return TemporalPropertyGraph(
            time_labels=self.time_labels[:length],
            nodes=nodes,
            edges=edges,
            symmetric_labels=self.symmetric_labels,
            declared_prop_labels=self._declared_prop_labels,
        )
