"""Evolution skylines over temporal property graphs.

Detects significant stability, growth, and shrinkage events in a graph's
history by ranking (reference point, preceding window) candidates on window
length and per-combination event edge counts.
"""

from .aggregate import (
    AggregatedGraph,
    AggregationSpec,
    CountVector,
    aggregate,
    combination_universe,
    count,
    count_vector,
    display_pair,
)
from .errors import (
    EmptyElementError,
    GraphError,
    IntegrityError,
    OutOfHorizonError,
    ParseError,
    SchemaError,
    UniverseMismatchError,
    WindowError,
)
from .events import (
    CountDirection,
    EventGraph,
    EventKind,
    count_direction,
    event_graph,
    graph_difference,
    graph_intersection,
    graph_union,
)
from .graph import (
    Edge,
    ElementSets,
    NodeData,
    Semantics,
    Snapshot,
    TemporalPropertyGraph,
    Violation,
)
from .ingest import DatasetManifest, load_graph, write_dataset
from .report import RunResult, display_tuple, report_payload, write_report
from .skyline import (
    DominationRecord,
    SkylineSet,
    SkylineTuple,
    all_individual_skylines,
    brute_force_skyline,
    dominates,
    enumerate_candidates,
    individual_skyline,
    top_k,
    unified_skyline,
)
from .temporal import TemporalElement

__all__ = [
    "AggregatedGraph",
    "AggregationSpec",
    "CountDirection",
    "CountVector",
    "DatasetManifest",
    "DominationRecord",
    "Edge",
    "ElementSets",
    "EmptyElementError",
    "EventGraph",
    "EventKind",
    "GraphError",
    "IntegrityError",
    "NodeData",
    "OutOfHorizonError",
    "ParseError",
    "RunResult",
    "SchemaError",
    "Semantics",
    "SkylineSet",
    "SkylineTuple",
    "Snapshot",
    "TemporalElement",
    "TemporalPropertyGraph",
    "UniverseMismatchError",
    "Violation",
    "WindowError",
    "aggregate",
    "all_individual_skylines",
    "brute_force_skyline",
    "combination_universe",
    "count",
    "count_direction",
    "count_vector",
    "display_pair",
    "display_tuple",
    "dominates",
    "enumerate_candidates",
    "event_graph",
    "graph_difference",
    "graph_intersection",
    "graph_union",
    "individual_skyline",
    "load_graph",
    "report_payload",
    "top_k",
    "unified_skyline",
    "write_dataset",
    "write_report",
]
