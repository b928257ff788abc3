import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evoskyline import (
    CountDirection,
    Edge,
    ElementSets,
    EmptyElementError,
    EventKind,
    NodeData,
    Semantics,
    TemporalElement,
    TemporalPropertyGraph,
    WindowError,
    count_direction,
    event_graph,
    graph_difference,
    graph_intersection,
    graph_union,
)

from .strategies import temporal_graphs

EMPTY = ElementSets(frozenset(), frozenset())


def sets_of(*edges):
    nodes = frozenset(v for e in edges for v in (e.src, e.dst))
    return ElementSets(nodes, frozenset(edges))


# -- set operators -------------------------------------------------------


def test_union_identity_and_disjoint():
    a = sets_of(Edge("x", "y", "link"))
    b = sets_of(Edge("p", "q", "link"))
    assert graph_union(a, EMPTY) == a
    merged = graph_union(a, b)
    assert len(merged.nodes) == 4 and len(merged.edges) == 2


def test_intersection_idempotent_and_disjoint():
    a = sets_of(Edge("x", "y", "link"))
    b = sets_of(Edge("p", "q", "link"))
    assert graph_intersection(a, a) == a
    assert graph_intersection(a, b) == EMPTY


def test_difference_identities():
    a = sets_of(Edge("x", "y", "link"))
    assert graph_difference(a, EMPTY) == a
    assert graph_difference(a, a) == EMPTY


def test_loose_union_of_instants_matches_combine(toy_graph):
    g1 = toy_graph.snapshot(toy_graph.instant_of_label("1")).sets
    g2 = toy_graph.snapshot(toy_graph.instant_of_label("2")).sets
    te = TemporalElement.span(toy_graph.instant_of_label("1"), toy_graph.instant_of_label("2"))
    assert graph_union(g1, g2) == toy_graph.combine(te, Semantics.LOOSE)
    assert graph_intersection(g1, g2) == toy_graph.combine(te, Semantics.STRICT)


def test_difference_gives_shrinkage_sets(toy_graph):
    te = TemporalElement.span(toy_graph.instant_of_label("1"), toy_graph.instant_of_label("2"))
    past = toy_graph.combine(te, Semantics.LOOSE)
    now = toy_graph.snapshot(toy_graph.instant_of_label("3")).sets
    gone = graph_difference(past, now)
    assert gone.nodes == {"1"}
    assert gone.edges == {
        Edge("1", "2", "collaborate"),
        Edge("2", "3", "collaborate"),
        Edge("7", "6", "collaborate"),
        Edge("6", "4", "publish"),
        Edge("1", "5", "publish"),
        Edge("7", "4", "publish"),
    }


# -- event graphs --------------------------------------------------------


def test_stability_loose_worked_example(toy_graph):
    t3 = toy_graph.instant_of_label("3")
    window = TemporalElement.span(toy_graph.instant_of_label("1"), toy_graph.instant_of_label("2"))
    ev = event_graph(toy_graph, EventKind.STABILITY, t3, window, Semantics.LOOSE)
    assert ev.nodes == {"2", "3", "4", "5", "6", "7"}
    assert ev.edges == {
        Edge("3", "2", "collaborate"),
        Edge("2", "6", "collaborate"),
        Edge("2", "4", "publish"),
    }


def test_growth_from_empty_snapshot():
    nodes = {
        "x": NodeData("person", TemporalElement.point(0), static_props={"grp": "a"}),
    }
    g = TemporalPropertyGraph(["t0", "t1"], nodes, {})
    ev = event_graph(g, EventKind.GROWTH, 1, TemporalElement.point(0), Semantics.LOOSE)
    assert ev.nodes == frozenset() and ev.edges == frozenset()


def test_strict_stability_subset_of_loose(toy_graph):
    t3 = toy_graph.instant_of_label("3")
    window = TemporalElement.span(0, t3 - 1)
    strict = event_graph(toy_graph, EventKind.STABILITY, t3, window, Semantics.STRICT)
    loose = event_graph(toy_graph, EventKind.STABILITY, t3, window, Semantics.LOOSE)
    assert strict.nodes <= loose.nodes and strict.edges <= loose.edges


def test_event_graph_window_checks(toy_graph):
    t3 = toy_graph.instant_of_label("3")
    with pytest.raises(EmptyElementError):
        event_graph(toy_graph, EventKind.STABILITY, t3, TemporalElement.empty(), Semantics.LOOSE)
    with pytest.raises(WindowError):
        # gap between window end and the reference point
        event_graph(toy_graph, EventKind.STABILITY, t3, TemporalElement.point(0), Semantics.LOOSE)
    with pytest.raises(WindowError):
        event_graph(
            toy_graph,
            EventKind.STABILITY,
            t3,
            TemporalElement.from_intervals([(0, 0), (2, 2)]),
            Semantics.LOOSE,
        )


def test_deleted_node_classified_at_last_window_instant():
    # the node's group changes over time and it is gone at the reference,
    # so its edges must classify by the value at the window's last alive instant
    nodes = {
        "x": NodeData("person", TemporalElement.span(0, 1), tv_props={"grp": {0: "a", 1: "b"}}),
        "y": NodeData("person", TemporalElement.span(0, 2), static_props={"grp": "a"}),
    }
    edges = {Edge("x", "y", "link"): TemporalElement.span(0, 1)}
    g = TemporalPropertyGraph(["t0", "t1", "t2"], nodes, edges)
    ev = event_graph(g, EventKind.SHRINKAGE, 2, TemporalElement.span(0, 1), Semantics.LOOSE)
    assert ev.nodes == {"x"}
    assert ev.edges == {Edge("x", "y", "link")}
    assert ev.node_props["x"]["grp"] == "b"  # value at instant 1, not 0
    assert ev.node_props["y"]["grp"] == "a"  # survivor resolved at the reference


def test_event_graph_is_deterministic(toy_graph):
    t3 = toy_graph.instant_of_label("3")
    window = TemporalElement.span(0, t3 - 1)
    a = event_graph(toy_graph, EventKind.SHRINKAGE, t3, window, Semantics.LOOSE)
    b = event_graph(toy_graph, EventKind.SHRINKAGE, t3, window, Semantics.LOOSE)
    assert a == b


# -- count direction -------------------------------------------------------


@pytest.mark.parametrize(
    "kind,sem,expected",
    [
        (EventKind.STABILITY, Semantics.STRICT, CountDirection.DECREASING),
        (EventKind.STABILITY, Semantics.LOOSE, CountDirection.INCREASING),
        (EventKind.GROWTH, Semantics.STRICT, CountDirection.INCREASING),
        (EventKind.GROWTH, Semantics.LOOSE, CountDirection.DECREASING),
        (EventKind.SHRINKAGE, Semantics.STRICT, CountDirection.DECREASING),
        (EventKind.SHRINKAGE, Semantics.LOOSE, CountDirection.INCREASING),
    ],
)
def test_count_direction_table(kind, sem, expected):
    assert count_direction(kind, sem) is expected


# -- partition and monotonicity --------------------------------------------


@settings(max_examples=40, deadline=None)
@given(temporal_graphs(), st.data())
def test_partition_property(g, data):
    reference = data.draw(st.integers(1, g.horizon_length - 1))
    length = data.draw(st.integers(1, reference))
    sem = data.draw(st.sampled_from(list(Semantics)))
    window = TemporalElement.span(reference - length, reference - 1)
    stable = event_graph(g, EventKind.STABILITY, reference, window, sem)
    grown = event_graph(g, EventKind.GROWTH, reference, window, sem)
    shrunk = event_graph(g, EventKind.SHRINKAGE, reference, window, sem)
    snap = g.snapshot(reference)
    past = g.combine(window, sem)
    assert stable.edges | grown.edges == snap.edges and not stable.edges & grown.edges
    assert stable.nodes | grown.nodes == snap.nodes and not stable.nodes & grown.nodes
    assert stable.edges | shrunk.edges == past.edges and not stable.edges & shrunk.edges
    assert stable.nodes | shrunk.nodes == past.nodes and not stable.nodes & shrunk.nodes


@settings(max_examples=40, deadline=None)
@given(temporal_graphs(), st.data())
def test_event_sets_move_with_window_per_direction(g, data):
    reference = data.draw(st.integers(1, g.horizon_length - 1))
    short = data.draw(st.integers(1, reference))
    long = data.draw(st.integers(short, reference))
    kind = data.draw(st.sampled_from(list(EventKind)))
    sem = data.draw(st.sampled_from(list(Semantics)))
    small = event_graph(g, kind, reference, TemporalElement.span(reference - short, reference - 1), sem)
    big = event_graph(g, kind, reference, TemporalElement.span(reference - long, reference - 1), sem)
    if count_direction(kind, sem) is CountDirection.DECREASING:
        assert big.edges <= small.edges
    else:
        assert small.edges <= big.edges
