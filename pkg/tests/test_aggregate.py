import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evoskyline import (
    AggregationSpec,
    Edge,
    EventKind,
    NodeData,
    SchemaError,
    Semantics,
    TemporalElement,
    TemporalPropertyGraph,
    UniverseMismatchError,
    aggregate,
    combination_universe,
    count,
    count_vector,
    display_pair,
    event_graph,
)

from .strategies import temporal_graphs

MALE = (("gender", "male"),)
FEMALE = (("gender", "female"),)
GENDER = AggregationSpec.make(["author"], ["gender"])
GENDER_TOPIC = AggregationSpec.make(["author", "conference"], ["gender", "topic"])


# -- the worked examples on the toy network ---------------------------------


def test_gender_aggregation_of_final_instant(toy_graph):
    snap = toy_graph.snapshot(toy_graph.instant_of_label("3"))
    agg = aggregate(snap, GENDER)
    assert agg.group_weights == {MALE: 2, FEMALE: 2}
    assert sorted(agg.passthrough) == ["4", "5"]
    assert all(p.weight == 1 for p in agg.passthrough.values())
    assert agg.edge_weights[("collaborate", FEMALE, MALE)] == 2
    assert agg.edge_weights[("publish", MALE, "4")] == 1
    assert agg.node_total == len(snap.nodes)
    assert agg.edge_total == len(snap.edges)


def test_gender_topic_aggregation_of_final_instant(toy_graph):
    snap = toy_graph.snapshot(toy_graph.instant_of_label("3"))
    agg = aggregate(snap, GENDER_TOPIC)
    data_mining = (("topic", "data mining"),)
    assert agg.group_weights[data_mining] == 2
    assert agg.passthrough == {}
    assert agg.edge_weights[("publish", MALE, data_mining)] == 3


def test_stable_mixed_collaboration_count(toy_graph):
    t3 = toy_graph.instant_of_label("3")
    window = TemporalElement.span(toy_graph.instant_of_label("1"), toy_graph.instant_of_label("2"))
    ev = event_graph(toy_graph, EventKind.STABILITY, t3, window, Semantics.LOOSE)
    assert count(ev, "collaborate", GENDER, MALE, FEMALE) == 1


def test_identity_aggregation_all_weights_one(toy_graph):
    # grouping authors by a property with a distinct value per node
    spec = AggregationSpec.make(["author"], ["#publications"])
    snap = toy_graph.snapshot(toy_graph.instant_of_label("1"))
    agg = aggregate(snap, spec)
    assert agg.node_total == len(snap.nodes)
    assert agg.edge_total == len(snap.edges)


# -- direct counts -----------------------------------------------------------


def three_node_growth_fixture():
    spec = AggregationSpec.make(["person"], ["gender"])
    nodes = {
        "a": NodeData("person", TemporalElement.span(0, 1), static_props={"gender": "male"}),
        "b": NodeData("person", TemporalElement.span(0, 1), static_props={"gender": "male"}),
        "c": NodeData("person", TemporalElement.span(0, 1), static_props={"gender": "female"}),
    }
    edges = {
        Edge("a", "c", "e"): TemporalElement.point(1),
        Edge("a", "b", "e"): TemporalElement.point(1),
    }
    g = TemporalPropertyGraph(["t0", "t1"], nodes, edges)
    ev = event_graph(g, EventKind.GROWTH, 1, TemporalElement.point(0), Semantics.LOOSE)
    return g, spec, ev


def test_growth_counts_on_three_node_fixture():
    g, spec, ev = three_node_growth_fixture()
    male = (("gender", "male"),)
    female = (("gender", "female"),)
    assert count(ev, "e", spec, male, female) == 1
    assert count(ev, "e", spec, male, male) == 1
    assert count(ev, "e", spec, female, female) == 0
    assert count(ev, "e", spec, female, male) == 0


def test_count_vector_on_three_node_fixture():
    g, spec, ev = three_node_growth_fixture()
    universe = combination_universe(g, "e", spec)
    vec = count_vector(ev, "e", spec, universe)
    assert vec.length == 1
    assert vec.as_dict() == {
        ((("gender", "female"),), (("gender", "female"),)): 0,
        ((("gender", "female"),), (("gender", "male"),)): 0,
        ((("gender", "male"),), (("gender", "female"),)): 1,
        ((("gender", "male"),), (("gender", "male"),)): 1,
    }
    assert vec.total == sum(1 for e in ev.edges if e.label == "e")


def test_count_on_empty_event_graph(toy_graph):
    # nothing shrinks between the first two instants for collaborate f->f
    t2 = toy_graph.instant_of_label("2")
    ev = event_graph(toy_graph, EventKind.SHRINKAGE, t2, TemporalElement.point(t2 - 1), Semantics.LOOSE)
    universe = combination_universe(toy_graph, "collaborate", GENDER)
    vec = count_vector(ev, "collaborate", GENDER, universe)
    for pair in universe:
        assert count(ev, "collaborate", GENDER, pair[0], pair[1]) == vec.get(pair)


def test_unknown_combination_is_rejected(toy_graph):
    snap = toy_graph.snapshot(toy_graph.instant_of_label("3"))
    universe = combination_universe(toy_graph, "collaborate", GENDER)
    other = (("gender", "other"),)
    with pytest.raises(UniverseMismatchError):
        count(snap, "collaborate", GENDER, other, MALE, universe=universe)


# -- the combination universe ------------------------------------------------


def test_collaborate_universe_is_ordered_gender_pairs(toy_graph):
    universe = combination_universe(toy_graph, "collaborate", GENDER)
    assert [display_pair(p) for p in universe] == [
        "female->female",
        "female->male",
        "male->female",
        "male->male",
    ]


def test_publish_universe_uses_passthrough_ids(toy_graph):
    universe = combination_universe(toy_graph, "publish", GENDER)
    assert [display_pair(p) for p in universe] == [
        "female->4",
        "female->5",
        "male->4",
        "male->5",
    ]


def test_publish_universe_with_both_labels_aggregated(toy_graph):
    universe = combination_universe(toy_graph, "publish", GENDER_TOPIC)
    assert [display_pair(p) for p in universe] == [
        "female->data mining",
        "male->data mining",
    ]


def test_symmetric_label_uses_unordered_pairs():
    spec = AggregationSpec.make(["person"], ["gender"])
    nodes = {
        "a": NodeData("person", TemporalElement.point(0), static_props={"gender": "male"}),
        "b": NodeData("person", TemporalElement.point(0), static_props={"gender": "female"}),
    }
    edges = {Edge("a", "b", "meets"): TemporalElement.point(0)}
    g = TemporalPropertyGraph(["t0"], nodes, edges, symmetric_labels=["meets"])
    universe = combination_universe(g, "meets", spec)
    assert [display_pair(p, symmetric=True) for p in universe] == [
        "female--female",
        "female--male",
        "male--male",
    ]
    snap = g.snapshot(0)
    male = (("gender", "male"),)
    female = (("gender", "female"),)
    assert count(snap, "meets", spec, male, female) == 1
    assert count(snap, "meets", spec, female, male) == 1  # same unordered pair


def test_spec_validation_errors(toy_graph):
    with pytest.raises(SchemaError):
        combination_universe(toy_graph, "collaborate", AggregationSpec.make(["author"], ["topic"]))
    with pytest.raises(SchemaError):
        # conference is aggregated but has no property in P
        combination_universe(
            toy_graph, "publish", AggregationSpec.make(["author", "conference"], ["gender"])
        )


def test_missing_required_value_is_schema_error():
    nodes = {
        "a": NodeData("person", TemporalElement.point(0), static_props={"gender": "male"}),
        "b": NodeData("person", TemporalElement.point(0)),  # no gender at all
    }
    edges = {Edge("a", "b", "e"): TemporalElement.point(0)}
    g = TemporalPropertyGraph(
        ["t0"], nodes, edges, declared_prop_labels={"gender": ["person"]}
    )
    spec = AggregationSpec.make(["person"], ["gender"])
    with pytest.raises(SchemaError):
        aggregate(g.snapshot(0), spec)


# -- equivalence of the two counting routes ----------------------------------


@settings(max_examples=40, deadline=None)
@given(temporal_graphs(values=("a", "b", "c")), st.data())
def test_count_matches_aggregated_edge_weight(g, data):
    spec = AggregationSpec.make(["person"], ["grp"])
    reference = data.draw(st.integers(1, g.horizon_length - 1))
    length = data.draw(st.integers(1, reference))
    kind = data.draw(st.sampled_from(list(EventKind)))
    sem = data.draw(st.sampled_from(list(Semantics)))
    ev = event_graph(g, kind, reference, TemporalElement.span(reference - length, reference - 1), sem)
    agg = aggregate(ev, spec)
    universe = combination_universe(g, "link", spec)
    for pair in universe:
        weight = agg.edge_weights.get(("link", pair[0], pair[1]), 0)
        assert count(ev, "link", spec, pair[0], pair[1]) == weight
    vec = count_vector(ev, "link", spec, universe)
    assert vec.total == sum(1 for e in ev.edges if e.label == "link")


@settings(max_examples=40, deadline=None)
@given(temporal_graphs(values=("a", "b", "c")), st.data())
def test_aggregation_conserves_weights(g, data):
    spec = AggregationSpec.make(["person"], ["grp"])
    t = data.draw(st.integers(0, g.horizon_length - 1))
    snap = g.snapshot(t)
    agg = aggregate(snap, spec)
    assert agg.node_total == len(snap.nodes)
    assert agg.edge_total == len(snap.edges)
    assert all(w >= 1 for w in agg.group_weights.values())
