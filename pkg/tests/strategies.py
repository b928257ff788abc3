"""Hypothesis strategies for random temporal property graphs.

Graphs are valid by construction: edge existence stays inside both endpoint
existences and time-varying properties cover exactly the alive instants.
"""

from hypothesis import strategies as st

from evoskyline import Edge, NodeData, TemporalElement, TemporalPropertyGraph

interval_lists = st.lists(
    st.tuples(st.integers(0, 20), st.integers(0, 20)).map(lambda p: (min(p), max(p))),
    max_size=6,
)

temporal_elements = interval_lists.map(TemporalElement.from_intervals)


@st.composite
def temporal_graphs(draw, max_instants=8, max_nodes=8, max_edges=16, values=("a", "b")):
    n = draw(st.integers(2, max_instants))
    node_count = draw(st.integers(2, max_nodes))
    nodes = {}
    for i in range(node_count):
        alive = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=n, unique=True))
        existence = TemporalElement.from_instants(alive)
        if draw(st.booleans()):
            data = NodeData(
                "person",
                existence,
                tv_props={"grp": {t: draw(st.sampled_from(values)) for t in alive}},
            )
        else:
            data = NodeData("person", existence, static_props={"grp": draw(st.sampled_from(values))})
        nodes[f"n{i}"] = data

    ids = sorted(nodes)
    edges: dict[Edge, TemporalElement] = {}
    for _ in range(draw(st.integers(0, max_edges))):
        src = draw(st.sampled_from(ids))
        dst = draw(st.sampled_from(ids))
        if src == dst:
            continue
        shared = list(nodes[src].existence.intersection(nodes[dst].existence).instants())
        if not shared:
            continue
        alive = draw(st.lists(st.sampled_from(shared), min_size=1, max_size=len(shared), unique=True))
        key = Edge(src, dst, "link")
        element = TemporalElement.from_instants(alive)
        edges[key] = element if key not in edges else edges[key].union(element)

    symmetric = ["link"] if draw(st.booleans()) else []
    return TemporalPropertyGraph(
        time_labels=[f"t{i}" for i in range(n)],
        nodes=nodes,
        edges=edges,
        symmetric_labels=symmetric,
    )
