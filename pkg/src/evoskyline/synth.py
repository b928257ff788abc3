"""Synthetic temporal graph generators for tests and benchmarks.

Both generators produce graphs that are valid by construction: edges only
exist at instants where both endpoints exist, and time-varying properties
carry a value at exactly the existence instants.
"""

from __future__ import annotations

import random

from .graph import Edge, NodeData, TemporalPropertyGraph
from .temporal import TemporalElement


def random_graph(
    rng: random.Random,
    *,
    max_instants: int = 10,
    max_nodes: int = 20,
    max_edge_instants: int = 80,
    n_values: int = 2,
    tv_probability: float = 0.5,
    symmetric_probability: float = 0.25,
) -> TemporalPropertyGraph:
    """A small random graph: one node label, one grouping property, one edge label."""
    n_instants = rng.randint(2, max_instants)
    n_nodes = rng.randint(2, max_nodes)
    values = ["a", "b", "c"][:n_values]

    nodes: dict[str, NodeData] = {}
    for i in range(n_nodes):
        alive = sorted(
            t for t in range(n_instants) if rng.random() < rng.uniform(0.3, 0.9)
        )
        if not alive:
            alive = [rng.randrange(n_instants)]
        existence = TemporalElement.from_instants(alive)
        if rng.random() < tv_probability:
            data = NodeData(
                label="person",
                existence=existence,
                tv_props={"grp": {t: rng.choice(values) for t in alive}},
            )
        else:
            data = NodeData(
                label="person",
                existence=existence,
                static_props={"grp": rng.choice(values)},
            )
        nodes[f"n{i}"] = data

    edges: dict[Edge, TemporalElement] = {}
    ids = sorted(nodes)
    budget = rng.randint(1, max_edge_instants)
    for _ in range(4 * max_edge_instants):
        if budget <= 0:
            break
        src, dst = rng.sample(ids, 2) if len(ids) > 1 else (ids[0], ids[0])
        if src == dst:
            continue
        shared = list(
            nodes[src].existence.intersection(nodes[dst].existence).instants()
        )
        if not shared:
            continue
        alive = [t for t in shared if rng.random() < 0.6] or [rng.choice(shared)]
        alive = alive[: max(budget, 1)]
        budget -= len(alive)
        key = Edge(src, dst, "link")
        element = TemporalElement.from_instants(alive)
        edges[key] = element if key not in edges else edges[key].union(element)

    symmetric = ["link"] if rng.random() < symmetric_probability else []
    return TemporalPropertyGraph(
        time_labels=[f"t{t}" for t in range(n_instants)],
        nodes=nodes,
        edges=edges,
        symmetric_labels=symmetric,
    )


def bibliographic_graph(
    seed: int, n_instants: int = 21, scale: float = 1.0
) -> TemporalPropertyGraph:
    """A synthetic bibliographic network at the scale of a real multi-year corpus.

    Author and conference populations ramp up over the horizon (roughly
    1.7k to 13k authors at scale 1.0), with author carry-over between
    instants and recurring collaborate/publish edges so that all three
    events have material to find.
    """
    rng = random.Random(seed)
    steps = max(n_instants - 1, 1)
    author_counts = [
        max(2, int(scale * 1700 * (13000 / 1700) ** (t / steps))) for t in range(n_instants)
    ]
    conf_counts = [max(1, int(scale * (15 + t))) for t in range(n_instants)]
    collab_factor = [1.4 + 0.8 * t / steps for t in range(n_instants)]
    publish_factor = [1.1 + 0.15 * t / steps for t in range(n_instants)]

    pub_values = ["low", "average", "high"]
    topics = [f"topic{i:02d}" for i in range(16)]
    cities = [f"city{i:02d}" for i in range(50)]

    author_alive: dict[str, list[int]] = {}
    author_gender: dict[str, str] = {}
    author_pubs: dict[str, dict[int, str]] = {}
    conf_alive: dict[str, list[int]] = {}
    conf_topic: dict[str, str] = {}
    conf_location: dict[str, dict[int, str]] = {}

    next_author = 0
    next_conf = 0

    def new_author() -> str:
        nonlocal next_author
        name = f"a{next_author:06d}"
        next_author += 1
        author_gender[name] = rng.choice(["female", "male"])
        return name

    def new_conf() -> str:
        nonlocal next_conf
        name = f"c{next_conf:04d}"
        next_conf += 1
        conf_topic[name] = rng.choice(topics)
        return name

    collab_instants: dict[tuple[str, str], list[int]] = {}
    publish_instants: dict[tuple[str, str], list[int]] = {}

    active_authors: list[str] = []
    active_confs: list[str] = []
    prev_collab: list[tuple[str, str]] = []
    prev_publish: list[tuple[str, str]] = []

    for t in range(n_instants):
        kept = [a for a in active_authors if rng.random() < 0.75]
        while len(kept) < author_counts[t]:
            kept.append(new_author())
        active_authors = kept[: author_counts[t]]
        for a in active_authors:
            author_alive.setdefault(a, []).append(t)
            history = author_pubs.setdefault(a, {})
            prior = history.get(t - 1)
            history[t] = prior if prior is not None and rng.random() < 0.8 else rng.choice(pub_values)

        kept_confs = [c for c in active_confs if rng.random() < 0.85]
        while len(kept_confs) < conf_counts[t]:
            kept_confs.append(new_conf())
        active_confs = kept_confs[: conf_counts[t]]
        for c in active_confs:
            conf_alive.setdefault(c, []).append(t)
            history = conf_location.setdefault(c, {})
            prior = history.get(t - 1)
            history[t] = prior if prior is not None and rng.random() < 0.7 else rng.choice(cities)

        author_set = set(active_authors)
        conf_set = set(active_confs)

        n_authors, n_confs = len(active_authors), len(active_confs)
        target = int(author_counts[t] * collab_factor[t])
        target = min(target, n_authors * (n_authors - 1) // 2)
        current = [e for e in prev_collab if e[0] in author_set and e[1] in author_set and rng.random() < 0.5]
        seen = set(current)
        while len(current) < target:
            pair = (rng.choice(active_authors), rng.choice(active_authors))
            if pair[0] == pair[1] or pair in seen:
                continue
            seen.add(pair)
            current.append(pair)
        for pair in current:
            collab_instants.setdefault(pair, []).append(t)
        prev_collab = current

        target = int(author_counts[t] * publish_factor[t])
        target = min(target, n_authors * n_confs // 2)
        current = [e for e in prev_publish if e[0] in author_set and e[1] in conf_set and rng.random() < 0.4]
        seen = set(current)
        while len(current) < target:
            pair = (rng.choice(active_authors), rng.choice(active_confs))
            if pair in seen:
                continue
            seen.add(pair)
            current.append(pair)
        for pair in current:
            publish_instants.setdefault(pair, []).append(t)
        prev_publish = current

    nodes: dict[str, NodeData] = {}
    for a, alive in author_alive.items():
        nodes[a] = NodeData(
            label="author",
            existence=TemporalElement.from_instants(alive),
            static_props={"gender": author_gender[a]},
            tv_props={"pubs": {t: author_pubs[a][t] for t in alive}},
        )
    for c, alive in conf_alive.items():
        nodes[c] = NodeData(
            label="conference",
            existence=TemporalElement.from_instants(alive),
            static_props={"topic": conf_topic[c]},
            tv_props={"location": {t: conf_location[c][t] for t in alive}},
        )

    edges: dict[Edge, TemporalElement] = {}
    for (src, dst), alive in collab_instants.items():
        edges[Edge(src, dst, "collaborate")] = TemporalElement.from_instants(alive)
    for (src, dst), alive in publish_instants.items():
        edges[Edge(src, dst, "publish")] = TemporalElement.from_instants(alive)

    return TemporalPropertyGraph(
        time_labels=[str(2000 + t) for t in range(n_instants)],
        nodes=nodes,
        edges=edges,
    )
