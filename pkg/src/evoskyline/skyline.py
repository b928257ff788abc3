"""Evolution skylines over (window length, event counts) criteria.

A candidate tuple is one (reference instant, preceding window) pair together
with its per-pair event edge counts. Dominance is Pareto dominance over the
vector (length, counts), where a longer window counts as better for events
whose counts shrink as the window grows, and a shorter one for events whose
counts grow. Because that is a strict partial order, pruning dominated
candidates as they stream in yields exactly the set an exhaustive pairwise
comparison would, which is what `brute_force_skyline` re-derives as an
independent oracle.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .aggregate import (
    AggregationSpec,
    CountVector,
    PairKey,
    canonical_pair,
    combination_universe,
    combo_for,
    count,
    count_vector,
    validate_spec,
)
from .errors import UniverseMismatchError
from .events import CountDirection, EventKind, count_direction, event_graph
from .graph import Edge, Semantics, TemporalPropertyGraph
from .temporal import TemporalElement

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SkylineTuple:
    """One candidate: a reference instant, its preceding window, and the count vector."""

    reference: int
    window: TemporalElement
    vector: CountVector

    @property
    def length(self) -> int:
        return self.vector.length

    @property
    def counts(self) -> tuple[int, ...]:
        return self.vector.counts


def dominates(a: SkylineTuple, b: SkylineTuple, direction: CountDirection) -> bool:
    """True when ``a`` is at least as good as ``b`` everywhere and strictly better somewhere.

    "Good" for the length criterion depends on the direction: longer wins for
    decreasing counts, shorter wins for increasing counts. Counts always
    compare with >=, all dimensions included.
    """
    if a.vector.universe != b.vector.universe:
        raise UniverseMismatchError("cannot compare tuples over different universes")
    la, lb = a.length, b.length
    if direction is CountDirection.DECREASING:
        len_ok, len_strict = la >= lb, la > lb
    else:
        len_ok, len_strict = la <= lb, la < lb
    if not len_ok:
        return False
    ge_all = True
    gt_any = False
    for wa, wb in zip(a.counts, b.counts):
        if wa < wb:
            ge_all = False
            break
        if wa > wb:
            gt_any = True
    return ge_all and (len_strict or gt_any)


class SkylineSet:
    """The non-dominated tuples, bucketed by window length."""

    def __init__(self, direction: CountDirection):
        self.direction = direction
        self.by_length: dict[int, list[SkylineTuple]] = {}

    def __len__(self) -> int:
        return sum(len(bucket) for bucket in self.by_length.values())

    def __contains__(self, item: SkylineTuple) -> bool:
        return item in self.by_length.get(item.length, ())

    def members(self) -> set[SkylineTuple]:
        return {t for bucket in self.by_length.values() for t in bucket}

    def tuples(self) -> list[SkylineTuple]:
        """Canonical order: length (best first), then reference, then counts."""
        reverse = self.direction is CountDirection.DECREASING
        out: list[SkylineTuple] = []
        for length in sorted(self.by_length, reverse=reverse):
            out.extend(sorted(self.by_length[length], key=lambda t: (t.reference, t.counts)))
        return out

    def add(self, item: SkylineTuple) -> None:
        self.by_length.setdefault(item.length, []).append(item)

    def discard(self, item: SkylineTuple) -> None:
        bucket = self.by_length.get(item.length, [])
        bucket.remove(item)
        if not bucket:
            del self.by_length[item.length]


@dataclass
class DominationRecord:
    """Exact domination degrees: how many candidates each tuple dominates."""

    dod: dict[SkylineTuple, int] = field(default_factory=dict)

    def get(self, item: SkylineTuple) -> int:
        return self.dod.get(item, 0)


def merge_candidates(
    candidates: Iterable[SkylineTuple], direction: CountDirection
) -> tuple[SkylineSet, dict[SkylineTuple, int]]:
    """Fold a candidate stream into its skyline, pruning dominated tuples as they arrive.

    Also keeps the running domination estimate in the style of incremental
    top-k maintenance (a pruned tuple credits its dominator and passes its
    own tally along). The estimate can undercount the exact degree, so
    callers report the post-pass value and may log any divergence.
    """
    sky = SkylineSet(direction)
    estimate: dict[SkylineTuple, int] = {}
    longer_wins = direction is CountDirection.DECREASING

    for cand in candidates:
        # only tuples whose length is "at least as good" can dominate the candidate
        lengths = sorted(sky.by_length)
        if longer_wins:
            dominator_lengths = [ln for ln in lengths if ln >= cand.length]
        else:
            dominator_lengths = [ln for ln in lengths if ln <= cand.length]
        beaten = False
        for ln in dominator_lengths:
            for kept in sky.by_length[ln]:
                if dominates(kept, cand, direction):
                    estimate[kept] = estimate.get(kept, 0) + 1
                    beaten = True
                    break
            if beaten:
                break
        if beaten:
            continue

        if longer_wins:
            victim_lengths = [ln for ln in lengths if ln <= cand.length]
        else:
            victim_lengths = [ln for ln in lengths if ln >= cand.length]
        gained = 0
        for ln in victim_lengths:
            for kept in list(sky.by_length.get(ln, ())):
                if dominates(cand, kept, direction):
                    gained += 1 + estimate.pop(kept, 0)
                    sky.discard(kept)
        estimate[cand] = estimate.get(cand, 0) + gained
        sky.add(cand)
    return sky, estimate


def exact_domination(
    members: Iterable[SkylineTuple],
    candidates: Sequence[SkylineTuple],
    direction: CountDirection,
) -> DominationRecord:
    """Count, for each member, exactly how many candidates it dominates."""
    record = DominationRecord()
    for m in members:
        record.dod[m] = sum(1 for c in candidates if dominates(m, c, direction))
    return record


# -- candidate generation ----------------------------------------------


def _edges_by_instant(g: TemporalPropertyGraph, edge_label: str) -> list[frozenset[Edge]]:
    per: list[set[Edge]] = [set() for _ in range(g.horizon_length)]
    for e, te in g.edges.items():
        if e.label != edge_label:
            continue
        for t in te.instants():
            per[t].add(e)
    return [frozenset(s) for s in per]


def _endpoint_key_at(g: TemporalPropertyGraph, node_id: str, reference: int, spec: AggregationSpec):
    """Classify an endpoint for reference ``reference``: at it if alive there, else at its last earlier instant."""
    data = g.nodes[node_id]
    if data.existence.contains(reference):
        at = reference
    else:
        at = data.existence.last_before(reference)
        if at is None:
            raise UniverseMismatchError(f"node {node_id!r} has no instant at or before {reference}")
    view = _KeyView(g, at)
    combo = combo_for(view, node_id, spec)
    return node_id if combo is None else combo


class _KeyView:
    """Minimal view adapter so `combo_for` can classify one node at one instant."""

    def __init__(self, g: TemporalPropertyGraph, at: int):
        self._g = g
        self._at = at
        self.schema = g.schema

    @property
    def node_labels(self):
        return _NodeLabelProxy(self._g)

    @property
    def node_props(self):
        return _NodePropsProxy(self._g, self._at)


class _NodeLabelProxy:
    def __init__(self, g):
        self._g = g

    def __getitem__(self, node_id):
        return self._g.nodes[node_id].label


class _NodePropsProxy:
    def __init__(self, g, at):
        self._g = g
        self._at = at

    def __getitem__(self, node_id):
        return self._g.props_at(node_id, self._at)


def _counts_by_length(
    g: TemporalPropertyGraph,
    kind: EventKind,
    semantics: Semantics,
    edge_label: str,
    spec: AggregationSpec,
    universe: tuple[PairKey, ...],
    edges_at: Sequence[frozenset[Edge]],
    reference: int,
) -> list[tuple[int, ...]]:
    """Count vectors for every window length 1..reference, shortest first.

    Windows grow one instant into the past, so each step only has to fold in
    (or drop) the edges of the newly added instant instead of recounting the
    whole window. Endpoint classification is window-independent for any edge
    that can appear in an event set, which is what makes the incremental
    bookkeeping sound; the brute-force oracle checks it end to end.
    """
    index = {pair: i for i, pair in enumerate(universe)}
    symmetric = edge_label in g.symmetric_labels
    node_keys: dict[str, object] = {}
    key_cache: dict[Edge, int] = {}

    def nkey(v: str):
        k = node_keys.get(v)
        if k is None:
            k = _endpoint_key_at(g, v, reference, spec)
            node_keys[v] = k
        return k

    def kidx(e: Edge) -> int:
        i = key_cache.get(e)
        if i is None:
            pair = canonical_pair(nkey(e.src), nkey(e.dst), symmetric)
            if pair not in index:
                raise UniverseMismatchError(f"pair {pair} not in the active universe")
            i = index[pair]
            key_cache[e] = i
        return i

    current = edges_at[reference]
    counts = [0] * len(universe)
    out: list[tuple[int, ...]] = []
    live: set[Edge] | None = None
    seen: set[Edge] = set()

    if kind is EventKind.GROWTH:
        for e in current:
            counts[kidx(e)] += 1

    for length in range(1, reference + 1):
        added = edges_at[reference - length]
        if kind is EventKind.STABILITY and semantics is Semantics.LOOSE:
            for e in added:
                if e in current and e not in seen:
                    seen.add(e)
                    counts[kidx(e)] += 1
        elif kind is EventKind.STABILITY:
            if live is None:
                live = {e for e in current if e in added}
                for e in live:
                    counts[kidx(e)] += 1
            else:
                for e in [e for e in live if e not in added]:
                    live.discard(e)
                    counts[kidx(e)] -= 1
        elif kind is EventKind.GROWTH and semantics is Semantics.LOOSE:
            for e in added:
                if e in current and e not in seen:
                    seen.add(e)
                    counts[kidx(e)] -= 1
        elif kind is EventKind.GROWTH:
            if live is None:
                live = {e for e in current if e in added}
                for e in live:
                    counts[kidx(e)] -= 1
            else:
                for e in [e for e in live if e not in added]:
                    live.discard(e)
                    counts[kidx(e)] += 1
        elif kind is EventKind.SHRINKAGE and semantics is Semantics.LOOSE:
            for e in added:
                if e not in current and e not in seen:
                    seen.add(e)
                    counts[kidx(e)] += 1
        else:
            if live is None:
                live = set(added)
                for e in live:
                    if e not in current:
                        counts[kidx(e)] += 1
            else:
                for e in [e for e in live if e not in added]:
                    live.discard(e)
                    if e not in current:
                        counts[kidx(e)] -= 1
        out.append(tuple(counts))
    return out


def _reference_candidates(
    g: TemporalPropertyGraph,
    kind: EventKind,
    semantics: Semantics,
    edge_label: str,
    spec: AggregationSpec,
    universe: tuple[PairKey, ...],
    edges_at: Sequence[frozenset[Edge]],
    reference: int,
) -> list[SkylineTuple]:
    by_length = _counts_by_length(g, kind, semantics, edge_label, spec, universe, edges_at, reference)
    tuples = [
        SkylineTuple(
            reference,
            TemporalElement.span(reference - length, reference - 1),
            CountVector(universe, counts, length),
        )
        for length, counts in enumerate(by_length, start=1)
    ]
    if count_direction(kind, semantics) is CountDirection.DECREASING:
        tuples.reverse()
    return tuples


def enumerate_candidates(
    g: TemporalPropertyGraph,
    kind: EventKind,
    semantics: Semantics,
    edge_label: str,
    spec: AggregationSpec,
    universe: tuple[PairKey, ...] | None = None,
) -> Iterator[SkylineTuple]:
    """Every (reference, window) candidate tuple.

    References run in horizon order. Per reference, windows run longest
    first for decreasing counts and shortest first for increasing counts.
    A horizon of fewer than two instants yields nothing.
    """
    if universe is None:
        universe = combination_universe(g, edge_label, spec)
    else:
        validate_spec(g, spec)
    edges_at = _edges_by_instant(g, edge_label)
    for reference in range(1, g.horizon_length):
        yield from _reference_candidates(
            g, kind, semantics, edge_label, spec, universe, edges_at, reference
        )


def unified_skyline(
    g: TemporalPropertyGraph,
    kind: EventKind,
    semantics: Semantics,
    edge_label: str,
    spec: AggregationSpec,
    *,
    parallel: int = 1,
    universe: tuple[PairKey, ...] | None = None,
) -> tuple[SkylineSet, DominationRecord]:
    """All non-dominated candidates plus their exact domination degrees.

    Candidates can be generated per reference point in parallel; the merge
    itself runs in a fixed order so the result never depends on scheduling.
    """
    if universe is None:
        universe = combination_universe(g, edge_label, spec)
    else:
        validate_spec(g, spec)
    direction = count_direction(kind, semantics)
    edges_at = _edges_by_instant(g, edge_label)
    references = range(1, g.horizon_length)

    def work(reference: int) -> list[SkylineTuple]:
        return _reference_candidates(
            g, kind, semantics, edge_label, spec, universe, edges_at, reference
        )

    if parallel > 1 and len(references) > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            per_reference = list(pool.map(work, references))
    else:
        per_reference = [work(r) for r in references]

    candidates = [cand for chunk in per_reference for cand in chunk]
    sky, estimate = merge_candidates(candidates, direction)
    record = exact_domination(sky.members(), candidates, direction)
    if log.isEnabledFor(logging.DEBUG):
        for member, exact in record.dod.items():
            if estimate.get(member, 0) != exact:
                log.debug(
                    "in-flight domination estimate %d != exact %d for reference %d length %d",
                    estimate.get(member, 0),
                    exact,
                    member.reference,
                    member.length,
                )
    return sky, record


def project_candidates(
    candidates: Sequence[SkylineTuple], pair_index: int
) -> list[SkylineTuple]:
    """Project full candidates onto one count dimension (plus length)."""
    out = []
    for cand in candidates:
        pair = cand.vector.universe[pair_index]
        vec = CountVector((pair,), (cand.counts[pair_index],), cand.length)
        out.append(SkylineTuple(cand.reference, cand.window, vec))
    return out


def individual_skyline(
    g: TemporalPropertyGraph,
    kind: EventKind,
    semantics: Semantics,
    edge_label: str,
    spec: AggregationSpec,
    pair: PairKey,
) -> list[SkylineTuple]:
    """The two-criteria skyline (window length, single pair count) for one pair."""
    universe = combination_universe(g, edge_label, spec)
    wanted = canonical_pair(pair[0], pair[1], edge_label in g.symmetric_labels)
    if wanted not in universe:
        raise UniverseMismatchError(f"pair {pair} not in the active universe")
    candidates = list(enumerate_candidates(g, kind, semantics, edge_label, spec, universe))
    projected = project_candidates(candidates, universe.index(wanted))
    sky, _ = merge_candidates(projected, count_direction(kind, semantics))
    return sky.tuples()


def all_individual_skylines(
    g: TemporalPropertyGraph,
    kind: EventKind,
    semantics: Semantics,
    edge_label: str,
    spec: AggregationSpec,
    universe: tuple[PairKey, ...] | None = None,
    candidates: Sequence[SkylineTuple] | None = None,
) -> dict[PairKey, list[SkylineTuple]]:
    """Individual skylines for every pair in the universe, sharing one candidate pass."""
    if universe is None:
        universe = combination_universe(g, edge_label, spec)
    if candidates is None:
        candidates = list(enumerate_candidates(g, kind, semantics, edge_label, spec, universe))
    direction = count_direction(kind, semantics)
    out: dict[PairKey, list[SkylineTuple]] = {}
    for i, pair in enumerate(universe):
        sky, _ = merge_candidates(project_candidates(candidates, i), direction)
        out[pair] = sky.tuples()
    return out


def brute_force_skyline(
    g: TemporalPropertyGraph,
    kind: EventKind,
    semantics: Semantics,
    edge_label: str,
    spec: AggregationSpec,
    pair: PairKey | None = None,
    universe: tuple[PairKey, ...] | None = None,
) -> tuple[SkylineSet, DominationRecord]:
    """Oracle: materialize every candidate through the event-graph pipeline and compare all pairs.

    Slow on purpose and independent of the incremental path: each candidate
    is computed by building the full event graph and counting its edges, and
    the skyline falls out of exhaustive pairwise dominance. Returns exact
    domination degrees for every candidate, skyline member or not.
    """
    if universe is None:
        universe = combination_universe(g, edge_label, spec)
    wanted = None
    if pair is not None:
        wanted = canonical_pair(pair[0], pair[1], edge_label in g.symmetric_labels)
        if wanted not in universe:
            raise UniverseMismatchError(f"pair {pair} not in the active universe")
        universe = (wanted,)
    direction = count_direction(kind, semantics)
    decreasing = direction is CountDirection.DECREASING
    candidates: list[SkylineTuple] = []
    for reference in range(1, g.horizon_length):
        lengths = range(reference, 0, -1) if decreasing else range(1, reference + 1)
        for length in lengths:
            window = TemporalElement.span(reference - length, reference - 1)
            ev = event_graph(g, kind, reference, window, semantics)
            if wanted is not None:
                vec = CountVector(
                    universe, (count(ev, edge_label, spec, wanted[0], wanted[1]),), length
                )
            else:
                vec = count_vector(ev, edge_label, spec, universe)
            candidates.append(SkylineTuple(reference, window, vec))
    sky = SkylineSet(direction)
    for cand in candidates:
        if not any(dominates(other, cand, direction) for other in candidates):
            sky.add(cand)
    record = DominationRecord(
        {c: sum(1 for other in candidates if dominates(c, other, direction)) for c in candidates}
    )
    return sky, record


def top_k(
    sky: SkylineSet, record: DominationRecord, k: int
) -> list[tuple[SkylineTuple, int]]:
    """The ``k`` skyline tuples with the highest domination degree, ties in canonical order."""
    if k <= 0:
        return []
    ordered = sky.tuples()
    position = {t: i for i, t in enumerate(ordered)}
    ranked = sorted(ordered, key=lambda t: (-record.get(t), position[t]))
    return [(t, record.get(t)) for t in ranked[:k]]
