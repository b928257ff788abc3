"""Temporal elements: sets of discrete time instants held as sorted inclusive intervals.

Instants are non-negative integers mapped from source timestamps (years,
months, hours) at ingestion time. An element is canonical when its
intervals are sorted, disjoint, and non-adjacent, so every set of instants
has exactly one representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class TemporalElement:
    """An immutable set of instants stored as inclusive ``[start, end]`` intervals."""

    intervals: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev_end = None
        for start, end in self.intervals:
            if start > end:
                raise ValueError(f"interval [{start}, {end}] has start > end")
            if prev_end is not None and start <= prev_end + 1:
                raise ValueError("intervals must be sorted, disjoint, and non-adjacent")
            prev_end = end

    @classmethod
    def from_intervals(cls, pairs: Iterable[tuple[int, int]]) -> "TemporalElement":
        """Build an element from arbitrary interval pairs, coalescing overlap and adjacency."""
        items = sorted((int(s), int(e)) for s, e in pairs)
        merged: list[list[int]] = []
        for start, end in items:
            if start > end:
                raise ValueError(f"interval [{start}, {end}] has start > end")
            if merged and start <= merged[-1][1] + 1:
                merged[-1][1] = max(merged[-1][1], end)
            else:
                merged.append([start, end])
        return cls(tuple((s, e) for s, e in merged))

    @classmethod
    def from_instants(cls, instants: Iterable[int]) -> "TemporalElement":
        return cls.from_intervals((t, t) for t in instants)

    @classmethod
    def span(cls, start: int, end: int) -> "TemporalElement":
        return cls(((start, end),))

    @classmethod
    def point(cls, t: int) -> "TemporalElement":
        return cls(((t, t),))

    @classmethod
    def empty(cls) -> "TemporalElement":
        return cls(())

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    @property
    def length(self) -> int:
        """Number of instants covered."""
        return sum(end - start + 1 for start, end in self.intervals)

    @property
    def first(self) -> int:
        if self.is_empty:
            raise ValueError("empty temporal element has no first instant")
        return self.intervals[0][0]

    @property
    def last(self) -> int:
        if self.is_empty:
            raise ValueError("empty temporal element has no last instant")
        return self.intervals[-1][1]

    @property
    def is_contiguous(self) -> bool:
        return len(self.intervals) == 1

    def instants(self) -> Iterator[int]:
        for start, end in self.intervals:
            yield from range(start, end + 1)

    def contains(self, t: int) -> bool:
        return any(start <= t <= end for start, end in self.intervals)

    def last_before(self, t: int) -> int | None:
        """Latest instant strictly before ``t``, or None if there is none."""
        best = None
        for start, end in self.intervals:
            if start >= t:
                break
            best = min(end, t - 1)
        return best

    def intersection(self, other: "TemporalElement") -> "TemporalElement":
        out: list[tuple[int, int]] = []
        i = j = 0
        a, b = self.intervals, other.intervals
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo <= hi:
                out.append((lo, hi))
            if a[i][1] < b[j][1]:
                i += 1
            else:
                j += 1
        return TemporalElement(tuple(out))

    def union(self, other: "TemporalElement") -> "TemporalElement":
        return TemporalElement.from_intervals(list(self.intervals) + list(other.intervals))

    def issubset(self, other: "TemporalElement") -> bool:
        return self.intersection(other) == self

    def intersects(self, other: "TemporalElement") -> bool:
        return not self.intersection(other).is_empty

    def clip(self, lo: int, hi: int) -> "TemporalElement":
        """Restrict to instants within ``[lo, hi]``."""
        if lo > hi:
            return TemporalElement.empty()
        return self.intersection(TemporalElement.span(lo, hi))

    def __str__(self) -> str:
        parts = [f"[{s}]" if s == e else f"[{s}, {e}]" for s, e in self.intervals]
        return "{" + ", ".join(parts) + "}"
