"""Vertex labels on a periodic strip triangulation, grown outward from a start vertex.

The start gets 0 and its neighbours 1. After that, any triangle with exactly
one unlabelled corner gets that corner labelled with the sum of the other two.
All upper vertices share a single label, so a quadrilateral with two upper
corners behaves like a triangle. Entries of the frieze and the common
differences of its arithmetic progressions are read off these labels.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Mapping

from .errors import DomainError, InvalidTriangulationError, ResourceLimitError
from .strip import (
    StripTriangulation,
    StripVertex,
    Triangle,
    bridging_count,
    position,
    upper,
    vertex_at,
)

UPPER = "U"


@dataclass(frozen=True)
class LabelMap:
    """Labels on lower positions ``lo..hi`` plus the shared upper label."""

    start: StripVertex
    n: int
    lo: int
    hi: int
    values: tuple[int | None, ...]
    upper_label: int | None
    consistent: bool = True

    def at(self, p: int) -> int:
        if not self.lo <= p <= self.hi:
            raise DomainError(f"position {p} outside the labelled window {self.lo}..{self.hi}")
        v = self.values[p - self.lo]
        if v is None:
            raise ResourceLimitError(f"position {p} was not reached by the labelling")
        return v

    def label(self, v: StripVertex) -> int:
        if v.is_upper:
            if self.upper_label is None:
                raise ResourceLimitError("the upper boundary was not reached")
            return self.upper_label
        return self.at(position(v, self.n))

    @property
    def labels(self) -> Mapping[StripVertex, int]:
        out = {vertex_at(p, self.n): v for p, v in zip(range(self.lo, self.hi + 1), self.values) if v is not None}
        return out

    def rightward(self, count: int) -> list[int]:
        s = position(self.start, self.n)
        return [self.at(s + d) for d in range(count)]

    def leftward(self, count: int) -> list[int]:
        s = position(self.start, self.n)
        return [self.at(s - d) for d in range(count)]


def _corners(tri: Triangle) -> tuple:
    return tri.lower + ((UPPER,) if tri.upper else ())


def _propagate(t: StripTriangulation, lo: int, hi: int, labels: dict, rng: random.Random | None) -> None:
    tris = t.triangles_within(lo, hi)
    at_corner: dict = {}
    for idx, tri in enumerate(tris):
        for c in _corners(tri):
            at_corner.setdefault(c, []).append(idx)
    heap: list = []

    def push(idx: int) -> None:
        tri = tris[idx]
        if sum(c not in labels for c in _corners(tri)) == 1:
            # lower-only triangles go first; upper-boundary triangles wait
            key = rng.random() if rng else (bool(tri.upper), tri.lower[0])
            heapq.heappush(heap, (key, idx))

    for idx in range(len(tris)):
        push(idx)
    while heap:
        _, idx = heapq.heappop(heap)
        corners = _corners(tris[idx])
        missing = [c for c in corners if c not in labels]
        if len(missing) != 1:
            continue
        labels[missing[0]] = sum(labels[c] for c in corners if c != missing[0])
        for nxt in at_corner.get(missing[0], ()):
            push(nxt)


def _consistent(t: StripTriangulation, lo: int, hi: int, labels: dict) -> bool:
    for tri in t.triangles_within(lo, hi):
        corners = _corners(tri)
        if all(c in labels for c in corners):
            vals = sorted(labels[c] for c in corners)
            if vals[2] != vals[0] + vals[1]:
                return False
    return True


def labels_from(
    t: StripTriangulation,
    v: StripVertex,
    window: tuple[int, int] | None = None,
    *,
    margin: int | None = None,
    rng: random.Random | None = None,
) -> LabelMap:
    """Label the strip from the start vertex ``v``.

    ``window`` is a pair of lower positions that must end up fully labelled;
    the computation runs over a wider range (``margin`` on each side) so that
    truncation never blocks the window. ``rng`` shuffles the processing order.
    """
    n = t.n
    if v.is_upper:
        centre = v.k * n
    else:
        centre = position(v, n)
    lo, hi = window if window is not None else (centre - 2 * n, centre + 2 * n)
    if hi < lo:
        raise DomainError("window must run left to right")
    pad = 2 * n + 2 if margin is None else margin
    lo_c, hi_c = min(lo, centre) - pad, max(hi, centre) + pad
    labels: dict = {}
    if v.is_upper:
        labels[UPPER] = 0
        for s in t.bridging_within(v.k * n, v.k * n + n - 1):
            labels[s] = 1
    else:
        labels[centre] = 0
        for p in t.neighbours(centre):
            labels[p] = 1
        if t.has_bridging(centre):
            labels[UPPER] = 1
    _propagate(t, lo_c, hi_c, labels, rng)
    values = tuple(labels.get(p) for p in range(lo, hi + 1))
    if any(x is None for x in values):
        raise ResourceLimitError(f"labelling from {v!r} stalled inside the window {lo}..{hi}")
    return LabelMap(v, n, lo, hi, values, labels.get(UPPER), _consistent(t, lo_c, hi_c, labels))


def diagonal_via_labels(t: StripTriangulation, i: int, depth: int) -> list[int]:
    """Entries ``m(i, j)`` for ``j = i-2 .. i+depth`` read from labels started at ``(i-1)^(0)``."""
    s = i - 2
    lm = labels_from(t, vertex_at(s, t.n), (s, i + depth))
    return [lm.at(p) for p in range(s, i + depth + 1)]


def entry_via_labels(t: StripTriangulation, i: int, j: int) -> int:
    if j - i < -2:
        raise DomainError(f"entry ({i},{j}) lies above the zero row")
    s = i - 2
    return labels_from(t, vertex_at(s, t.n), (s, j)).at(j)


def puncture_labels(t: StripTriangulation, k: int = 0) -> tuple[int, ...]:
    """Labels of ``1^(k) .. n^(k)`` when starting from the upper vertex ``0^(k)``."""
    n = t.n
    lm = labels_from(t, upper(k), (k * n, k * n + n - 1))
    if not lm.consistent:
        raise InvalidTriangulationError("labels from the upper boundary are inconsistent")
    return tuple(lm.at(k * n + c) for c in range(n))


def common_differences(t: StripTriangulation) -> tuple[tuple[int, ...], ...]:
    """``d[i-1][k-1] = r * n_{i-1} * n_{i+k-2}`` with labels read cyclically."""
    n = t.n
    r = bridging_count(t)
    nl = puncture_labels(t)
    lab = lambda i: nl[(i - 1) % n]
    return tuple(tuple(r * lab(i - 1) * lab(i + k - 2) for k in range(1, n + 1)) for i in range(1, n + 1))
