"""Matchings between a window of consecutive lower vertices and strip triangles.

A matching picks, for each vertex of the window, a triangle incident with it,
all picks distinct. Three independent counters are provided: a dynamic
program (the default), plain backtracking enumeration, and the reduction
through cutting a special vertex.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, PreconditionError, ResourceLimitError
from .frieze import FriezeView
from .ops import shifted_index
from .strip import (
    StripTriangulation,
    StripVertex,
    Triangle,
    position,
    quiddity_of_strip,
    special_vertices,
    strip_cut,
    vertex_at,
)

DEFAULT_COUNT_LIMIT = 16
DEFAULT_ENUMERATION_LIMIT = 10
LIMIT_ENV = "FRIEZE_LIMIT_WINDOW"


def enumeration_limit() -> int:
    raw = os.environ.get(LIMIT_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{LIMIT_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Matching:
    window: tuple[StripVertex, ...]
    triangles: tuple[Triangle, ...]


def _window(t: StripTriangulation, v_start, v_end) -> tuple[int, int]:
    a = v_start if isinstance(v_start, int) else position(v_start, t.n)
    b = v_end if isinstance(v_end, int) else position(v_end, t.n)
    if b < a:
        raise DomainError("the window must run left to right")
    return a, b


def _options(t: StripTriangulation, a: int, b: int) -> list[list[Triangle]]:
    touching = t.triangles_touching(a, b)
    return [[tri for tri in touching if p in tri.lower] for p in range(a, b + 1)]


def matching_count(t: StripTriangulation, v_start, v_end, limit: int = DEFAULT_COUNT_LIMIT) -> int:
    """Number of matchings on the window; positions or lower vertices accepted."""
    a, b = _window(t, v_start, v_end)
    if b - a + 1 > limit:
        raise ResourceLimitError(f"window of {b - a + 1} vertices exceeds the counting limit {limit}")
    options = _options(t, a, b)
    # a used triangle only matters while a later vertex can still pick it
    last_use = {}
    for idx, opts in enumerate(options):
        for tri in opts:
            last_use[tri] = idx

    @lru_cache(maxsize=None)
    def count(idx: int, used: frozenset) -> int:
        if idx == len(options):
            return 1
        total = 0
        for tri in options[idx]:
            if tri in used:
                continue
            nxt = frozenset(x for x in used | {tri} if last_use[x] > idx)
            total += count(idx + 1, nxt)
        return total

    return count(0, frozenset())


def enumerate_matchings(t: StripTriangulation, v_start, v_end, limit: int | None = None) -> list[Matching]:
    a, b = _window(t, v_start, v_end)
    cap = enumeration_limit() if limit is None else limit
    if b - a + 1 > cap:
        raise ResourceLimitError(f"window of {b - a + 1} vertices exceeds the enumeration limit {cap}")
    options = _options(t, a, b)
    window = tuple(vertex_at(p, t.n) for p in range(a, b + 1))
    out: list[Matching] = []
    chosen: list[Triangle] = []

    def backtrack(idx: int) -> None:
        if idx == len(options):
            out.append(Matching(window, tuple(chosen)))
            return
        for tri in options[idx]:
            if tri not in chosen:
                chosen.append(tri)
                backtrack(idx + 1)
                chosen.pop()

    backtrack(0)
    return out


@lru_cache(maxsize=4096)
def _recursive(t: StripTriangulation, i: int, j: int) -> int:
    d = j - i
    if d == -1:
        return 1
    if d == -2:
        return 0
    if d < -2:
        raise DomainError(f"window ({i},{j}) is not defined")
    specials = special_vertices(t)
    if not specials:
        if not t.is_star():
            raise PreconditionError("a non-star strip without special vertices")
        return d + 2
    x = specials[0]
    period = t.n
    smaller = strip_cut(t, x)
    ii = shifted_index(i, x + 1, period)
    jj = shifted_index(j, x - 1, period)
    on_i = (i - x - 1) % period == 0
    on_j = (j - x + 1) % period == 0
    m = lambda p, q: _recursive(smaller, p, q)
    if on_i and on_j:
        return m(ii - 1, jj - 1) + m(ii, jj) + m(ii - 1, jj) + m(ii, jj - 1)
    if on_j:
        return m(ii, jj - 1) + m(ii, jj)
    if on_i:
        return m(ii - 1, jj) + m(ii, jj)
    return m(ii, jj)


def matching_count_recursive(t: StripTriangulation, v_start, v_end) -> int:
    """Count by repeatedly cutting a special vertex down to the star strip.

    Window ``i^(0) .. j^(0)`` in 1-based linear indices corresponds to
    positions ``i-1 .. j-1``.
    """
    a, b = _window(t, v_start, v_end)
    return _recursive(t, a + 1, b + 1)


def matching_discrepancy(t: StripTriangulation, depth: int, limit: int = DEFAULT_COUNT_LIMIT):
    """First ``(i, j, count, entry)`` where counts and frieze entries differ, else None."""
    if depth + 1 > limit:
        raise ResourceLimitError(f"depth {depth} needs windows beyond the limit {limit}")
    view = FriezeView(quiddity_of_strip(t))
    for i in range(1, t.n + 1):
        for j in range(i, i + depth + 1):
            c = matching_count(t, i - 1, j - 1, limit)
            e = view.entry(i, j)
            if c != e:
                return (i, j, c, e)
    return None


def verify_matching_theorem(t: StripTriangulation, depth: int, limit: int = DEFAULT_COUNT_LIMIT) -> bool:
    return matching_discrepancy(t, depth, limit) is None
