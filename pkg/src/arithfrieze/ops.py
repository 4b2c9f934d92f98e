"""Gluing and cutting on quiddity rows: finite windows and periodic sequences.

Gluing above ``(a_k, a_{k+1})`` inserts a 1 between them and raises both
neighbours by one; cutting removes an entry 1 and lowers its neighbours.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvalidFriezeError, PreconditionError
from .frieze import FriezeView, QuiddityData, as_quiddity


@dataclass(frozen=True)
class WindowRow:
    """A finite piece of a (not necessarily periodic) quiddity row.

    ``values[t]`` is the entry with absolute index ``offset + t``.
    """

    values: tuple[int, ...]
    offset: int = 0

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        if not vals:
            raise DomainError("a window needs at least one value")
        if any(v < 1 for v in vals):
            raise DomainError("window values must be positive")
        object.__setattr__(self, "values", vals)

    def local(self, k: int) -> int:
        return k - self.offset

    def contains(self, k: int) -> bool:
        return 0 <= k - self.offset < len(self.values)

    def __getitem__(self, k: int) -> int:
        if not self.contains(k):
            raise DomainError(f"index {k} outside the window")
        return self.values[k - self.offset]


def glue_window(w: WindowRow, k: int) -> WindowRow:
    """Glue above ``(a_k, a_{k+1})``; both indices must lie in the window."""
    if not (w.contains(k) and w.contains(k + 1)):
        raise DomainError(f"gluing at {k} needs indices {k} and {k + 1} inside the window")
    t = w.local(k)
    v = w.values
    return WindowRow(v[:t] + (v[t] + 1, 1, v[t + 1] + 1) + v[t + 2 :], w.offset)


def cut_window(w: WindowRow, k: int) -> WindowRow:
    """Remove the entry 1 at index ``k`` and lower both neighbours."""
    if not w.contains(k):
        raise DomainError(f"index {k} outside the window")
    if w[k] != 1:
        raise PreconditionError(f"cutting needs a_{k} = 1, found {w[k]}")
    if not (w.contains(k - 1) and w.contains(k + 1)):
        raise DomainError(f"cutting at {k} needs both neighbours inside the window")
    t = w.local(k)
    v = w.values
    left, right = v[t - 1] - 1, v[t + 1] - 1
    if left < 1 or right < 1:
        raise InvalidFriezeError(f"cutting at {k} would create a zero entry")
    return WindowRow(v[: t - 1] + (left, right) + v[t + 2 :], w.offset)


def n_glue(q, k: int) -> QuiddityData:
    """Periodic gluing above ``(a_k, a_{k+1})``; the result has period n+1.

    The inserted 1 sits at position ``k+1``. For ``k = n`` the right
    neighbour is ``a_1``, which stays at position 1.
    """
    q = as_quiddity(q)
    n = q.n
    if not 1 <= k <= n:
        raise DomainError(f"k must lie in 1..{n}, got {k}")
    e = list(q.entries)
    if n == 1:
        return QuiddityData((e[0] + 2, 1))
    e[k - 1] += 1
    e[k % n] += 1
    return QuiddityData(tuple(e[:k] + [1] + e[k:]))


def n_cut(q, k: int) -> QuiddityData:
    """Periodic cutting at an entry ``a_k = 1``; the result has period n-1.

    The entry is deleted and its two cyclic neighbours are lowered by one
    (for n = 2 both neighbours are the same entry, lowered by two).
    """
    q = as_quiddity(q)
    n = q.n
    if n < 2:
        raise PreconditionError("cutting needs period at least 2")
    if not 1 <= k <= n:
        raise DomainError(f"k must lie in 1..{n}, got {k}")
    if q.a(k) != 1:
        raise PreconditionError(f"cutting needs a_{k} = 1, found {q.a(k)}")
    e = list(q.entries)
    e[(k - 2) % n] -= 1
    e[k % n] -= 1
    del e[k - 1]
    if any(v < 1 for v in e):
        raise InvalidFriezeError(f"cutting at {k} would create a non-positive entry")
    return QuiddityData(tuple(e))


def shifted_index(i: int, x: int, period: int) -> int:
    """``i - t`` for the unique t with ``x + (t-1)*period < i <= x + t*period``."""
    t = -((x - i) // period)
    return i - t


def glued_entry(q, k: int, i: int, j: int, view: FriezeView | None = None) -> int:
    """Entry ``(i, j)`` of ``n_glue(q, k)`` expressed through entries of ``q``.

    Outside the two inserted diagonals an entry is copied from the original
    frieze with shifted indices; on them it is a sum of two (or, where they
    meet, four) original entries.
    """
    q = as_quiddity(q)
    if j - i < 0:
        raise DomainError("glued_entry needs j >= i")
    if not 1 <= k <= q.n:
        raise DomainError(f"k must lie in 1..{q.n}, got {k}")
    m = (view or FriezeView(q)).entry
    period = q.n + 1
    ii = shifted_index(i, k + 2, period)
    jj = shifted_index(j, k, period)
    on_i = (i - k - 2) % period == 0
    on_j = (j - k) % period == 0
    if on_i and on_j:
        return m(ii - 1, jj - 1) + m(ii, jj) + m(ii - 1, jj) + m(ii, jj - 1)
    if on_j:
        return m(ii, jj - 1) + m(ii, jj)
    if on_i:
        return m(ii - 1, jj) + m(ii, jj)
    return m(ii, jj)
