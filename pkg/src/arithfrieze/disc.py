"""Triangulations of a once-punctured disc with n marked boundary points.

Vertices are 1..n clockwise; the puncture is vertex 0. An arc ``DiscArc(0, j)``
is bridging (puncture to j). ``DiscArc(i, j)`` with ``i >= 1`` is peripheral
and runs clockwise from i to j, cutting off the boundary points strictly
between them; ``i == j`` is a loop around the puncture.

Crossings are decided on the universal cover strip: boundary point i lifts to
positions ``i - 1 + k*n`` on a line and every copy of the puncture is treated
as one point above it, so arcs become chords and crossing is interleaving.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, InvalidTriangulationError, PreconditionError, ResourceLimitError
from .frieze import FriezeView, QuiddityData

DEFAULT_ENUMERATION_BOUND = 7


@dataclass(frozen=True, order=True)
class DiscArc:
    start: int
    end: int

    @property
    def is_bridging(self) -> bool:
        return self.start == 0

    @property
    def is_loop(self) -> bool:
        return self.start == self.end

    def endpoints(self) -> tuple[int, ...]:
        """Boundary endpoints with multiplicity (a loop meets its vertex twice)."""
        return (self.end,) if self.is_bridging else (self.start, self.end)

    def __repr__(self) -> str:
        if self.is_bridging:
            return f"Bridging({self.end})"
        return f"Peripheral({self.start},{self.end})"


def Bridging(j: int) -> DiscArc:
    return DiscArc(0, j)


def Peripheral(i: int, j: int) -> DiscArc:
    if i == 0:
        raise DomainError("peripheral arcs join two boundary points")
    return DiscArc(i, j)


def clockwise_distance(n: int, i: int, j: int) -> int:
    d = (j - i) % n
    return n if d == 0 else d


def check_arc(n: int, a: DiscArc) -> None:
    if n < 1:
        raise DomainError("n must be positive")
    if not 1 <= a.end <= n or not 0 <= a.start <= n:
        raise DomainError(f"{a!r} has an endpoint outside 1..{n}")
    if a.is_bridging:
        return
    if a.is_loop and n < 2:
        raise DomainError("a loop needs at least two marked points")
    if clockwise_distance(n, a.start, a.end) < 2:
        raise DomainError(f"{a!r} is isotopic to a boundary segment")


def lift(n: int, a: DiscArc, shift: int = 0) -> tuple[int | None, int]:
    """Chord of the lift starting in the block ``shift``.

    Bridging arcs give ``(None, s)``; peripheral arcs give ``(p, q)`` with
    ``2 <= q - p <= n``.
    """
    base = shift * n
    if a.is_bridging:
        return (None, base + a.end - 1)
    p = a.start - 1
    q = a.end - 1 if a.start < a.end else a.end - 1 + n
    return (base + p, base + q)


def chords_cross(c1: tuple[int | None, int], c2: tuple[int | None, int]) -> bool:
    """Interleaving test with every upper vertex identified to one point."""
    p1, q1 = c1
    p2, q2 = c2
    if p1 is None and p2 is None:
        return False
    if p1 is None:
        return p2 < q1 < q2
    if p2 is None:
        return p1 < q2 < q1
    return p1 < p2 < q1 < q2 or p2 < p1 < q2 < q1


def arcs_cross(n: int, a: DiscArc, b: DiscArc) -> bool:
    check_arc(n, a)
    check_arc(n, b)
    if a == b:
        return False
    la = lift(n, a)
    return any(chords_cross(la, lift(n, b, k)) for k in range(-2, 3))


def all_arcs(n: int) -> list[DiscArc]:
    arcs = [Bridging(j) for j in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            a = DiscArc(i, j)
            if (i == j and n >= 2) or (i != j and clockwise_distance(n, i, j) >= 2):
                arcs.append(a)
    return arcs


@dataclass(frozen=True)
class DiscTriangulation:
    n: int
    arcs: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        if not is_triangulation(self.n, self.arcs):
            raise InvalidTriangulationError(f"not a triangulation of the {self.n}-gon disc: {sorted(self.arcs)}")

    @classmethod
    def _trusted(cls, n: int, arcs: Iterable[DiscArc]) -> "DiscTriangulation":
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "arcs", frozenset(arcs))
        return t

    def sorted_arcs(self) -> list[DiscArc]:
        return sorted(self.arcs)

    @property
    def bridging(self) -> list[DiscArc]:
        return [a for a in self.sorted_arcs() if a.is_bridging]

    @property
    def peripheral(self) -> list[DiscArc]:
        return [a for a in self.sorted_arcs() if not a.is_bridging]

    def __repr__(self) -> str:
        return f"DiscTriangulation(n={self.n}, arcs={self.sorted_arcs()})"


def is_triangulation(n: int, arcs: Iterable[DiscArc]) -> bool:
    arcs = set(arcs)
    try:
        for a in arcs:
            check_arc(n, a)
    except DomainError:
        return False
    ordered = sorted(arcs)
    for x, a in enumerate(ordered):
        for b in ordered[x + 1 :]:
            if arcs_cross(n, a, b):
                return False
    for c in all_arcs(n):
        if c not in arcs and not any(arcs_cross(n, c, a) for a in arcs):
            return False
    assert len(arcs) == n, "a maximal family has exactly n arcs"
    return True


def star_triangulation(n: int) -> DiscTriangulation:
    if n < 1:
        raise DomainError("n must be positive")
    return DiscTriangulation._trusted(n, [Bridging(j) for j in range(1, n + 1)])


def enumerate_triangulations(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[DiscTriangulation]:
    """All triangulations of the n-gon disc, as maximal cliques of the compatibility graph."""
    import networkx as nx

    if n < 1:
        raise DomainError("n must be positive")
    if n > bound:
        raise ResourceLimitError(f"enumeration is capped at n <= {bound}")
    arcs = all_arcs(n)
    g = nx.Graph()
    g.add_nodes_from(arcs)
    for x, a in enumerate(arcs):
        for b in arcs[x + 1 :]:
            if not arcs_cross(n, a, b):
                g.add_edge(a, b)
    found = {frozenset(c) for c in nx.find_cliques(g)}
    result = [DiscTriangulation._trusted(n, c) for c in found]
    result.sort(key=lambda t: t.sorted_arcs())
    return result


def quiddity_of(t: DiscTriangulation) -> QuiddityData:
    """Sectors at each marked point: one more than the number of arc ends there."""
    counts = [1] * t.n
    for a in t.arcs:
        for v in a.endpoints():
            counts[v - 1] += 1
    return QuiddityData(tuple(counts))


def special_points(t: DiscTriangulation) -> list[int]:
    return [i for i, a in enumerate(quiddity_of(t).entries, start=1) if a == 1]


def _relabel(t_arcs: Iterable[DiscArc], f) -> list[DiscArc]:
    return [DiscArc(0 if a.start == 0 else f(a.start), f(a.end)) for a in t_arcs]


def ear_arc(n: int, x: int) -> DiscArc:
    """The arc cutting off the single boundary point x."""
    return DiscArc((x - 2) % n + 1, x % n + 1)


def cut_triangle(t: DiscTriangulation, x: int) -> DiscTriangulation:
    """Remove the triangle at a special point x and close up the boundary."""
    n = t.n
    if n < 2:
        raise PreconditionError("cutting needs at least two marked points")
    if x not in special_points(t):
        raise PreconditionError(f"{x} is not a special marked point")
    ear = ear_arc(n, x)
    if ear not in t.arcs:
        raise InvalidTriangulationError(f"special point {x} lacks its ear arc {ear!r}")
    rest = [a for a in t.arcs if a != ear]
    return DiscTriangulation._trusted(n - 1, _relabel(rest, lambda v: v if v < x else v - 1))


def glue_triangle(t: DiscTriangulation, i: int) -> DiscTriangulation:
    """Attach a triangle on the boundary segment from i to i+1; the new point is i+1."""
    n = t.n
    if not 1 <= i <= n:
        raise DomainError(f"i must lie in 1..{n}")
    arcs = _relabel(t.arcs, lambda v: v if v <= i else v + 1)
    arcs.append(DiscArc(i, (i + 1) % (n + 1) + 1))
    return DiscTriangulation._trusted(n + 1, arcs)


def rotate(t: DiscTriangulation, s: int) -> DiscTriangulation:
    n = t.n
    return DiscTriangulation._trusted(n, _relabel(t.arcs, lambda v: (v - 1 + s) % n + 1))


def reflect(t: DiscTriangulation) -> DiscTriangulation:
    n = t.n
    r = lambda v: n + 1 - v
    arcs = [Bridging(r(a.end)) if a.is_bridging else DiscArc(r(a.end), r(a.start)) for a in t.arcs]
    return DiscTriangulation._trusted(n, arcs)


def shape_key(t: DiscTriangulation) -> tuple:
    """Rotation-class representative, for grouping triangulations by shape."""
    return min(tuple(rotate(t, s).sorted_arcs()) for s in range(t.n))


def unit_entry_positions(t: DiscTriangulation, depth: int) -> set[tuple[int, int]]:
    """Positions ``(i, j)``, ``1 <= i <= n``, ``0 <= j - i <= depth``, whose entry is 1."""
    view = FriezeView(quiddity_of(t))
    return {(i, i + d) for d in range(depth + 1) for i in range(1, t.n + 1) if view.entry(i, i + d) == 1}


def peripheral_unit_position(n: int, a: DiscArc) -> tuple[int, int]:
    """Entry position that the peripheral arc ``a`` forces to equal 1."""
    if a.is_bridging:
        raise DomainError("only peripheral arcs give unit entries")
    i, j = a.start, a.end
    pos = (i + 1, j - 1) if j >= i + 2 else (i + 1, j - 1 + n)
    if pos[0] > n:
        pos = (pos[0] - n, pos[1] - n)
    return pos


def realizing_triangulations(q, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[DiscTriangulation]:
    """Triangulations whose quiddity sequence equals ``q`` entry by entry."""
    q = q if isinstance(q, QuiddityData) else QuiddityData(tuple(q))
    return [t for t in enumerate_triangulations(q.n, bound) if quiddity_of(t).entries == q.entries]


def arc_to_json(a: DiscArc) -> dict:
    return {"bridging": a.end} if a.is_bridging else {"peripheral": [a.start, a.end]}


def arc_from_json(obj) -> DiscArc:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise DomainError(f"malformed arc {obj!r}")
    if "bridging" in obj and isinstance(obj["bridging"], int):
        return Bridging(obj["bridging"])
    p = obj.get("peripheral")
    if isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p):
        if p[0] == 0:
            raise DomainError("peripheral arcs join two boundary points")
        return DiscArc(p[0], p[1])
    raise DomainError(f"malformed arc {obj!r}")


def to_json(t: DiscTriangulation) -> dict:
    return {"n": t.n, "arcs": [arc_to_json(a) for a in t.sorted_arcs()]}


def from_json(obj) -> DiscTriangulation:
    """Parse ``{"n": .., "arcs": [..]}``; structural problems raise DomainError,
    arc families that are not triangulations raise InvalidTriangulationError."""
    if not isinstance(obj, dict) or not isinstance(obj.get("n"), int) or not isinstance(obj.get("arcs"), list):
        raise DomainError("a triangulation is an object with integer 'n' and list 'arcs'")
    n = obj["n"]
    if n < 1:
        raise DomainError("n must be positive")
    arcs = [arc_from_json(a) for a in obj["arcs"]]
    if len(set(arcs)) != len(arcs):
        raise InvalidTriangulationError("repeated arc")
    for a in arcs:
        try:
            check_arc(n, a)
        except DomainError as exc:
            raise InvalidTriangulationError(str(exc)) from exc
    return DiscTriangulation(n, frozenset(arcs))


def iter_all(max_n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[DiscTriangulation]:
    for n in range(1, max_n + 1):
        yield from enumerate_triangulations(n, bound)
