"""Periodic triangulations of the infinite strip and their relation to the disc.

Lower vertices ``i^(k)`` (1 <= i <= n) sit on a line at integer positions
``p = k*n + i - 1``; upper vertices ``0^(k)`` are copies of the puncture.
A triangulation is stored as one period of generator arcs: lower arcs
``(p, q)`` with ``0 <= p < n`` and ``2 <= q - p <= n``, and bridging arcs by
their lower position ``0 <= s < n`` (the upper end is ``0^(0)``). Every query
expands translates on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .disc import (
    Bridging,
    DiscArc,
    DiscTriangulation,
    chords_cross,
    lift,
)
from .errors import DomainError, InvalidTriangulationError, PreconditionError
from .frieze import QuiddityData


@dataclass(frozen=True, order=True)
class StripVertex:
    """``i^(k)``; ``i == 0`` marks the upper vertex ``0^(k)``."""

    i: int
    k: int

    @property
    def is_upper(self) -> bool:
        return self.i == 0

    def __repr__(self) -> str:
        return f"{self.i}^({self.k})"


def lower(n: int, i: int, k: int = 0) -> StripVertex:
    """Normalized lower vertex: ``(i + l*n)^(k)`` becomes ``i^(k + l)``."""
    return StripVertex((i - 1) % n + 1, k + (i - 1) // n)


def upper(k: int) -> StripVertex:
    return StripVertex(0, k)


def position(v: StripVertex, n: int) -> int:
    if v.is_upper:
        raise DomainError("upper vertices have no position on the lower boundary")
    return v.k * n + v.i - 1


def vertex_at(p: int, n: int) -> StripVertex:
    return StripVertex(p % n + 1, p // n)


@dataclass(frozen=True, order=True)
class StripArc:
    start: StripVertex
    end: StripVertex

    @property
    def is_bridging(self) -> bool:
        return self.start.is_upper

    def __repr__(self) -> str:
        return f"{self.start!r}{self.end!r}"


@dataclass(frozen=True)
class Triangle:
    """A triangle of the strip; a quadrilateral with two upper corners counts as one.

    ``lower`` holds positions left to right, ``upper`` the superscripts of the
    upper corners (empty, one, or two consecutive values).
    """

    n: int
    lower: tuple[int, ...]
    upper: tuple[int, ...] = ()

    @property
    def vertices(self) -> tuple[StripVertex, ...]:
        return tuple(upper(k) for k in self.upper) + tuple(vertex_at(p, self.n) for p in self.lower)

    def translate(self, m: int) -> "Triangle":
        return Triangle(self.n, tuple(p + m * self.n for p in self.lower), tuple(k + m for k in self.upper))

    def __repr__(self) -> str:
        return "Triangle(" + ", ".join(map(repr, self.vertices)) + ")"


class StripTriangulation:
    """An n-periodic triangulation of the strip, held as one period of arcs."""

    def __init__(self, n: int, lower_arcs: Iterable[tuple[int, int]], bridging: Iterable[int], *, check: bool = True):
        if n < 1:
            raise DomainError("n must be positive")
        self.n = n
        norm = set()
        for p, q in lower_arcs:
            if q < p:
                p, q = q, p
            shift = (p // n) * n
            norm.add((p - shift, q - shift))
        self.lower_arcs: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        self.bridging: tuple[int, ...] = tuple(sorted({s % n for s in bridging}))
        if check:
            self._validate()

    def _validate(self) -> None:
        n = self.n
        for p, q in self.lower_arcs:
            # neither equal nor neighbours, and at most one period long
            if not 2 <= q - p <= n:
                raise InvalidTriangulationError(f"lower arc {self._arc(p, q)!r} has span {q - p}, expected 2..{n}")
        if not self.bridging:
            raise InvalidTriangulationError("a periodic triangulation needs a bridging arc")
        if len(self.lower_arcs) + len(self.bridging) != n:
            raise InvalidTriangulationError(f"one period must contain exactly {n} arcs")
        chords = [(p, q) for p, q in self.lower_arcs] + [(None, s) for s in self.bridging]
        for x, c in enumerate(chords):
            for d in chords:
                for m in range(-2, 3):
                    shifted = (None if d[0] is None else d[0] + m * n, d[1] + m * n)
                    if shifted != c and chords_cross(c, shifted):
                        raise InvalidTriangulationError(f"arcs {c} and {shifted} cross")

    # -- identity -------------------------------------------------------------

    def _key(self):
        return (self.n, self.lower_arcs, self.bridging)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StripTriangulation):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"StripTriangulation(n={self.n}, arcs={self.generators()})"

    # -- arcs -----------------------------------------------------------------

    def _arc(self, p: int, q: int) -> StripArc:
        return StripArc(vertex_at(p, self.n), vertex_at(q, self.n))

    def generators(self) -> list[StripArc]:
        """One period of arcs, bridging first, with superscript base 0."""
        n = self.n
        arcs = [StripArc(upper(0), vertex_at(s, n)) for s in self.bridging]
        return arcs + [self._arc(p, q) for p, q in self.lower_arcs]

    def has_lower_arc(self, p: int, q: int) -> bool:
        if q < p:
            p, q = q, p
        shift = (p // self.n) * self.n
        return (p - shift, q - shift) in self._lower_set

    @cached_property
    def _lower_set(self) -> frozenset:
        return frozenset(self.lower_arcs)

    def has_bridging(self, s: int) -> bool:
        return s % self.n in self._bridging_set

    @cached_property
    def _bridging_set(self) -> frozenset:
        return frozenset(self.bridging)

    def lower_arcs_within(self, lo: int, hi: int) -> list[tuple[int, int]]:
        n = self.n
        out = []
        for m in range((lo - n) // n - 1, hi // n + 2):
            for p, q in self.lower_arcs:
                a, b = p + m * n, q + m * n
                if lo <= a and b <= hi:
                    out.append((a, b))
        return sorted(out)

    def bridging_within(self, lo: int, hi: int) -> list[int]:
        n = self.n
        return [s for s in range(lo, hi + 1) if s % n in self._bridging_set]

    def neighbours(self, p: int) -> set[int]:
        """Lower vertices joined to position p by an arc or a boundary segment."""
        n = self.n
        out = {p - 1, p + 1}
        for a, b in self.lower_arcs:
            for m in ((p - a) // n, (p - b) // n):
                if a + m * n == p:
                    out.add(b + m * n)
                if b + m * n == p:
                    out.add(a + m * n)
        return out

    # -- triangles ------------------------------------------------------------

    @cached_property
    def period_triangles(self) -> tuple[Triangle, ...]:
        """The n triangles of one period: one under each lower arc, one per bridging gap."""
        n = self.n
        tris = []
        for p, q in self.lower_arcs:
            apex = max(x for x in self.neighbours(p) if p < x < q)
            tris.append(Triangle(n, (p, apex, q)))
        positions = [s + m * n for m in (0, 1) for s in self.bridging]
        for s in self.bridging:
            nxt = min(x for x in positions if x > s)
            ks = (s // n,) if nxt // n == s // n else (s // n, nxt // n)
            tris.append(Triangle(n, (s, nxt), ks))
        return tuple(sorted(tris, key=lambda t: (t.lower, t.upper)))

    def triangles_touching(self, lo: int, hi: int) -> list[Triangle]:
        """Triangles with at least one lower vertex at a position in ``[lo, hi]``."""
        n = self.n
        out = []
        for m in range((lo - n) // n - 1, hi // n + 2):
            for t in self.period_triangles:
                tt = t.translate(m)
                if any(lo <= p <= hi for p in tt.lower):
                    out.append(tt)
        return sorted(out, key=lambda t: (t.lower, t.upper))

    def triangles_within(self, lo: int, hi: int) -> list[Triangle]:
        """Triangles whose lower vertices all lie in ``[lo, hi]``."""
        return [t for t in self.triangles_touching(lo, hi) if t.lower[0] >= lo and t.lower[-1] <= hi]

    def is_star(self) -> bool:
        return not self.lower_arcs


def triangles_in(t: StripTriangulation, lo: StripVertex, hi: StripVertex) -> list[Triangle]:
    a, b = position(lo, t.n), position(hi, t.n)
    if b < a:
        raise DomainError("window must run left to right")
    return t.triangles_touching(a, b)


def quiddity_of_strip(t: StripTriangulation) -> QuiddityData:
    """Number of triangles at each lower vertex ``i^(0)``."""
    counts = [0] * t.n
    for tri in t.triangles_touching(0, t.n - 1):
        for p in tri.lower:
            if 0 <= p < t.n:
                counts[p] += 1
    return QuiddityData(tuple(counts))


def special_vertices(t: StripTriangulation) -> list[int]:
    return [i for i, a in enumerate(quiddity_of_strip(t).entries, start=1) if a == 1]


def bridging_count(t: StripTriangulation) -> int:
    return len(t.bridging)


def star_strip(n: int) -> StripTriangulation:
    return StripTriangulation(n, [], range(n))


def phi(t: DiscTriangulation) -> StripTriangulation:
    """Lift of a disc triangulation: the union of all translates of its arcs."""
    lows, bridges = [], []
    for a in t.arcs:
        p, q = lift(t.n, a)
        if p is None:
            bridges.append(q)
        else:
            lows.append((p, q))
    return StripTriangulation(t.n, lows, bridges)


@dataclass(frozen=True)
class FundamentalDomain:
    """The polygon between the bridging arcs at positions ``start`` and ``start + n``."""

    n: int
    start: int
    interior_lower: tuple[tuple[int, int], ...]
    interior_bridging: tuple[int, ...]
    triangles: tuple[Triangle, ...]

    @property
    def upper_k(self) -> int:
        return self.start // self.n

    @property
    def boundary_arcs(self) -> tuple[StripArc, StripArc]:
        n, s = self.n, self.start
        return (
            StripArc(upper(s // n), vertex_at(s, n)),
            StripArc(upper(s // n + 1), vertex_at(s + n, n)),
        )

    @property
    def vertices(self) -> tuple[StripVertex, ...]:
        n, s = self.n, self.start
        return (upper(s // n),) + tuple(vertex_at(p, n) for p in range(s, s + n + 1)) + (upper(s // n + 1),)

    @property
    def interior_arcs(self) -> list[StripArc]:
        n = self.n
        arcs = [StripArc(upper(s // n), vertex_at(s, n)) for s in self.interior_bridging]
        return arcs + [StripArc(vertex_at(p, n), vertex_at(q, n)) for p, q in self.interior_lower]


def fundamental_domains(t: StripTriangulation, block: int = 0) -> list[FundamentalDomain]:
    """One domain per bridging arc whose lower end lies in the given period block."""
    n = t.n
    out = []
    for s0 in t.bridging:
        s = s0 + block * n
        lows = tuple(t.lower_arcs_within(s, s + n))
        bridges = tuple(b for b in t.bridging_within(s + 1, s + n - 1))
        tris = tuple(tri for tri in t.triangles_within(s, s + n))
        out.append(FundamentalDomain(n, s, lows, bridges, tris))
    return out


def psi(t: StripTriangulation, domain: FundamentalDomain | None = None) -> DiscTriangulation:
    """Project the arcs of a fundamental domain back to the disc."""
    n = t.n
    dom = domain or fundamental_domains(t)[0]
    proj = lambda p: p % n + 1
    arcs = [Bridging(proj(dom.start))]
    arcs += [Bridging(proj(s)) for s in dom.interior_bridging]
    arcs += [DiscArc(proj(p), proj(q)) for p, q in dom.interior_lower]
    if len(set(arcs)) != n:
        raise InvalidTriangulationError("fundamental domain does not carry n distinct arcs")
    return DiscTriangulation(n, frozenset(arcs))


def _remap(p: int, old_n: int, new_n: int, f) -> int:
    k, c = divmod(p, old_n)
    return k * new_n + f(c)


def strip_glue(t: StripTriangulation, i: int) -> StripTriangulation:
    """Insert a vertex after every copy of ``i`` together with the triangle on it."""
    n = t.n
    if not 1 <= i <= n:
        raise DomainError(f"i must lie in 1..{n}")
    f = lambda c: c if c < i else c + 1
    m = lambda p: _remap(p, n, n + 1, f)
    lows = [(m(p), m(q)) for p, q in t.lower_arcs]
    lows.append((i - 1, i + 1))
    return StripTriangulation(n + 1, lows, [m(s) for s in t.bridging])


def strip_cut(t: StripTriangulation, x: int) -> StripTriangulation:
    """Remove every copy of the special vertex ``x`` with its triangle."""
    n = t.n
    if n < 2:
        raise PreconditionError("cutting needs period at least 2")
    if not 1 <= x <= n:
        raise DomainError(f"x must lie in 1..{n}")
    if x not in special_vertices(t):
        raise PreconditionError(f"{x}^(k) is not a special vertex")
    c0 = x - 1
    if not t.has_lower_arc(c0 - 1, c0 + 1):
        raise InvalidTriangulationError(f"special vertex {x} lacks its ear arc")
    f = lambda c: c if c < c0 else c - 1
    m = lambda p: _remap(p, n, n - 1, f)
    lows = []
    for p, q in t.lower_arcs:
        if q - p == 2 and (p + 1) % n == c0:
            continue
        lows.append((m(p), m(q)))
    return StripTriangulation(n - 1, lows, [m(s) for s in t.bridging])


def vertex_to_json(v: StripVertex) -> dict:
    return {"upper": v.k} if v.is_upper else {"i": v.i, "k": v.k}


def vertex_from_json(obj, n: int) -> StripVertex:
    if isinstance(obj, dict) and set(obj) == {"upper"} and isinstance(obj["upper"], int):
        return upper(obj["upper"])
    if isinstance(obj, dict) and set(obj) == {"i", "k"} and all(isinstance(obj[x], int) for x in "ik"):
        if obj["i"] < 1:
            raise DomainError(f"lower vertex index must be positive, got {obj['i']}")
        return lower(n, obj["i"], obj["k"])
    raise DomainError(f"malformed strip vertex {obj!r}")


def to_json(t: StripTriangulation) -> dict:
    return {
        "n": t.n,
        "arcs": [{"from": vertex_to_json(a.start), "to": vertex_to_json(a.end)} for a in t.generators()],
    }


def from_json(obj) -> StripTriangulation:
    if not isinstance(obj, dict) or not isinstance(obj.get("n"), int) or not isinstance(obj.get("arcs"), list):
        raise DomainError("a strip triangulation is an object with integer 'n' and list 'arcs'")
    n = obj["n"]
    if n < 1:
        raise DomainError("n must be positive")
    lows, bridges = [], []
    for arc in obj["arcs"]:
        if not isinstance(arc, dict) or set(arc) != {"from", "to"}:
            raise DomainError(f"malformed strip arc {arc!r}")
        a, b = vertex_from_json(arc["from"], n), vertex_from_json(arc["to"], n)
        if a.is_upper and b.is_upper:
            raise InvalidTriangulationError("arcs between two upper vertices are excluded")
        if a.is_upper or b.is_upper:
            u, v = (a, b) if a.is_upper else (b, a)
            if u.k != v.k:
                raise InvalidTriangulationError(f"bridging arc {u!r}{v!r} must keep its superscript")
            bridges.append(position(v, n))
        else:
            lows.append((position(a, n), position(b, n)))
    if len(set(lows)) != len(lows) or len(set(b % n for b in bridges)) != len(bridges):
        raise InvalidTriangulationError("repeated arc")
    return StripTriangulation(n, lows, bridges)
