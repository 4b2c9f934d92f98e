"""Periodic infinite friezes computed exactly from a quiddity sequence.

Entries are indexed as ``m(i, j)`` with ``j - i >= -2``: the two top rows are
0 and 1, the quiddity row is ``j == i``, and every diamond has determinant 1.
Each south-east diagonal obeys the continuant recurrence
``m(i, j) = a_j * m(i, j-1) - m(i, j-2)``, which is the primary route here.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import DomainError

JSON_SAFE_MAX = 2**53


@dataclass(frozen=True, eq=False)
class QuiddityData:
    """An n-periodic quiddity row ``(a_1, ..., a_n)``.

    Equality and hashing ignore rotation; ``entries`` keeps the order given.
    The neighbour rule for entries equal to 1 is exposed as a query
    (:meth:`neighbour_rule_holds`) so that invalid rows can still be built and
    reported on.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        if not entries:
            raise DomainError("a quiddity row needs at least one entry")
        for a in entries:
            if isinstance(a, bool) or not isinstance(a, int):
                raise DomainError(f"quiddity entries must be integers, got {a!r}")
            if a < 1:
                raise DomainError(f"quiddity entries must be positive, got {a}")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def a(self, i: int) -> int:
        """Entry ``a_i`` with the index read periodically (1-based)."""
        return self.entries[(i - 1) % len(self.entries)]

    def canonical(self) -> tuple[int, ...]:
        """Lexicographically least rotation."""
        e = self.entries
        return min(e[s:] + e[:s] for s in range(len(e)))

    def rotated(self, shift: int) -> "QuiddityData":
        s = shift % self.n
        return QuiddityData(self.entries[s:] + self.entries[:s])

    def reversed(self) -> "QuiddityData":
        return QuiddityData(self.entries[::-1])

    def neighbour_rule_holds(self) -> bool:
        """True when no entry 1 has a cyclic neighbour equal to 1."""
        n = self.n
        for i, a in enumerate(self.entries):
            if a == 1 and (self.entries[i - 1] == 1 or self.entries[(i + 1) % n] == 1):
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuiddityData):
            return NotImplemented
        return self.n == other.n and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __repr__(self) -> str:
        return f"QuiddityData({self.entries!r})"


def as_quiddity(q: "QuiddityData | Sequence[int]") -> QuiddityData:
    return q if isinstance(q, QuiddityData) else QuiddityData(tuple(q))


def _check_index(i: int, j: int) -> None:
    if j - i < -2:
        raise DomainError(f"entry ({i},{j}) lies above the zero row (j - i < -2)")


class FriezeView:
    """Lazy, memoized accessor for the frieze of a quiddity row.

    The cache holds one list per residue of ``i`` modulo n; position ``d + 2``
    of that list is the entry on row ``d = j - i``. Growing a diagonal takes an
    internal lock, so one view may be shared by concurrent readers.
    """

    def __init__(self, q: "QuiddityData | Sequence[int]") -> None:
        self.quiddity = as_quiddity(q)
        self._diagonals: dict[int, list[int]] = {}
        self._lock = threading.Lock()

    @property
    def n(self) -> int:
        return self.quiddity.n

    def _diagonal(self, i0: int, length: int) -> list[int]:
        diag = self._diagonals.get(i0)
        if diag is not None and len(diag) >= length:
            return diag
        with self._lock:
            diag = self._diagonals.setdefault(i0, [0, 1])
            a = self.quiddity.a
            while len(diag) < length:
                j = i0 + len(diag) - 2
                diag.append(a(j) * diag[-1] - diag[-2])
            return diag

    def entry(self, i: int, j: int) -> int:
        _check_index(i, j)
        i0 = (i - 1) % self.n + 1
        d = j - i
        return self._diagonal(i0, d + 3)[d + 2]

    __call__ = entry

    def row(self, r: int, i_start: int, width: int) -> list[int]:
        return [self.entry(i, i + r) for i in range(i_start, i_start + width)]

    def corrupt(self, i: int, j: int, delta: int = 1) -> None:
        """Add ``delta`` to one cached entry (fault injection for checks)."""
        self.entry(i, j)
        i0 = (i - 1) % self.n + 1
        self._diagonals[i0][j - i + 2] += delta


def _view(q) -> FriezeView:
    return q if isinstance(q, FriezeView) else FriezeView(q)


def entry(q, i: int, j: int) -> int:
    """Entry ``m(i, j)`` of the frieze with quiddity row ``q``."""
    return _view(q).entry(i, j)


def entry_determinant(q, i: int, j: int) -> int:
    """Entry ``m(i, j)`` as the determinant of the tridiagonal matrix on ``a_i..a_j``.

    Independent of the recurrence: the determinant is taken by fraction-free
    elimination over the integers.
    """
    if j < i:
        raise DomainError(f"determinant route needs j >= i, got ({i},{j})")
    from sympy import ZZ
    from sympy.polys.matrices import DomainMatrix

    qd = as_quiddity(q)
    size = j - i + 1
    rows = [[ZZ(0)] * size for _ in range(size)]
    for r in range(size):
        rows[r][r] = ZZ(qd.a(i + r))
        if r + 1 < size:
            rows[r][r + 1] = ZZ(1)
            rows[r + 1][r] = ZZ(1)
    return int(DomainMatrix(rows, (size, size), ZZ).det())


def row_window(q, r: int, i_start: int, width: int) -> list[int]:
    """Row ``j - i = r`` read over columns ``i_start .. i_start + width - 1``."""
    if width < 1:
        raise DomainError("width must be positive")
    if r < -2:
        raise DomainError("rows start at j - i = -2")
    return _view(q).row(r, i_start, width)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    depth: int
    first_violation: tuple[int, int] | None = None
    violating_value: int | None = None
    # positivity is an infinite condition; passing to a finite depth is never a proof
    certified: bool = False


def validate_to_depth(q, depth: int) -> ValidationReport:
    """Check positivity of rows ``0..depth`` over one period (row-major order)."""
    if depth < 1:
        raise DomainError("depth must be positive")
    view = _view(q)
    for d in range(depth + 1):
        for i in range(1, view.n + 1):
            v = view.entry(i, i + d)
            if v < 1:
                return ValidationReport(False, depth, (i, i + d), v)
    return ValidationReport(True, depth)


def verify_unimodular(q, depth: int) -> bool:
    """Every diamond with ``-1 <= j - i <= depth`` in one period has determinant 1."""
    if depth < 1:
        raise DomainError("depth must be positive")
    view = _view(q)
    m = view.entry
    for d in range(-1, depth + 1):
        for i in range(1, view.n + 1):
            j = i + d
            if m(i, j) * m(i + 1, j + 1) - m(i + 1, j) * m(i, j + 1) != 1:
                return False
    return True


def complete_entry(a: int, i: int, j: int) -> int:
    """Closed form for the constant quiddity row ``(a)``."""
    if a < 2:
        raise DomainError("the closed form needs a >= 2")
    _check_index(i, j)
    s = j - i + 1
    return sum((-1) ** k * comb(s - k, k) * a ** (s - 2 * k) for k in range(s // 2 + 1)) if s >= 0 else 0


def check_diagonal_sum(q, k: int, depth: int) -> bool:
    """``a_{k-1} m(k, j) == m(k-1, j) + m(k+1, j)`` for ``k-1 <= j <= k+depth``."""
    if depth < 1:
        raise DomainError("depth must be positive")
    view = _view(q)
    a = view.quiddity.a(k - 1)
    m = view.entry
    return all(a * m(k, j) == m(k - 1, j) + m(k + 1, j) for j in range(k - 1, k + depth + 1))


@dataclass(frozen=True)
class ArithmeticReport:
    passed: bool
    r: int
    probes: int
    # differences[i-1][k-1] is the observed d_ik from the first block
    differences: tuple[tuple[int, ...], ...]
    first_violation: tuple[int, int, int] | None = None
    evidence_only: bool = True

    def values(self) -> set[int]:
        return {d for row in self.differences for d in row}


def check_arithmetic(q, r: int, probes: int) -> ArithmeticReport:
    """Test that each SE-diagonal splits into r arithmetic progressions.

    For start ``i`` and offset ``k`` the progression runs through
    ``m(i, i+k-3 + l*r)``, ``l = 0, 1, ...``; every step is compared with the
    first one for ``l = 0..probes``.
    """
    if r < 1:
        raise DomainError("r must be positive")
    if probes < 2:
        raise DomainError("probes must be at least 2")
    view = _view(q)
    m = view.entry
    diffs = []
    violation = None
    for i in range(1, view.n + 1):
        row = []
        for k in range(1, r + 1):
            base = i + k - 3
            d = m(i, base + r) - m(i, base)
            row.append(d)
            if violation is None:
                for ell in range(probes + 1):
                    if m(i, base + (ell + 1) * r) - m(i, base + ell * r) != d:
                        violation = (i, k, ell)
                        break
        diffs.append(tuple(row))
    return ArithmeticReport(violation is None, r, probes, tuple(diffs), violation)


def minimal_period(q) -> int:
    """Smallest p dividing n such that the quiddity row is p-periodic."""
    e = as_quiddity(q).entries
    n = len(e)
    for p in range(1, n + 1):
        if n % p == 0 and e[p:] + e[:p] == e:
            return p
    return n


def int_to_json(x: int, uniform: bool = False) -> "int | str":
    """Encode an integer for JSON: a decimal string when it is not exactly representable."""
    if uniform or abs(x) > JSON_SAFE_MAX:
        return str(x)
    return x


def int_from_json(x: "int | str") -> int:
    if isinstance(x, bool):
        raise DomainError("booleans are not integers")
    if isinstance(x, int):
        return x
    if isinstance(x, str) and x.strip().lstrip("-").isdigit():
        return int(x)
    raise DomainError(f"expected an integer or decimal string, got {x!r}")


def quiddity_from_json(obj: Iterable) -> QuiddityData:
    if not isinstance(obj, list):
        raise DomainError("a quiddity sequence is a JSON array of integers")
    return QuiddityData(tuple(int_from_json(v) for v in obj))
