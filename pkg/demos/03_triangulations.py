"""Triangulations of a punctured disc and the friezes they produce."""

from collections import Counter

from arithfrieze import (
    check_arithmetic,
    enumerate_triangulations,
    quiddity_of,
    realizing_triangulations,
    unit_entry_positions,
)

for n in range(1, 7):
    ts = enumerate_triangulations(n)
    by_bridging = Counter(len(t.bridging) for t in ts)
    print(f"n={n}: {len(ts):4d} triangulations, by number of arcs to the puncture {dict(sorted(by_bridging.items()))}")

t = realizing_triangulations((1, 4, 1, 2, 6))[0]
print("\nthe triangulation behind (1,4,1,2,6):")
for arc in sorted(t.arcs):
    print("  ", "to the puncture from" if arc.is_bridging else "around the boundary", arc.endpoints)

rep = check_arithmetic(quiddity_of(t), t.n, 6)
print("\nevery diagonal splits into 5 arithmetic progressions:", rep.passed)
for i, row in enumerate(rep.differences, start=1):
    print(f"  diagonal {i}: common differences {row}")

print("\nentries equal to 1 below the quiddity row, one per arc around the boundary:")
print("  ", sorted(unit_entry_positions(t, t.n + 1)), "with", len(t.peripheral), "such arcs")

print("\nthe constant row 3 gives a frieze, yet no disc triangulation realizes it:", realizing_triangulations((3,)))
