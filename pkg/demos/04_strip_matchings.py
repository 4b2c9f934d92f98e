"""Unroll a disc triangulation onto a periodic strip and count matchings."""

from arithfrieze import (
    FriezeView,
    enumerate_matchings,
    fundamental_domains,
    matching_count,
    matching_count_recursive,
    phi,
    psi,
    quiddity_of,
    realizing_triangulations,
)

t = realizing_triangulations((4, 3, 3, 1, 2))[0]
s = phi(t)
print("one period of arcs on the strip:")
for a in s.generators():
    print("  ", a)

print("\ntriangles of one period:")
for tri in s.period_triangles:
    print("  ", tri)

doms = fundamental_domains(s)
print(f"\n{len(doms)} fundamental domains; each folds back to the same disc triangulation:",
      all(psi(s, d) == t for d in doms))

view = FriezeView(quiddity_of(t))
print("\nmatchings on windows starting at vertex 1, counted three ways, next to the frieze entry:")
for size in range(1, 8):
    dp = matching_count(s, 0, size - 1)
    rec = matching_count_recursive(s, 0, size - 1)
    print(f"  {size} vertices: {dp} (dp) {rec} (by cutting) entry {view.entry(1, size)}")

print("\nvertex 4 lies in a single triangle, so its one-vertex window has exactly one matching:")
for m in enumerate_matchings(s, 3, 3):
    print("  ", m.window, "->", m.triangles)

print("\nall matchings on the window of vertices 4..5:")
for m in enumerate_matchings(s, 3, 4):
    print("  ", m.window, "->", m.triangles)
