"""Gluing and cutting: inserting or removing a 1 in the quiddity row."""

from arithfrieze import FriezeView, WindowRow, cut_window, glue_window, glued_entry, n_cut, n_glue

base = (2, 2, 2)
glued = n_glue(base, 2)
print(f"gluing {base} above positions 2 and 3 gives {glued.entries}")

old, new = FriezeView(base), FriezeView(glued)
print("\nrows of the glued frieze, each entry also rebuilt from the original frieze:")
for r in range(0, 5):
    direct = [new.entry(i, i + r) for i in range(1, 5)]
    rebuilt = [glued_entry(base, 2, i, i + r, old) for i in range(1, 5)]
    mark = "ok" if direct == rebuilt else "MISMATCH"
    print(f"  row {r}: {direct}  {mark}")

print(f"\ncutting the inserted 1 again: {n_cut(glued, 3).entries}")

w = WindowRow((4, 7, 2, 9), offset=10)
g = glue_window(w, 11)
print(f"\non a finite window starting at index 10: {w.values} -> {g.values} -> {cut_window(g, 12).values}")
