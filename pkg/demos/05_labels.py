"""Labelling the strip vertex by vertex and reading frieze entries off the labels."""

from arithfrieze import (
    FriezeView,
    common_differences,
    entry_via_labels,
    labels_from,
    phi,
    puncture_labels,
    quiddity_of,
    realizing_triangulations,
)
from arithfrieze.strip import lower

t = realizing_triangulations((1, 4, 1, 2, 6))[0]
s = phi(t)

lm = labels_from(s, lower(5, 2), (-10, 12))
print("labels from vertex 2, to the right:", lm.rightward(12))
print("labels from vertex 2, to the left: ", lm.leftward(12))
print("shared label of the upper boundary:", lm.upper_label)

view = FriezeView(quiddity_of(t))
print("\nlabels started at vertex 3 reproduce the frieze diagonal m(4, j), j = 4..11:")
print("  from labels:", [entry_via_labels(s, 4, j) for j in range(4, 12)])
print("  from frieze:", [view.entry(4, j) for j in range(4, 12)])

print("\nstarting at the puncture instead gives one label per boundary vertex:", puncture_labels(s))
print("their pairwise products, scaled by the number of puncture arcs, are the common differences:")
for i, row in enumerate(common_differences(s), start=1):
    print(f"  diagonal {i}: {row}")
