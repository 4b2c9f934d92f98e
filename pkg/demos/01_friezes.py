"""Build friezes from quiddity rows and check them."""

from arithfrieze import FriezeView, QuiddityData, complete_entry, entry_determinant, validate_to_depth


def show(q, rows=6, width=10):
    view = FriezeView(q)
    for r in range(-2, rows - 2):
        print("  " * (r + 2) + "  ".join(f"{v:>3}" for v in view.row(r, 1, width)))


print("Constant row 2: every row is constant, growing by one each step.")
show((2,))

print("\nA period-5 row. The entries grow, but 1s keep reappearing.")
q = QuiddityData((1, 5, 4, 1, 3))
show(q, rows=8)

print("\nThe recurrence and the tridiagonal determinant agree:")
for i, j in [(1, 4), (2, 9), (3, 15)]:
    print(f"  m({i},{j}) = {FriezeView(q).entry(i, j)} = {entry_determinant(q, i, j)}")

print("\nConstant rows have a closed form; for 3 the diagonal runs through every other Fibonacci number:")
print("  ", [complete_entry(3, 1, j) for j in range(0, 8)])

print("\nNot every row gives a frieze. (1,1,1) goes non-positive immediately:")
rep = validate_to_depth((1, 1, 1), 5)
print(f"  valid={rep.valid}, first bad entry {rep.first_violation} = {rep.violating_value}")
