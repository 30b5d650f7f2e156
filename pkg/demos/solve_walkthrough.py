"""Walk through one solve, printing what the algorithm actually does.

Builds a small random instance, shows the Latin values and the
orientation they induce, then replays the color passes: which cells
wanted the color, which kernel got it, who lost the option instead.
"""

import random

from dinitz import (
    DinitzInstance,
    build_square_orientation,
    latin_value,
    outdegree,
    solve_dinitz,
    verify_generalized_latin,
    vertex_to_cell,
)

N = 4
SEED = 7

rng = random.Random(SEED)
labels = [f"c{k}" for k in range(3 * N)]
rows = [[rng.sample(labels, N) for _ in range(N)] for _ in range(N)]
inst = DinitzInstance.from_labels(rows)

print(f"A {N}x{N} instance (seed {SEED}), one list per cell:")
for i in range(N):
    print("   " + " | ".join(",".join(sorted(cell)) for cell in rows[i]))

print("\nLatin values (r + c) mod n -- each row and column is a permutation:")
for r in range(N):
    print("   " + " ".join(str(latin_value(r, c, N)) for c in range(N)))

g = build_square_orientation(N)
print(f"\nOrientation: {g.num_edges} edges on {g.num_vertices} cells;")
print("row edges point at larger values, column edges at smaller ones,")
print(f"so every cell has outdegree {outdegree(g, 0)} = n - 1.")

trace = []
grid = solve_dinitz(inst, checked=True, trace=trace)

print(f"\nColor passes ({len(trace)} rounds, smallest color id first):")
for page in trace:
    wanted = sorted(vertex_to_cell(v, N) for v in page.candidates)
    got = sorted(vertex_to_cell(v, N) for v in page.chosen)
    lost = sorted(vertex_to_cell(v, N) for v in page.candidates - page.chosen)
    print(f"   color {inst.labels[page.color]!r}: wanted by {wanted}")
    print(f"      kernel {got} takes it" + (f"; {lost} drop the option" if lost else ""))

print("\nChosen grid:")
for row in inst.label_grid(grid):
    print("   " + " ".join(f"{lab:>4}" for lab in row))

report = verify_generalized_latin(inst, grid)
print(f"\nVerifier says: {'valid' if report.valid else report.reason}")
