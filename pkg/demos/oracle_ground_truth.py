"""
Brute-force oracle
==================

At desk scale every question has an exhaustive answer: enumerate all
shortest paths, take the best one, and measure the projection gap exactly.
The polynomial solvers in this package are validated against these numbers.
"""

import mespath as mp

for name, g in [
    ("P4", mp.gen_path(4)),
    ("C6", mp.gen_cycle(6)),
    ("C7", mp.gen_cycle(7)),
    ("K4", mp.Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])),
]:
    d = mp.all_pairs(g)
    result = mp.exact_mesp(g, d)
    pg = mp.exact_projection_gap(g, d)
    print(
        f"{name}: optimum eccentricity {result.eccentricity} "
        f"via {result.best_path.vertices}, projection gap {pg}, "
        f"{result.paths_examined} paths examined"
    )

# enumeration is complete: C6 has exactly two shortest paths between
# antipodal vertices, one per arc
g = mp.gen_cycle(6)
d = mp.all_pairs(g)
for p in mp.enumerate_shortest_paths(g, d, 0, 3):
    print("shortest 0-3 path:", p.vertices)

# the per-source oracle minimizes only over paths starting at one vertex
star = mp.Graph(5, [(0, i) for i in range(1, 5)])
ds = mp.all_pairs(star)
res = mp.exact_source_mesp(star, ds, 1)
print("\nbest path from a star leaf:", res.best_path.vertices, "ecc", res.eccentricity)

# budgets abort loudly instead of truncating silently
try:
    mp.exact_mesp(g, d, mp.EnumerationBudget(max_total=3))
except mp.BudgetExceededError as exc:
    print("\nbudget guard:", exc)
