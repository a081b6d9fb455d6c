"""
Double-sweep approximation
==========================

Repeatedly jumping to a furthest vertex reaches a mutually furthest pair in
a handful of BFS passes; any shortest path between the pair is within an
additive class constant of the optimum (chordal graphs: +2, and that bound
is tight).
"""

import mespath as mp

g = mp.gen_random_chordal(40, 0.35, seed=5)
d = mp.all_pairs(g)

trace = mp.mutually_furthest_pair(g, 0)
print("sweep iterates (vertex, eccentricity):", trace.iterates)
print("mutually furthest pair:", trace.pair)

res = mp.approx_mesp(g, d)
print("approx path:", res.path.vertices)
print("approx eccentricity:", res.eccentricity)
print("guarantee:", res.certificate.guarantee)
print("true optimum:", mp.exact_mesp(g, d).eccentricity)

# a 15-vertex chordal graph where the +2 bound is attained: the optimum is a
# dominating shortest path, but the sweep from vertex 0 locks onto a far
# pair whose path misses a hanging branch by 3
edges = [
    (0, 1), (0, 2), (0, 5), (0, 8), (0, 12), (0, 13), (0, 14), (1, 2),
    (1, 5), (2, 3), (2, 4), (2, 5), (2, 6), (2, 8), (2, 12), (2, 14),
    (3, 4), (3, 6), (3, 7), (4, 5), (4, 6), (4, 7), (4, 12), (5, 6),
    (5, 12), (5, 14), (6, 7), (8, 9), (8, 12), (8, 13), (8, 14), (9, 10),
    (9, 12), (9, 14), (10, 11), (12, 14), (13, 14),
]
tight = mp.Graph(15, edges)
dt = mp.all_pairs(tight)
print("\ntightness instance: chordal =", mp.is_chordal(tight).holds)
approx = mp.approx_mesp(tight, dt)
exact = mp.exact_mesp(tight, dt)
print("optimum:", exact.eccentricity, "via", exact.best_path.vertices)
print("approx:", approx.eccentricity, "via", approx.path.vertices)
print("gap:", approx.eccentricity - exact.eccentricity)
