"""
Graph metric toolkit
====================

Build a graph, compute all-pairs hop distances, and walk through the
metric vocabulary every solver in this package is built on: eccentricity,
intervals, slices, projections, and diametral pairs.
"""

import mespath as mp

# a 6-cycle: the smallest graph where these notions stop being trivial
g = mp.gen_cycle(6)
d = mp.all_pairs(g)
print("C6 distance matrix:")
print(d)

report = mp.metric_report(g, d)
print("\ndiameter:", report.diameter)
print("diametral pair:", report.diametral_pair)
print("eccentricities:", report.eccentricities)

# the interval I(0, 3) holds every vertex on a shortest 0-3 path; both arcs
# of the cycle qualify, so it is the whole vertex set
print("\ninterval I(0,3):", mp.interval(d, 0, 3).tolist())
for i in range(4):
    print(f"  slice {i}:", mp.interval_slice(d, 0, 3, i).tolist())

# the projection of a vertex onto a set: its closest members
path = [0, 1, 2, 3]
for x in (4, 5):
    print(f"projection of {x} on path {path}:", mp.projection(d, x, path))

# eccentricity of that path as a set: how far the worst vertex is from it
print("eccentricity of the path:", mp.eccentricity_of_set(d, path))

# double sweep: two BFS passes that bound the diameter from below
x, y = mp.double_sweep(g)
print(f"\ndouble sweep endpoints: {x}, {y} at distance {d[x][y]}")

# parsing labeled edge lists round-trips through dense integer ids
text = "hub a\nhub b\nhub c\na b\n"
labeled, labels = mp.parse_edge_list(text)
print("\nparsed labeled graph:", labeled, "labels:", labels)
print(mp.format_edge_list(labeled, labels))
