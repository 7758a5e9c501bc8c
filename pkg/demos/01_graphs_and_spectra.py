"""Build a few small graphs and read off their basic structure and spectra.

Run with:  python demos/01_graphs_and_spectra.py
"""

import numpy as np

from graphphys import (
    adjacency_spectrum,
    build_graph,
    clustering,
    cycle_graph,
    laplacian_spectrum,
    path_graph,
    star_graph,
)

# A kite: a triangle with a two-edge tail.
kite = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
print("kite graph:", kite)
print("degrees:", kite.degree_sequence())

report = clustering(kite)
print("per-node clustering:", np.round(report.per_node, 3))
print(f"average clustering {report.average:.3f}, transitivity {report.transitivity:.3f}")
print(f"({report.triangles} triangles over {report.wedges} wedges)")

# Adjacency spectra: stars and paths have famous closed forms.
for name, g in [("P5", path_graph(5)), ("C6", cycle_graph(6)), ("star K1,4", star_graph(4))]:
    spec = adjacency_spectrum(g)
    print(f"\n{name} adjacency eigenvalues: {np.round(spec.values, 4)}")

# The Laplacian spectrum starts at zero; the second-smallest eigenvalue
# (read here from the ascending tail) measures how well connected a graph is.
for name, g in [("path P10", path_graph(10)), ("cycle C10", cycle_graph(10))]:
    mu2 = laplacian_spectrum(g).values[-2]
    print(f"{name}: algebraic connectivity mu_2 = {mu2:.4f}")
print("(the cycle is better connected than the path, as the larger mu_2 shows)")
