"""The Tutte polynomial and what it counts, plus colourings and the
q-state Potts partition function that generalizes them.

Run with:  python demos/02_graph_polynomials.py
"""

import math

from graphphys import (
    Multigraph,
    chromatic_from_zero_T_limit,
    chromatic_polynomial,
    cycle_graph,
    potts_partition,
    tutte_evaluations,
)

square = cycle_graph(4)
ev = tutte_evaluations(square)
print("Tutte polynomial of the 4-cycle:", ev["polynomial"])
print(f"  spanning trees               T(1,1) = {ev['spanning_trees']}")
print(f"  spanning forests             T(2,1) = {ev['forests']}")
print(f"  spanning connected subgraphs T(1,2) = {ev['spanning_connected_subgraphs']}")
print(f"  all edge subsets             T(2,2) = {ev['two_to_m']}")

print("\nProper colourings of the square with q colours:")
chrom = chromatic_polynomial(square)
for q in range(1, 6):
    print(f"  q={q}: {chrom(q)}  (zero-temperature Potts limit: "
          f"{chromatic_from_zero_T_limit(square, q)})")

# The Potts partition function is symbolic in w = e^K (K = coupling/kT).
z = potts_partition(square, q=2)
print(f"\nTwo-state Potts partition function on the square: Z(w) = {z}")
for coupling in (-1.0, 0.0, 1.0):
    print(f"  K={coupling:+.1f}: Z = {z.evaluate(coupling):.6f}")
print("  (K=0 counts all 2^4 = 16 spin states; K>0 rewards aligned neighbours)")

# Multigraphs are first-class: a doubled edge changes Z but not colourings.
doubled = Multigraph(2, [(0, 1), (0, 1)])
z2 = potts_partition(doubled, q=3)
print(f"\nThree-state Potts on a doubled edge: Z(w) = {z2}")
print(f"  K=ln 2 gives Z = {z2.evaluate(math.log(2)):.1f}  (= 3*4 aligned + 6*1)")
