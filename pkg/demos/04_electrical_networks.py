"""Graphs as resistor networks: effective resistance, commute times, and
the spring-network analogy.

Run with:  python demos/04_electrical_networks.py
"""

import numpy as np

from graphphys import (
    OscillatorParams,
    build_graph,
    classical_partition,
    commute_time,
    cycle_graph,
    path_graph,
    quantum_green,
    resistance_distance,
    resistance_matrix,
)

# Every edge is a unit resistor.  On the 4-cycle, two parallel paths
# (lengths 1 and 3) join adjacent corners: 1*3/(1+3) = 0.75 ohm.
square = cycle_graph(4)
print("4-cycle, unit resistors:")
print(f"  adjacent corners:  {resistance_distance(square, 0, 1):.4f}")
print(f"  opposite corners:  {resistance_distance(square, 0, 2):.4f}")

# All three computation routes agree.
for method in ("pseudoinverse", "determinant", "spectral"):
    value = resistance_distance(square, 0, 1, method=method)
    print(f"  method {method:>13}: {value:.12f}")

# On a tree there is a single path, so resistance equals hop distance.
chain = path_graph(6)
print("\npath P6: resistance 0 -> 5 =", resistance_distance(chain, 0, 5))

# Weighted edges are conductances: doubling a conductance halves its resistance.
strong = build_graph(2, [(0, 1, 2.0)])
print("single edge with conductance 2:", resistance_distance(strong, 0, 1))

print("\nfull resistance matrix of the square:")
print(np.round(resistance_matrix(square), 4))

# Commute time: expected steps for a random walk to go there and back.
print(f"\ncommute time 0 <-> 2 on the square: {commute_time(square, 0, 2):.1f} steps")

# The same Laplacian controls a network of balls and springs.
params = OscillatorParams(spring_k=5.0, beta=1.0)
print(f"\nspring network on P6 (K={params.spring_k}):")
print(f"  classical partition function: {classical_partition(chain, params):.6f}")
green = quantum_green(chain, params)
print("  quantum correlations <x_0 x_j> down the chain:", np.round(green[0], 6))
print("  (correlations decay with distance from the excited site)")
