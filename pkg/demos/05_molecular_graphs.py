"""Tight-binding electronic structure straight from molecular graphs:
orbital energies, radical counts, and magnetic ground states.

Run with:  python demos/05_molecular_graphs.py
"""

import numpy as np

from graphphys import (
    closed_form_spectrum,
    cycle_graph,
    energy_bounds,
    huckel_spectrum,
    lieb_total_spin,
    nullity,
    nullity_via_matching,
)
from graphphys.tightbinding import polyacene_graph, pyrene_graph, triangulene_graph

# Benzene: six carbons in a ring.  Orbital energies are alpha + beta*lambda.
benzene = cycle_graph(6)
result = huckel_spectrum(benzene, alpha=0.0, beta=-1.0)
print("benzene orbital energies (beta units):", np.round(result.energies, 3))
print("ground-state occupations:", result.occupations)
print(f"total pi energy: {result.total_energy:.3f} in beta units, versus -6 for "
      "three isolated double bonds: 2|beta| of aromatic stabilization")

# Ring spectra have a closed form; so do fused-hexagon chains.
print("\nclosed-form spectrum of C6:", np.round(closed_form_spectrum("cycle", 6), 3))
naphthalene = polyacene_graph(2)
print(f"naphthalene (2 fused rings): {naphthalene.n} atoms, "
      f"nullity {nullity(naphthalene)} (no unpaired electrons)")

# Nullity of the adjacency matrix counts nonbonding orbitals = radicals.
# For benzenoids it can be read off a maximum matching instead of eigenvalues.
pyrene = pyrene_graph()
print(f"\npyrene: {pyrene.n} atoms, nullity {nullity(pyrene)} "
      f"(matching route: {nullity_via_matching(pyrene, benzenoid=True)})")
print(f"  total spin {lieb_total_spin(pyrene)}: closed-shell molecule")

triangulene = triangulene_graph()
print(f"triangulene: {triangulene.n} atoms, nullity {nullity(triangulene)}")
print(f"  total spin {lieb_total_spin(triangulene)}: a triplet diradical, "
      "which is why it resisted synthesis for decades")

# Graph energy (sum of |eigenvalues|) obeys sharp structural bounds.
lower, upper, bip = energy_bounds(pyrene)
spec = huckel_spectrum(pyrene).energies
energy = float(np.abs(spec).sum())
print(f"\npyrene graph energy {energy:.3f} inside [{lower:.3f}, {upper:.3f}]"
      f" (bipartite refinement: {bip:.3f})")
