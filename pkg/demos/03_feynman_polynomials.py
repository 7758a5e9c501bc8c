"""Symanzik polynomials of a Feynman diagram, computed three independent
ways, and the deletion-contraction structure behind them.

Run with:  python demos/03_feynman_polynomials.py
"""

from graphphys.feynman import (
    FeynmanGraph,
    MPoly,
    contract_internal_edge,
    delete_internal_edge,
    first_symanzik,
    first_symanzik_from_kirchhoff,
    kirchhoff_polynomial,
    second_symanzik,
    spanning_trees,
    symanzik_from_modified_laplacian,
)

# A box diagram with a diagonal chord: two loops, two external legs.
box = FeynmanGraph(
    4,
    [(0, 3), (0, 1), (1, 2), (2, 3), (0, 2)],
    legs=[(1, "p1"), (3, "p2")],
)
print(f"box-with-chord: {box.n} vertices, {box.m} internal edges, "
      f"{box.loop_count()} loops")
print(f"spanning trees: {len(spanning_trees(box))}")

u = first_symanzik(box)
print("\nfirst Symanzik polynomial (one monomial per spanning-tree complement):")
print("  U =", u)

print("\nthe same polynomial by two more routes:")
print("  via Kirchhoff-polynomial inversion: matches =", first_symanzik_from_kirchhoff(box) == u)
u_det, f0_det = symanzik_from_modified_laplacian(box)
print("  via modified-Laplacian determinant: matches =", u_det == u)

f = second_symanzik(box)
print("\nsecond Symanzik polynomial (massless internal lines):")
print("  F =", f)
print("  (s11 stands for the squared external momentum p1.p1)")

print("\nKirchhoff polynomial (weighted spanning-tree sum):")
print("  K =", kirchhoff_polynomial(box, ground=0))

# Deleting or contracting the chord splits U like any spanning-tree count.
chord = 4  # the diagonal, Feynman parameter x5
u_contract = first_symanzik(contract_internal_edge(box, chord))
u_delete = first_symanzik(delete_internal_edge(box, chord))
print("\ndeletion-contraction on the chord x5:")
print("  U(G/e)        =", u_contract)
print("  U(G-e)        =", u_delete)
print("  U = U(G/e) + x5*U(G-e):", u == u_contract + MPoly.variable("x5") * u_delete)
