"""Who matters in a network?  Several answers, each with its own logic,
on one small graph where they disagree.

Run with:  python demos/07_centrality.py
"""

from graphphys import (
    betweenness_centrality,
    build_graph,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
    katz_centrality,
    pagerank,
    subgraph_centrality,
)

# Two tight clusters joined through a single broker (node 4).
g = build_graph(9, [
    (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4),   # left clique + spur
    (4, 5),                                            # broker link
    (5, 6), (5, 7), (6, 7), (6, 8), (7, 8),            # right clique
])

measures = [
    degree_centrality(g),
    closeness_centrality(g),
    betweenness_centrality(g),
    eigenvector_centrality(g),
    katz_centrality(g, eta=5.0),
    pagerank(g),
    subgraph_centrality(g),
]

print("node ranking under each measure (best three):")
for vector in measures:
    top = [str(node) for node in vector.ranking()[:3]]
    print(f"  {vector.name:>22}: {', '.join(top)}")

print("\nthe broker (node 4) wins on betweenness -- every left-right path "
      "crosses it --")
print("but loses on degree and eigenvector score, which reward cluster membership:")
b = betweenness_centrality(g).scores
e = eigenvector_centrality(g).scores
for node in (3, 4, 5):
    print(f"  node {node}: betweenness {b[node]:6.2f}   eigenvector {e[node]:.4f}")

# Directed graphs: importance flows along arcs.
web = build_graph(4, [(0, 1), (2, 1), (1, 3), (3, 1)], directed=True)
pr = pagerank(web)
print("\nrandom-surfer scores on a tiny link graph:", [f"{s:.3f}" for s in pr.scores])
print("node 1 collects links (including from the dangling follower 3) and ranks first:",
      pr.ranking()[0] == 1)
